/*
 * Copyright 2026 the hopfforge authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfforge/linalg.hpp"

namespace hopfforge {

/// Finite group as a validated Cayley table (identity at index 0) with a
/// distinguished central element, the skew point a.
class GroupData {
public:
    GroupData() = default;

    /// Direct product of cyclic groups; a given as an exponent word, one
    /// entry per factor.
    static GroupData cyclic(const std::vector<int>& orders, const std::vector<int>& a_word);
    /// Explicit multiplication table (full associativity scan on construction).
    static GroupData from_table(const std::vector<std::vector<int>>& table, int a_index);

    int order() const { return (int)cayley_.size(); }
    int mul(int g, int h) const { return cayley_[g][h]; }
    int inverse(int g) const { return inv_[g]; }
    int power(int g, int64_t e) const;
    int element_order(int g) const;
    int skew_point() const { return a_; }
    const std::vector<int>& center() const { return center_; }
    bool is_central(int g) const;
    bool is_abelian() const { return (int)center_.size() == order(); }
    const std::string& name(int g) const { return names_[g]; }
    const std::vector<std::vector<int>>& table() const { return cayley_; }

    std::vector<int> subgroup_generated(const std::vector<int>& gens) const; // sorted
    std::vector<int> commutator_subgroup() const;
    /// Quotient by a normal subgroup: the quotient group (representative
    /// order, identity first) and the projection element -> class index.
    std::pair<GroupData, std::vector<int>> quotient(const std::vector<int>& normal_subgroup) const;
    std::vector<int> generating_set() const;

    /// Exponent word names like "1", "a", "a^2*b" for product groups.
    void set_names(std::vector<std::string> names);

private:
    std::vector<std::vector<int>> cayley_;
    std::vector<int> inv_;
    std::vector<std::string> names_;
    std::vector<int> center_;
    int a_ = 0;
    void finish(int a_index); // validate + fill inverses/center
};

/// Values of a linear character, indexed by group element.
struct CharacterMap {
    std::vector<Fe> values;
    Fe operator()(int g) const { return values[g]; }
};

/// Validates chi(gh) = chi(g) chi(h), chi(1) = 1.
CharacterMap make_character(const GroupData& G, const Field& F, std::vector<Fe> values);

/// A map c : G -> k with the twisted cocycle law c(hg) = chi(g)c(h) + c(g).
struct CMap {
    std::vector<Fe> values;
    Fe operator()(int g) const { return values[g]; }
};

CMap make_cmap(const GroupData& G, const Field& F, const CharacterMap& chi,
               std::vector<Fe> values);

/// Solution space of the cocycle law for a fixed chi, as a subspace of F^|G|.
Subspace cocycle_space(const GroupData& G, const Field& F, const CharacterMap& chi);

struct CharacterList {
    std::vector<CharacterMap> chars;
    /// When some characters of G do not take values in F, the minimal field
    /// degree (over the prime field) where all of them do; 0 when complete.
    int suggested_degree = 0;
};

/// All homomorphisms G -> F^*, via the abelianization.
CharacterList linear_characters(const GroupData& G, const Field& F);

/// e_lambda = |G|^{-1} sum_g lambda(g^{-1}) g in the group algebra basis.
/// Requires G abelian and p not dividing |G|.
Vec character_idempotent(const GroupData& G, const CharacterMap& lambda, const Field& F);

/// Streams all isomorphisms f : G -> G2 with f(a) = a2 (as image tables);
/// the visitor returns false to stop early.  Throws Budget when the group
/// order exceeds the budget.
void group_isomorphisms(const GroupData& G, const GroupData& G2, int a, int a2,
                        const std::function<bool(const std::vector<int>&)>& visit,
                        int budget = 64);

std::vector<std::vector<int>> all_group_isomorphisms(const GroupData& G, const GroupData& G2,
                                                     int a, int a2, int budget = 64);

} // namespace hopfforge
