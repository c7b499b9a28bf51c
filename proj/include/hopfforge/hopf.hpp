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

#include <memory>
#include <optional>
#include <string>

#include "hopfforge/group.hpp"
#include "hopfforge/linalg.hpp"

namespace hopfforge {

struct TupleSpec; // defined in families.hpp

/// coefficient list of a basis product, sorted by index
using SparseVec = std::vector<std::pair<int, Fe>>;
/// one comultiplication row: (left index, right index, coefficient)
using SparseMat = std::vector<std::tuple<int, int, Fe>>;

/// A finite-dimensional Hopf algebra by structure constants.  Nothing about
/// it is assumed: verify_hopf checks every axiom on basis tuples.
struct HopfAlgebra {
    Field F;
    int dim = 0;
    Vec unit;
    std::vector<std::vector<SparseVec>> mult; // mult[i][j] = e_i e_j
    std::vector<SparseMat> comult;            // comult[i] = Delta(e_i)
    Vec counit;
    Mat antipode;                             // column j = S(e_j)
    std::vector<std::string> labels;          // optional, may be empty

    /// Set by build_family: the defining tuple, giving the basis layout
    /// g*n + i for g in G, 0 <= i < n with x at index 1.
    std::shared_ptr<const TupleSpec> family;

    Vec mul_basis(int i, int j) const;
    Vec mulv(const Vec& u, const Vec& v) const;
    Vec powv(const Vec& u, uint64_t e) const;
    Fe counit_of(const Vec& v) const;
    Vec apply_antipode(const Vec& v) const;
    Vec basis_vec(int i) const;
    Mat left_mult_matrix(const Vec& v) const;
    Mat right_mult_matrix(const Vec& v) const;
    std::string describe(const Vec& v) const; // human-readable combination
};

struct AxiomResult {
    std::string axiom;
    bool pass = false;
    std::string witness; // offending basis tuple, empty when pass
};

struct VerifyReport {
    std::vector<AxiomResult> axioms;
    bool all_pass() const {
        for (auto& a : axioms)
            if (!a.pass) return false;
        return true;
    }
};

/// Checks, each on all basis tuples: associativity, unit, coassociativity,
/// counit, Delta and epsilon multiplicative (bialgebra), and the antipode
/// axiom m(S (x) id)Delta = unit.counit = m(id (x) S)Delta.
VerifyReport verify_hopf(const HopfAlgebra& H);

/// All group-like elements (Delta g = g (x) g, counit 1).  Labeled family
/// algebras read them off the basis (and re-verify); raw algebras are solved
/// by affine enumeration within the budget (dim <= 12 over F_2/F_3 by
/// default).  Verifies closure under multiplication.
std::vector<Vec> group_likes(const HopfAlgebra& H, uint64_t budget = 1u << 20);

/// The group of group-like elements, with the mult table taken from the
/// algebra; returns the group and the group-like vectors in matching order.
std::pair<GroupData, std::vector<Vec>> grouplike_group(const HopfAlgebra& H,
                                                       uint64_t budget = 1u << 20);

/// P_{g,h} = { v : Delta v = v (x) g + h (x) v }, optionally within a domain.
Subspace skew_primitives(const HopfAlgebra& H, const Vec& g, const Vec& h,
                         const Subspace* domain = nullptr);

/// Kernel of v -> (pi_A (x) pi_B)(Delta v), i.e. Delta^{-1}(A (x) H + H (x) B).
Subspace delta_preimage(const HopfAlgebra& H, const Subspace& A, const Subspace& B);

struct FiltrationResult {
    std::vector<Subspace> chain; // H_0 subset H_1 subset ...
    bool pointed = false;        // chain exhausts H
    int stabilized_at = 0;
    std::optional<int> rank;     // set when the freeness checks pass
    const Subspace& H0() const { return chain.front(); }
};

/// Coradical filtration seeded by the span of group-likes:
/// H_i = Delta^{-1}(H (x) H_{i-1} + H_0 (x) H).
FiltrationResult coradical_filtration(const HopfAlgebra& H, uint64_t budget = 1u << 20);

struct DegreeResult {
    int n = 0;                // smallest n with x^n in sum_{i<n} H_0 x^i
    std::vector<Vec> coeffs;  // b_0..b_{n-1} in H_0 with x^n = sum b_i x^i
};

DegreeResult degree_of(const HopfAlgebra& H, const Vec& x, const Subspace& H0);

struct NilpotentIdealResult {
    Subspace ideal;
    std::optional<int> index; // least e with I^e = 0; empty if not nilpotent
};

NilpotentIdealResult nilpotent_ideal_check(const HopfAlgebra& H, const std::vector<Vec>& gens);

/// Two-sided ideal generated by the given vectors.
Subspace ideal_closure(const HopfAlgebra& H, const std::vector<Vec>& gens);

/// span{ u v : u in U, v in V } over basis pairs.
Subspace subspace_product(const HopfAlgebra& H, const Subspace& U, const Subspace& V);

/// Is w in sum_{k<=i} H_k (x) H_{i-k} for the given chain?  (wedge membership
/// via the quotient-map identity for chains.)
bool delta_in_wedge(const HopfAlgebra& H, int basis_index, const std::vector<Subspace>& chain,
                    int level);

/// The group algebra kG with its usual Hopf structure.
HopfAlgebra group_algebra(const Field& F, const GroupData& G);

} // namespace hopfforge
