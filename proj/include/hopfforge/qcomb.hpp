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

#include <array>
#include <map>

#include "hopfforge/field.hpp"

namespace hopfforge {

/// Gaussian binomial by the q-Pascal recursion
///   binom(n,m)_q = binom(n-1,m-1)_q + q^m binom(n-1,m)_q,
/// never by division: the q-factorial quotients degenerate in
/// characteristic p exactly in the interesting cases.
Fe q_binomial(const Field& F, int n, int m, Fe q);

struct VanishingResult {
    bool holds = false; // binom(n,m)_q = 0 for all 0 < m < n, tested directly
    uint64_t N = 0;     // multiplicative order of q (when holds)
    uint32_t r = 0;     // n = N p^r (when holds)
};
/// Direct vanishing test of the whole middle row, plus the N*p^r data.
VanishingResult vanishing_criterion(const Field& F, int n, Fe q);

enum class FG { f, g };
/// f(j,l) = complete homogeneous sum over multisets from {1..j} of size l;
/// g(r,m) = elementary symmetric sum over subsets of {1..r-1} of size m.
/// Both mod p, by their defining recursions.  Conventions: value 1 at
/// second argument 0, value 0 for negative second argument.
uint32_t fg_eval(FG which, int first, int second, uint32_t p);

/// ordinary binomial coefficient mod p (Pascal)
uint32_t binom_mod(int n, int m, uint32_t p);

struct CoefQuery {
    char kind = 's'; // 's', 'h' or 'c'
    int k = 0;
    int i = 0, z = 0, j = 0; // z only for kind 'h'
    Fe cg;                   // the scalar c(g), kind 's' only
};
/// Closed-form coefficient: s^k_{i,j} of x^i a^j in (x+c(g)a)^k,
/// h^k_{i,z,j} of x^i (x) x^z a^j in (x (x) a + 1 (x) x)^k, and c^k_{i,j} of
/// x^i a^{-j} in (x a^{-1})^k, with all the boundary cases.
Fe coef_closed(const Field& F, const CoefQuery& q);

/// Formal linear combination of monomials x^i a^j with integer exponents
/// (j may be negative); nothing is reduced by a group order.
struct Word {
    std::map<std::pair<int, int>, Fe> terms; // (i, j) -> coefficient
    Fe coef(int i, int j) const {
        auto it = terms.find({i, j});
        return it == terms.end() ? Fe{0} : it->second;
    }
};

/// Formal combination of x^i (x) x^z a^j.
struct TensorWord {
    std::map<std::array<int, 3>, Fe> terms; // (i, z, j) -> coefficient
    Fe coef(int i, int z, int j) const {
        auto it = terms.find({i, z, j});
        return it == terms.end() ? Fe{0} : it->second;
    }
};

/// (x + c a)^k by brute-force rewriting with a^j x = x a^j + j(a^{j+1}-a^j).
Word expand_x_plus_ca(const Field& F, int k, Fe c);
/// (x a^{-1})^k, same rules with negative a-powers.
Word expand_xainv(const Field& F, int k);
/// (x (x) a + 1 (x) x)^k in the tensor square of the rewriting universe.
TensorWord expand_delta_power(const Field& F, int k);

/// Expands prod_{m=1..p-1} (t - m) over F_p and compares with t^(p-1) - 1.
bool fermat_check(uint32_t p);

} // namespace hopfforge
