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

#include "hopfforge/hopf.hpp"

namespace hopfforge {

enum class Variant { R, F, E };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& s);

/// Classification data for the three families:
///   R = (G, chi, a, alpha)           with chi(a) != 1,
///   F = (G, chi, c, a, (a_-1, a_0))  with chi(a) = 1, c(a) = 0,
///   E = (G, a, c, alpha)             with c additive, c(a) = 1.
/// The skew point a is the group's distinguished central element.
struct TupleSpec {
    Variant variant = Variant::R;
    Field field;
    GroupData group;
    std::vector<Fe> chi;   // per element; empty means the trivial character
    std::vector<Fe> c;     // per element; empty means zero
    std::vector<Fe> alpha; // R: (a_{-1}, a_0, ..., a_{r-1}); F: 2 entries; E: 1

    int a() const { return group.skew_point(); }
    Fe chi_of(int g) const { return chi.empty() ? field.one() : chi[g]; }
    Fe c_of(int g) const { return c.empty() ? field.zero() : c[g]; }
    Fe q() const { return chi_of(a()); }
    uint64_t N() const; // multiplicative order of q
    int r() const;      // R: alpha.size() - 1 (>= 0); F and E: 1
    int n() const;      // R: N p^r; F and E: p
};

/// Every side condition of the matching family definition; one string per
/// violated clause, empty when the tuple is valid.
std::vector<std::string> validate_tuple(const TupleSpec& T);

/// The family Hopf algebra on the basis (g x^i), by the normal-form
/// rewriting engine.  Requires a valid tuple; for R also r = 0 (r > 0 never
/// gives a rank-one algebra and is supported for validation only).
HopfAlgebra build_family(const TupleSpec& T);

/// Independent construction: the sub-Hopf-algebra A = <a, x>, its smash
/// product with kG by the conjugation action, and the quotient by the
/// two-sided (verified Hopf) ideal (a*1 - 1*a).  The result is expressed in
/// the canonical identification g x^i <-> class of (1*g)(x*1)^i, so its
/// structure tensors are directly comparable with build_family's.
HopfAlgebra build_smash_oracle(const TupleSpec& T);

struct NormalizeStep {
    std::string kind; // "rescale", "shift_pth_root", "shift_artin_schreier", "drop_c"
    Fe scalar;        // w for rescale, beta for the shifts
};

struct NormalizeResult {
    TupleSpec tuple;
    std::vector<std::string> steps; // human-readable log
    std::vector<NormalizeStep> ops; // machine form, for transporting x
};

/// F: a_0 notin {0,1} rescaled to a_0 = 1 (needs a (p-1)-th root); a_0 = 0
/// shifted to a_-1 = 0 by a p-th root; c zeroed when a = 1.  E with |a| = p:
/// alpha shifted to 0 through Artin-Schreier.  Throws ExtendField when the
/// required root is missing in the declared field.
NormalizeResult normalize_tuple(const TupleSpec& T);

/// Taft algebra Gamma_{N,q}: build_family of (C_N, chi(a) = q, a = gen, 0).
HopfAlgebra taft_algebra(const Field& F, int N, Fe q);

/// Convenience: tuple for the algebra A_p (third type on C_p, c(a)=1, alpha=0).
TupleSpec a_p_tuple(uint32_t p);

} // namespace hopfforge
