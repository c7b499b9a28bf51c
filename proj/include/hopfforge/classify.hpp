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

#include "hopfforge/families.hpp"

namespace hopfforge {

struct ClassificationReport {
    bool pointed = false;
    int rank = -1;
    Vec skew_point;                 // the group-like a, as a vector in H
    int skew_index = 0;             // its index among the group-likes
    int type = 0;                   // 1, 2 or 3
    Vec x;                          // chosen generator after type normalization
    Mat conj;                       // conjugation of a on P_{a,1}, basis {x0, a-1}
    TupleSpec tuple;                // extracted and normalized defining tuple
    std::vector<std::string> normalization_steps;
    Mat roundtrip;                  // verified Hopf iso build_family(tuple) -> H
};

/// Full classification: pointedness/rank certificate, skew point, type,
/// tuple extraction, normalization, and a verified round-trip isomorphism.
ClassificationReport classify(const HopfAlgebra& H, uint64_t budget = 1u << 20);

/// The unique group-like a with P_{a,1} not inside H_0.  Errors: none found
/// ("cosemisimple"), several found (rank > 1 or corrupt input).
int find_skew_point(const HopfAlgebra& H, const std::vector<Vec>& grouplikes,
                    const Subspace& H0, const Subspace& H1);

struct DetectResult {
    int type = 0;
    Vec x;    // rescaled so that a x a^{-1} = x + (a-1) exactly in type 3
    Mat conj; // 2x2 (or 1x1 when a = 1) in the basis {x0, a-1}
};

DetectResult detect_type(const HopfAlgebra& H, const Vec& a, const Subspace& H0,
                         const Subspace& H1);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Undecided };

struct IsoWitness {
    std::vector<int> group_map; // f : G -> G' by element index
    Fe beta;                    // scaling of x (type 1; 1 otherwise)
    Fe gamma;                   // (a'-1)-shift of x (type 3 alpha matching)
    Mat matrix;                 // the full verified Hopf isomorphism
};

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::Undecided;
    std::optional<IsoWitness> witness;
    std::string reason;
    int extension_hint = 0; // minimal field degree that could flip a negative verdict
};

/// Isomorphism of family tuples by the classification criteria: a group
/// isomorphism with f(a) = a' plus the per-type scalar conditions.  Both
/// tuples are normalized first.  Every positive answer carries an explicitly
/// verified Hopf isomorphism between the built algebras.
IsoResult iso_tuples(const TupleSpec& T, const TupleSpec& T2, int budget = 64);

/// Independent brute-force isomorphism search on small algebras: group-likes
/// to group-likes, skew primitives to skew primitives, extended
/// multiplicatively and fully checked.
IsoResult iso_bruteforce(const HopfAlgebra& H, const HopfAlgebra& H2, int budget = 64);

/// Full Hopf-morphism check of a linear map given by its matrix.
bool is_hopf_isomorphism(const HopfAlgebra& H, const HopfAlgebra& H2, const Mat& M);

} // namespace hopfforge
