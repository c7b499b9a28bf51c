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

#include <utility>
#include <vector>

#include "hopfforge/field.hpp"

namespace hopfforge {

/// Univariate polynomials over a Field; coefficient lists low-degree first,
/// kept trimmed (no trailing zeros; the zero polynomial is the empty list).
using FPoly = std::vector<Fe>;

FPoly ptrim(FPoly f);
int pdegree(const FPoly& f);                 // -1 for the zero polynomial
bool pzero(const FPoly& f);
FPoly pconst(const Field& F, Fe c);
FPoly pvar(const Field& F);                  // t
FPoly padd(const Field& F, const FPoly& a, const FPoly& b);
FPoly psub(const Field& F, const FPoly& a, const FPoly& b);
FPoly pscale(const Field& F, Fe c, const FPoly& a);
FPoly pmulp(const Field& F, const FPoly& a, const FPoly& b);
std::pair<FPoly, FPoly> pdivmod(const Field& F, const FPoly& a, const FPoly& b);
FPoly pmodp(const Field& F, const FPoly& a, const FPoly& b);
FPoly pmonic(const Field& F, const FPoly& a);
FPoly pgcd(const Field& F, FPoly a, FPoly b);
/// g = gcd(a,b) together with u,v such that u*a + v*b = g.
struct ExtGcd { FPoly g, u, v; };
ExtGcd pxgcd(const Field& F, const FPoly& a, const FPoly& b);
FPoly pderive(const Field& F, const FPoly& a);
Fe peval(const Field& F, const FPoly& a, Fe x);
FPoly ppowmod(const Field& F, FPoly base, uint64_t e, const FPoly& mod);
bool pequal(const FPoly& a, const FPoly& b);
std::string pformat(const Field& F, const FPoly& a, const std::string& var = "t");

/// Monic irreducible factors with multiplicities, deterministic order
/// (sorted by degree, then by coefficient sequence).
std::vector<std::pair<FPoly, int>> pfactor(const Field& F, FPoly f);

bool pirreducible(const Field& F, const FPoly& f);

} // namespace hopfforge
