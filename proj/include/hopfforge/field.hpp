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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/error.hpp"

namespace hopfforge {

/// Element of GF(p^d).  The value is an index in [0, p^d): the coefficient
/// vector c0 + c1*t + ... + c_{d-1}*t^{d-1} packed in base p, c0 least
/// significant.  Elements are only meaningful together with their Field.
struct Fe {
    uint32_t v = 0;
    friend bool operator==(Fe a, Fe b) { return a.v == b.v; }
    friend bool operator!=(Fe a, Fe b) { return a.v != b.v; }
    friend bool operator<(Fe a, Fe b) { return a.v < b.v; }
};

/// GF(p^d) with a fixed monic irreducible modulus.  The default modulus is
/// the lexicographically smallest irreducible polynomial (constant term
/// first), so two fields with equal (p, d) are identical.
///
/// A Field is a cheap-to-copy immutable handle; all operations are pure.
class Field {
public:
    Field() = default;                 // invalid until assigned
    Field(uint32_t p, uint32_t d);     // canonical modulus
    Field(uint32_t p, uint32_t d, std::vector<uint32_t> modulus);

    bool valid() const { return impl_ != nullptr; }
    uint32_t p() const;
    uint32_t d() const;
    uint32_t q() const;                          // p^d
    const std::vector<uint32_t>& modulus() const; // length d+1, monic

    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{1}; }
    bool is_zero(Fe a) const { return a.v == 0; }
    bool is_one(Fe a) const { return a.v == 1; }

    Fe from_int(int64_t n) const;                     // n mod p as a constant
    Fe from_coeffs(const std::vector<uint32_t>& c) const;
    std::vector<uint32_t> coeffs(Fe a) const;         // length d, residues in [0,p)

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;                 // error on 0
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, int64_t e) const;      // negative e allowed for nonzero a
    Fe frobenius(Fe a) const { return pow(a, p()); }

    uint64_t mult_order(Fe a) const;    // error on 0
    Fe generator() const;               // smallest-index primitive element

    /// All field elements, in index order (0, 1, 2, ...).
    std::vector<Fe> all_elements() const;

    /// Does a lie in the prime subfield F_p?
    bool in_prime_field(Fe a) const { return a.v < p(); }

    // --- operations from the spec ---

    /// Lexicographically smallest (constant term first) monic irreducible
    /// polynomial of degree d over F_p, as its full coefficient list
    /// (length d+1, leading 1).  Deterministic.
    static std::vector<uint32_t> find_irreducible(uint32_t p, uint32_t d);

    /// zeta of multiplicative order exactly N, as the canonical power
    /// g^((q-1)/N) of the fixed generator.  Requires gcd(N, p) = 1; throws
    /// ExtendField (with the minimal sufficient degree) when N does not
    /// divide q-1.
    Fe primitive_root_of_unity(uint64_t N) const;

    /// The unique beta with beta^p = a (Frobenius is bijective).
    Fe pth_root(Fe a) const;

    struct ArtinSchreier {
        bool solvable = false;
        Fe beta;              // beta - beta^p = alpha, when solvable
        int min_degree = 0;   // minimal extension degree when not solvable
    };
    /// Solve beta - beta^p = alpha in this field.  Never throws: an
    /// unsolvable instance reports the minimal extension degree instead.
    ArtinSchreier solve_artin_schreier(Fe alpha) const;

    // --- text form ---

    /// d = 1: "c0".  d > 1: "[c0,c1,...]".
    std::string to_string(Fe a) const;
    /// Accepts "[c0,c1,...]", a bare integer (possibly negative), or the
    /// polynomial form "c0+c1*t+c2*t^2".
    Fe parse(const std::string& s) const;

    bool same(const Field& other) const;

    /// Embed an element of a subfield (other.d divides d, same p) into this
    /// field, mapping other's t to the smallest root of other's modulus here.
    Fe embed_from(const Field& other, Fe a) const;

    struct Impl;

private:
    std::shared_ptr<const Impl> impl_;
    const Impl& I() const;
};

bool is_prime(uint64_t n);

} // namespace hopfforge
