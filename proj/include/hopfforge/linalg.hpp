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

#include <optional>
#include <vector>

#include "hopfforge/field.hpp"

namespace hopfforge {

using Vec = std::vector<Fe>;

Vec zero_vec(int n);
bool is_zero_vec(const Vec& v);
Vec add_vec(const Field& F, const Vec& a, const Vec& b);
Vec sub_vec(const Field& F, const Vec& a, const Vec& b);
Vec scale_vec(const Field& F, Fe c, const Vec& a);

/// Dense matrix over one field, row-major.
struct Mat {
    int rows = 0, cols = 0;
    Vec a; // rows*cols entries
    Field F;

    Mat() = default;
    Mat(const Field& F, int r, int c) : rows(r), cols(c), a((size_t)r * c), F(F) {}
    Fe& at(int i, int j) { return a[(size_t)i * cols + j]; }
    Fe at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static Mat identity(const Field& F, int n);
    Mat mul(const Mat& other) const;
    Vec apply(const Vec& v) const;        // this * v (v as column)
    Mat transpose() const;
    bool operator==(const Mat& other) const;
};

/// Subspace of F^n held as a reduced-row-echelon basis; the canonical form
/// makes equality a plain comparison.
class Subspace {
public:
    Subspace() = default;
    Subspace(const Field& F, int ambient);                       // zero space
    static Subspace full(const Field& F, int ambient);
    static Subspace span(const Field& F, int ambient, const std::vector<Vec>& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return (int)basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const Field& field() const { return F_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Residual of v after eliminating this subspace's pivots (zero iff contained).
    Vec reduce(const Vec& v) const;
    /// Append a vector; returns true if the dimension grew.
    bool grow(const Vec& v);

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    bool operator==(const Subspace& other) const;

    /// Coordinates of v in this basis (error when v is not a member).
    Vec coordinates(const Vec& v) const;

    /// Matrix of the canonical projection F^n -> F^n / (this), written in the
    /// non-pivot coordinates; (codim x ambient).
    Mat quotient_map() const;

private:
    Field F_;
    int ambient_ = 0;
    std::vector<Vec> basis_;     // RREF rows, pivots strictly increasing
    std::vector<int> pivots_;
    void renormalize();
};

/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Mat& M);

int rank(Mat M);

/// Null space of M in canonical form.
Subspace kernel(const Mat& M);

/// {v : L v in W}; L is (m x n), W lives in F^m.
Subspace preimage_subspace(const Mat& L, const Subspace& W);

/// One solution of M x = b, if any.
std::optional<Vec> solve(const Mat& M, const Vec& b);

std::optional<Mat> inverse(const Mat& M);

/// Finite-dimensional commutative unital algebra by structure constants.
struct CommAlgebra {
    Field F;
    int dim = 0;
    std::vector<std::vector<Vec>> mult; // mult[i][j] = e_i * e_j as a vector
    Vec unit;

    Vec mulv(const Vec& x, const Vec& y) const;
    Vec powv(const Vec& x, uint64_t e) const;
};

/// Pairwise-orthogonal primitive idempotents of C summing to 1.  Factors
/// minimal polynomials over the field, splits the semisimple quotient by CRT
/// and lifts through the nilradical.  When a residue field is a proper
/// extension and `require_split` is set, throws ExtendField with the minimal
/// sufficient degree.
std::vector<Vec> split_idempotents(const CommAlgebra& C, bool require_split = false);

/// Nilradical of a commutative algebra in characteristic p (kernel chain of
/// the Frobenius map).
Subspace nilradical(const CommAlgebra& C);

/// Minimal polynomial of x in any structure-constant algebra given a
/// multiply-by-x operator on coordinates.
std::vector<Fe> min_poly(const Field& F, const std::vector<Vec>& powers);

} // namespace hopfforge
