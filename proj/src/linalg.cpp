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

#include "hopfforge/linalg.hpp"

#include <algorithm>

#include "hopfforge/poly.hpp"

namespace hopfforge {

Vec zero_vec(int n) { return Vec(n, Fe{0}); }

bool is_zero_vec(const Vec& v) {
    for (Fe x : v)
        if (x.v) return false;
    return true;
}

Vec add_vec(const Field& F, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

Vec sub_vec(const Field& F, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

Vec scale_vec(const Field& F, Fe c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
    return r;
}

Mat Mat::identity(const Field& F, int n) {
    Mat M(F, n, n);
    for (int i = 0; i < n; ++i) M.at(i, i) = F.one();
    return M;
}

Mat Mat::mul(const Mat& other) const {
    if (cols != other.rows) fail(ErrorKind::Invalid, "matrix dimension mismatch");
    Mat R(F, rows, other.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            Fe c = at(i, k);
            if (c.v == 0) continue;
            for (int j = 0; j < other.cols; ++j)
                R.at(i, j) = F.add(R.at(i, j), F.mul(c, other.at(k, j)));
        }
    return R;
}

Vec Mat::apply(const Vec& v) const {
    if ((int)v.size() != cols) fail(ErrorKind::Invalid, "matrix/vector dimension mismatch");
    Vec r(rows, F.zero());
    for (int i = 0; i < rows; ++i) {
        Fe acc = F.zero();
        for (int j = 0; j < cols; ++j)
            if (v[j].v) acc = F.add(acc, F.mul(at(i, j), v[j]));
        r[i] = acc;
    }
    return r;
}

Mat Mat::transpose() const {
    Mat R(F, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) R.at(j, i) = at(i, j);
    return R;
}

bool Mat::operator==(const Mat& other) const {
    return rows == other.rows && cols == other.cols && a == other.a;
}

std::vector<int> rref(Mat& M) {
    const Field& F = M.F;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int sel = -1;
        for (int i = r; i < M.rows; ++i)
            if (M.at(i, c).v) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(r, j));
        Fe iv = F.inv(M.at(r, c));
        for (int j = c; j < M.cols; ++j) M.at(r, j) = F.mul(M.at(r, j), iv);
        for (int i = 0; i < M.rows; ++i) {
            if (i == r || M.at(i, c).v == 0) continue;
            Fe f = M.at(i, c);
            for (int j = c; j < M.cols; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(Mat M) { return (int)rref(M).size(); }

Subspace kernel(const Mat& M) {
    Mat R = M;
    std::vector<int> piv = rref(R);
    std::vector<bool> is_piv(M.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < M.cols; ++c) {
        if (is_piv[c]) continue;
        Vec v(M.cols, M.F.zero());
        v[c] = M.F.one();
        for (size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = M.F.neg(R.at((int)r, c));
        basis.push_back(std::move(v));
    }
    return Subspace::span(M.F, M.cols, basis);
}

Subspace::Subspace(const Field& F, int ambient) : F_(F), ambient_(ambient) {}

Subspace Subspace::full(const Field& F, int ambient) {
    Subspace S(F, ambient);
    for (int i = 0; i < ambient; ++i) {
        Vec v(ambient, F.zero());
        v[i] = F.one();
        S.basis_.push_back(std::move(v));
        S.pivots_.push_back(i);
    }
    return S;
}

Subspace Subspace::span(const Field& F, int ambient, const std::vector<Vec>& vectors) {
    Subspace S(F, ambient);
    for (const Vec& v : vectors) S.grow(v);
    return S;
}

Vec Subspace::reduce(const Vec& v) const {
    Vec r = v;
    for (size_t i = 0; i < basis_.size(); ++i) {
        Fe c = r[pivots_[i]];
        if (c.v == 0) continue;
        for (int j = 0; j < ambient_; ++j)
            r[j] = F_.sub(r[j], F_.mul(c, basis_[i][j]));
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (const Vec& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

bool Subspace::grow(const Vec& v) {
    if ((int)v.size() != ambient_) fail(ErrorKind::Invalid, "subspace dimension mismatch");
    Vec r = reduce(v);
    int lead = -1;
    for (int j = 0; j < ambient_; ++j)
        if (r[j].v) { lead = j; break; }
    if (lead < 0) return false;
    Fe iv = F_.inv(r[lead]);
    for (int j = 0; j < ambient_; ++j) r[j] = F_.mul(r[j], iv);
    // eliminate the new pivot from existing rows, keep rows pivot-sorted
    for (size_t i = 0; i < basis_.size(); ++i) {
        Fe c = basis_[i][lead];
        if (c.v == 0) continue;
        for (int j = 0; j < ambient_; ++j)
            basis_[i][j] = F_.sub(basis_[i][j], F_.mul(c, r[j]));
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    basis_.insert(basis_.begin() + pos, std::move(r));
    pivots_.insert(pivots_.begin() + pos, lead);
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    Subspace S = *this;
    for (const Vec& v : other.basis_) S.grow(v);
    return S;
}

Mat Subspace::quotient_map() const {
    std::vector<bool> is_piv(ambient_, false);
    for (int c : pivots_) is_piv[c] = true;
    int codim = ambient_ - dim();
    Mat Q(F_, codim, ambient_);
    int row = 0;
    for (int c = 0; c < ambient_; ++c) {
        if (is_piv[c]) continue;
        // functional: v -> reduce(v)[c]; reduce(e_j)[c] is e_j[c] minus pivot row entries
        Q.at(row, c) = F_.one();
        for (size_t i = 0; i < basis_.size(); ++i)
            Q.at(row, pivots_[i]) = F_.neg(basis_[i][c]);
        ++row;
    }
    return Q;
}

Subspace Subspace::intersect(const Subspace& other) const {
    Mat qa = quotient_map();
    Mat qb = other.quotient_map();
    Mat M(F_, qa.rows + qb.rows, ambient_);
    for (int i = 0; i < qa.rows; ++i)
        for (int j = 0; j < ambient_; ++j) M.at(i, j) = qa.at(i, j);
    for (int i = 0; i < qb.rows; ++i)
        for (int j = 0; j < ambient_; ++j) M.at(qa.rows + i, j) = qb.at(i, j);
    return kernel(M);
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Vec Subspace::coordinates(const Vec& v) const {
    Vec coords(basis_.size(), F_.zero());
    Vec r = v;
    for (size_t i = 0; i < basis_.size(); ++i) {
        Fe c = r[pivots_[i]];
        coords[i] = c;
        if (c.v == 0) continue;
        for (int j = 0; j < ambient_; ++j)
            r[j] = F_.sub(r[j], F_.mul(c, basis_[i][j]));
    }
    if (!is_zero_vec(r)) fail(ErrorKind::Invalid, "vector not in subspace");
    return coords;
}

void Subspace::renormalize() {}

Subspace preimage_subspace(const Mat& L, const Subspace& W) {
    if (L.rows != W.ambient())
        fail(ErrorKind::Invalid, "preimage: codomain dimension mismatch");
    Mat Q = W.quotient_map();
    return kernel(Q.mul(L));
}

std::optional<Vec> solve(const Mat& M, const Vec& b) {
    Mat A(M.F, M.rows, M.cols + 1);
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) A.at(i, j) = M.at(i, j);
        A.at(i, M.cols) = b[i];
    }
    std::vector<int> piv = rref(A);
    if (!piv.empty() && piv.back() == M.cols) return std::nullopt;
    Vec x(M.cols, M.F.zero());
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = A.at((int)r, M.cols);
    return x;
}

std::optional<Mat> inverse(const Mat& M) {
    if (M.rows != M.cols) return std::nullopt;
    int n = M.rows;
    Mat A(M.F, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) A.at(i, j) = M.at(i, j);
        A.at(i, n + i) = M.F.one();
    }
    std::vector<int> piv = rref(A);
    if ((int)piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Mat R(M.F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R.at(i, j) = A.at(i, n + j);
    return R;
}

Vec CommAlgebra::mulv(const Vec& x, const Vec& y) const {
    Vec r(dim, F.zero());
    for (int i = 0; i < dim; ++i) {
        if (x[i].v == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].v == 0) continue;
            Fe c = F.mul(x[i], y[j]);
            const Vec& m = mult[i][j];
            for (int k = 0; k < dim; ++k)
                if (m[k].v) r[k] = F.add(r[k], F.mul(c, m[k]));
        }
    }
    return r;
}

Vec CommAlgebra::powv(const Vec& x, uint64_t e) const {
    Vec r = unit, b = x;
    while (e) {
        if (e & 1) r = mulv(r, b);
        b = mulv(b, b);
        e >>= 1;
    }
    return r;
}

Subspace nilradical(const CommAlgebra& C) {
    // x is nilpotent iff x^(p^m) = 0 once p^m >= dim; x -> x^(p^m) is
    // p^m-semilinear, so solve in Frobenius-twisted coordinates
    const Field& F = C.F;
    uint64_t pm = 1;
    uint32_t m = 0;
    while (pm < (uint64_t)C.dim) { pm *= F.p(); ++m; }
    Mat M(F, C.dim, C.dim);
    for (int k = 0; k < C.dim; ++k) {
        Vec bk(C.dim, F.zero());
        bk[k] = F.one();
        Vec img = C.powv(bk, pm);
        for (int i = 0; i < C.dim; ++i) M.at(i, k) = img[i];
    }
    Subspace eta = kernel(M);
    // map back through the inverse Frobenius power, coordinate-wise
    std::vector<Vec> basis;
    for (Vec v : eta.basis()) {
        for (Fe& x : v)
            for (uint32_t t = 0; t < m; ++t) x = F.pth_root(x);
        basis.push_back(std::move(v));
    }
    return Subspace::span(F, C.dim, basis);
}

std::vector<Fe> min_poly(const Field& F, const std::vector<Vec>& powers) {
    // powers = [1, x, ..., x^(k-1), x^k] with x^k the first dependent one
    size_t k = powers.size() - 1;
    Mat M(F, (int)powers[0].size(), (int)k);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < powers[0].size(); ++i) M.at((int)i, (int)j) = powers[j][i];
    auto sol = solve(M, powers[k]);
    if (!sol) fail(ErrorKind::Internal, "min_poly: dependency expected");
    FPoly f(k + 1, F.zero());
    f[k] = F.one();
    for (size_t j = 0; j < k; ++j) f[j] = F.neg((*sol)[j]);
    return f;
}

namespace {

struct Component {
    Vec idempotent;           // in the ambient algebra's coordinatesature
    CommAlgebra alg;          // the corner algebra e*C with unit e
    std::vector<Vec> ideal_basis; // ambient vectors giving alg's basis
};

CommAlgebra restrict_to_ideal(const CommAlgebra& C, const std::vector<Vec>& basis,
                              const Vec& unit) {
    Subspace S = Subspace::span(C.F, C.dim, basis);
    CommAlgebra B;
    B.F = C.F;
    B.dim = S.dim();
    B.mult.assign(B.dim, std::vector<Vec>(B.dim));
    for (int i = 0; i < B.dim; ++i)
        for (int j = 0; j < B.dim; ++j)
            B.mult[i][j] = S.coordinates(C.mulv(S.basis()[i], S.basis()[j]));
    B.unit = S.coordinates(unit);
    return B;
}

// deterministic pool of separating-element candidates
std::vector<Vec> candidate_pool(const CommAlgebra& B) {
    std::vector<Vec> pool;
    for (int i = 0; i < B.dim; ++i) {
        Vec v(B.dim, B.F.zero());
        v[i] = B.F.one();
        pool.push_back(v);
    }
    for (int i = 0; i < B.dim; ++i)
        for (int j = i + 1; j < B.dim; ++j) {
            pool.push_back(add_vec(B.F, pool[i], pool[j]));
            pool.push_back(B.mulv(pool[i], pool[j]));
        }
    // scalar mixes; the field is small in every intended use
    if (B.F.q() <= 64 && B.dim <= 16) {
        for (int i = 0; i < B.dim; ++i)
            for (int j = 0; j < B.dim; ++j) {
                if (i == j) continue;
                for (uint32_t c = 2; c < B.F.q(); ++c) {
                    Vec v(B.dim, B.F.zero());
                    v[i] = B.F.one();
                    v[j] = Fe{c};
                    pool.push_back(std::move(v));
                }
            }
    }
    return pool;
}

FPoly minpoly_in(const CommAlgebra& B, const Vec& z) {
    std::vector<Vec> powers{B.unit};
    Subspace S(B.F, B.dim);
    S.grow(B.unit);
    Vec cur = z;
    while (!S.contains(cur)) {
        powers.push_back(cur);
        S.grow(cur);
        cur = B.mulv(cur, z);
    }
    powers.push_back(cur);
    return min_poly(B.F, powers);
}

// split a semisimple commutative algebra into its field components;
// returns idempotents in B's coordinates
std::vector<Vec> split_semisimple(const CommAlgebra& B, int* max_residue_degree) {
    if (B.dim == 1) {
        *max_residue_degree = std::max(*max_residue_degree, 1);
        return {B.unit};
    }
    const Field& F = B.F;
    for (const Vec& z : candidate_pool(B)) {
        FPoly mz = minpoly_in(B, z);
        auto factors = pfactor(F, mz);
        if (factors.size() < 2) continue;
        // CRT idempotents u_i(z): u_i = 1 mod f_i^{e_i}, 0 mod the rest
        std::vector<Vec> result;
        for (auto& [fi, ei] : factors) {
            FPoly Fi = fi;
            for (int t = 1; t < ei; ++t) Fi = pmulp(F, Fi, fi);
            FPoly Gi = pdivmod(F, mz, Fi).first;
            ExtGcd eg = pxgcd(F, Gi, Fi);
            if (pdegree(eg.g) != 0)
                fail(ErrorKind::Internal, "CRT factors not coprime");
            FPoly ui = pmodp(F, pmulp(F, eg.u, Gi), mz);
            // evaluate u_i at z inside B
            Vec e(B.dim, F.zero());
            Vec zp = B.unit;
            for (size_t k = 0; k < ui.size(); ++k) {
                if (ui[k].v) e = add_vec(F, e, scale_vec(F, ui[k], zp));
                zp = B.mulv(zp, z);
            }
            // recurse into the corner algebra e*B
            std::vector<Vec> ideal;
            for (int i = 0; i < B.dim; ++i) {
                Vec bi(B.dim, F.zero());
                bi[i] = F.one();
                ideal.push_back(B.mulv(bi, e));
            }
            Subspace S = Subspace::span(F, B.dim, ideal);
            CommAlgebra Bi = restrict_to_ideal(B, S.basis(), e);
            std::vector<Vec> sub = split_semisimple(Bi, max_residue_degree);
            for (const Vec& se : sub) {
                Vec amb(B.dim, F.zero());
                for (int t = 0; t < (int)se.size(); ++t)
                    amb = add_vec(F, amb, scale_vec(F, se[t], S.basis()[t]));
                result.push_back(std::move(amb));
            }
        }
        return result;
    }
    // nothing splits: B must be a field; certify with a primitive element
    for (const Vec& z : candidate_pool(B)) {
        FPoly mz = minpoly_in(B, z);
        if (pdegree(mz) == B.dim && pirreducible(F, mz)) {
            *max_residue_degree = std::max(*max_residue_degree, B.dim);
            return {B.unit};
        }
    }
    fail(ErrorKind::Internal, "split_semisimple: could not certify a field component");
}

} // namespace

std::vector<Vec> split_idempotents(const CommAlgebra& C, bool require_split) {
    const Field& F = C.F;
    Subspace N = nilradical(C);
    // semisimple quotient in complement coordinates
    Mat Q = N.quotient_map();
    int qdim = Q.rows;
    // section: choose preimages of the quotient basis
    std::vector<Vec> section;
    {
        // non-pivot unit vectors map to the standard basis of the quotient
        std::vector<bool> is_piv(C.dim, false);
        for (const Vec& b : N.basis()) {
            for (int j = 0; j < C.dim; ++j)
                if (b[j].v) { is_piv[j] = true; break; }
        }
        for (int j = 0; j < C.dim; ++j)
            if (!is_piv[j]) {
                Vec v(C.dim, F.zero());
                v[j] = F.one();
                section.push_back(std::move(v));
            }
    }
    CommAlgebra Cbar;
    Cbar.F = F;
    Cbar.dim = qdim;
    Cbar.mult.assign(qdim, std::vector<Vec>(qdim));
    for (int i = 0; i < qdim; ++i)
        for (int j = 0; j < qdim; ++j)
            Cbar.mult[i][j] = Q.apply(C.mulv(section[i], section[j]));
    Cbar.unit = Q.apply(C.unit);

    int max_res_deg = 1;
    std::vector<Vec> ebars = split_semisimple(Cbar, &max_res_deg);
    if (require_split && max_res_deg > 1)
        fail(ErrorKind::ExtendField,
             "semisimple quotient has a residue field of degree " +
                 std::to_string(max_res_deg) + " over GF(" + std::to_string(F.p()) +
                 "^" + std::to_string(F.d()) + ")",
             (int)(F.d() * max_res_deg));

    // lift through the nilradical: Newton iteration e <- 3e^2 - 2e^3,
    // orthogonalized against the previously lifted idempotents
    std::vector<Vec> lifted;
    Vec partial(C.dim, F.zero());
    uint32_t steps = 1;
    while ((1u << steps) < (uint32_t)C.dim + 1) ++steps;
    for (size_t idx = 0; idx < ebars.size(); ++idx) {
        Vec u(C.dim, F.zero());
        for (int t = 0; t < qdim; ++t)
            u = add_vec(F, u, scale_vec(F, ebars[idx][t], section[t]));
        if (idx + 1 == ebars.size()) {
            u = sub_vec(F, C.unit, partial);
        } else {
            Vec comp = sub_vec(F, C.unit, partial);
            u = C.mulv(C.mulv(comp, u), comp);
        }
        for (uint32_t s = 0; s <= steps; ++s) {
            Vec u2 = C.mulv(u, u);
            Vec u3 = C.mulv(u2, u);
            u = sub_vec(F, scale_vec(F, F.from_int(3), u2), scale_vec(F, F.from_int(2), u3));
        }
        if (C.mulv(u, u) != u)
            fail(ErrorKind::Internal, "idempotent lifting did not converge");
        lifted.push_back(u);
        partial = add_vec(F, partial, u);
    }
    if (partial != C.unit)
        fail(ErrorKind::Internal, "idempotents do not sum to 1");
    for (size_t i = 0; i < lifted.size(); ++i)
        for (size_t j = i + 1; j < lifted.size(); ++j)
            if (!is_zero_vec(C.mulv(lifted[i], lifted[j])))
                fail(ErrorKind::Internal, "lifted idempotents not orthogonal");
    return lifted;
}

} // namespace hopfforge
