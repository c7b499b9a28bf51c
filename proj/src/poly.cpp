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

#include "hopfforge/poly.hpp"

#include <algorithm>

namespace hopfforge {

namespace {
using Vec = std::vector<Fe>;
}

FPoly ptrim(FPoly f) {
    while (!f.empty() && f.back().v == 0) f.pop_back();
    return f;
}

int pdegree(const FPoly& f) { return (int)f.size() - 1; }
bool pzero(const FPoly& f) { return f.empty(); }

FPoly pconst(const Field& F, Fe c) {
    (void)F;
    return c.v == 0 ? FPoly{} : FPoly{c};
}

FPoly pvar(const Field& F) { return FPoly{F.zero(), F.one()}; }

FPoly padd(const Field& F, const FPoly& a, const FPoly& b) {
    FPoly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    return ptrim(std::move(r));
}

FPoly psub(const Field& F, const FPoly& a, const FPoly& b) {
    FPoly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    return ptrim(std::move(r));
}

FPoly pscale(const Field& F, Fe c, const FPoly& a) {
    if (c.v == 0) return {};
    FPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
    return ptrim(std::move(r));
}

FPoly pmulp(const Field& F, const FPoly& a, const FPoly& b) {
    if (pzero(a) || pzero(b)) return {};
    FPoly r(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].v == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return ptrim(std::move(r));
}

std::pair<FPoly, FPoly> pdivmod(const Field& F, const FPoly& a, const FPoly& b) {
    if (pzero(b)) fail(ErrorKind::Invalid, "polynomial division by zero");
    FPoly rem = a, quo;
    int db = pdegree(b);
    Fe lead_inv = F.inv(b.back());
    if (pdegree(rem) >= db) quo.assign(pdegree(rem) - db + 1, F.zero());
    while (pdegree(rem) >= db) {
        int k = pdegree(rem) - db;
        Fe c = F.mul(rem.back(), lead_inv);
        quo[k] = c;
        for (int i = 0; i <= db; ++i)
            rem[k + i] = F.sub(rem[k + i], F.mul(c, b[i]));
        rem = ptrim(std::move(rem));
    }
    return {ptrim(std::move(quo)), rem};
}

FPoly pmodp(const Field& F, const FPoly& a, const FPoly& b) {
    return pdivmod(F, a, b).second;
}

FPoly pmonic(const Field& F, const FPoly& a) {
    if (pzero(a)) return a;
    return pscale(F, F.inv(a.back()), a);
}

FPoly pgcd(const Field& F, FPoly a, FPoly b) {
    while (!pzero(b)) {
        FPoly r = pmodp(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(F, a);
}

ExtGcd pxgcd(const Field& F, const FPoly& a, const FPoly& b) {
    FPoly r0 = a, r1 = b;
    FPoly u0 = pconst(F, F.one()), u1 = {};
    FPoly v0 = {}, v1 = pconst(F, F.one());
    while (!pzero(r1)) {
        auto [q, r] = pdivmod(F, r0, r1);
        FPoly u2 = psub(F, u0, pmulp(F, q, u1));
        FPoly v2 = psub(F, v0, pmulp(F, q, v1));
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (!pzero(r0)) {
        Fe c = F.inv(r0.back());
        r0 = pscale(F, c, r0);
        u0 = pscale(F, c, u0);
        v0 = pscale(F, c, v0);
    }
    return {r0, u0, v0};
}

FPoly pderive(const Field& F, const FPoly& a) {
    FPoly r;
    for (size_t i = 1; i < a.size(); ++i)
        r.push_back(F.mul(F.from_int((int64_t)i), a[i]));
    return ptrim(std::move(r));
}

Fe peval(const Field& F, const FPoly& a, Fe x) {
    Fe acc = F.zero();
    for (size_t i = a.size(); i-- > 0;)
        acc = F.add(F.mul(acc, x), a[i]);
    return acc;
}

FPoly ppowmod(const Field& F, FPoly base, uint64_t e, const FPoly& mod) {
    FPoly r = pconst(F, F.one());
    base = pmodp(F, base, mod);
    while (e) {
        if (e & 1) r = pmodp(F, pmulp(F, r, base), mod);
        base = pmodp(F, pmulp(F, base, base), mod);
        e >>= 1;
    }
    return r;
}

bool pequal(const FPoly& a, const FPoly& b) { return a == b; }

std::string pformat(const Field& F, const FPoly& a, const std::string& var) {
    if (pzero(a)) return "0";
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].v == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || a[i].v != 1) s += F.to_string(a[i]);
        if (i > 0) {
            if (a[i].v != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

namespace {

// p-th root of f when f' = 0, i.e. f(t) = g(t^p); unique in char p.
FPoly pth_root_poly(const Field& F, const FPoly& f) {
    uint32_t p = F.p();
    FPoly g((f.size() + p - 1) / p);
    for (size_t i = 0; i < g.size(); ++i) {
        Fe c = (i * p < f.size()) ? f[i * p] : F.zero();
        g[i] = F.pth_root(c);
    }
    return ptrim(std::move(g));
}

// one monic irreducible factor of squarefree monic h (deg >= 1), Berlekamp
FPoly berlekamp_factor(const Field& F, const FPoly& h) {
    int n = pdegree(h);
    if (n == 1) return h;
    // Frobenius matrix on F_q[t]/(h): columns are t^(i*q) mod h
    FPoly tq = ppowmod(F, pvar(F), F.q(), h);
    std::vector<FPoly> frob(n);
    frob[0] = pconst(F, F.one());
    for (int i = 1; i < n; ++i) frob[i] = pmodp(F, pmulp(F, frob[i - 1], tq), h);
    // kernel of (Q - I) by Gaussian elimination; rows are candidate b's
    std::vector<Vec> rows(n, Vec(n, F.zero()));
    for (int i = 0; i < n; ++i) {
        for (size_t k = 0; k < frob[i].size(); ++k) rows[i][k] = frob[i][k];
        rows[i][i] = F.sub(rows[i][i], F.one());
    }
    // transpose-free kernel: solve x (Q - I) = 0 treating rows as the images
    // of basis vectors; x is a left null vector <=> poly b = sum x_i t^i fixed
    // by Frobenius.  Use elimination on the transposed matrix.
    std::vector<Vec> m(n, Vec(n, F.zero()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[j][i] = rows[i][j];
    std::vector<int> piv_of_col(n, -1);
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int sel = -1;
        for (int i = r; i < n; ++i)
            if (m[i][c].v != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[sel], m[r]);
        Fe iv = F.inv(m[r][c]);
        for (int k = 0; k < n; ++k) m[r][k] = F.mul(m[r][k], iv);
        for (int i = 0; i < n; ++i)
            if (i != r && m[i][c].v != 0) {
                Fe f0 = m[i][c];
                for (int k = 0; k < n; ++k)
                    m[i][k] = F.sub(m[i][k], F.mul(f0, m[r][k]));
            }
        piv_of_col[c] = r;
        ++r;
    }
    if (r >= n) fail(ErrorKind::Internal, "berlekamp: trivial kernel");
    // some free column gives a non-constant fixed polynomial
    for (int c = 0; c < n; ++c) {
        if (piv_of_col[c] >= 0) continue;
        FPoly b(n, F.zero());
        b[c] = F.one();
        for (int c2 = 0; c2 < n; ++c2)
            if (piv_of_col[c2] >= 0) b[c2] = F.neg(m[piv_of_col[c2]][c]);
        b = ptrim(std::move(b));
        if (pdegree(b) < 1) continue; // the constants; try the next one
        for (uint32_t cv = 0; cv < F.q(); ++cv) {
            FPoly g = pgcd(F, h, psub(F, b, pconst(F, Fe{cv})));
            if (pdegree(g) >= 1 && pdegree(g) < n)
                return berlekamp_factor(F, pmonic(F, g));
        }
    }
    return h; // kernel had dimension 1: irreducible
}

FPoly one_irreducible_factor(const Field& F, FPoly f) {
    f = pmonic(F, f);
    if (pdegree(f) == 1) return f;
    FPoly df = pderive(F, f);
    if (pzero(df)) return one_irreducible_factor(F, pth_root_poly(F, f));
    FPoly g = pgcd(F, f, df);
    FPoly h = pdegree(g) == 0 ? f : pdivmod(F, f, g).first; // squarefree, nonconstant
    return berlekamp_factor(F, pmonic(F, h));
}

} // namespace

std::vector<std::pair<FPoly, int>> pfactor(const Field& F, FPoly f) {
    f = ptrim(std::move(f));
    if (pzero(f)) fail(ErrorKind::Invalid, "factor of zero polynomial");
    f = pmonic(F, f);
    std::vector<std::pair<FPoly, int>> out;
    while (pdegree(f) > 0) {
        FPoly fac = one_irreducible_factor(F, f);
        int mult = 0;
        while (true) {
            auto [q, r] = pdivmod(F, f, fac);
            if (!pzero(r)) break;
            f = q;
            ++mult;
        }
        out.emplace_back(fac, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        for (size_t i = a.first.size(); i-- > 0;)
            if (a.first[i].v != b.first[i].v) return a.first[i].v < b.first[i].v;
        return false;
    });
    return out;
}

bool pirreducible(const Field& F, const FPoly& f) {
    if (pdegree(f) < 1) return false;
    auto fs = pfactor(F, f);
    return fs.size() == 1 && fs[0].second == 1;
}

} // namespace hopfforge
