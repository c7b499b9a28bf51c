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

#include "hopfforge/hopf.hpp"

#include <algorithm>
#include <map>

#include "hopfforge/families.hpp"

namespace hopfforge {

namespace {

void sadd(const Field& F, std::map<std::pair<int, int>, Fe>& m, int a, int b, Fe c) {
    if (F.is_zero(c)) return;
    auto key = std::make_pair(a, b);
    auto it = m.find(key);
    Fe v = it == m.end() ? c : F.add(it->second, c);
    if (F.is_zero(v)) {
        if (it != m.end()) m.erase(it);
    } else {
        m[key] = v;
    }
}

} // namespace

Vec HopfAlgebra::basis_vec(int i) const {
    Vec v(dim, F.zero());
    v[i] = F.one();
    return v;
}

Vec HopfAlgebra::mul_basis(int i, int j) const {
    Vec v(dim, F.zero());
    for (auto& [k, c] : mult[i][j]) v[k] = c;
    return v;
}

Vec HopfAlgebra::mulv(const Vec& u, const Vec& v) const {
    Vec r(dim, F.zero());
    for (int i = 0; i < dim; ++i) {
        if (u[i].v == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (v[j].v == 0) continue;
            Fe c = F.mul(u[i], v[j]);
            for (auto& [k, mc] : mult[i][j]) r[k] = F.add(r[k], F.mul(c, mc));
        }
    }
    return r;
}

Vec HopfAlgebra::powv(const Vec& u, uint64_t e) const {
    Vec r = unit, b = u;
    while (e) {
        if (e & 1) r = mulv(r, b);
        b = mulv(b, b);
        e >>= 1;
    }
    return r;
}

Fe HopfAlgebra::counit_of(const Vec& v) const {
    Fe acc = F.zero();
    for (int i = 0; i < dim; ++i)
        if (v[i].v) acc = F.add(acc, F.mul(counit[i], v[i]));
    return acc;
}

Vec HopfAlgebra::apply_antipode(const Vec& v) const { return antipode.apply(v); }

Mat HopfAlgebra::left_mult_matrix(const Vec& v) const {
    Mat M(F, dim, dim);
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < dim; ++i) {
            if (v[i].v == 0) continue;
            for (auto& [k, c] : mult[i][j])
                M.at(k, j) = F.add(M.at(k, j), F.mul(v[i], c));
        }
    }
    return M;
}

Mat HopfAlgebra::right_mult_matrix(const Vec& v) const {
    Mat M(F, dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (v[j].v == 0) continue;
            for (auto& [k, c] : mult[i][j])
                M.at(k, i) = F.add(M.at(k, i), F.mul(v[j], c));
        }
    }
    return M;
}

std::string HopfAlgebra::describe(const Vec& v) const {
    std::string s;
    for (int i = 0; i < dim; ++i) {
        if (v[i].v == 0) continue;
        if (!s.empty()) s += " + ";
        std::string name = labels.empty() ? "e" + std::to_string(i) : labels[i];
        if (v[i] == F.one()) s += name;
        else s += F.to_string(v[i]) + "*" + name;
    }
    return s.empty() ? "0" : s;
}

VerifyReport verify_hopf(const HopfAlgebra& H) {
    const Field& F = H.F;
    VerifyReport rep;
    auto record = [&](const std::string& axiom, bool pass, const std::string& witness) {
        rep.axioms.push_back({axiom, pass, pass ? "" : witness});
    };
    auto name = [&](int i) {
        return H.labels.empty() ? "e" + std::to_string(i) : H.labels[i];
    };

    // associativity on all basis triples
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < H.dim && ok; ++i)
            for (int j = 0; j < H.dim && ok; ++j) {
                Vec ij = H.mul_basis(i, j);
                for (int k = 0; k < H.dim && ok; ++k) {
                    Vec lhs(H.dim, F.zero());
                    for (int m = 0; m < H.dim; ++m) {
                        if (ij[m].v == 0) continue;
                        for (auto& [t, c] : H.mult[m][k])
                            lhs[t] = F.add(lhs[t], F.mul(ij[m], c));
                    }
                    Vec jk = H.mul_basis(j, k);
                    Vec rhs(H.dim, F.zero());
                    for (int m = 0; m < H.dim; ++m) {
                        if (jk[m].v == 0) continue;
                        for (auto& [t, c] : H.mult[i][m])
                            rhs[t] = F.add(rhs[t], F.mul(jk[m], c));
                    }
                    if (lhs != rhs) {
                        ok = false;
                        wit = "(" + name(i) + "," + name(j) + "," + name(k) + ")";
                    }
                }
            }
        record("associativity", ok, wit);
    }

    // unit
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < H.dim && ok; ++i) {
            if (H.mulv(H.unit, H.basis_vec(i)) != H.basis_vec(i) ||
                H.mulv(H.basis_vec(i), H.unit) != H.basis_vec(i)) {
                ok = false;
                wit = name(i);
            }
        }
        record("unit", ok, wit);
    }

    // coassociativity
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < H.dim && ok; ++i) {
            std::map<std::array<int, 3>, Fe> lhs, rhs;
            auto tadd = [&](std::map<std::array<int, 3>, Fe>& m, int a, int b, int c, Fe v) {
                if (F.is_zero(v)) return;
                std::array<int, 3> key{a, b, c};
                auto it = m.find(key);
                Fe nv = it == m.end() ? v : F.add(it->second, v);
                if (F.is_zero(nv)) {
                    if (it != m.end()) m.erase(it);
                } else {
                    m[key] = nv;
                }
            };
            for (auto& [j, k, c] : H.comult[i]) {
                for (auto& [r, s, c2] : H.comult[j]) tadd(lhs, r, s, k, F.mul(c, c2));
                for (auto& [r, s, c2] : H.comult[k]) tadd(rhs, j, r, s, F.mul(c, c2));
            }
            if (lhs != rhs) {
                ok = false;
                wit = name(i);
            }
        }
        record("coassociativity", ok, wit);
    }

    // counit axiom
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < H.dim && ok; ++i) {
            Vec left(H.dim, F.zero()), right(H.dim, F.zero());
            for (auto& [j, k, c] : H.comult[i]) {
                left[k] = F.add(left[k], F.mul(c, H.counit[j]));
                right[j] = F.add(right[j], F.mul(c, H.counit[k]));
            }
            if (left != H.basis_vec(i) || right != H.basis_vec(i)) {
                ok = false;
                wit = name(i);
            }
        }
        record("counit", ok, wit);
    }

    // Delta is an algebra map
    {
        bool ok = true;
        std::string wit;
        // Delta(1) = 1 (x) 1
        {
            std::map<std::pair<int, int>, Fe> del;
            for (int i = 0; i < H.dim; ++i) {
                if (H.unit[i].v == 0) continue;
                for (auto& [j, k, c] : H.comult[i]) sadd(F, del, j, k, F.mul(H.unit[i], c));
            }
            std::map<std::pair<int, int>, Fe> expect;
            for (int i = 0; i < H.dim; ++i)
                for (int j = 0; j < H.dim; ++j) {
                    Fe v = F.mul(H.unit[i], H.unit[j]);
                    sadd(F, expect, i, j, v);
                }
            if (del != expect) {
                ok = false;
                wit = "1";
            }
        }
        for (int i = 0; i < H.dim && ok; ++i)
            for (int j = 0; j < H.dim && ok; ++j) {
                std::map<std::pair<int, int>, Fe> lhs, rhs;
                for (auto& [m, c] : H.mult[i][j])
                    for (auto& [r, s, c2] : H.comult[m]) sadd(F, lhs, r, s, F.mul(c, c2));
                for (auto& [r1, s1, c1] : H.comult[i])
                    for (auto& [r2, s2, c2] : H.comult[j]) {
                        Fe c = F.mul(c1, c2);
                        for (auto& [rr, cr] : H.mult[r1][r2]) {
                            Fe crr = F.mul(c, cr);
                            for (auto& [ss, cs] : H.mult[s1][s2])
                                sadd(F, rhs, rr, ss, F.mul(crr, cs));
                        }
                    }
                if (lhs != rhs) {
                    ok = false;
                    wit = "(" + name(i) + "," + name(j) + ")";
                }
            }
        record("comultiplication multiplicative", ok, wit);
    }

    // epsilon is an algebra map
    {
        bool ok = true;
        std::string wit;
        if (H.counit_of(H.unit) != F.one()) {
            ok = false;
            wit = "1";
        }
        for (int i = 0; i < H.dim && ok; ++i)
            for (int j = 0; j < H.dim && ok; ++j) {
                Fe lhs = F.zero();
                for (auto& [m, c] : H.mult[i][j]) lhs = F.add(lhs, F.mul(c, H.counit[m]));
                if (lhs != F.mul(H.counit[i], H.counit[j])) {
                    ok = false;
                    wit = "(" + name(i) + "," + name(j) + ")";
                }
            }
        record("counit multiplicative", ok, wit);
    }

    // antipode axiom
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < H.dim && ok; ++i) {
            Vec left(H.dim, F.zero()), right(H.dim, F.zero());
            for (auto& [j, k, c] : H.comult[i]) {
                // m(S (x) id): S(e_j) e_k
                for (int t = 0; t < H.dim; ++t) {
                    Fe sc = H.antipode.at(t, j);
                    if (sc.v == 0) continue;
                    for (auto& [m, mc] : H.mult[t][k])
                        left[m] = F.add(left[m], F.mul(F.mul(c, sc), mc));
                }
                // m(id (x) S): e_j S(e_k)
                for (int t = 0; t < H.dim; ++t) {
                    Fe sc = H.antipode.at(t, k);
                    if (sc.v == 0) continue;
                    for (auto& [m, mc] : H.mult[j][t])
                        right[m] = F.add(right[m], F.mul(F.mul(c, sc), mc));
                }
            }
            Vec expect = scale_vec(F, H.counit[i], H.unit);
            if (left != expect || right != expect) {
                ok = false;
                wit = name(i);
            }
        }
        record("antipode", ok, wit);
    }

    return rep;
}

namespace {

bool is_grouplike(const HopfAlgebra& H, const Vec& v) {
    const Field& F = H.F;
    if (H.counit_of(v) != F.one()) return false;
    std::map<std::pair<int, int>, Fe> del;
    for (int i = 0; i < H.dim; ++i) {
        if (v[i].v == 0) continue;
        for (auto& [j, k, c] : H.comult[i]) sadd(F, del, j, k, F.mul(v[i], c));
    }
    std::map<std::pair<int, int>, Fe> outer;
    for (int i = 0; i < H.dim; ++i) {
        if (v[i].v == 0) continue;
        for (int j = 0; j < H.dim; ++j)
            if (v[j].v) sadd(F, outer, i, j, F.mul(v[i], v[j]));
    }
    return del == outer;
}

} // namespace

std::vector<Vec> group_likes(const HopfAlgebra& H, uint64_t budget) {
    const Field& F = H.F;
    std::vector<Vec> found;
    if (H.family) {
        int n = H.family->n();
        for (int g = 0; g < H.family->group.order(); ++g) {
            Vec v = H.basis_vec(g * n);
            if (!is_grouplike(H, v))
                fail(ErrorKind::Internal, "labeled basis element is not group-like");
            found.push_back(std::move(v));
        }
    } else {
        // affine enumeration
        double total = 1;
        for (int i = 0; i < H.dim; ++i) total *= F.q();
        if (total > (double)budget)
            fail(ErrorKind::Budget,
                 "group-like enumeration over " + std::to_string(H.dim) +
                     " dimensions exceeds the budget");
        Vec v(H.dim, F.zero());
        while (true) {
            if (is_grouplike(H, v)) found.push_back(v);
            int i = 0;
            while (i < H.dim) {
                v[i].v++;
                if (v[i].v < F.q()) break;
                v[i].v = 0;
                ++i;
            }
            if (i == H.dim) break;
        }
    }
    // closure under multiplication
    for (const Vec& g : found)
        for (const Vec& h : found) {
            Vec gh = H.mulv(g, h);
            if (std::find(found.begin(), found.end(), gh) == found.end())
                fail(ErrorKind::Internal, "group-likes not closed under multiplication");
        }
    return found;
}

std::pair<GroupData, std::vector<Vec>> grouplike_group(const HopfAlgebra& H, uint64_t budget) {
    std::vector<Vec> gl = group_likes(H, budget);
    // identity (the unit) first
    auto it = std::find(gl.begin(), gl.end(), H.unit);
    if (it == gl.end()) fail(ErrorKind::Internal, "unit is not among the group-likes");
    std::swap(*gl.begin(), *it);
    int n = (int)gl.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec prod = H.mulv(gl[i], gl[j]);
            auto pos = std::find(gl.begin(), gl.end(), prod);
            if (pos == gl.end())
                fail(ErrorKind::Internal, "group-likes not closed under multiplication");
            table[i][j] = (int)(pos - gl.begin());
        }
    GroupData G = GroupData::from_table(table, 0);
    if (H.family) {
        std::vector<std::string> names;
        int fn = H.family->n();
        for (int g = 0; g < G.order(); ++g) {
            // find the basis index of gl[g]
            int idx = -1;
            for (int i = 0; i < H.dim; ++i)
                if (gl[g][i].v) { idx = i; break; }
            names.push_back(H.labels.empty() ? "g" + std::to_string(idx / fn)
                                             : H.labels[idx]);
        }
        G.set_names(names);
    }
    return {G, gl};
}

Subspace skew_primitives(const HopfAlgebra& H, const Vec& g, const Vec& h,
                         const Subspace* domain) {
    const Field& F = H.F;
    std::vector<Vec> dom_basis;
    if (domain) dom_basis = domain->basis();
    else
        for (int i = 0; i < H.dim; ++i) dom_basis.push_back(H.basis_vec(i));
    int m = (int)dom_basis.size();
    Mat M(F, H.dim * H.dim, m);
    for (int c = 0; c < m; ++c) {
        const Vec& w = dom_basis[c];
        std::map<std::pair<int, int>, Fe> val;
        for (int i = 0; i < H.dim; ++i) {
            if (w[i].v == 0) continue;
            for (auto& [j, k, cf] : H.comult[i]) sadd(F, val, j, k, F.mul(w[i], cf));
        }
        for (int i = 0; i < H.dim; ++i) {
            if (w[i].v) {
                for (int j = 0; j < H.dim; ++j) {
                    if (g[j].v) sadd(F, val, i, j, F.neg(F.mul(w[i], g[j])));
                    if (h[j].v) sadd(F, val, j, i, F.neg(F.mul(h[j], w[i])));
                }
            }
        }
        for (auto& [key, cf] : val) M.at(key.first * H.dim + key.second, c) = cf;
    }
    Subspace K = kernel(M);
    // back to ambient coordinates
    std::vector<Vec> amb;
    for (const Vec& coef : K.basis()) {
        Vec v(H.dim, F.zero());
        for (int c = 0; c < m; ++c)
            if (coef[c].v) v = add_vec(F, v, scale_vec(F, coef[c], dom_basis[c]));
        amb.push_back(std::move(v));
    }
    return Subspace::span(F, H.dim, amb);
}

Subspace delta_preimage(const HopfAlgebra& H, const Subspace& A, const Subspace& B) {
    const Field& F = H.F;
    Mat qa = A.quotient_map(); // (codimA x dim)
    Mat qb = B.quotient_map();
    int ra = qa.rows, rb = qb.rows;
    if (ra == 0 || rb == 0) return Subspace::full(F, H.dim);
    // build (pi_A (x) pi_B) o Delta as an (ra*rb) x dim matrix
    Mat M(F, ra * rb, H.dim);
    for (int e = 0; e < H.dim; ++e) {
        for (auto& [j, k, c] : H.comult[e]) {
            // contribution c * (qa column j) (x) (qb column k)
            for (int u = 0; u < ra; ++u) {
                Fe cu = qa.at(u, j);
                if (cu.v == 0) continue;
                Fe cc = F.mul(c, cu);
                for (int v = 0; v < rb; ++v) {
                    Fe cv = qb.at(v, k);
                    if (cv.v == 0) continue;
                    M.at(u * rb + v, e) = F.add(M.at(u * rb + v, e), F.mul(cc, cv));
                }
            }
        }
    }
    return kernel(M);
}

FiltrationResult coradical_filtration(const HopfAlgebra& H, uint64_t budget) {
    const Field& F = H.F;
    std::vector<Vec> gl = group_likes(H, budget);
    FiltrationResult res;
    res.chain.push_back(Subspace::span(F, H.dim, gl));
    while (true) {
        const Subspace& prev = res.chain.back();
        if (prev.dim() == H.dim) break;
        Subspace next = delta_preimage(H, res.chain.front(), prev);
        if (next == prev) break; // stabilized below H
        res.chain.push_back(next);
    }
    res.stabilized_at = (int)res.chain.size() - 1;
    res.pointed = res.chain.back().dim() == H.dim;
    // rank: H_1 free over H_0 with basis {1, x_1, ..., x_t}
    if (res.pointed) {
        const Subspace& H0 = res.chain.front();
        const Subspace& H1 = res.chain.size() > 1 ? res.chain[1] : res.chain[0];
        int d0 = H0.dim(), d1 = H1.dim();
        if (d1 == d0) {
            res.rank = 0;
        } else if (d1 % d0 == 0) {
            // greedily extend a free H_0-basis
            Subspace V = H0;
            int t = 0;
            bool free_ok = true;
            while (V.dim() < d1 && free_ok) {
                Vec x;
                for (const Vec& w : H1.basis())
                    if (!V.contains(w)) { x = w; break; }
                if (x.empty()) { free_ok = false; break; }
                int before = V.dim();
                for (const Vec& g : gl) V.grow(H.mulv(g, x));
                if (V.dim() - before != d0) free_ok = false;
                ++t;
            }
            if (free_ok && V == H1) res.rank = t;
        }
    }
    return res;
}

DegreeResult degree_of(const HopfAlgebra& H, const Vec& x, const Subspace& H0) {
    const Field& F = H.F;
    if (H0.contains(x)) fail(ErrorKind::Invalid, "degree_of: x lies in H_0");
    // V_k = sum_{t<=k} H_0 x^t; find least n with x^n in V_{n-1}
    std::vector<Vec> h0b = H0.basis();
    Subspace V = H0;
    std::vector<Vec> xpow{H.unit}; // x^0
    int n = 0;
    Vec cur = x;
    while (true) {
        ++n;
        if (V.contains(cur)) break;
        // V += H_0 x^n-th power (cur = x^n after this round's test at x^n)
        for (const Vec& b : h0b) V.grow(H.mulv(b, cur));
        xpow.push_back(cur);
        cur = H.mulv(cur, x);
        if (n > H.dim + 1) fail(ErrorKind::Internal, "degree_of: no relation found");
    }
    // solve x^n = sum_{i<n} b_i x^i with b_i in H_0
    int d0 = (int)h0b.size();
    Mat M(F, H.dim, n * d0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d0; ++j) {
            Vec col = H.mulv(h0b[j], xpow[i]);
            for (int r = 0; r < H.dim; ++r) M.at(r, i * d0 + j) = col[r];
        }
    auto sol = solve(M, cur);
    if (!sol) fail(ErrorKind::Internal, "degree_of: coefficient solve failed");
    DegreeResult res;
    res.n = n;
    for (int i = 0; i < n; ++i) {
        Vec bi(H.dim, F.zero());
        for (int j = 0; j < d0; ++j)
            if ((*sol)[i * d0 + j].v)
                bi = add_vec(F, bi, scale_vec(F, (*sol)[i * d0 + j], h0b[j]));
        res.coeffs.push_back(std::move(bi));
    }
    return res;
}

Subspace ideal_closure(const HopfAlgebra& H, const std::vector<Vec>& gens) {
    Subspace I(H.F, H.dim);
    std::vector<Vec> work;
    for (const Vec& g : gens)
        if (I.grow(g)) work.push_back(g);
    while (!work.empty()) {
        Vec v = work.back();
        work.pop_back();
        for (int r = 0; r < H.dim; ++r) {
            Vec lv = H.mulv(H.basis_vec(r), v);
            if (I.grow(lv)) work.push_back(lv);
            Vec rv = H.mulv(v, H.basis_vec(r));
            if (I.grow(rv)) work.push_back(rv);
        }
    }
    return I;
}

Subspace subspace_product(const HopfAlgebra& H, const Subspace& U, const Subspace& V) {
    std::vector<Vec> prods;
    for (const Vec& u : U.basis())
        for (const Vec& v : V.basis()) prods.push_back(H.mulv(u, v));
    return Subspace::span(H.F, H.dim, prods);
}

NilpotentIdealResult nilpotent_ideal_check(const HopfAlgebra& H, const std::vector<Vec>& gens) {
    NilpotentIdealResult res;
    res.ideal = ideal_closure(H, gens);
    if (res.ideal.dim() == 0) {
        res.index = 1;
        return res;
    }
    Subspace power = res.ideal;
    int e = 1;
    while (true) {
        Subspace next = subspace_product(H, res.ideal, power);
        ++e;
        if (next.dim() == 0) {
            res.index = e;
            return res;
        }
        if (next == power) return res; // stable nonzero power: not nilpotent
        power = next;
        if (e > H.dim + 1) return res;
    }
}

bool delta_in_wedge(const HopfAlgebra& H, int basis_index, const std::vector<Subspace>& chain,
                    int level) {
    // sum_{k<=i} H_k (x) H_{i-k} = intersection over k of
    // (H_{k-1} (x) H + H (x) H_{i-k}); chain entries below 0 act as 0
    const Field& F = H.F;
    auto at = [&](int k) -> Subspace {
        if (k < 0) return Subspace(F, H.dim);
        size_t kk = std::min<size_t>(k, chain.size() - 1);
        return chain[kk];
    };
    for (int k = 0; k <= level + 1; ++k) {
        Mat qa = at(k - 1).quotient_map();
        Mat qb = at(level - k).quotient_map();
        if (qa.rows == 0 || qb.rows == 0) continue;
        std::map<std::pair<int, int>, Fe> acc;
        for (auto& [j, t, c] : H.comult[basis_index]) {
            for (int u = 0; u < qa.rows; ++u) {
                Fe cu = qa.at(u, j);
                if (cu.v == 0) continue;
                for (int v = 0; v < qb.rows; ++v) {
                    Fe cv = qb.at(v, t);
                    if (cv.v == 0) continue;
                    sadd(F, acc, u, v, F.mul(F.mul(c, cu), cv));
                }
            }
        }
        if (!acc.empty()) return false;
    }
    return true;
}

HopfAlgebra group_algebra(const Field& F, const GroupData& G) {
    HopfAlgebra H;
    H.F = F;
    H.dim = G.order();
    H.unit = Vec(H.dim, F.zero());
    H.unit[0] = F.one();
    H.mult.assign(H.dim, std::vector<SparseVec>(H.dim));
    H.comult.assign(H.dim, SparseMat{});
    H.counit = Vec(H.dim, F.one());
    H.antipode = Mat(F, H.dim, H.dim);
    for (int g = 0; g < H.dim; ++g) {
        for (int h = 0; h < H.dim; ++h)
            H.mult[g][h] = SparseVec{{G.mul(g, h), F.one()}};
        H.comult[g] = SparseMat{{g, g, F.one()}};
        H.antipode.at(G.inverse(g), g) = F.one();
    }
    H.labels.resize(H.dim);
    for (int g = 0; g < H.dim; ++g) H.labels[g] = G.name(g);
    return H;
}

} // namespace hopfforge
