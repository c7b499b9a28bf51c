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

#include "hopfforge/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hopfforge/qcomb.hpp"

namespace hopfforge {

std::string variant_name(Variant v) {
    switch (v) {
    case Variant::R: return "R";
    case Variant::F: return "F";
    case Variant::E: return "E";
    }
    return "?";
}

Variant variant_from_name(const std::string& s) {
    if (s == "R") return Variant::R;
    if (s == "F") return Variant::F;
    if (s == "E") return Variant::E;
    fail(ErrorKind::Parse, "unknown variant '" + s + "'");
}

uint64_t TupleSpec::N() const {
    Fe qv = q();
    return field.is_zero(qv) ? 0 : field.mult_order(qv);
}

int TupleSpec::r() const {
    return variant == Variant::R ? (int)alpha.size() - 1 : 1;
}

int TupleSpec::n() const {
    if (variant == Variant::R) {
        uint64_t nn = N();
        for (int t = 0; t < r(); ++t) nn *= field.p();
        return (int)nn;
    }
    return (int)field.p();
}

std::vector<std::string> validate_tuple(const TupleSpec& T) {
    std::vector<std::string> bad;
    const Field& F = T.field;
    const GroupData& G = T.group;
    int m = G.order();
    int a = T.a();

    if (!T.chi.empty() && (int)T.chi.size() != m)
        bad.push_back("chi: value list length != |G|");
    if (!T.c.empty() && (int)T.c.size() != m)
        bad.push_back("c: value list length != |G|");
    if (!bad.empty()) return bad;

    // character and cocycle laws
    if (!T.chi.empty()) {
        if (T.chi_of(0) != F.one()) bad.push_back("chi: chi(1) != 1");
        for (int g = 0; g < m && bad.empty(); ++g) {
            if (F.is_zero(T.chi_of(g))) bad.push_back("chi: value 0 at " + G.name(g));
            for (int h = 0; h < m; ++h)
                if (T.chi_of(G.mul(g, h)) != F.mul(T.chi_of(g), T.chi_of(h))) {
                    bad.push_back("chi: not multiplicative at (" + G.name(g) + "," + G.name(h) + ")");
                    break;
                }
        }
    }
    if (!bad.empty()) return bad;
    if (!T.c.empty()) {
        for (int g = 0; g < m && bad.empty(); ++g)
            for (int h = 0; h < m; ++h) {
                Fe lhs = T.c_of(G.mul(h, g));
                Fe rhs = F.add(F.mul(T.chi_of(g), T.c_of(h)), T.c_of(g));
                if (lhs != rhs) {
                    bad.push_back("c: violates c(hg) = chi(g)c(h) + c(g) at (" +
                                  G.name(h) + "," + G.name(g) + ")");
                    break;
                }
            }
    }
    if (!bad.empty()) return bad;

    uint32_t p = F.p();
    switch (T.variant) {
    case Variant::R: {
        if (T.alpha.empty()) bad.push_back("H_R: alpha must have r+1 >= 1 entries");
        if (F.is_zero(T.q()) || T.q() == F.one())
            bad.push_back("H_R: chi(a) != 1 required");
        if (!T.c.empty())
            for (int g = 0; g < m; ++g)
                if (!F.is_zero(T.c_of(g))) {
                    bad.push_back("H_R: c must be zero");
                    break;
                }
        if (!bad.empty()) break;
        uint64_t N = T.N();
        int r = T.r();
        int n = T.n();
        Fe am1 = T.alpha[0];
        if (G.power(a, n) == 0 && !F.is_zero(am1))
            bad.push_back("H_R: alpha_{-1} must be 0 when a^n = 1");
        // (1): alpha_i != 0 needs a^{N(p^r - p^i)} = 1 and chi^{N(p^r - p^i)} = 1
        int64_t pr = 1;
        for (int t = 0; t < r; ++t) pr *= p;
        int64_t pi = 1;
        for (int i = 0; i < r; ++i) {
            if (!F.is_zero(T.alpha[i + 1])) {
                int64_t e = (int64_t)N * (pr - pi);
                if (G.power(a, e) != 0)
                    bad.push_back("H_R(1): alpha_" + std::to_string(i) +
                                  " != 0 but a^{N(p^r-p^i)} != 1");
                for (int g = 0; g < m; ++g)
                    if (F.pow(T.chi_of(g), e) != F.one()) {
                        bad.push_back("H_R(1): alpha_" + std::to_string(i) +
                                      " != 0 but chi(g)^{N(p^r-p^i)} != 1 at " + G.name(g));
                        break;
                    }
            }
            pi *= p;
        }
        // (2): alpha_{-1} != 0 needs chi(g)^{N p^r} = 1 for all g
        if (!F.is_zero(am1))
            for (int g = 0; g < m; ++g)
                if (F.pow(T.chi_of(g), n) != F.one()) {
                    bad.push_back("H_R(2): alpha_{-1} != 0 but chi(g)^n != 1 at " + G.name(g));
                    break;
                }
        break;
    }
    case Variant::F: {
        if (T.alpha.size() != 2) bad.push_back("second: alpha must be (alpha_{-1}, alpha_0)");
        if (T.q() != F.one()) bad.push_back("second: chi(a) = 1 required");
        if (!F.is_zero(T.c_of(a))) bad.push_back("second: c(a) = 0 required");
        if (!bad.empty()) break;
        Fe am1 = T.alpha[0], a0 = T.alpha[1];
        if (!F.is_zero(a0) && a0 != F.one())
            bad.push_back("second: alpha_0 in {0,1} required");
        if (F.is_zero(a0) && !F.is_zero(am1))
            bad.push_back("second: alpha_0 = 0 forces alpha_{-1} = 0");
        bool ap_is_1 = G.power(a, p) == 0;
        if (F.is_zero(a0)) {
            // (1): c(g)(a^p - 1) = 0
            if (!ap_is_1)
                for (int g = 0; g < m; ++g)
                    if (!F.is_zero(T.c_of(g))) {
                        bad.push_back("second(1): c(" + G.name(g) + ")(a^p-1) != 0");
                        break;
                    }
        } else {
            // (2): a^p = a, chi(g) in F_p^*, and the scalar condition
            if (G.power(a, p) != a) bad.push_back("second(2): a^p != a");
            bool a_is_1 = (a == 0);
            for (int g = 0; g < m; ++g) {
                if (!F.in_prime_field(T.chi_of(g))) {
                    bad.push_back("second(2): chi(" + G.name(g) + ") not in F_p^*");
                    break;
                }
            }
            if (!a_is_1)
                for (int g = 0; g < m; ++g) {
                    Fe s = F.add(F.mul(am1, F.sub(T.chi_of(g), F.one())),
                                 F.sub(F.pow(T.c_of(g), p), T.c_of(g)));
                    if (!F.is_zero(s)) {
                        bad.push_back("second(2): (alpha_{-1}(chi(g)-1)+c(g)^p-c(g))(a-1) != 0 at " +
                                      G.name(g));
                        break;
                    }
                }
        }
        break;
    }
    case Variant::E: {
        if (T.alpha.size() != 1) bad.push_back("H_E: alpha must be a single scalar");
        if (!T.chi.empty())
            for (int g = 0; g < m; ++g)
                if (T.chi_of(g) != F.one()) {
                    bad.push_back("H_E: chi must be trivial");
                    break;
                }
        // c additive homomorphism
        for (int g = 0; g < m; ++g) {
            bool broke = false;
            for (int h = 0; h < m; ++h)
                if (T.c_of(G.mul(g, h)) != F.add(T.c_of(g), T.c_of(h))) {
                    bad.push_back("H_E: c is not an additive homomorphism at (" +
                                  G.name(g) + "," + G.name(h) + ")");
                    broke = true;
                    break;
                }
            if (broke) break;
        }
        if (T.c_of(a) != F.one()) bad.push_back("H_E: c(a) = 1 required");
        if (G.element_order(a) % p != 0)
            bad.push_back("H_E: p must divide the order of a");
        if (G.power(a, p) != 0) {
            for (int g = 0; g < m; ++g)
                if (!F.in_prime_field(T.c_of(g))) {
                    bad.push_back("H_E: c(g) in F_p required (a^p != 1) at " + G.name(g));
                    break;
                }
        }
        break;
    }
    }
    return bad;
}

namespace {

// normal-form engine: basis g x^i <-> index g*n + i
struct Engine {
    const TupleSpec& T;
    const Field& F;
    int m, n, dim;
    // memoized x^i * h as terms ((g, t), coef) with t <= i
    std::map<std::pair<int, int>, std::vector<std::tuple<int, int, Fe>>> push_memo;
    // memoized normal form of g x^t for t possibly >= n
    std::map<std::pair<int, int>, Vec> mono_memo;

    Engine(const TupleSpec& T)
        : T(T), F(T.field), m(T.group.order()), n(T.n()), dim(m * n) {}

    int idx(int g, int i) const { return g * n + i; }

    const std::vector<std::tuple<int, int, Fe>>& push(int i, int h) {
        auto key = std::make_pair(i, h);
        auto it = push_memo.find(key);
        if (it != push_memo.end()) return it->second;
        std::vector<std::tuple<int, int, Fe>> out;
        if (i == 0) {
            out.emplace_back(h, 0, F.one());
        } else {
            // x * (g' x^t) = chi(g')^{-1} g' x^{t+1}
            //              + c(g'^{-1}) (g'a) x^t - c(g'^{-1}) g' x^t
            std::map<std::pair<int, int>, Fe> acc;
            auto add = [&](int g, int t, Fe c) {
                if (F.is_zero(c)) return;
                auto k2 = std::make_pair(g, t);
                auto it2 = acc.find(k2);
                Fe v = it2 == acc.end() ? c : F.add(it2->second, c);
                if (F.is_zero(v)) {
                    if (it2 != acc.end()) acc.erase(it2);
                } else {
                    acc[k2] = v;
                }
            };
            for (auto& [g, t, c] : push(i - 1, h)) {
                Fe chi_inv = F.inv(T.chi_of(g));
                add(g, t + 1, F.mul(chi_inv, c));
                Fe cg = T.c_of(T.group.inverse(g));
                if (!F.is_zero(cg)) {
                    add(T.group.mul(g, T.a()), t, F.mul(cg, c));
                    add(g, t, F.neg(F.mul(cg, c)));
                }
            }
            for (auto& [k2, c] : acc) out.emplace_back(k2.first, k2.second, c);
        }
        return push_memo.emplace(key, std::move(out)).first->second;
    }

    // terms (h, s, coef) of the defining relation for x^n
    std::vector<std::tuple<int, int, Fe>> xn_relation() const {
        std::vector<std::tuple<int, int, Fe>> out;
        int a = T.a();
        uint32_t p = F.p();
        switch (T.variant) {
        case Variant::R: {
            Fe am1 = T.alpha[0];
            if (!F.is_zero(am1)) {
                out.emplace_back(T.group.power(a, n), 0, am1);
                out.emplace_back(0, 0, F.neg(am1));
            }
            break;
        }
        case Variant::F: {
            Fe am1 = T.alpha[0], a0 = T.alpha[1];
            if (!F.is_zero(am1)) {
                out.emplace_back(T.group.power(a, p), 0, am1);
                out.emplace_back(0, 0, F.neg(am1));
            }
            if (!F.is_zero(a0)) out.emplace_back(0, 1, a0);
            break;
        }
        case Variant::E: {
            Fe al = T.alpha[0];
            out.emplace_back(0, 1, F.one());
            if (!F.is_zero(al) && T.group.power(a, p) != 0) {
                out.emplace_back(T.group.power(a, p), 0, al);
                out.emplace_back(0, 0, F.neg(al));
            }
            break;
        }
        }
        return out;
    }

    // normal form of g x^t (t may reach 2n-2 during basis products)
    const Vec& monomial(int g, int t) {
        auto key = std::make_pair(g, t);
        auto it = mono_memo.find(key);
        if (it != mono_memo.end()) return it->second;
        Vec v(dim, F.zero());
        if (t < n) {
            v[idx(g, t)] = F.one();
        } else {
            // g x^t = (g x^{t-n}) x^n = sum over relation terms (h, s):
            //   g * (x^{t-n} h) x^s
            for (auto& [h, s, c] : xn_relation()) {
                for (auto& [g2, u, c2] : push(t - n, h)) {
                    const Vec& sub = monomial(T.group.mul(g, g2), u + s);
                    Fe cc = F.mul(c, c2);
                    for (int r = 0; r < dim; ++r)
                        if (sub[r].v) v[r] = F.add(v[r], F.mul(cc, sub[r]));
                }
            }
        }
        return mono_memo.emplace(key, std::move(v)).first->second;
    }
};

} // namespace

HopfAlgebra build_family(const TupleSpec& T) {
    auto bad = validate_tuple(T);
    if (!bad.empty())
        fail(ErrorKind::Invalid, "invalid tuple: " + bad.front());
    if (T.variant == Variant::R && T.r() != 0)
        fail(ErrorKind::NotApplicable,
             "H_R with r > 0 is never rank one; construction is limited to r = 0");
    const Field& F = T.field;
    Engine eng(T);
    int m = eng.m, n = eng.n, dim = eng.dim;
    const GroupData& G = T.group;

    HopfAlgebra H;
    H.F = F;
    H.dim = dim;
    H.unit = Vec(dim, F.zero());
    H.unit[eng.idx(0, 0)] = F.one();

    // multiplication: (g x^i)(h x^j) = g (x^i h) x^j
    H.mult.assign(dim, std::vector<SparseVec>(dim));
    for (int g = 0; g < m; ++g)
        for (int i = 0; i < n; ++i)
            for (int h = 0; h < m; ++h)
                for (int j = 0; j < n; ++j) {
                    Vec acc(dim, F.zero());
                    for (auto& [g2, t, c] : eng.push(i, h)) {
                        const Vec& sub = eng.monomial(G.mul(g, g2), t + j);
                        for (int r = 0; r < dim; ++r)
                            if (sub[r].v) acc[r] = F.add(acc[r], F.mul(c, sub[r]));
                    }
                    SparseVec sv;
                    for (int r = 0; r < dim; ++r)
                        if (acc[r].v) sv.emplace_back(r, acc[r]);
                    H.mult[eng.idx(g, i)][eng.idx(h, j)] = std::move(sv);
                }

    // comultiplication
    H.comult.assign(dim, SparseMat{});
    int a = T.a();
    if (T.variant == Variant::E) {
        for (int g = 0; g < m; ++g)
            for (int i = 0; i < n; ++i) {
                std::map<std::pair<int, int>, Fe> acc;
                for (int i1 = 0; i1 <= i; ++i1)
                    for (int z = 0; z <= i; ++z)
                        for (int j = 0; j <= i; ++j) {
                            Fe hc = coef_closed(F, {'h', i, i1, z, j, {}});
                            if (F.is_zero(hc)) continue;
                            // right slot: x^z a^j -> normal form, then g on the left
                            int aj = G.power(a, j);
                            for (auto& [g2, u, c2] : eng.push(z, aj)) {
                                int left = eng.idx(g, i1);
                                int right = eng.idx(G.mul(g, g2), u);
                                Fe cc = F.mul(hc, c2);
                                auto key = std::make_pair(left, right);
                                auto it = acc.find(key);
                                Fe v = it == acc.end() ? cc : F.add(it->second, cc);
                                if (F.is_zero(v)) {
                                    if (it != acc.end()) acc.erase(it);
                                } else {
                                    acc[key] = v;
                                }
                            }
                        }
                SparseMat sm;
                for (auto& [key, c] : acc) sm.emplace_back(key.first, key.second, c);
                H.comult[eng.idx(g, i)] = std::move(sm);
            }
    } else {
        // R and F: (x (x) a + 1 (x) x)^i = sum_t binom(i,t)_{q^{-1}} x^t (x) a^t x^{i-t}
        Fe qinv = F.inv(T.q());
        for (int g = 0; g < m; ++g)
            for (int i = 0; i < n; ++i) {
                SparseMat sm;
                for (int t = 0; t <= i; ++t) {
                    Fe bc = q_binomial(F, i, t, qinv);
                    if (F.is_zero(bc)) continue;
                    int left = eng.idx(g, t);
                    int right = eng.idx(G.mul(g, G.power(a, t)), i - t);
                    sm.emplace_back(left, right, bc);
                }
                H.comult[eng.idx(g, i)] = std::move(sm);
            }
    }

    // counit
    H.counit = Vec(dim, F.zero());
    for (int g = 0; g < m; ++g) H.counit[eng.idx(g, 0)] = F.one();

    // antipode: S(g x^i) = (-x a^{-1})^i g^{-1}, evaluated by the engine
    H.antipode = Mat(F, dim, dim);
    Vec xainv(dim, F.zero());
    {
        int ainv = G.inverse(a);
        Vec tmp(dim, F.zero());
        for (auto& [g2, t, c] : eng.push(1, ainv)) {
            const Vec& sub = eng.monomial(g2, t);
            for (int r2 = 0; r2 < dim; ++r2)
                if (sub[r2].v) tmp[r2] = F.add(tmp[r2], F.mul(c, sub[r2]));
        }
        xainv = scale_vec(F, F.from_int(-1), tmp);
    }
    {
        std::vector<Vec> pw{H.unit};
        for (int i = 1; i < n; ++i) pw.push_back(H.mulv(pw.back(), xainv));
        for (int g = 0; g < m; ++g) {
            Vec ginv = H.basis_vec(eng.idx(G.inverse(g), 0));
            for (int i = 0; i < n; ++i) {
                Vec img = H.mulv(pw[i], ginv);
                for (int r2 = 0; r2 < dim; ++r2) H.antipode.at(r2, eng.idx(g, i)) = img[r2];
            }
        }
    }

    // labels
    H.labels.resize(dim);
    for (int g = 0; g < m; ++g)
        for (int i = 0; i < n; ++i) {
            std::string s = G.name(g);
            if (i > 0) {
                std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
                s = (g == 0) ? xs : s + "*" + xs;
            }
            H.labels[eng.idx(g, i)] = s;
        }

    H.family = std::make_shared<TupleSpec>(T);
    return H;
}

namespace {

// restriction of the tuple to the cyclic subgroup <a>
TupleSpec restrict_to_a(const TupleSpec& T) {
    int ord = T.group.element_order(T.a());
    TupleSpec S;
    S.variant = T.variant;
    S.field = T.field;
    S.group = GroupData::cyclic({ord}, {1});
    if (!T.chi.empty()) {
        S.chi.resize(ord);
        for (int k = 0; k < ord; ++k) S.chi[k] = T.chi_of(T.group.power(T.a(), k));
    }
    if (!T.c.empty()) {
        S.c.resize(ord);
        for (int k = 0; k < ord; ++k) S.c[k] = T.c_of(T.group.power(T.a(), k));
    }
    S.alpha = T.alpha;
    return S;
}

} // namespace

HopfAlgebra build_smash_oracle(const TupleSpec& T) {
    auto bad = validate_tuple(T);
    if (!bad.empty())
        fail(ErrorKind::Invalid, "invalid tuple: " + bad.front());
    const Field& F = T.field;
    const GroupData& G = T.group;
    int m = G.order();

    // A = <a, x>
    TupleSpec TS = restrict_to_a(T);
    HopfAlgebra A = build_family(TS);
    int da = A.dim;
    int n = T.n();
    int dimB = da * m;
    auto bidx = [&](int u, int g) { return u * m + g; };

    // conjugation automorphisms of A: sigma_g(a) = a, sigma_g(x) = chi(g)x + c(g)(a-1)
    // basis of A is a^l x^t at index l*n + t
    int ord_a = G.element_order(T.a());
    std::vector<Mat> sigma(m, Mat(F, da, da));
    for (int g = 0; g < m; ++g) {
        Vec sx(da, F.zero());
        sx[1] = T.chi_of(g);                          // chi(g) x
        sx[1 * n + 0] = F.add(sx[1 * n + 0], T.c_of(g)); // + c(g) a
        sx[0] = F.sub(sx[0], T.c_of(g));              // - c(g) 1
        // images of a^l x^t = (a^l) sigma(x)^t
        std::vector<Vec> sxp{A.unit};
        for (int t = 1; t < n; ++t) sxp.push_back(A.mulv(sxp.back(), sx));
        for (int l = 0; l < ord_a; ++l)
            for (int t = 0; t < n; ++t) {
                Vec img = A.mulv(A.basis_vec(l * n), sxp[t]);
                for (int r = 0; r < da; ++r) sigma[g].at(r, l * n + t) = img[r];
            }
    }

    // smash product B = A * kG
    HopfAlgebra B;
    B.F = F;
    B.dim = dimB;
    B.unit = Vec(dimB, F.zero());
    B.unit[bidx(0, 0)] = F.one();
    B.mult.assign(dimB, std::vector<SparseVec>(dimB));
    for (int u = 0; u < da; ++u)
        for (int g = 0; g < m; ++g)
            for (int v = 0; v < da; ++v)
                for (int h = 0; h < m; ++h) {
                    // (u*g)(v*h) = u sigma_g(v) * gh
                    Vec sv(da, F.zero());
                    for (int r = 0; r < da; ++r) {
                        Fe c = sigma[g].at(r, v);
                        if (c.v == 0) continue;
                        Vec prod = A.mulv(A.basis_vec(u), A.basis_vec(r));
                        for (int t = 0; t < da; ++t)
                            if (prod[t].v) sv[t] = F.add(sv[t], F.mul(c, prod[t]));
                    }
                    SparseVec out;
                    int gh = G.mul(g, h);
                    for (int t = 0; t < da; ++t)
                        if (sv[t].v) out.emplace_back(bidx(t, gh), sv[t]);
                    B.mult[bidx(u, g)][bidx(v, h)] = std::move(out);
                }
    B.comult.assign(dimB, SparseMat{});
    for (int u = 0; u < da; ++u)
        for (int g = 0; g < m; ++g) {
            SparseMat sm;
            for (auto& [j, k, c] : A.comult[u])
                sm.emplace_back(bidx(j, g), bidx(k, g), c);
            B.comult[bidx(u, g)] = std::move(sm);
        }
    B.counit = Vec(dimB, F.zero());
    for (int u = 0; u < da; ++u)
        for (int g = 0; g < m; ++g) B.counit[bidx(u, g)] = A.counit[u];
    B.antipode = Mat(F, dimB, dimB);
    for (int u = 0; u < da; ++u)
        for (int g = 0; g < m; ++g) {
            // S(u*g) = sigma_{g^{-1}}(S_A(u)) * g^{-1}
            int gi = G.inverse(g);
            Vec su(da, F.zero());
            for (int r = 0; r < da; ++r) {
                Fe c = A.antipode.at(r, u);
                if (c.v == 0) continue;
                for (int t = 0; t < da; ++t) {
                    Fe sc = sigma[gi].at(t, r);
                    if (sc.v) su[t] = F.add(su[t], F.mul(c, sc));
                }
            }
            for (int t = 0; t < da; ++t) B.antipode.at(bidx(t, gi), bidx(u, g)) = su[t];
        }

    // the two-sided ideal generated by z = a*1 - 1*a
    Vec z(dimB, F.zero());
    z[bidx(1 * n + 0, 0)] = F.one(); // a * 1   (a has A-index n)
    z[bidx(0, T.a())] = F.sub(z[bidx(0, T.a())], F.one());
    Subspace I = ideal_closure(B, {z});
    int dimQ = dimB - I.dim();
    if (dimQ != m * n)
        fail(ErrorKind::Internal, "smash quotient has unexpected dimension");

    // section: s_{g,i} = (1*g)(x*1)^i
    std::vector<Vec> section;
    {
        Vec xs(dimB, F.zero());
        xs[bidx(1, 0)] = F.one(); // x * 1 (x has A-index 1)
        std::vector<Vec> xpow{B.unit};
        for (int i = 1; i < n; ++i) xpow.push_back(B.mulv(xpow.back(), xs));
        for (int g = 0; g < m; ++g)
            for (int i = 0; i < n; ++i) {
                Vec gv(dimB, F.zero());
                gv[bidx(0, g)] = F.one();
                section.push_back(B.mulv(gv, xpow[i]));
            }
    }

    // assemble [I basis | section] and invert to read quotient coordinates
    Mat Mfull(F, dimB, dimB);
    int di = I.dim();
    for (int c = 0; c < di; ++c)
        for (int r = 0; r < dimB; ++r) Mfull.at(r, c) = I.basis()[c][r];
    for (int c = 0; c < dimQ; ++c)
        for (int r = 0; r < dimB; ++r) Mfull.at(r, di + c) = section[c][r];
    auto Minv = inverse(Mfull);
    if (!Minv)
        fail(ErrorKind::Internal, "smash section does not complement the ideal");
    // P: B -> quotient coordinates (rows di..dimB-1 of Minv)
    Mat P(F, dimQ, dimB);
    for (int r = 0; r < dimQ; ++r)
        for (int c = 0; c < dimB; ++c) P.at(r, c) = Minv->at(di + r, c);

    // the ideal must be a Hopf ideal; verified, not assumed
    for (const Vec& w : I.basis()) {
        if (!F.is_zero(B.counit_of(w)))
            fail(ErrorKind::Internal, "smash ideal: counit does not vanish");
        if (!is_zero_vec(P.apply(B.apply_antipode(w))))
            fail(ErrorKind::Internal, "smash ideal: not antipode-stable");
        // (P (x) P)(Delta w) = 0
        std::map<std::pair<int, int>, Fe> acc;
        for (int i = 0; i < dimB; ++i) {
            if (w[i].v == 0) continue;
            for (auto& [j, k, c] : B.comult[i]) {
                Fe cw = F.mul(w[i], c);
                for (int r = 0; r < dimQ; ++r) {
                    Fe pj = P.at(r, j);
                    if (pj.v == 0) continue;
                    for (int s = 0; s < dimQ; ++s) {
                        Fe pk = P.at(s, k);
                        if (pk.v == 0) continue;
                        auto key = std::make_pair(r, s);
                        Fe add = F.mul(F.mul(cw, pj), pk);
                        auto it = acc.find(key);
                        Fe v = it == acc.end() ? add : F.add(it->second, add);
                        if (F.is_zero(v)) {
                            if (it != acc.end()) acc.erase(it);
                        } else {
                            acc[key] = v;
                        }
                    }
                }
            }
        }
        if (!acc.empty()) fail(ErrorKind::Internal, "smash ideal: not a coideal");
    }

    // quotient structure constants in the section basis
    HopfAlgebra Q;
    Q.F = F;
    Q.dim = dimQ;
    Q.unit = P.apply(B.unit);
    Q.mult.assign(dimQ, std::vector<SparseVec>(dimQ));
    for (int u = 0; u < dimQ; ++u)
        for (int v = 0; v < dimQ; ++v) {
            Vec prod = P.apply(B.mulv(section[u], section[v]));
            SparseVec sv;
            for (int r = 0; r < dimQ; ++r)
                if (prod[r].v) sv.emplace_back(r, prod[r]);
            Q.mult[u][v] = std::move(sv);
        }
    Q.comult.assign(dimQ, SparseMat{});
    for (int e = 0; e < dimQ; ++e) {
        std::map<std::pair<int, int>, Fe> acc;
        const Vec& s = section[e];
        for (int i = 0; i < dimB; ++i) {
            if (s[i].v == 0) continue;
            for (auto& [j, k, c] : B.comult[i]) {
                Fe cw = F.mul(s[i], c);
                for (int r = 0; r < dimQ; ++r) {
                    Fe pj = P.at(r, j);
                    if (pj.v == 0) continue;
                    for (int t = 0; t < dimQ; ++t) {
                        Fe pk = P.at(t, k);
                        if (pk.v == 0) continue;
                        auto key = std::make_pair(r, t);
                        Fe add = F.mul(F.mul(cw, pj), pk);
                        auto it = acc.find(key);
                        Fe v = it == acc.end() ? add : F.add(it->second, add);
                        if (F.is_zero(v)) {
                            if (it != acc.end()) acc.erase(it);
                        } else {
                            acc[key] = v;
                        }
                    }
                }
            }
        }
        SparseMat sm;
        for (auto& [key, c] : acc) sm.emplace_back(key.first, key.second, c);
        Q.comult[e] = std::move(sm);
    }
    Q.counit = Vec(dimQ, F.zero());
    for (int e = 0; e < dimQ; ++e) Q.counit[e] = B.counit_of(section[e]);
    Q.antipode = Mat(F, dimQ, dimQ);
    for (int e = 0; e < dimQ; ++e) {
        Vec img = P.apply(B.apply_antipode(section[e]));
        for (int r = 0; r < dimQ; ++r) Q.antipode.at(r, e) = img[r];
    }
    return Q;
}

NormalizeResult normalize_tuple(const TupleSpec& T) {
    auto bad0 = validate_tuple(T);
    NormalizeResult res;
    res.tuple = T;
    const Field& F = T.field;
    uint32_t p = F.p();

    if (T.variant == Variant::F) {
        Fe am1 = res.tuple.alpha[0], a0 = res.tuple.alpha[1];
        if (!F.is_zero(a0) && a0 != F.one()) {
            // rescale x by w with w^{p-1} = alpha_0^{-1}
            Fe target = F.inv(a0);
            Fe w = F.zero();
            bool found = false;
            for (uint32_t v = 1; v < F.q(); ++v)
                if (F.pow(Fe{v}, p - 1) == target) { w = Fe{v}; found = true; break; }
            if (!found) {
                // minimal extension degree where a (p-1)-th root appears
                uint64_t t = F.mult_order(target);
                int need = 0;
                for (int mdeg = 2; mdeg <= 16; ++mdeg) {
                    uint64_t qm = 1;
                    for (uint32_t i = 0; i < F.d() * mdeg; ++i) qm *= p;
                    uint64_t g = std::gcd<uint64_t>(p - 1, qm - 1);
                    if ((qm - 1) / g % t == 0) { need = (int)(F.d() * mdeg); break; }
                }
                fail(ErrorKind::ExtendField,
                     "normalizing alpha_0 needs w with w^(p-1) = alpha_0^{-1}; extend to degree " +
                         std::to_string(need),
                     need);
            }
            res.tuple.alpha[1] = F.one();
            res.tuple.alpha[0] = F.mul(F.pow(w, p), am1);
            if (!res.tuple.c.empty())
                for (Fe& cv : res.tuple.c) cv = F.mul(w, cv);
            res.steps.push_back("rescaled x by w = " + F.to_string(w) +
                                " to reach alpha_0 = 1");
            res.ops.push_back({"rescale", w});
        } else if (F.is_zero(a0) && !F.is_zero(am1)) {
            // shift x by alpha_{-1}^{1/p} (a - 1) to kill alpha_{-1}
            Fe beta = F.pth_root(am1);
            res.tuple.alpha[0] = F.zero();
            // c(g) <- c(g) + beta (chi(g) - 1)
            if (res.tuple.c.empty())
                res.tuple.c.assign(T.group.order(), F.zero());
            for (int g = 0; g < T.group.order(); ++g)
                res.tuple.c[g] = F.add(res.tuple.c[g],
                                       F.mul(beta, F.sub(res.tuple.chi_of(g), F.one())));
            res.steps.push_back("shifted x by beta(a-1), beta = alpha_{-1}^{1/p} = " +
                                F.to_string(beta));
            res.ops.push_back({"shift_pth_root", beta});
        }
        if (res.tuple.a() == 0) {
            // a = 1 makes c pure gauge: normalize it away
            bool nonzero = false;
            for (int g = 0; g < T.group.order(); ++g)
                if (!F.is_zero(res.tuple.c_of(g))) { nonzero = true; break; }
            if (nonzero) {
                res.tuple.c.assign(T.group.order(), F.zero());
                res.steps.push_back("a = 1: dropped the gauge map c");
                res.ops.push_back({"drop_c", F.zero()});
            }
        }
    }

    if (T.variant == Variant::E) {
        Fe al = res.tuple.alpha[0];
        if (!F.is_zero(al) && T.group.element_order(T.a()) == (int)p) {
            auto as = F.solve_artin_schreier(al);
            if (!as.solvable)
                fail(ErrorKind::ExtendField,
                     "normalizing alpha needs beta - beta^p = alpha; extend to degree " +
                         std::to_string(as.min_degree),
                     as.min_degree);
            res.tuple.alpha[0] = F.zero();
            res.steps.push_back("shifted x by beta(a-1), beta = " + F.to_string(as.beta) +
                                " (Artin-Schreier)");
            res.ops.push_back({"shift_artin_schreier", as.beta});
        }
    }

    auto bad = validate_tuple(res.tuple);
    if (!bad.empty() && bad0.empty())
        fail(ErrorKind::Internal, "normalization broke tuple validity: " + bad.front());
    return res;
}

HopfAlgebra taft_algebra(const Field& F, int N, Fe q) {
    if (N < 2 || F.is_zero(q) || F.mult_order(q) != (uint64_t)N)
        fail(ErrorKind::Invalid, "taft_algebra: q must have order N >= 2");
    TupleSpec T;
    T.variant = Variant::R;
    T.field = F;
    T.group = GroupData::cyclic({N}, {1});
    T.chi.resize(N);
    for (int k = 0; k < N; ++k) T.chi[k] = F.pow(q, k);
    T.alpha = {F.zero()};
    return build_family(T);
}

TupleSpec a_p_tuple(uint32_t p) {
    Field F(p, 1);
    TupleSpec T;
    T.variant = Variant::E;
    T.field = F;
    T.group = GroupData::cyclic({(int)p}, {1});
    T.c.resize(p);
    for (uint32_t k = 0; k < p; ++k) T.c[k] = F.from_int((int64_t)k);
    T.alpha = {F.zero()};
    return T;
}

} // namespace hopfforge
