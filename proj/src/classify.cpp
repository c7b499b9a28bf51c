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

#include "hopfforge/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hopfforge {

int find_skew_point(const HopfAlgebra& H, const std::vector<Vec>& grouplikes,
                    const Subspace& H0, const Subspace& H1) {
    std::vector<int> candidates;
    for (size_t g = 0; g < grouplikes.size(); ++g) {
        Subspace P = skew_primitives(H, grouplikes[g], H.unit, &H1);
        if (!H0.contains(P)) candidates.push_back((int)g);
    }
    if (candidates.empty())
        fail(ErrorKind::NotApplicable,
             "no skew point: the algebra is cosemisimple (H = H_0)");
    if (candidates.size() > 1)
        fail(ErrorKind::NotApplicable,
             "several skew points found: rank > 1 or corrupt input");
    return candidates[0];
}

DetectResult detect_type(const HopfAlgebra& H, const Vec& a, const Subspace& H0,
                         const Subspace& H1) {
    const Field& F = H.F;
    Subspace P = skew_primitives(H, a, H.unit, &H1);
    bool a_is_one = (a == H.unit);
    DetectResult res;

    // pick x0 in P outside H_0
    Vec x0;
    for (const Vec& w : P.basis())
        if (!H0.contains(w)) { x0 = w; break; }
    if (x0.empty()) fail(ErrorKind::Invalid, "detect_type: P_{a,1} lies in H_0");

    if (a_is_one) {
        if (P.dim() != 1)
            fail(ErrorKind::Invalid, "detect_type: dim P_{1,1} != 1");
        res.type = 2;
        res.x = x0;
        res.conj = Mat(F, 1, 1);
        res.conj.at(0, 0) = F.one();
        return res;
    }
    if (P.dim() != 2)
        fail(ErrorKind::Invalid, "detect_type: dim P_{a,1} != 2");

    Vec v = sub_vec(F, a, H.unit); // a - 1
    // conjugation aya^{-1} in the basis {x0, v}; T(v) = v always
    Vec ainv = H.apply_antipode(a); // S(a) = a^{-1} for group-likes
    Vec image = H.mulv(H.mulv(a, x0), ainv);
    // solve image = alpha x0 + gamma v
    Mat M(F, H.dim, 2);
    for (int r = 0; r < H.dim; ++r) {
        M.at(r, 0) = x0[r];
        M.at(r, 1) = v[r];
    }
    auto sol = solve(M, image);
    if (!sol)
        fail(ErrorKind::Internal, "conjugation image left P_{a,1}");
    Fe alpha = (*sol)[0], gamma = (*sol)[1];
    res.conj = Mat(F, 2, 2);
    res.conj.at(0, 0) = alpha;
    res.conj.at(1, 0) = gamma;
    res.conj.at(1, 1) = F.one();

    if (alpha != F.one()) {
        // diagonalizable: eigenvector x0 + t v with t = gamma/(alpha - 1)
        Fe t = F.div(gamma, F.sub(alpha, F.one()));
        res.type = 1;
        res.x = add_vec(F, x0, scale_vec(F, t, v));
    } else if (F.is_zero(gamma)) {
        res.type = 2;
        res.x = x0;
    } else {
        // Jordan block: rescale so the (a-1)-coefficient is exactly 1
        res.type = 3;
        res.x = scale_vec(F, F.inv(gamma), x0);
    }
    return res;
}

namespace {

// express w = lambda x + mu (a-1); fails if w is outside that plane
std::pair<Fe, Fe> in_plane(const HopfAlgebra& H, const Vec& x, const Vec& v, const Vec& w) {
    Mat M(H.F, H.dim, 2);
    for (int r = 0; r < H.dim; ++r) {
        M.at(r, 0) = x[r];
        M.at(r, 1) = v[r];
    }
    auto sol = solve(M, w);
    if (!sol) fail(ErrorKind::Invalid, "not a rank-one family member: conjugation leaves P_{a,1}");
    return {(*sol)[0], (*sol)[1]};
}

// scalar multiple of the unit?
std::optional<Fe> as_scalar(const HopfAlgebra& H, const Vec& w) {
    // w = s * unit
    Fe s = H.F.zero();
    for (int r = 0; r < H.dim; ++r)
        if (H.unit[r].v) { s = H.F.div(w[r], H.unit[r]); break; }
    if (w == scale_vec(H.F, s, H.unit)) return s;
    return std::nullopt;
}

// coefficient alpha with w = alpha (g_vec - 1); empty if not of that shape
std::optional<Fe> as_alpha_gm1(const HopfAlgebra& H, const Vec& w, const Vec& g_vec) {
    const Field& F = H.F;
    if (is_zero_vec(w)) return F.zero();
    Vec diff = sub_vec(F, g_vec, H.unit);
    if (is_zero_vec(diff)) return std::nullopt; // g = 1 but w != 0
    Mat M(F, H.dim, 1);
    for (int r = 0; r < H.dim; ++r) M.at(r, 0) = diff[r];
    auto sol = solve(M, w);
    if (!sol) return std::nullopt;
    return (*sol)[0];
}

} // namespace

ClassificationReport classify(const HopfAlgebra& H, uint64_t budget) {
    const Field& F = H.F;
    ClassificationReport rep;

    FiltrationResult filt = coradical_filtration(H, budget);
    rep.pointed = filt.pointed;
    if (!filt.pointed)
        fail(ErrorKind::NotApplicable,
             "not certified pointed over this field: the filtration stabilizes below H");
    rep.rank = filt.rank.value_or(-1);
    if (rep.rank != 1)
        fail(ErrorKind::NotApplicable,
             rep.rank == 0 ? "cosemisimple: rank 0, no classification tuple"
                           : "classification requires rank one");

    auto [G0, gl] = grouplike_group(H, budget);
    const Subspace& H0 = filt.chain[0];
    const Subspace& H1 = filt.chain.size() > 1 ? filt.chain[1] : filt.chain[0];

    int a_idx = find_skew_point(H, gl, H0, H1);
    rep.skew_index = a_idx;
    rep.skew_point = gl[a_idx];

    DetectResult det = detect_type(H, gl[a_idx], H0, H1);
    rep.type = det.type;
    rep.conj = det.conj;
    Vec x = det.x;

    // rebuild the group with the skew point distinguished
    GroupData G = GroupData::from_table(G0.table(), a_idx);
    {
        std::vector<std::string> names;
        for (int g = 0; g < G0.order(); ++g) names.push_back(G0.name(g));
        G.set_names(names);
    }

    // chi and c from g x g^{-1} = chi(g) x + c(g)(a - 1)
    int m = G.order();
    std::vector<Fe> chi(m), cmap(m);
    Vec v = sub_vec(F, gl[a_idx], H.unit);
    for (int g = 0; g < m; ++g) {
        Vec w = H.mulv(H.mulv(gl[g], x), gl[G.inverse(g)]);
        if (gl[a_idx] == H.unit) {
            // a = 1: w must be a multiple of x
            Mat M(F, H.dim, 1);
            for (int r = 0; r < H.dim; ++r) M.at(r, 0) = x[r];
            auto sol = solve(M, w);
            if (!sol) fail(ErrorKind::Invalid, "not a rank-one family member: conjugation shape");
            chi[g] = (*sol)[0];
            cmap[g] = F.zero();
        } else {
            auto [lam, mu] = in_plane(H, x, v, w);
            chi[g] = lam;
            cmap[g] = mu;
        }
    }

    // degree and the b_i coefficients
    DegreeResult deg = degree_of(H, x, H0);
    int n = deg.n;

    TupleSpec T;
    T.field = F;
    T.group = G;
    switch (det.type) {
    case 1: {
        T.variant = Variant::R;
        T.chi = chi;
        for (int g = 0; g < m; ++g)
            if (!F.is_zero(cmap[g]))
                fail(ErrorKind::Invalid, "type 1 extraction: c(g) != 0");
        uint64_t N = F.mult_order(chi[a_idx]);
        if ((uint64_t)n != N)
            fail(ErrorKind::Invalid, "not a rank-one family member: degree != ord(chi(a))");
        for (int i = 1; i < n; ++i)
            if (!is_zero_vec(deg.coeffs[i]))
                fail(ErrorKind::Invalid, "not a rank-one family member: x^n shape (type 1)");
        auto am1 = as_alpha_gm1(H, deg.coeffs[0], H.powv(gl[a_idx], n));
        if (!am1) fail(ErrorKind::Invalid, "not a rank-one family member: x^n not alpha(a^n-1)");
        T.alpha = {*am1};
        break;
    }
    case 2: {
        T.variant = Variant::F;
        T.chi = chi;
        T.c = cmap;
        if (n != (int)F.p())
            fail(ErrorKind::Invalid, "not a rank-one family member: degree != p (type 2)");
        for (int i = 2; i < n; ++i)
            if (!is_zero_vec(deg.coeffs[i]))
                fail(ErrorKind::Invalid, "not a rank-one family member: x^p shape (type 2)");
        auto a0 = as_scalar(H, deg.coeffs[1]);
        if (!a0) fail(ErrorKind::Invalid, "not a rank-one family member: alpha_0 not scalar");
        auto am1 = as_alpha_gm1(H, deg.coeffs[0], H.powv(gl[a_idx], F.p()));
        if (!am1) fail(ErrorKind::Invalid, "not a rank-one family member: x^p not alpha(a^p-1)+a0 x");
        T.alpha = {*am1, *a0};
        break;
    }
    case 3: {
        T.variant = Variant::E;
        for (int g = 0; g < m; ++g)
            if (chi[g] != F.one())
                fail(ErrorKind::Invalid, "type 3 extraction: chi != 1");
        T.c = cmap;
        if (n != (int)F.p())
            fail(ErrorKind::Invalid, "not a rank-one family member: degree != p (type 3)");
        if (deg.coeffs[1] != H.unit)
            fail(ErrorKind::Invalid, "not a rank-one family member: x^p - x shape (type 3)");
        for (int i = 2; i < n; ++i)
            if (!is_zero_vec(deg.coeffs[i]))
                fail(ErrorKind::Invalid, "not a rank-one family member: x^p shape (type 3)");
        auto al = as_alpha_gm1(H, deg.coeffs[0], H.powv(gl[a_idx], F.p()));
        if (!al) fail(ErrorKind::Invalid, "not a rank-one family member: x^p not x+alpha(a^p-1)");
        T.alpha = {*al};
        break;
    }
    }

    auto bad = validate_tuple(T);
    if (!bad.empty())
        fail(ErrorKind::Internal, "extracted tuple invalid: " + bad.front());

    NormalizeResult norm = normalize_tuple(T);
    rep.tuple = norm.tuple;
    rep.normalization_steps = norm.steps;

    // transport x through the normalization steps
    for (const NormalizeStep& op : norm.ops) {
        if (op.kind == "rescale") x = scale_vec(F, op.scalar, x);
        else if (op.kind == "shift_pth_root")
            x = sub_vec(F, x, scale_vec(F, op.scalar, v));
        else if (op.kind == "shift_artin_schreier")
            x = add_vec(F, x, scale_vec(F, op.scalar, v));
    }
    rep.x = x;

    // round trip: the map g x^i -> gl[g] * x^i must be a Hopf isomorphism
    HopfAlgebra rebuilt = build_family(rep.tuple);
    int nn = rep.tuple.n();
    Mat iso(F, H.dim, H.dim);
    std::vector<Vec> xpow{H.unit};
    for (int i = 1; i < nn; ++i) xpow.push_back(H.mulv(xpow.back(), x));
    for (int g = 0; g < m; ++g)
        for (int i = 0; i < nn; ++i) {
            Vec img = H.mulv(gl[g], xpow[i]);
            for (int r = 0; r < H.dim; ++r) iso.at(r, g * nn + i) = img[r];
        }
    if (!is_hopf_isomorphism(rebuilt, H, iso))
        fail(ErrorKind::Internal, "round-trip isomorphism check failed");
    rep.roundtrip = iso;
    return rep;
}

bool is_hopf_isomorphism(const HopfAlgebra& A, const HopfAlgebra& B, const Mat& M) {
    if (A.dim != B.dim || M.rows != A.dim || M.cols != A.dim) return false;
    const Field& F = A.F;
    if (!inverse(M)) return false;
    // unit
    if (M.apply(A.unit) != B.unit) return false;
    // multiplicative on basis pairs
    std::vector<Vec> img(A.dim);
    for (int i = 0; i < A.dim; ++i) img[i] = M.apply(A.basis_vec(i));
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            Vec lhs = M.apply(A.mul_basis(i, j));
            Vec rhs = B.mulv(img[i], img[j]);
            if (lhs != rhs) return false;
        }
    // comultiplicative: (M (x) M) Delta_A = Delta_B M
    for (int i = 0; i < A.dim; ++i) {
        std::map<std::pair<int, int>, Fe> lhs, rhs;
        auto acc = [&](std::map<std::pair<int, int>, Fe>& mm, int a2, int b2, Fe c) {
            if (F.is_zero(c)) return;
            auto key = std::make_pair(a2, b2);
            auto it = mm.find(key);
            Fe vv = it == mm.end() ? c : F.add(it->second, c);
            if (F.is_zero(vv)) {
                if (it != mm.end()) mm.erase(it);
            } else {
                mm[key] = vv;
            }
        };
        for (auto& [j, k, c] : A.comult[i])
            for (int r = 0; r < A.dim; ++r) {
                if (M.at(r, j).v == 0) continue;
                for (int s = 0; s < A.dim; ++s)
                    if (M.at(s, k).v)
                        acc(lhs, r, s, F.mul(c, F.mul(M.at(r, j), M.at(s, k))));
            }
        for (int t = 0; t < A.dim; ++t) {
            Fe mc = M.at(t, i);
            if (mc.v == 0) continue;
            for (auto& [j, k, c] : B.comult[t]) acc(rhs, j, k, F.mul(mc, c));
        }
        if (lhs != rhs) return false;
    }
    // counit and antipode
    for (int i = 0; i < A.dim; ++i) {
        if (B.counit_of(img[i]) != A.counit[i]) return false;
        if (M.apply(A.apply_antipode(A.basis_vec(i))) != B.apply_antipode(img[i]))
            return false;
    }
    return true;
}

namespace {

// common scaffolding: both tuples normalized, gauge alpha zeroed for E
TupleSpec iso_normal_form(const TupleSpec& T) {
    TupleSpec S = T;
    if (S.variant == Variant::E && S.group.power(S.a(), S.field.p()) == 0)
        S.alpha = {S.field.zero()}; // alpha(a^p-1) = 0: pure gauge
    return normalize_tuple(S).tuple;
}

} // namespace

IsoResult iso_tuples(const TupleSpec& Ta, const TupleSpec& Tb, int budget) {
    IsoResult res;
    if (Ta.variant != Tb.variant) {
        res.verdict = IsoVerdict::NotIsomorphic;
        res.reason = "different types are never isomorphic";
        return res;
    }
    if (Ta.field.p() != Tb.field.p() || !Ta.field.same(Tb.field))
        fail(ErrorKind::Invalid, "iso_tuples: tuples live over different fields");
    const Field& F = Ta.field;

    TupleSpec T = iso_normal_form(Ta);
    TupleSpec T2 = iso_normal_form(Tb);

    if (T.group.order() != T2.group.order() || T.n() != T2.n()) {
        res.verdict = IsoVerdict::NotIsomorphic;
        res.reason = "different dimensions";
        return res;
    }

    if (T.variant == Variant::F && T.alpha[1] != T2.alpha[1]) {
        res.verdict = IsoVerdict::NotIsomorphic;
        res.reason = "nilpotency is an isomorphism invariant (alpha_0 differs)";
        return res;
    }
    // non-nilpotent second type: no criterion in the classification
    if (T.variant == Variant::F && T.alpha[1] == F.one()) {
        HopfAlgebra A = build_family(T), B = build_family(T2);
        try {
            IsoResult bf = iso_bruteforce(A, B, budget);
            bf.reason = "non-nilpotent second type: decided by brute force";
            return bf;
        } catch (const Error& e) {
            if (e.kind != ErrorKind::Budget) throw;
            res.verdict = IsoVerdict::Undecided;
            res.reason = "non-nilpotent second type: no criterion, brute force over budget";
            return res;
        }
    }

    HopfAlgebra B = build_family(T2);
    int n = T.n(), m = T.group.order();
    uint32_t p = F.p();

    bool root_obstruction = false;
    int ext_hint = 0;
    IsoResult out;
    out.verdict = IsoVerdict::NotIsomorphic;
    out.reason = "no group isomorphism satisfies the criteria";

    group_isomorphisms(T.group, T2.group, T.a(), T2.a(), [&](const std::vector<int>& f) {
        // chi condition (R and F)
        if (T.variant != Variant::E) {
            for (int g = 0; g < m; ++g)
                if (T.chi_of(g) != T2.chi_of(f[g])) return true;
        }
        Fe beta = F.one(), gamma = F.zero();
        switch (T.variant) {
        case Variant::R: {
            Fe am1 = T.alpha[0], am2 = T2.alpha[0];
            if (F.is_zero(am1) != F.is_zero(am2)) return true;
            if (!F.is_zero(am1)) {
                // beta^n alpha'_{-1} = alpha_{-1}
                Fe target = F.div(am1, am2);
                bool found = false;
                for (uint32_t bv = 1; bv < F.q(); ++bv)
                    if (F.pow(Fe{bv}, n) == target) { beta = Fe{bv}; found = true; break; }
                if (!found) {
                    root_obstruction = true;
                    uint64_t t = F.mult_order(target);
                    for (int mm = 2; mm <= 16 && ext_hint == 0; ++mm) {
                        uint64_t qm = 1;
                        bool of = false;
                        for (uint32_t i = 0; i < F.d() * mm; ++i) {
                            qm *= p;
                            if (qm > (uint64_t)1 << 62) { of = true; break; }
                        }
                        if (of) break;
                        uint64_t g2 = std::gcd<uint64_t>(n, qm - 1);
                        if ((qm - 1) / g2 % t == 0) ext_hint = (int)(F.d() * mm);
                    }
                    return true;
                }
            }
            break;
        }
        case Variant::F: {
            // nilpotent case: c = c' o f and alpha = alpha' (both (0,0))
            for (int g = 0; g < m; ++g)
                if (T.c_of(g) != T2.c_of(f[g])) return true;
            break;
        }
        case Variant::E: {
            for (int g = 0; g < m; ++g)
                if (T.c_of(g) != T2.c_of(f[g])) return true;
            // alpha condition: need gamma with gamma^p - gamma = alpha - alpha'
            Fe diff = F.sub(T2.alpha[0], T.alpha[0]); // gamma - gamma^p = alpha' - alpha
            if (!F.is_zero(diff)) {
                auto as = F.solve_artin_schreier(diff);
                if (!as.solvable) {
                    root_obstruction = true;
                    ext_hint = as.min_degree;
                    return true;
                }
                gamma = as.beta;
            }
            break;
        }
        }
        // build the explicit map g x^i -> f(g) (beta x' + gamma(a'-1))^i and verify
        HopfAlgebra A = build_family(T);
        Vec ximg = scale_vec(F, beta, B.basis_vec(1));
        if (!F.is_zero(gamma)) {
            Vec av = B.basis_vec(T2.a() * n);
            ximg = add_vec(F, ximg, scale_vec(F, gamma, sub_vec(F, av, B.unit)));
        }
        std::vector<Vec> xpow{B.unit};
        for (int i = 1; i < n; ++i) xpow.push_back(B.mulv(xpow.back(), ximg));
        Mat M(F, A.dim, A.dim);
        for (int g = 0; g < m; ++g)
            for (int i = 0; i < n; ++i) {
                Vec img = B.mulv(B.basis_vec(f[g] * n), xpow[i]);
                for (int r = 0; r < A.dim; ++r) M.at(r, g * n + i) = img[r];
            }
        if (!is_hopf_isomorphism(A, B, M))
            fail(ErrorKind::Internal, "iso_tuples: criterion satisfied but map failed verification");
        out.verdict = IsoVerdict::Isomorphic;
        out.witness = IsoWitness{f, beta, gamma, M};
        out.reason = "";
        return false; // stop
    }, budget);

    if (out.verdict == IsoVerdict::NotIsomorphic && root_obstruction) {
        out.reason = "group and character data match but the scalar equation has no root in this field";
        out.extension_hint = ext_hint;
    }
    return out;
}

IsoResult iso_bruteforce(const HopfAlgebra& H, const HopfAlgebra& H2, int budget) {
    const Field& F = H.F;
    IsoResult res;
    if (H.dim != H2.dim || !F.same(H2.F)) {
        res.verdict = IsoVerdict::NotIsomorphic;
        res.reason = "different dimension or field";
        return res;
    }
    // enumeration budget: dim <= 8 over F_2, dim <= 6 over F_3 by default;
    // the budget parameter scales the default limits
    uint64_t work = 1;
    for (int i = 0; i < H.dim; ++i) {
        work *= F.q();
        if (work > (uint64_t)budget << 7)
            fail(ErrorKind::Budget, "iso_bruteforce: enumeration budget exceeded");
    }

    auto [G, gl] = grouplike_group(H);
    auto [G2, gl2] = grouplike_group(H2);
    if (G.order() != G2.order()) {
        res.verdict = IsoVerdict::NotIsomorphic;
        res.reason = "different numbers of group-like elements";
        return res;
    }

    FiltrationResult fa = coradical_filtration(H);
    FiltrationResult fb = coradical_filtration(H2);
    if (fa.chain.size() != fb.chain.size()) {
        res.verdict = IsoVerdict::NotIsomorphic;
        res.reason = "different coradical filtrations";
        return res;
    }

    // cosemisimple case: group algebras; an isomorphism is a group isomorphism
    if (fa.chain[0].dim() == H.dim) {
        IsoResult out;
        out.verdict = IsoVerdict::NotIsomorphic;
        out.reason = "no group isomorphism extends to a Hopf isomorphism";
        group_isomorphisms(G, G2, 0, 0, [&](const std::vector<int>& f) {
            // the group-likes are linearly independent and span H_0 = H
            Mat P(F, H.dim, H.dim), Pimg(F, H.dim, H.dim);
            for (int g = 0; g < G.order(); ++g)
                for (int r = 0; r < H.dim; ++r) {
                    P.at(r, g) = gl[g][r];
                    Pimg.at(r, g) = gl2[f[g]][r];
                }
            auto Pinv = inverse(P);
            if (!Pinv) return true;
            Mat Mm = Pimg.mul(*Pinv);
            if (is_hopf_isomorphism(H, H2, Mm)) {
                out.verdict = IsoVerdict::Isomorphic;
                out.witness = IsoWitness{f, F.one(), F.zero(), Mm};
                out.reason = "";
                return false;
            }
            return true;
        }, budget);
        return out;
    }

    // rank-one path: skew points, generators
    int a1 = find_skew_point(H, gl, fa.chain[0], fa.chain.size() > 1 ? fa.chain[1] : fa.chain[0]);
    int a2 = find_skew_point(H2, gl2, fb.chain[0], fb.chain.size() > 1 ? fb.chain[1] : fb.chain[0]);
    DetectResult d1 = detect_type(H, gl[a1], fa.chain[0], fa.chain[1]);
    DetectResult d2 = detect_type(H2, gl2[a2], fb.chain[0], fb.chain[1]);
    if (d1.type != d2.type) {
        res.verdict = IsoVerdict::NotIsomorphic;
        res.reason = "different conjugation types";
        return res;
    }
    int n = H.dim / G.order();

    IsoResult out;
    out.verdict = IsoVerdict::NotIsomorphic;
    out.reason = "no generator images extend to a Hopf isomorphism";
    Vec v2 = sub_vec(F, gl2[a2], H2.unit);
    group_isomorphisms(G, G2, a1, a2, [&](const std::vector<int>& f) {
        for (uint32_t bv = 1; bv < F.q(); ++bv)
            for (uint32_t gv = 0; gv < F.q(); ++gv) {
                Vec ximg = scale_vec(F, Fe{bv}, d2.x);
                ximg = add_vec(F, ximg, scale_vec(F, Fe{gv}, v2));
                std::vector<Vec> xpow{H2.unit};
                for (int i = 1; i < n; ++i) xpow.push_back(H2.mulv(xpow.back(), ximg));
                // map gl[g] x^i -> gl2[f(g)] ximg^i over the product basis
                std::vector<Vec> x1pow{H.unit};
                for (int i = 1; i < n; ++i) x1pow.push_back(H.mulv(x1pow.back(), d1.x));
                Mat P(F, H.dim, H.dim), Pimg(F, H.dim, H.dim);
                int col = 0;
                for (int g = 0; g < G.order(); ++g)
                    for (int i = 0; i < n; ++i, ++col) {
                        Vec u = H.mulv(gl[g], x1pow[i]);
                        Vec w = H2.mulv(gl2[f[g]], xpow[i]);
                        for (int r = 0; r < H.dim; ++r) {
                            P.at(r, col) = u[r];
                            Pimg.at(r, col) = w[r];
                        }
                    }
                auto Pinv = inverse(P);
                if (!Pinv) continue; // domain vectors did not form a basis
                Mat M = Pimg.mul(*Pinv);
                if (is_hopf_isomorphism(H, H2, M)) {
                    out.verdict = IsoVerdict::Isomorphic;
                    out.witness = IsoWitness{f, Fe{bv}, Fe{gv}, M};
                    out.reason = "";
                    return false;
                }
            }
        return true;
    }, budget);
    return out;
}

} // namespace hopfforge
