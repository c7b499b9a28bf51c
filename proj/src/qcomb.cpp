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

#include "hopfforge/qcomb.hpp"

#include <vector>

namespace hopfforge {

Fe q_binomial(const Field& F, int n, int m, Fe q) {
    if (m < 0 || m > n) fail(ErrorKind::Invalid, "q_binomial: m out of range");
    // row-rolling q-Pascal; row[k] = binom(row_index, k)_q
    std::vector<Fe> row(m + 1, F.zero());
    row[0] = F.one();
    // powers of q up to q^m
    std::vector<Fe> qp(m + 1);
    qp[0] = F.one();
    for (int t = 1; t <= m; ++t) qp[t] = F.mul(qp[t - 1], q);
    for (int r = 1; r <= n; ++r)
        for (int k = std::min(m, r); k >= 1; --k) {
            Fe left = row[k - 1];
            Fe up = (k <= r - 1) ? row[k] : F.zero();
            row[k] = F.add(left, F.mul(qp[k], up));
        }
    return row[m];
}

VanishingResult vanishing_criterion(const Field& F, int n, Fe q) {
    if (n <= 1) fail(ErrorKind::Invalid, "vanishing_criterion: n must be > 1");
    if (F.is_zero(q)) fail(ErrorKind::Invalid, "vanishing_criterion: q must be nonzero");
    VanishingResult res;
    res.holds = true;
    for (int m = 1; m <= n - 1; ++m)
        if (!F.is_zero(q_binomial(F, n, m, q))) { res.holds = false; break; }
    if (res.holds) {
        res.N = F.mult_order(q);
        uint64_t rest = n;
        uint32_t r = 0;
        while (rest % F.p() == 0) { rest /= F.p(); ++r; }
        res.r = r;
        uint64_t pr = 1;
        for (uint32_t t = 0; t < r; ++t) pr *= F.p();
        if (res.N * pr != (uint64_t)n)
            fail(ErrorKind::Internal, "vanishing criterion: N p^r mismatch");
    }
    return res;
}

uint32_t fg_eval(FG which, int first, int second, uint32_t p) {
    if (second < 0) return 0;
    if (second == 0) return 1 % p;
    if (first <= 0) return 0;
    int J = first, L = second;
    // f(j,l) = j f(j,l-1) + f(j-1,l);  g(j,m) = (j-1) g(j-1,m-1) + g(j-1,m)
    std::vector<std::vector<uint32_t>> T(J + 1, std::vector<uint32_t>(L + 1, 0));
    for (int j = 0; j <= J; ++j) T[j][0] = 1 % p;
    for (int l = 1; l <= L; ++l) T[0][l] = 0;
    for (int j = 1; j <= J; ++j)
        for (int l = 1; l <= L; ++l) {
            if (which == FG::f)
                T[j][l] = ((uint64_t)(j % p) * T[j][l - 1] + T[j - 1][l]) % p;
            else
                T[j][l] = ((uint64_t)((j - 1) % p) * T[j - 1][l - 1] + T[j - 1][l]) % p;
        }
    return T[J][L];
}

uint32_t binom_mod(int n, int m, uint32_t p) {
    if (m < 0 || m > n) return 0;
    std::vector<uint32_t> row(m + 1, 0);
    row[0] = 1 % p;
    for (int r = 1; r <= n; ++r)
        for (int k = std::min(m, r); k >= 1; --k) row[k] = (row[k] + row[k - 1]) % p;
    return row[m];
}

namespace {

Fe sign_pow(const Field& F, int l) { return l % 2 ? F.from_int(-1) : F.one(); }

// prod_{u=1..j} (cg - 1 + u)
Fe rising_product(const Field& F, Fe cg, int j) {
    Fe acc = F.one();
    for (int u = 1; u <= j; ++u)
        acc = F.mul(acc, F.add(cg, F.from_int(u - 1)));
    return acc;
}

} // namespace

Fe coef_closed(const Field& F, const CoefQuery& q) {
    uint32_t p = F.p();
    switch (q.kind) {
    case 's': {
        if (q.i < 0 || q.j < 0) return F.zero();
        if (q.j == 0) return q.i == q.k ? F.one() : F.zero();
        int l = q.k - (q.i + q.j);
        if (l < 0) return F.zero();
        Fe v = F.from_int((int64_t)binom_mod(q.k, q.i, p));
        v = F.mul(v, F.from_int((int64_t)fg_eval(FG::f, q.j, l, p)));
        v = F.mul(v, rising_product(F, q.cg, q.j));
        return F.mul(sign_pow(F, l), v);
    }
    case 'h': {
        if (q.i < 0 || q.z < 0 || q.j < 0) return F.zero();
        if (q.i == 0) return (q.j == 0 && q.k == q.z) ? F.one() : F.zero();
        if (q.j == 0) return (q.i == 0 && q.k == q.z) ? F.one() : F.zero();
        int l = q.k - (q.z + q.j);
        int m = q.j - q.i;
        if (l < 0 || m < 0) return F.zero();
        Fe v = F.from_int((int64_t)binom_mod(q.k, q.z, p));
        v = F.mul(v, F.from_int((int64_t)fg_eval(FG::f, q.j, l, p)));
        v = F.mul(v, F.from_int((int64_t)fg_eval(FG::g, q.j, m, p)));
        return F.mul(sign_pow(F, l), v);
    }
    case 'c': {
        if (q.i <= 0 || q.j <= 0) return F.zero();
        if (q.i > q.j || q.j > q.k) return F.zero();
        Fe v = F.from_int((int64_t)fg_eval(FG::g, q.j, q.j - q.i, p));
        v = F.mul(v, F.from_int((int64_t)fg_eval(FG::f, q.j, q.k - q.j, p)));
        return F.mul(sign_pow(F, q.k - q.j), v);
    }
    default:
        fail(ErrorKind::Invalid, "coef_closed: unknown kind");
    }
}

namespace {

void word_add(const Field& F, Word& w, int i, int j, Fe c) {
    if (F.is_zero(c)) return;
    auto key = std::make_pair(i, j);
    auto it = w.terms.find(key);
    Fe v = it == w.terms.end() ? c : F.add(it->second, c);
    if (F.is_zero(v)) {
        if (it != w.terms.end()) w.terms.erase(it);
    } else {
        w.terms[key] = v;
    }
}

void tword_add(const Field& F, TensorWord& w, int i, int z, int j, Fe c) {
    if (F.is_zero(c)) return;
    std::array<int, 3> key{i, z, j};
    auto it = w.terms.find(key);
    Fe v = it == w.terms.end() ? c : F.add(it->second, c);
    if (F.is_zero(v)) {
        if (it != w.terms.end()) w.terms.erase(it);
    } else {
        w.terms[key] = v;
    }
}

// w * x: x^i a^j x = x^{i+1} a^j + j x^i a^{j+1} - j x^i a^j
Word mul_by_x(const Field& F, const Word& w) {
    Word r;
    for (auto& [key, c] : w.terms) {
        auto [i, j] = key;
        Fe jf = F.from_int(j);
        word_add(F, r, i + 1, j, c);
        word_add(F, r, i, j + 1, F.mul(jf, c));
        word_add(F, r, i, j, F.neg(F.mul(jf, c)));
    }
    return r;
}

// w * a^s for s = +-1, scaled
Word mul_by_a(const Field& F, const Word& w, int s, Fe scale) {
    Word r;
    for (auto& [key, c] : w.terms)
        word_add(F, r, key.first, key.second + s, F.mul(scale, c));
    return r;
}

Word word_sum(const Field& F, const Word& a, const Word& b) {
    Word r = a;
    for (auto& [key, c] : b.terms) word_add(F, r, key.first, key.second, c);
    return r;
}

} // namespace

Word expand_x_plus_ca(const Field& F, int k, Fe c) {
    if (k < 1) fail(ErrorKind::Invalid, "expand: k must be >= 1");
    Word w;
    word_add(F, w, 0, 0, F.one());
    for (int t = 0; t < k; ++t)
        w = word_sum(F, mul_by_x(F, w), mul_by_a(F, w, 1, c));
    return w;
}

Word expand_xainv(const Field& F, int k) {
    if (k < 1) fail(ErrorKind::Invalid, "expand: k must be >= 1");
    Word w;
    word_add(F, w, 0, 0, F.one());
    for (int t = 0; t < k; ++t)
        w = mul_by_a(F, mul_by_x(F, w), -1, F.one());
    return w;
}

TensorWord expand_delta_power(const Field& F, int k) {
    if (k < 1) fail(ErrorKind::Invalid, "expand: k must be >= 1");
    TensorWord w;
    tword_add(F, w, 0, 0, 0, F.one());
    for (int t = 0; t < k; ++t) {
        TensorWord r;
        for (auto& [key, c] : w.terms) {
            auto [i, z, j] = key;
            // * (x (x) a): left slot gains x, right slot gains a on the right
            tword_add(F, r, i + 1, z, j + 1, c);
            // * (1 (x) x): right slot x^z a^j x
            Fe jf = F.from_int(j);
            tword_add(F, r, i, z + 1, j, c);
            tword_add(F, r, i, z, j + 1, F.mul(jf, c));
            tword_add(F, r, i, z, j, F.neg(F.mul(jf, c)));
        }
        w = std::move(r);
    }
    return w;
}

bool fermat_check(uint32_t p) {
    if (!is_prime(p)) fail(ErrorKind::Invalid, "fermat_check: p must be prime");
    // expand prod_{m=1..p-1} (t - m) over F_p
    std::vector<uint32_t> poly{1 % p};
    for (uint32_t m = 1; m <= p - 1; ++m) {
        std::vector<uint32_t> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = (next[i + 1] + poly[i]) % p;
            next[i] = (next[i] + (uint64_t)poly[i] * (p - m)) % p;
        }
        poly = std::move(next);
    }
    std::vector<uint32_t> expected(p, 0);
    expected[0] = p - 1; // -1 = p-1, which is +1 when p = 2
    expected[p - 1] = 1;
    return poly == expected;
}

} // namespace hopfforge
