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

#include "hopfforge/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hopfforge {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

namespace {

// dense F_p polynomial helpers used for modulus search and table-less fields;
// coefficient lists are low-degree-first and not necessarily trimmed
using Poly = std::vector<uint32_t>;

size_t pdeg(const Poly& f) {
    size_t i = f.size();
    while (i > 0 && f[i - 1] == 0) --i;
    return i == 0 ? 0 : i - 1; // deg(0) := 0 by convention here
}

bool pis_zero(const Poly& f) {
    for (uint32_t c : f)
        if (c) return false;
    return true;
}

Poly pmul(const Poly& a, const Poly& b, uint32_t p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (uint64_t)a[i] * b[j]) % p;
    }
    return r;
}

// remainder of a by monic m
Poly pmod(Poly a, const Poly& m, uint32_t p) {
    size_t dm = pdeg(m);
    while (!pis_zero(a) && pdeg(a) >= dm && a.size() > dm) {
        size_t da = pdeg(a);
        uint32_t lead = a[da];
        if (lead) {
            for (size_t i = 0; i <= dm; ++i) {
                size_t k = da - dm + i;
                a[k] = (a[k] + (uint64_t)(p - 1) * lead % p * m[i]) % p;
            }
        }
        a.resize(da); // drop (now zero) leading term
        if (a.empty()) a.push_back(0);
    }
    a.resize(dm == 0 ? 1 : dm, 0);
    return a;
}

bool divides(const Poly& f, const Poly& g, uint32_t p) {
    return pis_zero(pmod(g, f, p));
}

} // namespace

struct Field::Impl {
    uint32_t p = 0, d = 0, q = 0;
    std::vector<uint32_t> modulus; // length d+1, monic
    bool tables = false;
    std::vector<uint32_t> exp_;    // g^i, i in [0, q-1)
    std::vector<uint32_t> log_;    // log_[exp_[i]] = i
    uint32_t gen = 0;
    std::vector<uint64_t> qm1_factors; // distinct prime factors of q-1

    std::vector<uint32_t> unpack(uint32_t v) const {
        std::vector<uint32_t> c(d);
        for (uint32_t i = 0; i < d; ++i) { c[i] = v % p; v /= p; }
        return c;
    }
    uint32_t pack(const std::vector<uint32_t>& c) const {
        uint32_t v = 0;
        for (uint32_t i = d; i-- > 0;) v = v * p + (i < c.size() ? c[i] % p : 0);
        return v;
    }

    uint32_t add_raw(uint32_t a, uint32_t b) const {
        if (d == 1) return (a + b) % p;
        uint32_t r = 0, mulp = 1;
        for (uint32_t i = 0; i < d; ++i) {
            r += ((a % p) + (b % p)) % p * mulp;
            a /= p; b /= p; mulp *= p;
        }
        return r;
    }
    uint32_t neg_raw(uint32_t a) const {
        if (d == 1) return (p - a) % p;
        uint32_t r = 0, mulp = 1;
        for (uint32_t i = 0; i < d; ++i) {
            r += (p - a % p) % p * mulp;
            a /= p; mulp *= p;
        }
        return r;
    }
    uint32_t mul_poly(uint32_t a, uint32_t b) const {
        if (d == 1) return (uint32_t)((uint64_t)a * b % p);
        Poly pa = unpack(a), pb = unpack(b);
        return pack(pmod(pmul(pa, pb, p), modulus, p));
    }
    uint32_t mul_raw(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        if (tables) return exp_[(log_[a] + log_[b]) % (q - 1)];
        return mul_poly(a, b);
    }
    uint32_t pow_raw(uint32_t a, uint64_t e) const { // a != 0 or e > 0
        if (a == 0) return 0;
        if (tables) return exp_[(uint64_t)log_[a] * (e % (q - 1)) % (q - 1)];
        uint32_t r = 1;
        e %= (uint64_t)q - 1;
        while (e) {
            if (e & 1) r = mul_poly(r, a);
            a = mul_poly(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t order_raw(uint32_t a) const {
        uint64_t ord = q - 1;
        for (uint64_t f : qm1_factors)
            while (ord % f == 0 && pow_raw(a, ord / f) == 1) ord /= f;
        return ord;
    }
};

namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) {
            fs.push_back(f);
            while (n % f == 0) n /= f;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::shared_ptr<const Field::Impl> make_impl(uint32_t p, uint32_t d,
                                             std::vector<uint32_t> modulus) {
    auto impl = std::make_shared<Field::Impl>();
    impl->p = p;
    impl->d = d;
    uint64_t q = 1;
    for (uint32_t i = 0; i < d; ++i) {
        q *= p;
        if (q > (uint64_t)1 << 30) fail(ErrorKind::Invalid, "field too large");
    }
    impl->q = (uint32_t)q;
    impl->modulus = std::move(modulus);
    impl->qm1_factors = prime_factors(q - 1);

    // canonical generator: smallest index of multiplicative order q-1
    uint32_t gen = 1;
    for (uint32_t v = 1; v < q; ++v)
        if (impl->order_raw(v) == q - 1) { gen = v; break; }
    impl->gen = gen;

    if (q <= (1u << 16)) {
        impl->exp_.resize(q - 1);
        impl->log_.assign(q, 0);
        uint32_t cur = 1;
        for (uint32_t i = 0; i + 1 < q; ++i) {
            impl->exp_[i] = cur;
            impl->log_[cur] = i;
            cur = impl->mul_poly(cur, gen);
        }
        impl->tables = true;
    }
    return impl;
}

// one Impl per (p, d, modulus); fields are requested over and over in sweeps
std::shared_ptr<const Field::Impl> cached_impl(uint32_t p, uint32_t d,
                                               std::vector<uint32_t> modulus) {
    static std::mutex mtx;
    static std::map<std::tuple<uint32_t, uint32_t, std::vector<uint32_t>>,
                    std::shared_ptr<const Field::Impl>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(p, d, modulus);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto impl = make_impl(p, d, std::move(modulus));
    cache[key] = impl;
    return impl;
}

} // namespace

std::vector<uint32_t> Field::find_irreducible(uint32_t p, uint32_t d) {
    if (!is_prime(p)) fail(ErrorKind::Invalid, "p = " + std::to_string(p) + " is not prime");
    if (d < 1) fail(ErrorKind::Invalid, "extension degree must be >= 1");
    // odometer over (c0,...,c_{d-1}) in lexicographic order, constant first
    std::vector<uint32_t> c(d, 0);
    while (true) {
        Poly f(c);
        f.push_back(1); // monic
        bool irred = true;
        if (d == 1) {
            irred = true;
        } else if (f[0] == 0) {
            irred = false; // divisible by t
        } else {
            // trial division by all monic polynomials of degree 1..d/2
            for (uint32_t dd = 1; irred && 2 * dd <= d; ++dd) {
                uint64_t count = 1;
                for (uint32_t i = 0; i < dd; ++i) count *= p;
                for (uint64_t idx = 0; idx < count; ++idx) {
                    Poly g(dd + 1, 0);
                    uint64_t v = idx;
                    for (uint32_t i = 0; i < dd; ++i) { g[i] = v % p; v /= p; }
                    g[dd] = 1;
                    if (divides(g, f, p)) { irred = false; break; }
                }
            }
        }
        if (irred) return f;
        // advance odometer: last coordinate fastest keeps lex order on (c0,..)
        uint32_t i = d;
        while (i-- > 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) fail(ErrorKind::Internal, "no irreducible polynomial found");
        }
    }
}

Field::Field(uint32_t p, uint32_t d) {
    impl_ = cached_impl(p, d, find_irreducible(p, d));
}

Field::Field(uint32_t p, uint32_t d, std::vector<uint32_t> modulus) {
    if (!is_prime(p)) fail(ErrorKind::Invalid, "p = " + std::to_string(p) + " is not prime");
    if (modulus.size() != d + 1 || modulus[d] != 1)
        fail(ErrorKind::Invalid, "modulus must be monic of degree d");
    for (auto& c : modulus) c %= p;
    modulus[d] = 1;
    // validate irreducibility by trial division
    if (d > 1) {
        if (modulus[0] == 0) fail(ErrorKind::Invalid, "modulus is reducible");
        for (uint32_t dd = 1; 2 * dd <= d; ++dd) {
            uint64_t count = 1;
            for (uint32_t i = 0; i < dd; ++i) count *= p;
            for (uint64_t idx = 0; idx < count; ++idx) {
                Poly g(dd + 1, 0);
                uint64_t v = idx;
                for (uint32_t i = 0; i < dd; ++i) { g[i] = v % p; v /= p; }
                g[dd] = 1;
                if (divides(g, modulus, p)) fail(ErrorKind::Invalid, "modulus is reducible");
            }
        }
    }
    impl_ = cached_impl(p, d, std::move(modulus));
}

const Field::Impl& Field::I() const {
    if (!impl_) fail(ErrorKind::Internal, "use of an uninitialized Field");
    return *impl_;
}

uint32_t Field::p() const { return I().p; }
uint32_t Field::d() const { return I().d; }
uint32_t Field::q() const { return I().q; }
const std::vector<uint32_t>& Field::modulus() const { return I().modulus; }

Fe Field::from_int(int64_t n) const {
    int64_t m = n % (int64_t)p();
    if (m < 0) m += p();
    return Fe{(uint32_t)m};
}

Fe Field::from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() > d()) fail(ErrorKind::Invalid, "too many coefficients for this field");
    return Fe{I().pack(c)};
}

std::vector<uint32_t> Field::coeffs(Fe a) const { return I().unpack(a.v); }

Fe Field::add(Fe a, Fe b) const { return Fe{I().add_raw(a.v, b.v)}; }
Fe Field::neg(Fe a) const { return Fe{I().neg_raw(a.v)}; }
Fe Field::sub(Fe a, Fe b) const { return Fe{I().add_raw(a.v, I().neg_raw(b.v))}; }
Fe Field::mul(Fe a, Fe b) const { return Fe{I().mul_raw(a.v, b.v)}; }

Fe Field::inv(Fe a) const {
    if (a.v == 0) fail(ErrorKind::Invalid, "division by zero");
    if (I().tables) return Fe{I().exp_[(I().q - 1 - I().log_[a.v]) % (I().q - 1)]};
    return Fe{I().pow_raw(a.v, I().q - 2)};
}

Fe Field::pow(Fe a, int64_t e) const {
    if (a.v == 0) {
        if (e > 0) return zero();
        if (e == 0) return one();
        fail(ErrorKind::Invalid, "0 to a negative power");
    }
    int64_t m = (int64_t)I().q - 1;
    int64_t r = e % m;
    if (r < 0) r += m;
    return Fe{I().pow_raw(a.v, (uint64_t)r)};
}

uint64_t Field::mult_order(Fe a) const {
    if (a.v == 0) fail(ErrorKind::Invalid, "order of zero");
    return I().order_raw(a.v);
}

Fe Field::generator() const { return Fe{I().gen}; }

std::vector<Fe> Field::all_elements() const {
    std::vector<Fe> r(q());
    for (uint32_t v = 0; v < q(); ++v) r[v] = Fe{v};
    return r;
}

Fe Field::primitive_root_of_unity(uint64_t N) const {
    if (N == 0) fail(ErrorKind::Invalid, "root of unity of order 0");
    if (N % p() == 0)
        fail(ErrorKind::Invalid, "no N-th root of unity: p divides N");
    uint64_t qm1 = q() - 1;
    if (qm1 % N != 0) {
        // minimal m with N | p^m - 1, then lift to a multiple of d
        uint64_t m = 1, pm = p() % N;
        while (pm != 1 % N) { pm = pm * p() % N; ++m; }
        uint64_t need = std::lcm<uint64_t>(m, d());
        fail(ErrorKind::ExtendField,
             "no element of order " + std::to_string(N) + " in GF(" +
                 std::to_string(p()) + "^" + std::to_string(d()) +
                 "); extend to degree " + std::to_string(need),
             (int)need);
    }
    return pow(generator(), (int64_t)(qm1 / N));
}

Fe Field::pth_root(Fe a) const {
    uint64_t e = 1;
    for (uint32_t i = 0; i + 1 < d(); ++i) e *= p();
    return a.v == 0 ? zero() : Fe{I().pow_raw(a.v, e)};
}

Field::ArtinSchreier Field::solve_artin_schreier(Fe alpha) const {
    // beta -> beta - beta^p is F_p-linear; solve in coefficient coordinates
    uint32_t P = p(), D = d();
    std::vector<std::vector<uint32_t>> M(D, std::vector<uint32_t>(D + 1, 0));
    for (uint32_t j = 0; j < D; ++j) {
        Fe bj = Fe{1};
        for (uint32_t i = 0; i < j; ++i) bj = Fe{(uint32_t)(bj.v * P)}; // t^j packed
        Fe img = sub(bj, frobenius(bj));
        auto col = coeffs(img);
        for (uint32_t i = 0; i < D; ++i) M[i][j] = col[i];
    }
    auto rhs = coeffs(alpha);
    for (uint32_t i = 0; i < D; ++i) M[i][D] = rhs[i];
    // Gaussian elimination over F_p
    std::vector<int> pivot_col(D, -1);
    uint32_t row = 0;
    for (uint32_t col = 0; col < D && row < D; ++col) {
        uint32_t sel = row;
        while (sel < D && M[sel][col] == 0) ++sel;
        if (sel == D) continue;
        std::swap(M[sel], M[row]);
        // normalize
        uint32_t invp = 1;
        for (uint32_t t = 1; t < P; ++t)
            if (t * M[row][col] % P == 1) { invp = t; break; }
        for (uint32_t k = col; k <= D; ++k) M[row][k] = M[row][k] * invp % P;
        for (uint32_t r2 = 0; r2 < D; ++r2)
            if (r2 != row && M[r2][col]) {
                uint32_t f = M[r2][col];
                for (uint32_t k = col; k <= D; ++k)
                    M[r2][k] = (M[r2][k] + (P - f) * M[row][k]) % P;
            }
        pivot_col[row] = (int)col;
        ++row;
    }
    for (uint32_t r2 = row; r2 < D; ++r2)
        if (M[r2][D] != 0)
            return ArtinSchreier{false, zero(), (int)(p() * d())};
    std::vector<uint32_t> sol(D, 0);
    for (uint32_t r2 = 0; r2 < row; ++r2)
        if (pivot_col[r2] >= 0) sol[pivot_col[r2]] = M[r2][D];
    Fe beta = from_coeffs(sol);
    if (sub(beta, frobenius(beta)) != alpha)
        fail(ErrorKind::Internal, "Artin-Schreier solve check failed");
    return ArtinSchreier{true, beta, 0};
}

std::string Field::to_string(Fe a) const {
    if (d() == 1) return std::to_string(a.v);
    auto c = coeffs(a);
    std::string s = "[";
    for (uint32_t i = 0; i < d(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

Fe Field::parse(const std::string& s) const {
    std::string t;
    for (char ch : s)
        if (!isspace((unsigned char)ch)) t += ch;
    if (t.empty()) fail(ErrorKind::Parse, "empty field element");
    if (t[0] == '[') {
        if (t.back() != ']') fail(ErrorKind::Parse, "unterminated list: " + s);
        std::vector<uint32_t> c;
        std::string body = t.substr(1, t.size() - 2);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) fail(ErrorKind::Parse, "bad list entry in: " + s);
            long v = std::stol(item);
            long m = v % (long)p();
            if (m < 0) m += p();
            c.push_back((uint32_t)m);
        }
        if (c.size() > d()) fail(ErrorKind::Parse, "too many coefficients in: " + s);
        return from_coeffs(c);
    }
    // polynomial form "c0+c1*t+..." or bare integer; split on '+' and '-'
    Fe acc = zero();
    size_t i = 0;
    while (i < t.size()) {
        bool negt = false;
        if (t[i] == '+') { ++i; }
        else if (t[i] == '-') { negt = true; ++i; }
        size_t j = i;
        while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
        std::string term = t.substr(i, j - i);
        i = j;
        if (term.empty()) fail(ErrorKind::Parse, "bad field element: " + s);
        long coef = 1;
        uint32_t expn = 0;
        size_t tp = term.find('t');
        if (tp == std::string::npos) {
            coef = std::stol(term);
        } else {
            std::string cs = term.substr(0, tp);
            if (!cs.empty() && cs.back() == '*') cs.pop_back();
            if (!cs.empty()) coef = std::stol(cs);
            std::string es = term.substr(tp + 1);
            if (es.empty()) expn = 1;
            else if (es[0] == '^') expn = (uint32_t)std::stoul(es.substr(1));
            else fail(ErrorKind::Parse, "bad term '" + term + "' in: " + s);
        }
        if (expn >= d())
            fail(ErrorKind::Parse, "exponent too large in: " + s);
        std::vector<uint32_t> c(d(), 0);
        long m = coef % (long)p();
        if (m < 0) m += p();
        c[expn] = (uint32_t)m;
        Fe termv = from_coeffs(c);
        acc = negt ? sub(acc, termv) : add(acc, termv);
    }
    return acc;
}

bool Field::same(const Field& other) const {
    return p() == other.p() && d() == other.d() && modulus() == other.modulus();
}

Fe Field::embed_from(const Field& other, Fe a) const {
    if (other.p() != p()) fail(ErrorKind::Invalid, "cannot embed: different characteristic");
    if (same(other)) return a;
    if (d() % other.d() != 0)
        fail(ErrorKind::Invalid, "cannot embed: degree does not divide");
    // image of other's t: smallest root of other's modulus here
    const auto& m = other.modulus();
    Fe root = zero();
    bool found = false;
    for (uint32_t v = 0; v < q(); ++v) {
        Fe x{v}, acc = zero(), xp = one();
        for (uint32_t i = 0; i < m.size(); ++i) {
            acc = add(acc, mul(from_int((int64_t)m[i]), xp));
            xp = mul(xp, x);
        }
        if (is_zero(acc)) { root = x; found = true; break; }
    }
    if (!found) fail(ErrorKind::Internal, "no root of subfield modulus found");
    auto c = other.coeffs(a);
    Fe acc = zero(), rp = one();
    for (uint32_t i = 0; i < c.size(); ++i) {
        acc = add(acc, mul(from_int((int64_t)c[i]), rp));
        rp = mul(rp, root);
    }
    return acc;
}

} // namespace hopfforge
