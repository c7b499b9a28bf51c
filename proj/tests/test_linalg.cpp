#include "doctest.h"

#include "hopfforge/linalg.hpp"
#include "hopfforge/poly.hpp"

using namespace hopfforge;

namespace {

Mat from_rows(const Field& F, const std::vector<std::vector<int>>& rows) {
    Mat M(F, (int)rows.size(), (int)rows[0].size());
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) M.at(i, j) = F.from_int(rows[i][j]);
    return M;
}

// all vectors of F^n, for exhaustive-scan oracles
std::vector<Vec> all_vectors(const Field& F, int n) {
    std::vector<Vec> out;
    Vec v(n, F.zero());
    while (true) {
        out.push_back(v);
        int i = 0;
        while (i < n) {
            v[i].v++;
            if (v[i].v < F.q()) break;
            v[i].v = 0;
            ++i;
        }
        if (i == n) break;
    }
    return out;
}

// k[x]/(f) as a CommAlgebra with basis 1, x, ..., x^(deg-1)
CommAlgebra quotient_ring(const Field& F, const FPoly& f) {
    int n = pdegree(f);
    CommAlgebra C;
    C.F = F;
    C.dim = n;
    C.unit = zero_vec(n);
    C.unit[0] = F.one();
    C.mult.assign(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FPoly m(i + j + 1, F.zero());
            m[i + j] = F.one();
            FPoly r = pmodp(F, m, f);
            Vec v = zero_vec(n);
            for (size_t k = 0; k < r.size(); ++k) v[k] = r[k];
            C.mult[i][j] = v;
        }
    return C;
}

} // namespace

TEST_CASE("kernel") {
    Field F2(2, 1);
    CHECK(kernel(Mat::identity(F2, 3)).dim() == 0);
    CHECK(kernel(Mat(F2, 2, 2)).dim() == 2);

    Mat M = from_rows(F2, {{1, 1}, {0, 0}});
    Subspace K = kernel(M);
    CHECK(K.dim() == 1);
    // oracle: enumerate all 4 vectors
    for (const Vec& v : all_vectors(F2, 2)) {
        bool in_kernel = is_zero_vec(M.apply(v));
        CHECK(K.contains(v) == in_kernel);
    }
}

TEST_CASE("preimage_subspace") {
    Field F3(3, 1);
    Mat L = from_rows(F3, {{1, 2, 0, 1}, {0, 1, 1, 1}, {2, 0, 1, 0}, {1, 1, 1, 1}});

    SUBCASE("full codomain gives full domain") {
        CHECK(preimage_subspace(L, Subspace::full(F3, 4)).dim() == 4);
    }
    SUBCASE("injective map, zero target") {
        Field F2(2, 1);
        Mat I = Mat::identity(F2, 3);
        CHECK(preimage_subspace(I, Subspace(F2, 3)).dim() == 0);
    }
    SUBCASE("exhaustive scan oracle over F_3^4") {
        Subspace W = Subspace::span(F3, 4, {
            {F3.from_int(1), F3.from_int(0), F3.from_int(2), F3.from_int(1)},
            {F3.from_int(0), F3.from_int(1), F3.from_int(1), F3.from_int(0)}});
        Subspace P = preimage_subspace(L, W);
        for (const Vec& v : all_vectors(F3, 4))
            CHECK(P.contains(v) == W.contains(L.apply(v)));
    }
    SUBCASE("dimension mismatch rejected") {
        CHECK_THROWS_AS(preimage_subspace(L, Subspace::full(F3, 3)), Error);
    }
}

TEST_CASE("subspace canonical form") {
    Field F3(3, 1);
    // two different spanning sets of one plane agree verbatim
    Subspace A = Subspace::span(F3, 3, {{F3.from_int(1), F3.from_int(1), F3.from_int(0)},
                                        {F3.from_int(0), F3.from_int(1), F3.from_int(1)}});
    Subspace B = Subspace::span(F3, 3, {{F3.from_int(1), F3.from_int(2), F3.from_int(1)},
                                        {F3.from_int(2), F3.from_int(0), F3.from_int(1)}});
    CHECK(A == B);
    CHECK(A.intersect(B) == A);
    CHECK(A.sum(B) == A);
    Subspace C = Subspace::span(F3, 3, {{F3.from_int(1), F3.from_int(0), F3.from_int(0)}});
    CHECK(A.sum(C).dim() == 3);
    CHECK(A.intersect(C).dim() == 0);
}

TEST_CASE("split_idempotents") {
    SUBCASE("the ground field alone") {
        Field F5(5, 1);
        CommAlgebra C = quotient_ring(F5, FPoly{F5.from_int(-1), F5.one()}); // k[x]/(x-1)
        auto es = split_idempotents(C);
        REQUIRE(es.size() == 1);
        CHECK(es[0] == C.unit);
    }

    SUBCASE("F_3[x]/(x^3 - x): Lagrange idempotents") {
        Field F3(3, 1);
        FPoly f{F3.zero(), F3.from_int(-1), F3.zero(), F3.one()}; // x^3 - x
        CommAlgebra C = quotient_ring(F3, f);
        auto es = split_idempotents(C);
        REQUIRE(es.size() == 3);
        // expected: 1 - x^2, 2(x^2+x), 2(x^2-x)
        std::vector<Vec> expected = {
            {F3.from_int(1), F3.from_int(0), F3.from_int(-1)},
            {F3.from_int(0), F3.from_int(2), F3.from_int(2)},
            {F3.from_int(0), F3.from_int(-2), F3.from_int(2)}};
        for (const Vec& e : expected)
            CHECK(std::count(es.begin(), es.end(), e) == 1);
    }

    SUBCASE("group algebra kC_2 over F_3") {
        Field F3(3, 1);
        // basis 1, a with a^2 = 1
        CommAlgebra C;
        C.F = F3;
        C.dim = 2;
        C.unit = {F3.one(), F3.zero()};
        C.mult = {{{F3.one(), F3.zero()}, {F3.zero(), F3.one()}},
                  {{F3.zero(), F3.one()}, {F3.one(), F3.zero()}}};
        auto es = split_idempotents(C);
        REQUIRE(es.size() == 2);
        Vec plus = {F3.from_int(2), F3.from_int(2)};  // 2(1+a) = (1+a)/2
        Vec minus = {F3.from_int(2), F3.from_int(1)}; // 2(1-a)
        CHECK(std::count(es.begin(), es.end(), plus) == 1);
        CHECK(std::count(es.begin(), es.end(), minus) == 1);
    }

    SUBCASE("idempotent properties and primitivity") {
        Field F2(2, 1);
        // F_2[x]/(x^4 + x^2) = F_2[x]/(x^2 (x+1)^2): two local blocks
        FPoly f{F2.zero(), F2.zero(), F2.one(), F2.zero(), F2.one()};
        CommAlgebra C = quotient_ring(F2, f);
        auto es = split_idempotents(C);
        REQUIRE(es.size() == 2);
        Vec total = zero_vec(C.dim);
        for (const Vec& e : es) {
            CHECK(C.mulv(e, e) == e);
            total = add_vec(F2, total, e);
        }
        CHECK(total == C.unit);
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j)
                CHECK(is_zero_vec(C.mulv(es[i], es[j])));
        // primitivity: no idempotent e' with e'^2 = e', e'e = e', 0 != e' != e
        for (const Vec& e : es)
            for (const Vec& v : all_vectors(F2, C.dim)) {
                if (C.mulv(v, v) != v) continue;
                if (C.mulv(v, e) != v) continue;
                CHECK((is_zero_vec(v) || v == e));
            }
    }

    SUBCASE("non-split component signals a field extension") {
        Field F2(2, 1);
        FPoly f{F2.one(), F2.one(), F2.one()}; // x^2+x+1, irreducible: C = GF(4)
        CommAlgebra C = quotient_ring(F2, f);
        auto es = split_idempotents(C, false);
        CHECK(es.size() == 1);
        try {
            split_idempotents(C, true);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind == ErrorKind::ExtendField);
            CHECK(e.min_degree == 2);
        }
    }
}

TEST_CASE("nilradical") {
    Field F3(3, 1);
    FPoly f{F3.zero(), F3.zero(), F3.zero(), F3.one()}; // x^3
    CommAlgebra C = quotient_ring(F3, f);
    Subspace N = nilradical(C);
    CHECK(N.dim() == 2);
    for (const Vec& b : N.basis()) CHECK(is_zero_vec(C.powv(b, 3)));
}

TEST_CASE("polynomial factorization") {
    Field F2(2, 1);
    // x^4 + x = x (x+1) (x^2+x+1)
    FPoly f{F2.zero(), F2.one(), F2.zero(), F2.zero(), F2.one()};
    auto fs = pfactor(F2, f);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].first == FPoly{F2.zero(), F2.one()});
    CHECK(fs[1].first == FPoly{F2.one(), F2.one()});
    CHECK(fs[2].first == FPoly{F2.one(), F2.one(), F2.one()});

    Field F9(3, 2);
    // t^2 + 1 splits over GF(9) since i exists there
    FPoly g{F9.one(), F9.zero(), F9.one()};
    auto gs = pfactor(F9, g);
    CHECK(gs.size() == 2);

    // multiplicities: (x+1)^4 over F_2
    FPoly h{F2.one(), F2.one()};
    FPoly h4 = pmulp(F2, pmulp(F2, h, h), pmulp(F2, h, h));
    auto hs = pfactor(F2, h4);
    REQUIRE(hs.size() == 1);
    CHECK(hs[0].second == 4);
}
