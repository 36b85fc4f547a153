#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "verlie/gf.hpp"

using namespace verlie;

TEST_CASE("field axioms hold exhaustively for k <= 4") {
    for (int k = 1; k <= 4; ++k) {
        const Field& f = Field::gf(k);
        int q = f.size();
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, a) == 0);
            for (int b = 0; b < q; ++b) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                // Frobenius additivity: (a+b)^2 = a^2 + b^2
                CHECK(f.sqr(f.add(a, b)) == f.add(f.sqr(a), f.sqr(b)));
                for (int c = 0; c < q; ++c)
                    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            }
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.sqr(f.frobenius_sqrt(a)) == a);
        }
    }
}

TEST_CASE("frobenius_sqrt examples") {
    CHECK(Field::gf(1).frobenius_sqrt(1) == 1);
    CHECK(Field::gf(1).frobenius_sqrt(0) == 0);
    // omega in GF(4) is t (value 2); omega^2 = omega + 1, so sqrt(omega) = omega + 1
    const Field& f4 = Field::gf(2);
    FieldElem omega = f4.parse("t");
    CHECK(f4.sqr(omega) == f4.parse("t+1"));
    CHECK(f4.frobenius_sqrt(omega) == f4.parse("t+1"));
}

TEST_CASE("field literal parsing round trips") {
    const Field& f16 = Field::gf(4);
    for (int a = 0; a < 16; ++a)
        CHECK(f16.parse(f16.to_string(a)) == a);
    CHECK(f16.parse("t^3+t+1") == 0b1011);
    CHECK_THROWS(Field::gf(1).parse("t"));
}

TEST_CASE("solve_linear identity case") {
    const Field& f = Field::gf(1);
    Mat a = Mat::identity(3, f);
    LinearSolution s = solve_linear(a, {1, 0, 1});
    REQUIRE(s.consistent);
    CHECK(s.particular == Vec{1, 0, 1});
    CHECK(s.kernel.empty());
}

TEST_CASE("solve_linear inconsistent on zero map") {
    const Field& f = Field::gf(1);
    Mat a(2, 2, f);
    CHECK_FALSE(solve_linear(a, {1, 0}).consistent);
}

TEST_CASE("solve_linear round trip over GF(4)") {
    const Field& f = Field::gf(2);
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        Mat a(6, 6, f);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) a(i, j) = static_cast<FieldElem>(rng() % 4);
        Vec x0(6);
        for (auto& x : x0) x = static_cast<FieldElem>(rng() % 4);
        Vec b = a.apply(x0);
        LinearSolution s = solve_linear(a, b);
        REQUIRE(s.consistent);
        CHECK(a.apply(s.particular) == b);
        // x0 lies in particular + span(kernel)
        Vec diff = vec_add(s.particular, x0);
        CHECK(in_span(s.kernel, diff, f));
        for (const Vec& k : s.kernel) CHECK(vec_is_zero(a.apply(k)));
    }
}

TEST_CASE("rank examples and rank-nullity") {
    const Field& f2 = Field::gf(1);
    CHECK(rank(Mat::identity(4, f2)) == 4);
    CHECK(rank(Mat(3, 5, f2)) == 0);
    Mat ones(2, 2, f2);
    ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1;
    CHECK(rank(ones) == 1);

    std::mt19937 rng(999);
    for (int k = 1; k <= 4; ++k) {
        const Field& f = Field::gf(k);
        for (int trial = 0; trial < 20; ++trial) {
            int r = 1 + static_cast<int>(rng() % 12), c = 1 + static_cast<int>(rng() % 12);
            Mat a(r, c, f);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) a(i, j) = static_cast<FieldElem>(rng() % f.size());
            CHECK(rank(a) + static_cast<int>(kernel_basis(a).size()) == c);
            CHECK(rank(a) == rank(a.transpose()));
        }
    }
}

TEST_CASE("det and inverse agree") {
    const Field& f = Field::gf(2);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Mat a(4, 4, f);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a(i, j) = static_cast<FieldElem>(rng() % 4);
        auto inv = inverse(a);
        if (det(a) == 0) {
            CHECK_FALSE(inv.has_value());
        } else {
            REQUIRE(inv.has_value());
            CHECK(a * *inv == Mat::identity(4, f));
        }
    }
}
