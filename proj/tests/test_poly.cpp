#include "doctest.h"

#include "normrel/poly.hpp"
#include "normrel/rng.hpp"

using namespace nr;

TEST_CASE("factor_q splits x^2 - 1") {
    ZPoly f = ZPoly::from_ints({-1, 0, 1});
    auto fac = factor_q(f);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == ZPoly::from_ints({-1, 1}));
    CHECK(fac[1].first == ZPoly::from_ints({1, 1}));
    CHECK(fac[0].second == 1);
}

TEST_CASE("factor_q keeps the two reference sextic/quartic polynomials irreducible") {
    CHECK(is_irreducible_q(ZPoly::from_ints({23, 0, 9, 0, -6, 0, 1})));
    CHECK(is_irreducible_q(ZPoly::from_ints({23, 20, 4, 1, 1})));
}

TEST_CASE("factor_q reassembles random products") {
    Rng rng(23);
    for (int trial = 0; trial < 20; trial++) {
        // random product of small monic polynomials, possibly repeated
        ZPoly f = ZPoly::from_ints({1});
        int parts = 1 + static_cast<int>(rng.below(3));
        for (int k = 0; k < parts; k++) {
            int d = 1 + static_cast<int>(rng.below(3));
            ZPoly g;
            g.c.assign(d + 1, mpz_class(0));
            g.c[d] = 1;
            for (int i = 0; i < d; i++) g.c[i] = rng.range(-4, 4);
            int mult = 1 + static_cast<int>(rng.below(2));
            for (int m = 0; m < mult; m++) f = mul(f, g);
        }
        auto fac = factor_q(f);
        ZPoly prod = ZPoly::from_ints({1});
        for (const auto& [g, m] : fac) {
            CHECK(is_irreducible_q(g));
            for (int i = 0; i < m; i++) prod = mul(prod, g);
        }
        CHECK(primitive_part(prod) == primitive_part(f));
    }
}

TEST_CASE("factor_q handles non-monic input") {
    // 6x^2 - 5x + 1 = (2x - 1)(3x - 1)
    ZPoly f = ZPoly::from_ints({1, -5, 6});
    auto fac = factor_q(f);
    REQUIRE(fac.size() == 2);
    ZPoly prod = mul(fac[0].first, fac[1].first);
    CHECK(primitive_part(prod) == f);
}

TEST_CASE("resultant and discriminant") {
    // disc(x^2 + bx + c) = b^2 - 4c
    ZPoly f = ZPoly::from_ints({3, 5, 1});
    CHECK(discriminant(f) == 25 - 12);
    // resultant of x-2 and x-3 is -1... res(f,g) = prod f-roots g(r) = g(2) = -1
    CHECK(resultant_z(ZPoly::from_ints({-2, 1}), ZPoly::from_ints({-3, 1})) == -1);
}

TEST_CASE("count_real_roots via Sturm") {
    CHECK(count_real_roots(ZPoly::from_ints({-1, 0, 1})) == 2);    // x^2-1
    CHECK(count_real_roots(ZPoly::from_ints({1, 0, 1})) == 0);     // x^2+1
    CHECK(count_real_roots(ZPoly::from_ints({0, -1, 0, 1})) == 3); // x^3-x
    // the sextic used throughout has no real roots (signature (0,3))
    CHECK(count_real_roots(ZPoly::from_ints({23, 0, 9, 0, -6, 0, 1})) == 0);
}

TEST_CASE("complex_roots reproduce the polynomial") {
    ZPoly f = ZPoly::from_ints({23, 0, 9, 0, -6, 0, 1});
    auto roots = complex_roots(f, 192);
    REQUIRE(roots.size() == 6);
    // product of (x - r_i) evaluated at 1 equals f(1)
    BigComplex prod(1.0, 0.0, 256);
    BigComplex one(1.0, 0.0, 256);
    for (const auto& r : roots) prod = prod * (one - r);
    CHECK(std::abs(prod.re.to_double() - 27.0) < 1e-30);
    CHECK(std::abs(prod.im.to_double()) < 1e-30);
    for (const auto& r : roots) {
        CHECK(eval(f, r).abs().to_double() < 1e-40);
    }
}
