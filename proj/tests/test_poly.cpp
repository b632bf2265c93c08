#include "hsubdiv/poly.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace hsubdiv;

TEST_CASE("zero polynomial has no degree") {
    CHECK(Poly().degree() == std::nullopt);
    CHECK(Poly(Vec{rat(0), rat(0)}).is_zero());
    CHECK((Poly::monomial(3) - Poly::monomial(3)).degree() == std::nullopt);
}

TEST_CASE("multiplication and evaluation") {
    const Poly x = Poly::monomial(1);
    const Poly x_plus_1 = Poly(Vec{rat(1), rat(1)});
    CHECK(x * x_plus_1 == Poly(Vec{rat(0), rat(1), rat(1)})); // x^2 + x
    CHECK(Poly(Vec{rat(0), rat(2), rat(4)}).eval(rat(1, 2)) == rat(2)); // 4x^2 + 2x at 1/2
    CHECK((x * Poly()).is_zero());
}

TEST_CASE("affine composition") {
    const Poly two_x = Poly(Vec{rat(0), rat(2)});
    CHECK(two_x.compose_affine(rat(1), rat(1, 2)) == Poly(Vec{rat(1), rat(2)})); // 2x + 1
    const Poly p = Poly(Vec{rat(1), rat(-3), rat(2)});
    // p(-x) flips odd coefficients
    CHECK(p.compose_affine(rat(-1), rat(0)) == Poly(Vec{rat(1), rat(3), rat(2)}));
}

TEST_CASE("derivative") {
    const Poly p = Poly(Vec{rat(5), rat(0), rat(3), rat(1)}); // x^3 + 3x^2 + 5
    CHECK(p.derivative() == Poly(Vec{rat(0), rat(6), rat(3)}));
    CHECK(Poly::constant(rat(7)).derivative().is_zero());
}

TEST_CASE("eval is a ring morphism on random polynomials") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> deg(0, 6);
    const auto random_poly = [&]() {
        Vec c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) {
            x = rat(num(rng), den(rng));
        }
        return Poly(std::move(c));
    };
    for (int trial = 0; trial < 100; ++trial) {
        const Poly p = random_poly();
        const Poly q = random_poly();
        const Rational x = rat(num(rng), den(rng));
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
        const Rational a = rat(num(rng), den(rng));
        const Rational b = rat(num(rng), den(rng));
        CHECK(p.compose_affine(a, b).eval(x) == p.eval(a * x + b));
    }
}

TEST_CASE("degree of a product adds") {
    const Poly p = Poly(Vec{rat(1), rat(2)});
    const Poly q = Poly(Vec{rat(0), rat(0), rat(5)});
    REQUIRE(p.degree().has_value());
    REQUIRE(q.degree().has_value());
    CHECK((p * q).degree() == 3);
}
