#include "doctest.h"
#include "support/fixtures.hpp"

#include "rtrop/error.hpp"

using namespace rtrop;
using fixtures::P;

TEST_SUITE("exact-arithmetic") {

TEST_CASE("addition cancels and collects") {
    CHECK((P("t") + P("-t")).is_zero());
    CHECK(P("2 + t") + P("1") == P("3 + t"));
    CHECK(P("-2*t") + P("-7") == P("-7 - 2*t"));
    CHECK(render(P("-2*t") + P("-7")) == "-7 - 2*t");
}

TEST_CASE("multiplication") {
    CHECK(P("2*t") * P("4*t") == P("8*t^2"));
    CHECK(P("-t") * P("-t") == P("t^2"));
    CHECK(P("1 + t^(1/2)") * P("1 - t^(1/2)") == P("1 - t"));
}

TEST_CASE("valuation, sign and principal coefficient") {
    CHECK(P("3*t^(1/2) - t").valuation() == Rat(1, 2));
    CHECK(P("-3").valuation() == 0);
    CHECK(P("32*t^3").valuation() == 3);
    CHECK(P("-t").sign() == Sign::Neg);
    CHECK(P("-t").principal() == -1);
    CHECK(P("2 + t").sign() == Sign::Pos);
    CHECK(P("2 + t").principal() == 2);
    CHECK(P("t^2 + 4*t").principal() == 4);
    CHECK(P("t^2 + 4*t").sign() == Sign::Pos);
    CHECK_THROWS_WITH_AS(Puiseux().valuation(), "valuation of zero undefined", std::domain_error);
    CHECK_THROWS_AS(Puiseux().sign(), std::domain_error);
    CHECK_THROWS_AS(Puiseux().principal(), std::domain_error);
}

TEST_CASE("order") {
    CHECK(ps_cmp(P("t"), Puiseux()) == std::strong_ordering::greater);
    CHECK(ps_cmp(P("t"), P("1/2")) == std::strong_ordering::less);
    CHECK(ps_cmp(P("1/2"), P("1/2")) == std::strong_ordering::equal);
    CHECK(P("1/2").valuation() <= P("t").valuation());
}

TEST_CASE("residue") {
    CHECK(P("2 + t").residue(0) == 2);
    CHECK(P("2 + t").residue(1) == 1);
    CHECK(P("t^2").residue(0) == 0);
}

TEST_CASE("parsing and rendering") {
    CHECK(render(P("3*t^(2/4) + 1")) == "1 + 3*t^(1/2)");
    CHECK(render(P("t^2 - 1/2*t^(-1)")) == "-1/2*t^(-1) + 1*t^2");
    CHECK(render(Puiseux()) == "0");
    CHECK(P(" 1 / 2 * t ^ 3 ") == Puiseux::monomial(Rat(1, 2), 3));
    CHECK_THROWS_AS(parse_puiseux("2*x"), ParseError);
    CHECK_THROWS_AS(parse_puiseux("1/0"), ParseError);
    CHECK_THROWS_AS(parse_puiseux(""), ParseError);
    try {
        parse_puiseux("1 + 2*q");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() >= 5);
    }
}

TEST_CASE("exact division helper") {
    auto a = P("1 + t");
    auto b = P("2 - t^(1/2)");
    CHECK(divide_exact(a * b, b) == a);
    CHECK_FALSE(divide_exact(P("1"), P("1 + t")).has_value());
    CHECK(divide_exact(P("3*t^2"), P("t^(1/2)")) == P("3*t^(3/2)"));
    CHECK(laurent_gcd(P("t - t^2"), P("t^3 - t^5")) == P("1 - t"));
}

TEST_CASE("eval_at substitutes a rational t") {
    CHECK(P("1 + 2*t - t^2").eval_at(Rat(1, 2)) == Rat(7, 4));
    CHECK(P("t^(-1)").eval_at(Rat(1, 3)) == 3);
    CHECK_THROWS(P("t^(1/2)").eval_at(Rat(1, 4)));
}

TEST_CASE("randomized algebraic properties") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 500; ++iter) {
        auto a = fixtures::random_puiseux(rng, 4, -3, 3, 2);
        auto b = fixtures::random_puiseux(rng, 4, -3, 3, 2);
        auto c = fixtures::random_puiseux(rng, 4, -3, 3, 2);
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
        CHECK((a * b).sign() == a.sign() * b.sign());
        CHECK(ps_cmp(a, b) == ps_cmp(a + c, b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(parse_puiseux(render(a)) == a);
        if (ps_cmp(Puiseux(), a) == std::strong_ordering::less && ps_cmp(a, b) == std::strong_ordering::less)
            CHECK(b.valuation() <= a.valuation());
        CHECK(divide_exact(a * b, b) == a);
    }
}

TEST_CASE("order agrees with substitution of a tiny t") {
    // With integer exponents in [-2, 2], coefficients below 10 and few terms,
    // the sign of a - b at t = 10^-6 is the sign of its principal coefficient.
    std::mt19937_64 rng(11);
    const Rat t0(1, 1000000);
    for (int iter = 0; iter < 500; ++iter) {
        auto a = fixtures::random_puiseux(rng, 3, -2, 2);
        auto b = fixtures::random_puiseux(rng, 3, -2, 2);
        Rat value = (a - b).eval_at(t0);
        auto expected = value > 0 ? std::strong_ordering::greater
                        : value < 0 ? std::strong_ordering::less
                                    : std::strong_ordering::equal;
        CHECK(ps_cmp(a, b) == expected);
    }
}

}
