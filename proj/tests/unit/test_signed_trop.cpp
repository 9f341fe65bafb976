#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include "rtrop/error.hpp"

using namespace rtrop;
using namespace oracles;
using fixtures::P;
using fixtures::pt;

namespace {

std::vector<ArgminEntry> argmin(const RealTropPoly& f, const char* p) { return rt_argmin(f, pt(p)); }

RatPoly ratpoly(std::size_t dim, std::map<Exponent, Rat> terms) { return RatPoly{dim, std::move(terms)}; }

}  // namespace

TEST_SUITE("signed-tropical-core") {

TEST_CASE("tropical multiplication") {
    CHECK(SignedTrop::pos(0) * SignedTrop::pos(0) == SignedTrop::pos(0));
    CHECK(SignedTrop::neg(1) * SignedTrop::neg(2) == SignedTrop::pos(3));
    CHECK(tropicalize(P("2*t")) * tropicalize(P("4*t")) == tropicalize(P("8*t^2")));
    CHECK(tropicalize(P("8*t^2")) == SignedTrop::pos(2));
}

TEST_CASE("evaluation and argmin on the univariate example") {
    auto f = fixtures::quartic();
    CHECK(rt_eval(f, pt("+0")) == 0);
    CHECK(rt_eval(f, pt("+-1")) == -2);
    CHECK(rt_eval(parse_trop_poly("+3 : 1"), pt("+5")) == 8);
    CHECK(argmin(f, "+0") == std::vector<ArgminEntry>{{{0}, Sign::Pos}, {{2}, Sign::Pos}});
    CHECK(argmin(f, "+-1") == std::vector<ArgminEntry>{{{2}, Sign::Pos}, {{3}, Sign::Pos}, {{4}, Sign::Neg}});
    CHECK(argmin(f, "--1") == std::vector<ArgminEntry>{{{2}, Sign::Pos}, {{3}, Sign::Neg}, {{4}, Sign::Neg}});
}

TEST_CASE("membership") {
    auto f = fixtures::quartic();
    CHECK_FALSE(rt_member(f, pt("+0")));
    CHECK_FALSE(rt_member(f, pt("-0")));
    CHECK(rt_member(f, pt("+-1")));
    CHECK(rt_member(f, pt("--1")));
    CHECK(rt_member(fixtures::conic(), pt("+0 +0")));
    auto constant = parse_trop_poly("+0 : 0");
    CHECK_FALSE(rt_member(constant, pt("+0")));
    CHECK_FALSE(rt_member(constant, pt("-7/2")));
    CHECK_THROWS_AS(rt_member(f, pt("+0 +0")), DomainError);
}

TEST_CASE("tropicalization of Puiseux polynomials") {
    auto f1 = parse_kpoly("2 : 1\n1 : -1\n0 : 1\n");
    CHECK(tropicalize(f1) == parse_trop_poly("+0 : 2\n-0 : 1\n+0 : 0\n"));
    auto f2 = parse_kpoly("2 : 1\n1 : -2 - t\n0 : 1\n");
    CHECK(tropicalize(f2) == parse_trop_poly("+0 : 2\n-0 : 1\n+0 : 0\n"));
    CHECK(tropicalize(parse_kpoly("3 : 1\n0 : 1\n")) == parse_trop_poly("+0 : 3\n+0 : 0\n"));
    CHECK_THROWS(tropicalize(KPoly(1)));
}

TEST_CASE("residue polynomials") {
    auto f = parse_kpoly("2 : 1\n1 : -2 - t\n0 : 1\n");
    CHECK(residue_poly(f, {0}) == ratpoly(1, {{{2}, 1}, {{1}, -2}, {{0}, 1}}));
    auto cubic = fixtures::cubic_k();
    CHECK(residue_poly(cubic, {0, 1}) == ratpoly(2, {{{3, 0}, 1}, {{2, 0}, 2}, {{1, 0}, -8}, {{0, 0}, 8}}));
    // Read off the polynomial itself: the mixed cubic terms carry -1.
    CHECK(residue_poly(cubic, {-1, -1}) == ratpoly(2, {{{3, 0}, 1}, {{0, 3}, 1}, {{2, 1}, -1}, {{1, 2}, -1}}));
    CHECK_THROWS(residue_poly(KPoly(2), {0, 0}));
}

TEST_CASE("polynomial arithmetic and evaluation") {
    auto f = parse_kpoly("2 1 : 1\n2 0 : 1\n1 1 : -1\n1 0 : -1\n0 1 : 1\n0 0 : 1\n");
    auto g = parse_kpoly("1 2 : 1\n1 1 : -1\n0 2 : 1\n1 0 : 1\n0 1 : -1\n0 0 : 1\n");
    CHECK(f * g == parse_kpoly("3 3 : 1\n3 0 : 1\n0 3 : 1\n0 0 : 1\n"));
    auto h = parse_kpoly("2 : 1\n1 : -2 - t\n0 : 1\n");
    CHECK(h.eval({Puiseux(1L)}) == P("-t"));
    CHECK(fixtures::cubic_lift().eval({Puiseux(1L), P("t")}).is_zero());
    CHECK_THROWS_AS(f + KPoly(3), DomainError);
    CHECK(f.pow(2) == f * f);
}

TEST_CASE("squarefree part from factor lists") {
    auto a = parse_kpoly("1 : 1\n0 : -2\n");
    auto b = parse_kpoly("1 : 2\n0 : -4\n");
    CHECK(squarefree_from_factors({a, a}) == a);
    CHECK(squarefree_from_factors({a, b}) == a);
    CHECK(proportional(a, b));
    CHECK_FALSE(proportional(a, parse_kpoly("1 : 1\n0 : -3\n")));
    auto c = parse_kpoly("1 : 1\n0 : -3*t\n");
    CHECK(squarefree_from_factors({a, c, b, c}) == a * c);
}

TEST_CASE("product containment is strict on the quadratic pair") {
    auto f = parse_kpoly("2 1 : 1\n2 0 : 1\n1 1 : -1\n1 0 : -1\n0 1 : 1\n0 0 : 1\n");
    auto g = parse_kpoly("1 2 : 1\n1 1 : -1\n0 2 : 1\n1 0 : 1\n0 1 : -1\n0 0 : 1\n");
    auto p = pt("+0 +0");
    CHECK(rt_member(tropicalize(f), p));
    CHECK(rt_member(tropicalize(g), p));
    CHECK_FALSE(rt_member(tropicalize(f * g), p));
}

TEST_CASE("randomized: homomorphism, root soundness, product containment") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 300; ++iter) {
        auto a = fixtures::random_puiseux(rng, 3, -3, 3, 3);
        auto b = fixtures::random_puiseux(rng, 3, -3, 3, 3);
        CHECK(tropicalize(a * b) == tropicalize(a) * tropicalize(b));
    }
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t dim = 2;
        KPoly f = random_kpoly(rng, dim, 4, 3);
        f.add_term({1, 1}, Puiseux(1L));
        std::vector<Puiseux> point{fixtures::random_puiseux(rng, 2, -1, 1), fixtures::random_puiseux(rng, 2, -1, 1)};
        Puiseux rest = (f - KPoly::constant(dim, f.coeff({0, 0}))).eval(point);
        if (rest.is_zero()) continue;
        KPoly g = f - KPoly::constant(dim, f.coeff({0, 0})) - KPoly::constant(dim, rest);
        REQUIRE(g.eval(point).is_zero());
        CHECK(rt_member(tropicalize(g), tropicalize(point)));
    }
    for (int iter = 0; iter < 100; ++iter) {
        KPoly f = random_kpoly(rng, 2, 3, 2);
        KPoly g = random_kpoly(rng, 2, 3, 2);
        if (f.is_zero() || g.is_zero()) continue;
        KPoly fg = f * g;
        if (fg.is_zero()) continue;
        for (int k = 0; k < 10; ++k) {
            SignedTropPoint p{{fixtures::random_sign(rng), fixtures::random_rat(rng, 3, 1)},
                              {fixtures::random_sign(rng), fixtures::random_rat(rng, 3, 1)}};
            if (rt_member(tropicalize(fg), p))
                CHECK((rt_member(tropicalize(f), p) || rt_member(tropicalize(g), p)));
        }
    }
}

TEST_CASE("evaluation depends only on moduli and the argmin matches the residue support") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        KPoly f = random_kpoly(rng, 2, 5, 3);
        if (f.is_zero()) continue;
        auto tf = tropicalize(f);
        SignedTropPoint p{{fixtures::random_sign(rng), fixtures::random_rat(rng, 4, 2)},
                          {fixtures::random_sign(rng), fixtures::random_rat(rng, 4, 2)}};
        SignedTropPoint q = p;
        q[0].sign = -q[0].sign;
        CHECK(rt_eval(tf, p) == rt_eval(tf, q));
        auto residue = residue_poly(f, {p[0].modulus, p[1].modulus});
        auto am = rt_argmin(tf, p);
        REQUIRE(am.size() == residue.terms.size());
        std::size_t i = 0;
        for (const auto& [e, c] : residue.terms) CHECK(am[i++].exponent == e);
    }
}

}
