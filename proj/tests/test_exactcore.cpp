#include <doctest.h>

#include "folindex/errors.hpp"
#include "folindex/factor.hpp"
#include "test_util.hpp"

using namespace folindex;
using testutil::P;

namespace {

PowerSeries t_series(int n, std::vector<long> c) {
    std::vector<FieldElem> v;
    for (long x : c) v.emplace_back(x);
    return PowerSeries(n, v);
}

FieldPtr sqrt2() { return FieldDescriptor::extension("s", parse_qpoly("s^2 - 2", "s")); }

}  // namespace

TEST_CASE("parse and print") {
    CHECK(P("y^2 - x^3").to_string() == "-x^3 + y^2");
    CHECK(P("1/2*x - 3/4").to_string() == "1/2*x - 3/4");
    CHECK(P("(x+y)^2 - 2*x*y") == P("x^2 + y^2"));
    CHECK(P("x \xE2\x88\x92 y") == P("x - y"));
    CHECK_THROWS_AS(P("x + z"), ParseError);
    CHECK_THROWS_AS(P("x / y"), ParseError);
    CHECK_THROWS_AS(P("(x"), ParseError);
    CHECK_THROWS_AS(P("x^"), ParseError);

    auto K = sqrt2();
    MultiPoly p = P("(s + 1)*x - s*y + 3", testutil::XY, K);
    CHECK(p.to_string() == "(s + 1)*x - s*y + 3");
    CHECK(P(p.to_string(), testutil::XY, K) == p);
}

TEST_CASE("field arithmetic") {
    auto K = sqrt2();
    FieldElem s = FieldElem::generator(K);
    CHECK(s * s == FieldElem(2));
    CHECK((s + 1) * (s - 1) == FieldElem(1));
    CHECK((s + 1).inverse() == s - 1);
    CHECK((FieldElem(3) / FieldElem(6)).to_string() == "1/2");

    auto L = FieldDescriptor::extension("r", parse_qpoly("r^2 - 3", "r"));
    CHECK_THROWS_AS(s + FieldElem::generator(L), DescriptorMismatch);
    CHECK_THROWS_AS(FieldDescriptor::extension("u", parse_qpoly("u^2 - 4", "u")), PreconditionError);
    CHECK_THROWS_AS(FieldDescriptor::extension("u", parse_qpoly("u^3 - u^2", "u")), PreconditionError);
    CHECK_THROWS_AS(FieldDescriptor::extension("u", parse_qpoly("u - 4", "u")), PreconditionError);
}

TEST_CASE("substitute") {
    const int N = 12;
    std::map<std::string, PowerSeries> cusp{{"x", t_series(N, {0, 0, 1})}, {"y", t_series(N, {0, 0, 0, 1})}};
    CHECK(substitute(P("y^2 - x^3"), cusp).is_zero_to_truncation());
    std::map<std::string, PowerSeries> diag{{"x", t_series(N, {0, 1})}, {"y", t_series(N, {0, 1})}};
    CHECK(substitute(P("x*y"), diag) == t_series(N, {0, 0, 1}));
    CHECK(substitute(P("y^2 - x^2 - x^3"), diag) == t_series(N, {0, 0, 0, -1}));
    CHECK_THROWS_AS(substitute(P("y^2 - x^3"), cusp, true), PreconditionError);

    std::map<std::string, MultiPoly> lin{{"x", P("x + y")}, {"y", P("x - y")}};
    CHECK(substitute(P("x*y"), lin) == P("x^2 - y^2"));
    CHECK_THROWS_AS(substitute(P("x*y"), std::map<std::string, MultiPoly>{{"x", P("y")}}), PreconditionError);
}

TEST_CASE("resultant") {
    CHECK(resultant(P("y"), P("y^2 - x^3"), "y") == P("-x^3"));
    CHECK(resultant(P("y - x"), P("y + x"), "y") == P("2*x"));
    CHECK_THROWS_AS(resultant(P("x"), P("x"), "y"), PreconditionError);
    CHECK(resultant(P("x*y - 1"), P("x^2 + y^2 - 2"), "y") == P("x^4 - 2*x^2 + 1"));
    CHECK(resultant(P("y^2 - x"), P("y^2 - x"), "y").is_zero());
}

TEST_CASE("translate and homogenize") {
    Point p1{FieldElem(1), FieldElem(0)};
    CHECK(translate_to_origin(P("x^2 + y"), p1) == P("x^2 + 2*x + 1 + y"));
    CHECK(translate_to_origin(P("y^2 - x^3"), testutil::origin()) == P("y^2 - x^3"));
    Point p2{FieldElem(mpq_class(-2, 3)), FieldElem(0)};
    CHECK(translate_to_origin(P("2*x + 3*x^2"), p2) == P("3*x^2 - 2*x"));

    const std::vector<std::string> xyz{"x", "y", "z"};
    CHECK(homogenize(P("y^2 - x^3"), "z", 3) == P("y^2*z - x^3", xyz));
    CHECK(dehomogenize(P("y^2*z - x^3", xyz), "z") == P("y^2 - x^3"));
    CHECK(homogenize(P("x + 1"), "z", 2) == P("x*z + z^2", xyz));
    CHECK_THROWS_AS(homogenize(P("x^3"), "z", 2), PreconditionError);
}

TEST_CASE("gcd and square-free test") {
    CHECK(gcd(P("(x - y)*(x + y^2)"), P("(x - y)*(x*y + 1)")) == P("x - y"));
    CHECK(gcd(P("x"), P("y")) == P("1"));
    CHECK(gcd(P("2*x*y + 2*y"), P("3*x^2*y - 3*y")) == P("x*y + y"));
    CHECK(is_squarefree(P("y^2 - x^3")));
    CHECK(is_squarefree(P("x*y")));
    CHECK_FALSE(is_squarefree(P("x^2*y")));
    CHECK_FALSE(is_squarefree(P("(y - x^2)^2*(x + 1)")));
}

TEST_CASE("factorization over Q and over an extension") {
    auto fac = factor_rational(parse_qpoly("z^6 + z^5 + z^4 + z^3 + z^2 + z + 1", "z"));
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first.degree() == 6);

    fac = factor_rational(parse_qpoly("z^4 + 1", "z"));
    CHECK(fac.size() == 1);

    fac = factor_rational(parse_qpoly("(z^2 - 2)^2*(z^3 - 2)*(2*z + 1)*(z^2 + z + 1)", "z"));
    REQUIRE(fac.size() == 4);
    CHECK(fac[0].first == parse_qpoly("z + 1/2", "z"));
    CHECK(fac[1].second + fac[2].second + fac[3].second == 4);

    fac = factor_rational(parse_qpoly("z^8 - 1", "z"));
    CHECK(fac.size() == 4);

    CHECK(rational_roots(parse_qpoly("6*z^3 - 5*z^2 + z", "z")).size() == 3);

    auto K = sqrt2();
    FieldElem s = FieldElem::generator(K);
    KPoly g(std::vector<FieldElem>{FieldElem(-2), FieldElem(0), FieldElem(1)});
    auto kf = factor_over_field(g, K);
    CHECK(kf.size() == 2);
    auto roots = roots_in_field(g, K);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first * roots[0].first == FieldElem(2));

    KPoly h(std::vector<FieldElem>{FieldElem(-3), FieldElem(0), FieldElem(1)});
    CHECK(factor_over_field(h, K).size() == 1);
    KPoly q(std::vector<FieldElem>{FieldElem(0) - s, FieldElem(0), FieldElem(1)});  // z^2 - sqrt2
    CHECK(factor_over_field(q, K).size() == 1);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (int it = 0; it < 60; ++it) {
        MultiPoly a = testutil::random_poly(rng, 3), b = testutil::random_poly(rng, 3), c = testutil::random_poly(rng, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a * b).exact_div(b) == a);
    }
}

TEST_CASE("resultant sign symmetry") {
    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
        MultiPoly f = testutil::random_poly(rng, 3), g = testutil::random_poly(rng, 3);
        if (f.degree_in(1) <= 0 && g.degree_in(1) <= 0) continue;
        if (f.is_zero() || g.is_zero()) continue;
        const int sign = (f.degree_in(1) * g.degree_in(1)) % 2 ? -1 : 1;
        CHECK(resultant(f, g, 1) == FieldElem(static_cast<long>(sign)) * resultant(g, f, 1));
    }
}

TEST_CASE("substitution is a ring homomorphism up to truncation") {
    std::mt19937 rng(5);
    const int N = 10;
    std::map<std::string, PowerSeries> at{{"x", t_series(N, {0, 1, 2, -1})}, {"y", t_series(N, {0, 0, 3, 1, 1})}};
    for (int it = 0; it < 30; ++it) {
        MultiPoly f = testutil::random_poly(rng, 3), g = testutil::random_poly(rng, 3);
        CHECK(substitute(f * g, at) == substitute(f, at) * substitute(g, at));
        CHECK(substitute(f + g, at) == substitute(f, at) + substitute(g, at));
    }
}

TEST_CASE("homogenize round trip") {
    std::mt19937 rng(3);
    const std::vector<std::string> xyz{"x", "y", "z"};
    for (int it = 0; it < 30; ++it) {
        MultiPoly f = testutil::random_poly(rng, 4);
        if (f.is_zero()) continue;
        MultiPoly h = homogenize(f, "z", f.total_degree());
        CHECK(dehomogenize(h, "z") == f);
        CHECK(homogenize(dehomogenize(h, "z"), "z", h.total_degree()) == h);
    }
}
