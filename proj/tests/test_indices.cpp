#include <doctest.h>

#include <functional>
#include <random>

#include "folindex/errors.hpp"
#include "folindex/indices.hpp"
#include "folindex/localmult.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace folindex;
using testutil::P;

namespace {

VectorFieldGerm V(const std::string& a, const std::string& b) { return {P(a), P(b)}; }

std::string error_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

// Linear change x -> M x applied to f and to the field (pushed forward by M^-1).
struct Linear {
    long m11, m12, m21, m22;
    long det() const { return m11 * m22 - m12 * m21; }
    MultiPoly pull(const MultiPoly& f) const {
        const auto X = MultiPoly::variable(testutil::XY, 0), Y = MultiPoly::variable(testutil::XY, 1);
        return substitute(f, {{"x", FieldElem(m11) * X + FieldElem(m12) * Y}, {"y", FieldElem(m21) * X + FieldElem(m22) * Y}});
    }
    VectorFieldGerm pull(const VectorFieldGerm& v) const {
        const MultiPoly a = pull(v.a), b = pull(v.b);
        mpq_class q(1, det());
        q.canonicalize();
        const FieldElem inv(q);
        return {inv * (FieldElem(m22) * a - FieldElem(m12) * b), inv * (FieldElem(-m21) * a + FieldElem(m11) * b)};
    }
};

// Reduced germs at 0 with an isolated singularity or a smooth point.
const std::vector<std::string> kCurves{"y^2 - x^3", "x*y",       "y^2 - x^4",        "y^3 - x^4",
                                       "x*y*(x - y)", "y - x^2", "y^2 - x^2 - x^3", "y^2 - x^5 + x^2*y^2"};

}  // namespace

TEST_CASE("ph index") {
    CHECK(ph_index(V("x", "y")).value == 1);
    CHECK(ph_index(V("2*y", "3*x^2")).value == 2);
    CHECK(ph_index(V("x^2", "y")).value == 2);
    CHECK(error_code([] { ph_index(V("x*y", "x^2")); }) == "non-isolated");
    // Invertible linear part.
    CHECK(ph_index(V("2*x + y + x*y^3", "x - y + y^2")).value == 1);
}

TEST_CASE("is_logarithmic examples") {
    CHECK(is_logarithmic(V("x", "y"), P("x*y")));
    CHECK(is_logarithmic(V("2*y", "3*x^2"), P("y^2 - x^3")));
    CHECK_FALSE(is_logarithmic(V("1", "0"), P("x*y")));
}

TEST_CASE("euler obstruction, gsv, schwartz examples") {
    struct Row {
        std::string f, a, b;
        long mu, m, eu, gsv, sch;
    };
    for (const Row& r : std::vector<Row>{{"x*y", "x", "y", 1, 2, 2, 0, 1},
                                          {"y^2 - x^3", "2*x", "3*y", 2, 2, 2, -1, 1},
                                          {"y^2 - x^3", "2*y", "3*x^2", 2, 2, 3, 0, 2}}) {
        CAPTURE(r.f);
        CAPTURE(r.a);
        const auto nu = V(r.a, r.b);
        const auto f = P(r.f);
        CHECK(euler_obstruction_field(nu, f).value == r.eu);
        const auto g = gsv_index(nu, f);
        CHECK(g.value == r.gsv);
        CHECK(g.ingredient("milnor") == r.mu);
        CHECK(g.ingredient("multiplicity") == r.m);
        CHECK(g.ingredient("euler_obstruction") == r.eu);
        CHECK(schwartz_index(nu, f).value == r.sch);
        CHECK(polar_intersection(nu, f).value == r.eu);
        // Independent route: colengths in O_C.
        CHECK(oracle::gsv_by_colength(f, nu.a, nu.b) == r.gsv);
    }
}

TEST_CASE("tangency failures") {
    CHECK(error_code([] { euler_obstruction_field(V("1", "0"), P("x*y")); }) == "non-tangent");
    CHECK(error_code([] { gsv_index(V("x", "y"), P("x^2*y")); }) == "non-reduced");
    CHECK(error_code([] { gsv_index(V("x", "y"), P("x + 1")); }) == "not-on-curve");
    // Tangent at the point but the far component x = 1 is not invariant.
    CHECK(error_code([] { euler_obstruction_field(V("x", "y"), P("y*(x - 1)")); }) == "tangency-disagreement");
}

TEST_CASE("saito check") {
    CHECK(saito_check(V("x", "0"), V("0", "y"), P("x*y")) == P("1"));
    CHECK(saito_check(V("2*x", "3*y"), V("2*y", "3*x^2"), P("y^2 - x^3")) == P("-6"));
    CHECK(error_code([] { saito_check(V("1", "0"), V("0", "1"), P("x*y")); }) == "not-logarithmic");
    // Logarithmic pair whose determinant is not a unit multiple.
    CHECK(error_code([] { saito_check(V("x", "0"), V("0", "x*y"), P("x*y")); }) == "saito-failure");
}

TEST_CASE("log index examples") {
    const LogBasis cusp{V("2*x", "3*y"), V("2*y", "3*x^2"), P("y^2 - x^3")};
    const LogBasis node{V("x", "0"), V("0", "y"), P("x*y")};
    CHECK(log_index(V("2*x", "3*y"), cusp).value == 0);
    CHECK(log_index(V("x^2", "y^2"), node).value == 1);
    CHECK(log_index(V("2*x^2 + 2*y^2", "3*x*y + 3*x^2*y"), cusp).value == 1);
    CHECK(error_code([] {
              log_index(V("1", "0"), LogBasis{V("x", "0"), V("0", "y"), P("x*y")});
          }) == "not-logarithmic");
    // Oracle: alpha from Cramer's rule over the colength oracle.
    CHECK(oracle::colength({P("x"), P("y")}) == 1);
}

TEST_CASE("automatic log bases") {
    auto w = weighted_homogeneous_weights(P("y^2 - x^3"));
    REQUIRE(w);
    CHECK(w->first == mpq_class(1, 3));
    CHECK(w->second == mpq_class(1, 2));
    CHECK_FALSE(weighted_homogeneous_weights(P("y^2 - x^2 - x^3")));
    CHECK(weighted_homogeneous_weights(P("x*y")));

    auto b = automatic_log_basis(P("y^2 - x^3"), testutil::origin());
    REQUIRE(b);
    CHECK(b->chi1.a == P("2*x"));
    CHECK(b->chi1.b == P("3*y"));
    CHECK(b->chi2.a == P("2*y"));
    CHECK(b->chi2.b == P("3*x^2"));
    for (const auto& s : kCurves) {
        CAPTURE(s);
        const auto f = P(s);
        auto basis = automatic_log_basis(f, testutil::origin());
        if (s == "y^2 - x^2 - x^3" || s == "y^2 - x^5 + x^2*y^2") {
            CHECK_FALSE(basis);
            continue;
        }
        REQUIRE(basis);
        CHECK_FALSE(saito_check(basis->chi1, basis->chi2, f).constant_term().is_zero());
    }
    // Smooth point away from the origin.
    const Point p{FieldElem(1), FieldElem(1)};
    auto sb = automatic_log_basis(P("y - x^2"), p);
    REQUIRE(sb);
    CHECK(sb->chi1.base == p);
    CHECK_FALSE(saito_check(sb->chi1, sb->chi2, P("y - x^2")).evaluate(p).is_zero());
}

TEST_CASE("mu along curve and polar") {
    CHECK(mu_along_curve(V("2*y", "3*x^2"), P("y^2 - x^3")).value == 2);
    CHECK(mu_along_curve(V("x^2", "y"), P("y")).value == 2);
    CHECK(mu_along_curve(V("x^2", "y"), P("x")).value == 1);
    CHECK(error_code([] { mu_along_curve(V("x", "y"), P("x*y")); }) == "reducible-curve");
    CHECK(polar_intersection(V("2*x", "3*y"), P("y^2 - x^3")).value == 2);
    CHECK(polar_intersection(V("2*y", "3*x^2"), P("y^2 - x^3")).value == 3);
    CHECK(polar_intersection(V("x", "y"), P("x*y")).value == 2);
}

TEST_CASE("chi number") {
    const auto saddle = V("x", "-y");
    CHECK(chi_number(saddle, {{P("x"), 1}, {P("y"), 1}}).value == 0);
    CHECK(chi_number(V("2*y", "3*x^2"), {{P("y^2 - x^3"), 1}}).value == 0);
    const auto r = chi_number(saddle, {{P("x"), 1}, {P("y"), 2}});
    CHECK(r.value == 0);
    CHECK(r.value == r.ingredient("ph") - r.ingredient("schwartz_1") * r.ingredient("coefficient_1") -
                         r.ingredient("schwartz_2") * r.ingredient("coefficient_2") + r.ingredient("deg_divisor") - 1);
    CHECK(error_code([&] { chi_number(saddle, {{P("x - y"), 1}}); }) == "not-separatrix");
    CHECK(error_code([&] { chi_number(saddle, {}); }) == "empty-divisor");
    // Weighted-homogeneous divisor: chi equals the logarithmic index.
    const LogBasis cusp{V("2*x", "3*y"), V("2*y", "3*x^2"), P("y^2 - x^3")};
    CHECK(chi_number(V("2*y", "3*x^2"), {{P("y^2 - x^3"), 1}}).value == log_index(V("2*y", "3*x^2"), cusp).value);
}

TEST_CASE("kind names round trip") {
    for (IndexKind k : {IndexKind::PH, IndexKind::GSV, IndexKind::CHI_NUMBER}) CHECK(kind_from_name(kind_name(k)) == k);
    CHECK_THROWS_AS(kind_from_name("nope"), ParseError);
}

namespace {

// Random logarithmic field g*H + f*(p, q) along f, with an isolated zero at 0.
std::optional<VectorFieldGerm> random_tangent_field(std::mt19937& rng, const MultiPoly& f) {
    const auto g = testutil::random_poly(rng, 2, 60, 0);
    const auto p = testutil::random_poly(rng, 1, 60, 0), q = testutil::random_poly(rng, 1, 60, 0);
    VectorFieldGerm nu(g * f.derivative(1) + f * p, -(g * f.derivative(0)) + f * q);
    if (nu.a.is_zero() || nu.b.is_zero()) return std::nullopt;
    if (intersection_multiplicity_at_origin(nu.a, nu.b).infinite) return std::nullopt;
    return nu;
}

}  // namespace

TEST_CASE("gsv against the colength oracle on random tangent fields") {
    std::mt19937 rng(77);
    int checked = 0;
    for (int it = 0; it < 60; ++it) {
        const auto f = P(kCurves[static_cast<size_t>(it) % kCurves.size()]);
        auto nu = random_tangent_field(rng, f);
        if (!nu) continue;
        CAPTURE(f.to_string());
        CAPTURE(nu->to_string());
        IndexReport g;
        try {
            g = gsv_index(*nu, f);
        } catch (const PreconditionError& e) {
            // Field vanishing on a branch: no isolated zero on the curve.
            CHECK(std::string(e.code()) == "zero-field");
            continue;
        }
        const auto expect = oracle::gsv_by_colength(f, nu->a, nu->b);
        REQUIRE(expect);
        CHECK(g.value == *expect);
        CHECK(g.value - schwartz_index(*nu, f).value == -g.ingredient("milnor"));
        ++checked;
    }
    CHECK(checked >= 30);
}

TEST_CASE("gsv = ph - log at smooth points") {
    std::mt19937 rng(5);
    int checked = 0;
    const std::vector<std::string> smooth{"y - x^2", "y", "x + y + x*y", "y - x^3 + x*y"};
    for (int it = 0; it < 40; ++it) {
        const auto f = P(smooth[static_cast<size_t>(it) % smooth.size()]);
        auto nu = random_tangent_field(rng, f);
        if (!nu || !nu->a.constant_term().is_zero() || !nu->b.constant_term().is_zero()) continue;
        IndexReport g;
        try {
            g = gsv_index(*nu, f);
        } catch (const PreconditionError&) {
            continue;
        }
        const auto basis = automatic_log_basis(f, testutil::origin());
        REQUIRE(basis);
        CHECK(g.value == ph_index(*nu).value - log_index(*nu, *basis).value);
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("indices are invariant under linear coordinate changes") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-3, 3);
    int checked = 0;
    for (int it = 0; it < 40; ++it) {
        const auto f = P(kCurves[static_cast<size_t>(it) % kCurves.size()]);
        auto nu = random_tangent_field(rng, f);
        if (!nu) continue;
        Linear M{d(rng), d(rng), d(rng), d(rng)};
        if (M.det() == 0) continue;
        IndexReport g;
        try {
            g = gsv_index(*nu, f);
        } catch (const PreconditionError&) {
            continue;
        }
        const auto f2 = M.pull(f);
        const auto nu2 = M.pull(*nu);
        CAPTURE(f2.to_string());
        CHECK(is_logarithmic(nu2, f2));
        CHECK(gsv_index(nu2, f2).value == g.value);
        CHECK(ph_index(nu2).value == ph_index(*nu).value);
        CHECK(euler_obstruction_field(nu2, f2).value == g.ingredient("euler_obstruction"));
        ++checked;
    }
    CHECK(checked >= 15);
}

TEST_CASE("translated germs give the same indices") {
    const Point p{FieldElem(2), FieldElem(-1)};
    // Cusp (y+1)^2 - (x-2)^3 with the Hamiltonian field based at p.
    const auto f = P("(y + 1)^2 - (x - 2)^3");
    VectorFieldGerm nu(P("2*(y + 1)"), P("3*(x - 2)^2"), p);
    CHECK(gsv_index(nu, f).value == 0);
    CHECK(schwartz_index(nu, f).value == 2);
    const auto basis = automatic_log_basis(f, p);
    REQUIRE(basis);
    CHECK(log_index(VectorFieldGerm(P("2*(x - 2)"), P("3*(y + 1)"), p), *basis).value == 0);
}
