#include <doctest.h>

#include "folindex/errors.hpp"
#include "folindex/puiseux.hpp"
#include "test_util.hpp"

using namespace folindex;
using testutil::P;

namespace {

std::vector<Branch> B(const std::string& f, int N = 12) { return branches(P(f), testutil::origin(), N); }

PowerSeries mono(int N, long c, int k) { return PowerSeries::monomial(N, FieldElem(c), k); }

}  // namespace

TEST_CASE("branch examples") {
    auto cusp = B("y^2 - x^3");
    REQUIRE(cusp.size() == 1);
    CHECK(cusp[0].x == mono(12, 1, 2));
    CHECK(cusp[0].y == mono(12, 1, 3));
    CHECK(cusp[0].multiplicity == 2);

    auto node = B("y^2 - x^2");
    REQUIRE(node.size() == 2);
    for (const auto& b : node) {
        CHECK(b.x == mono(12, 1, 1));
        CHECK(b.multiplicity == 1);
    }
    CHECK(node[0].y + node[1].y == PowerSeries(12, FieldDescriptor::rationals()));

    auto tac = B("y^2 - x^4");
    REQUIRE(tac.size() == 2);
    CHECK((tac[0].y == mono(12, 1, 2) || tac[0].y == mono(12, -1, 2)));

    auto axes = B("x*y");
    REQUIRE(axes.size() == 2);
    int total = 0;
    for (const auto& b : axes) total += b.multiplicity * b.conjugacy_size;
    CHECK(total == 2);

    auto irr = B("y^2 - 2*x^2");
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].conjugacy_size == 2);
    CHECK_FALSE(irr[0].field->is_rational());

    CHECK_THROWS_AS(B("x^2*y"), PreconditionError);
    CHECK_THROWS_AS(B("y - 1"), PreconditionError);
}

TEST_CASE("multiplicities add up") {
    for (const char* f : {"y^3 - x^5", "(y^2 - x^3)*(y^2 + x^3)", "y^4 - 2*x^2", "(y - x^2)*(y + x^2)*(x - y^3)",
                          "y^5 - x^7 + x^4*y^2", "(x^2 + y^2)*(x - y)"}) {
        int total = 0;
        for (const auto& b : B(f, 40)) total += b.multiplicity * b.conjugacy_size;
        CHECK_MESSAGE(total == P(f).order(), f);
    }
}

TEST_CASE("order along branch") {
    auto cusp = B("y^2 - x^3");
    auto o = ord_along_branch(cusp[0], P("y^2 + x^3"));
    CHECK_FALSE(o.zero_to_truncation);
    CHECK(o.value == 6);
    auto line = B("y - x");
    CHECK(ord_along_branch(line[0], P("y - x")).zero_to_truncation);
    CHECK(ord_along_branch(line[0], P("x")).value == 1);
}

TEST_CASE("Nash lift order") {
    auto axes = B("x*y");
    for (const auto& b : axes) CHECK(nash_lift_order(b, P("x"), P("y")) == 1);
    auto cusp = B("y^2 - x^3");
    CHECK(nash_lift_order(cusp[0], P("2*x"), P("3*y")) == 2);
    CHECK(nash_lift_order(cusp[0], P("2*y"), P("3*x^2")) == 3);
    CHECK_THROWS_AS(nash_lift_order(cusp[0], P("1"), P("0")), PreconditionError);
    CHECK_THROWS_AS(nash_lift_order(cusp[0], P("y^2 - x^3"), P("x*(y^2 - x^3)")), PreconditionError);
}

TEST_CASE("Nash lift order is invariant under units") {
    // Multiplying the field by a unit, or reparametrizing t -> u t, keeps the order.
    std::mt19937 rng(9);
    auto cusp = B("y^2 - x^3", 16);
    const Branch& b = cusp[0];
    for (int it = 0; it < 10; ++it) {
        MultiPoly unit = P("1") + testutil::random_poly(rng, 2, 60, 1);
        CHECK(nash_lift_order(b, unit * P("2*x"), unit * P("3*y")) == 2);
        CHECK(nash_lift_order(b, unit * P("2*y"), unit * P("3*x^2")) == 3);
        // t -> t + c t^2 is a unit reparametrization.
        const long c = static_cast<long>(rng() % 5) + 1;
        PowerSeries s = mono(16, 1, 1) + mono(16, c, 2);
        Branch r = b;
        r.x = substitute_series(P("t^2", {"t"}), {s});
        r.y = substitute_series(P("t^3", {"t"}), {s});
        CHECK(nash_lift_order(r, P("2*x"), P("3*y")) == 2);
        CHECK(nash_lift_order(r, P("2*y"), P("3*x^2")) == 3);
    }
}

TEST_CASE("precision policy") {
    CHECK(initial_precision(P("y^2 - x^3")) == 8);
    CHECK(initial_precision(P("y^5 - x^7")) == 14);
    CHECK(precision_cap() >= 1);
}
