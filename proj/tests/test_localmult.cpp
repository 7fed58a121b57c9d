#include <doctest.h>

#include <omp.h>

#include <random>

#include "folindex/errors.hpp"
#include "folindex/localmult.hpp"
#include "folindex/puiseux.hpp"
#include "test_util.hpp"

using namespace folindex;
using testutil::P;

namespace {

long I0(const std::string& f, const std::string& g) {
    auto m = intersection_multiplicity(P(f), P(g), testutil::origin());
    REQUIRE_FALSE(m.infinite);
    return m.value;
}

}  // namespace

TEST_CASE("intersection multiplicity examples") {
    CHECK(I0("x", "y") == 1);
    CHECK(I0("y^2 - x^3", "y^2 + x^3") == 6);
    CHECK(intersection_multiplicity(P("x"), P("x"), testutil::origin()).infinite);
    CHECK_THROWS_AS(intersection_multiplicity(P("0"), P("x"), testutil::origin()), PreconditionError);
    CHECK(I0("y - x^2", "y") == 2);
    CHECK(I0("x + 1", "y") == 0);
    // Independent oracle for the cusp pair: ord_x Res_y = 6.
    CHECK(resultant(P("y^2 - x^3"), P("y^2 + x^3"), "y") == P("4*x^6"));
    Point p{FieldElem(1), FieldElem(1)};
    CHECK(intersection_multiplicity(P("(y-1)^2 - (x-1)^3"), P("y - 1"), p).value == 3);
}

TEST_CASE("milnor number and multiplicity") {
    CHECK(milnor_number(P("y^2 - x^3"), testutil::origin()) == 2);
    CHECK(milnor_number(P("y^2 - x^2 - x^3"), testutil::origin()) == 1);
    CHECK(milnor_number(P("y - x^2"), testutil::origin()) == 0);
    CHECK(milnor_number(P("x*y"), testutil::origin()) == 1);
    CHECK(milnor_number(P("y^2 - x^4"), testutil::origin()) == 3);
    CHECK_THROWS_AS(milnor_number(P("x^2*y"), testutil::origin()), PreconditionError);
    CHECK_THROWS_AS(milnor_number(P("x*y + 1"), testutil::origin()), PreconditionError);
    CHECK(curve_multiplicity(P("x*y"), testutil::origin()) == 2);
    CHECK(curve_multiplicity(P("y^2 - x^3"), testutil::origin()) == 2);
    CHECK(curve_multiplicity(P("y - x^2"), testutil::origin()) == 1);
    for (int p = 2; p <= 5; ++p)
        for (int q = 2; q <= 5; ++q)
            CHECK(milnor_number(P("x^" + std::to_string(p) + " + y^" + std::to_string(q)), testutil::origin()) ==
                  (p - 1) * (q - 1));
}

TEST_CASE("Fulton axioms on random inputs") {
    std::mt19937 rng(101);
    const Point o = testutil::origin();
    int checked = 0;
    for (int it = 0; it < 80; ++it) {
        MultiPoly f = testutil::random_poly(rng, 4, 50, 1), g = testutil::random_poly(rng, 4, 50, 1),
                  h = testutil::random_poly(rng, 2, 60, 0);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        auto fg = intersection_multiplicity(f, g, o);
        CHECK(fg == intersection_multiplicity(g, f, o));
        CHECK(fg == intersection_multiplicity(f, g + h * f, o));
        auto fh = intersection_multiplicity(f, h, o);
        auto fgh = intersection_multiplicity(f, g * h, o);
        if (!fg.infinite && !fh.infinite) CHECK(fgh.value == fg.value + fh.value);
        if (!fg.infinite) {
            const long mf = f.order(), mg = g.order();
            CHECK(fg.value >= mf * mg);
            // Equality iff the tangent cones share no line: resultant of the cones.
            MultiPoly cf = f.homogeneous_part(static_cast<int>(mf)), cg = g.homogeneous_part(static_cast<int>(mg));
            const bool share = !gcd(cf, cg).is_constant();
            CHECK((fg.value == mf * mg) == !share);
            ++checked;
        }
    }
    CHECK(checked > 30);
}

TEST_CASE("Fulton recursion agrees with the Puiseux oracle on random pairs") {
    std::mt19937 rng(2024);
    const Point o = testutil::origin();
    int agreed = 0, tried = 0;
    while (agreed < 120 && tried < 1000) {
        ++tried;
        // Products of random curves through the origin give singular, reducible f.
        MultiPoly f = testutil::random_poly(rng, 2, 60, 1);
        if (rng() % 2) f = f * testutil::random_poly(rng, 2, 60, 1);
        MultiPoly g = testutil::random_poly(rng, 4, 40, 1);
        if (f.is_zero() || g.is_zero() || f.total_degree() > 4 || !is_squarefree(f)) continue;
        LocalMultiplicity viaP;
        try {
            viaP = intersection_multiplicity_puiseux(f, g, o);
        } catch (const ExtensionRequired&) {
            continue;
        }
        auto viaF = intersection_multiplicity(f, g, o);
        CHECK_MESSAGE(viaF == viaP, f.to_string() << " | " << g.to_string());
        ++agreed;
    }
    CHECK(agreed >= 100);
}

TEST_CASE("batch multiplicities: parallel matches serial") {
    omp_set_num_threads(4);
    std::mt19937 rng(8);
    std::vector<std::pair<MultiPoly, MultiPoly>> pairs;
    while (pairs.size() < 60) {
        MultiPoly f = testutil::random_poly(rng, 3, 60, 1), g = testutil::random_poly(rng, 3, 60, 1);
        if (f.is_zero() || g.is_zero()) continue;
        pairs.emplace_back(f, g);
    }
    pairs.emplace_back(P("x*y"), P("x"));  // shared component: INFINITE
    const auto s = intersection_multiplicities(pairs, testutil::origin(), Exec::Serial);
    const auto p = intersection_multiplicities(pairs, testutil::origin(), Exec::Parallel);
    REQUIRE(s.size() == pairs.size());
    for (size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i] == p[i]);
        CHECK(s[i] == intersection_multiplicity(pairs[i].first, pairs[i].second, testutil::origin()));
    }
    CHECK(s.back().infinite);
}

TEST_CASE("batch kernels report the lowest failing index in both modes") {
    omp_set_num_threads(4);
    for (Exec e : {Exec::Serial, Exec::Parallel}) {
        try {
            map_indexed<int>(
                40,
                [](size_t i) -> int {
                    if (i % 7 == 3) throw PreconditionError("at-" + std::to_string(i), "boom");
                    return static_cast<int>(i);
                },
                e);
            FAIL("expected an exception");
        } catch (const PreconditionError& err) {
            CHECK(err.code() == "at-3");
        }
    }
}
