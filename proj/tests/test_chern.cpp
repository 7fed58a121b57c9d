#include <doctest.h>

#include <random>

#include "folindex/chern.hpp"
#include "folindex/errors.hpp"
#include "folindex/foliation.hpp"
#include "folindex/localmult.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace folindex;

TEST_CASE("chow ring arithmetic") {
    CHECK(chow_integral(ChowClass::tangent(2)) == 3);
    CHECK(chow_mul(ChowClass::line_bundle(2, 1), ChowClass::line_bundle(2, -1)) == ChowClass(2, {1, 0, -1}));
    CHECK(chow_integral(ChowClass(2, {5})) == 0);
    CHECK(ChowClass::tangent(2) == ChowClass(2, {1, 3, 3}));
    CHECK(ChowClass::tangent(3) == ChowClass(3, {1, 4, 6, 4}));
    CHECK_THROWS_AS(chow_mul(ChowClass::one(2), ChowClass::one(3)), PreconditionError);
    CHECK(ChowClass(2, {1, -2, 1}).to_string() == "1 - 2*h + h^2");
}

TEST_CASE("virtual quotients") {
    for (long d = 0; d <= 6; ++d) {
        const ChowClass q = chern_virtual_quotient(ChowClass::tangent(2), 1 - d);
        CHECK(q[2] == d * d + d + 1);
        CHECK(top_chern_twist(ChowClass::tangent(2), 1 - d) == d * d + d + 1);
    }
    CHECK(chern_virtual_quotient(ChowClass(2, {1, 4, 7}), 0) == ChowClass(2, {1, 4, 7}));
    for (long k = -3; k <= 3; ++k)
        for (long l = -3; l <= 3; ++l) {
            const ChowClass q = chern_virtual_quotient(chern_virtual_quotient(ChowClass::tangent(2), k), l);
            CHECK(q[2] == 3 - 3 * k - 3 * l + k * k + k * l + l * l);
        }
    CHECK(top_chern_twist(ChowClass(2, {1}), 0) == 0);
    CHECK(top_chern_twist(ChowClass::tangent(2), 0) == 3);
}

TEST_CASE("top chern twist equals the quotient integral") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> c(-9, 9);
    for (int it = 0; it < 50; ++it) {
        const ChowClass e(2, {1, c(rng), c(rng)});
        for (long l = -5; l <= 5; ++l) CHECK(top_chern_twist(e, l) == chow_integral(chern_virtual_quotient(e, l)));
    }
}

TEST_CASE("csm classes of plane curves") {
    CHECK(csm_curve(2, {}) == CSMClass{{2, 2, 0}});
    CHECK(chow_integral(ChowClass(2, {0, 0, csm_curve(3, {2})[0]})) == 2);
    CHECK(csm_curve(3, {1})[0] == 1);
    CHECK(csm_complement(1, {}) == CSMClass{{1, 2, 1}});
    CHECK(csm_complement(3, {1, 1, 1}) == CSMClass{{0, 0, 1}});
    CHECK(csm_complement(3, {2}) == CSMClass{{1, 0, 1}});
}

TEST_CASE("log chern classes of normal crossing divisors") {
    CHECK(log_chern_snc({1, 1, 1}) == ChowClass::one(2));
    CHECK(log_chern_snc({1}) == ChowClass(2, {1, 2, 1}));
    CHECK(log_chern_snc({1, 2}) == ChowClass(2, {1, 0, 1}));
    // A smooth curve of degree d: complement CSM alpha_j matches c_{2-j}.
    for (long d = 1; d <= 6; ++d) {
        const CSMClass a = csm_complement(d, {});
        const ChowClass c = log_chern_snc({d});
        for (int j = 0; j <= 2; ++j) CHECK(a[j] == c[2 - j]);
    }
}

TEST_CASE("twisted index sums") {
    for (long d = 0; d <= 6; ++d) CHECK(twisted_index_sum(csm_projective_plane(), 1 - d) == d * d + d + 1);
    CHECK(twisted_index_sum(csm_complement(3, {1, 1, 1}), 0) == 0);
    CHECK(twisted_index_sum(csm_complement(1, {}), 0) == 1);
}

namespace {

using oracle::Component;
using oracle::chi_by_normalization;

long chi_by_csm(const std::string& h) {
    const MultiPoly D = testutil::P(h, kHomogeneousVars);
    std::vector<long> mus;
    for (const auto& p : curve_singular_points(D))
        for (int j = 0; j < p.conjugacy_size; ++j) mus.push_back(milnor_number(localize(D, p), testutil::origin()));
    return csm_curve(D.total_degree(), mus)[0];
}

}  // namespace

TEST_CASE("euler characteristic against the normalization oracle") {
    CHECK(chi_by_csm("x*y*z") == 3);
    CHECK(chi_by_normalization({{"x", 1}, {"y", 1}, {"z", 1}}) == 3);
    CHECK(chi_by_csm("y^2*z - x^2*z - x^3") == 1);
    CHECK(chi_by_normalization({{"y^2*z - x^2*z - x^3", 3}}) == 1);
    CHECK(chi_by_csm("y^2*z - x^3") == 2);
    CHECK(chi_by_normalization({{"y^2*z - x^3", 3}}) == 2);
    CHECK(chi_by_csm("z*(x*y - z^2)") == chi_by_normalization({{"z", 1}, {"x*y - z^2", 2}}));
    CHECK(chi_by_csm("x*y*(x - y)") == chi_by_normalization({{"x", 1}, {"y", 1}, {"x - y", 1}}));
    CHECK(chi_by_csm("y^3*z - x^4") == chi_by_normalization({{"y^3*z - x^4", 4}}));
}
