#include <doctest.h>

#include <omp.h>

#include "folindex/errors.hpp"
#include "folindex/verify.hpp"
#include "test_util.hpp"

using namespace folindex;
using testutil::P;

namespace {

MultiPoly H(const std::string& s) { return P(s, kHomogeneousVars); }
ProjFoliation F(const std::string& a, const std::string& b) { return ProjFoliation::from_affine(P(a), P(b)); }

const char* kNodal = "y^2*z - x^2*z - x^3";
const char* kCusp = "y^2*z - x^3";

void same(const GlobalReport& a, const GlobalReport& b) {
    CHECK(a.lhs == b.lhs);
    CHECK(a.rhs == b.rhs);
    CHECK(a.rhs_alt == b.rhs_alt);
    REQUIRE(a.per_point.size() == b.per_point.size());
    for (size_t i = 0; i < a.per_point.size(); ++i) {
        CHECK(a.per_point[i].point == b.per_point[i].point);
        CHECK(a.per_point[i].kind == b.per_point[i].kind);
        CHECK(a.per_point[i].value == b.per_point[i].value);
        CHECK(a.per_point[i].weight == b.per_point[i].weight);
    }
}

}  // namespace

TEST_CASE("baum-bott") {
    auto r = verify_baum_bott(F("x", "y"));
    CHECK(r.lhs == 1);
    CHECK(r.rhs == 1);
    CHECK(r.pass);
    r = verify_baum_bott(F("x", "2*y"));
    CHECK(r.lhs == 3);
    CHECK(r.rhs == 3);
    CHECK(r.pass);
    r = verify_baum_bott(F("y^2 - x^3", "1 - x^2*y"));
    CHECK(r.lhs == 7);
    CHECK(r.rhs == 7);
    CHECK(r.pass);
    r = verify_baum_bott(F("2*y", "2*x + 3*x^2"));
    CHECK(r.pass);
    CHECK(r.lhs == 7);
}

TEST_CASE("logarithmic SEH formula") {
    auto r = verify_log_seh(F("x", "2*y"), H("x*y*z"));
    CHECK(r.lhs == 0);
    CHECK(r.rhs == 0);
    CHECK(r.pass);
    for (const auto& t : r.per_point) CHECK(t.kind == "LOG");
    r = verify_log_seh(F("x", "2*y"), H("z"));
    CHECK(r.lhs == 1);
    CHECK(r.rhs == 1);
    CHECK(r.pass);
    r = verify_log_seh(F("x", "2*y"), H("x*y"));
    CHECK(r.pass);
    CHECK(r.lhs == r.rhs);
    CHECK_FALSE(r.evidence.empty());
    CHECK_THROWS_WITH_AS(verify_log_seh(F("x", "y"), H("z")), doctest::Contains("not logarithmic"), PreconditionError);
}

TEST_CASE("isolated-singularity formula") {
    for (const char* d : {kNodal, kCusp}) {
        CAPTURE(d);
        const MultiPoly D = H(d);
        const auto f = d == std::string(kNodal) ? F("2*y", "2*x + 3*x^2") : F("2*y", "3*x^2");
        const auto r = verify_isolated(f, D);
        CHECK(r.lhs == 4);
        CHECK(r.rhs == 4);
        CHECK(r.rhs_alt == 4);
        CHECK(r.pass);
    }
    // Smooth conic with a tangent foliation: no divisor singularities.
    const auto conic = F("2*y", "-2*x");
    const auto r = verify_isolated(conic, H("x^2 + y^2 - z^2"));
    CHECK(r.pass);
}

TEST_CASE("total GSV") {
    auto r = verify_total_gsv(F("x", "2*y"), H("y"));
    CHECK(r.lhs == 2);
    CHECK(r.rhs == 2);
    for (const auto& t : r.per_point) CHECK(t.value == 1);
    for (const char* d : {kNodal, kCusp}) {
        const auto f = d == std::string(kNodal) ? F("2*y", "2*x + 3*x^2") : F("2*y", "3*x^2");
        r = verify_total_gsv(f, H(d));
        CHECK(r.lhs == 3 * (2 + 2 - 3));
        CHECK(r.rhs == r.lhs);
        CHECK(r.pass);
    }
}

TEST_CASE("wrong divisor is a precondition failure") {
    try {
        verify_total_gsv(F("x", "2*y"), H("x - y"));
        FAIL("expected an exception");
    } catch (const PreconditionError& e) {
        CHECK(e.code() == "not-invariant");
    }
}

TEST_CASE("parallel and serial kernels agree") {
    omp_set_num_threads(4);
    same(verify_baum_bott(F("y^2 - x^3", "1 - x^2*y"), Exec::Serial),
         verify_baum_bott(F("y^2 - x^3", "1 - x^2*y"), Exec::Parallel));
    same(verify_isolated(F("2*y", "2*x + 3*x^2"), H(kNodal), Exec::Serial),
         verify_isolated(F("2*y", "2*x + 3*x^2"), H(kNodal), Exec::Parallel));
    same(verify_log_seh(F("x", "2*y"), H("x*y*z"), {}, Exec::Serial), verify_log_seh(F("x", "2*y"), H("x*y*z"), {}, Exec::Parallel));
}
