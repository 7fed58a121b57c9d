#include <benchmark/benchmark.h>

#include <random>

#include "folindex/localmult.hpp"
#include "folindex/parser.hpp"
#include "folindex/verify.hpp"

using namespace folindex;

namespace {

const std::vector<std::string> kXY{"x", "y"};

MultiPoly random_poly(std::mt19937& rng, int deg) {
    std::uniform_int_distribution<int> coef(-4, 4), pct(0, 99);
    MultiPoly p(kXY);
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j)
            if (i + j >= 1 && pct(rng) < 50) p.add_term(Exponent{i, j}, FieldElem(static_cast<long>(coef(rng))));
    return p;
}

std::vector<std::pair<MultiPoly, MultiPoly>> batch(size_t n) {
    std::mt19937 rng(5);
    std::vector<std::pair<MultiPoly, MultiPoly>> pairs;
    while (pairs.size() < n) {
        MultiPoly f = random_poly(rng, 4), g = random_poly(rng, 4);
        if (f.is_zero() || g.is_zero() || !gcd(f, g).is_constant()) continue;
        pairs.emplace_back(std::move(f), std::move(g));
    }
    return pairs;
}

void BM_Multiplicities(benchmark::State& state, Exec exec) {
    const auto pairs = batch(static_cast<size_t>(state.range(0)));
    const Point o{FieldElem(0), FieldElem(0)};
    for (auto _ : state) benchmark::DoNotOptimize(intersection_multiplicities(pairs, o, exec));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Verify(benchmark::State& state, Exec exec) {
    const auto F = ProjFoliation::from_affine(parse_poly("2*y", kXY), parse_poly("2*x + 3*x^2", kXY));
    const auto D = parse_poly("y^2*z - x^2*z - x^3", kHomogeneousVars);
    for (auto _ : state) benchmark::DoNotOptimize(verify_isolated(F, D, exec));
}

void BM_BaumBottJouanolou(benchmark::State& state, Exec exec) {
    const auto F = ProjFoliation::from_affine(parse_poly("y^2 - x^3", kXY), parse_poly("1 - x^2*y", kXY));
    for (auto _ : state) benchmark::DoNotOptimize(verify_baum_bott(F, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Multiplicities, serial, Exec::Serial)->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_Multiplicities, parallel, Exec::Parallel)->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_Verify, serial, Exec::Serial);
BENCHMARK_CAPTURE(BM_Verify, parallel, Exec::Parallel);
BENCHMARK_CAPTURE(BM_BaumBottJouanolou, serial, Exec::Serial);
BENCHMARK_CAPTURE(BM_BaumBottJouanolou, parallel, Exec::Parallel);

BENCHMARK_MAIN();
