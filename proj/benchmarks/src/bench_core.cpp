#include "powersum/bounds.hpp"
#include "powersum/cheb_dickson.hpp"
#include "powersum/decompose.hpp"
#include "powersum/polyio.hpp"
#include "powersum/recurrence.hpp"
#include "powersum/valuation.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace powersum;

namespace {

Poly random_poly(std::mt19937_64& rng, long long deg) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::vector<Rational> cs(static_cast<size_t>(deg) + 1);
    for (auto& c : cs) c = Rational(num(rng), static_cast<int>(1 + rng() % 3));
    if (cs.back() == 0) cs.back() = 1;
    return Poly(cs);
}

void bm_poly_mul(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const Poly a = random_poly(rng, state.range(0));
    const Poly b = random_poly(rng, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_poly_mul)->Arg(8)->Arg(32)->Arg(128);

void bm_poly_gcd(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const Poly common = random_poly(rng, state.range(0));
    const Poly a = common * random_poly(rng, state.range(0));
    const Poly b = common * random_poly(rng, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(bm_poly_gcd)->Arg(4)->Arg(8)->Arg(16);

void bm_poly_compose(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const Poly outer = random_poly(rng, state.range(0));
    const Poly inner = random_poly(rng, 3);
    for (auto _ : state) benchmark::DoNotOptimize(outer.compose(inner));
}
BENCHMARK(bm_poly_compose)->Arg(8)->Arg(16)->Arg(32);

void bm_chebyshev(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(chebyshev(state.range(0)));
}
BENCHMARK(bm_chebyshev)->Arg(16)->Arg(32)->Arg(64);

void bm_decompose(benchmark::State& state) {
    const Poly f = chebyshev(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(full_decomposition(f));
}
BENCHMARK(bm_decompose)->Arg(12)->Arg(24)->Arg(30);

void bm_height_support(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const RatFunc f(random_poly(rng, state.range(0)), random_poly(rng, state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(height_by_places(f));
}
BENCHMARK(bm_height_support)->Arg(4)->Arg(6);

void bm_theorem2_bound(benchmark::State& state) {
    RecurrenceSpec spec;
    spec.order = 3;
    spec.coeffs = {parse_poly("x^2"), Poly(1), Poly::x()};
    spec.initial = {Poly(1), Poly(1), Poly(1)};
    for (auto _ : state) benchmark::DoNotOptimize(theorem2_bound(spec));
}
BENCHMARK(bm_theorem2_bound);

void bm_generate_terms(benchmark::State& state) {
    RecurrenceSpec spec;
    spec.order = 3;
    spec.coeffs = {parse_poly("x^2"), Poly(1), Poly::x()};
    spec.initial = {Poly(1), Poly(1), Poly(1)};
    for (auto _ : state) benchmark::DoNotOptimize(generate_terms(spec, state.range(0)));
}
BENCHMARK(bm_generate_terms)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
