#include <benchmark/benchmark.h>

#include "ipset/geometry.hpp"
#include "ipset/numtheory.hpp"

using namespace ipset;

static void BM_is_perfect_square(benchmark::State& state) {
    const Integer v = Integer(123456789) * 123456789;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_perfect_square(v));
        benchmark::DoNotOptimize(is_perfect_square(v + 1));
    }
}
BENCHMARK(BM_is_perfect_square);

static void BM_squarefree_decompose(benchmark::State& state) {
    const Rational q = make_rational(Integer(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(squarefree_decompose(q));
    }
}
BENCHMARK(BM_squarefree_decompose)->Arg(360)->Arg(123480)->Arg(999966000289);

static void BM_integral_distance(benchmark::State& state) {
    const Point p{make_rational(11, 8), make_rational(3, 8)};
    const Point q{make_rational(7, 2), make_rational(-1, 2)};
    const Characteristic k(15);
    for (auto _ : state) {
        benchmark::DoNotOptimize(integral_distance(p, q, k));
    }
}
BENCHMARK(BM_integral_distance);

static void BM_concyclic(benchmark::State& state) {
    const Point a{Rational(0), Rational(0)};
    const Point b{Rational(4), Rational(0)};
    const Point c{Rational(4), Rational(3)};
    const Point d{Rational(0), Rational(3)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(concyclic(a, b, c, d, 1));
    }
}
BENCHMARK(BM_concyclic);
