#include <benchmark/benchmark.h>

#include "rcpoly/dedekind.hpp"
#include "rcpoly/geometry.hpp"

using namespace rcpoly;

namespace {

void BM_dedekind_sum(benchmark::State& state) {
    const long b = state.range(0);
    for (auto _ : state) {
        Rational s = dedekind_sum(b / 2 + 1, b);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_dedekind_sum)->Arg(101)->Arg(1009)->Arg(10007);

void BM_rc_polynomial(benchmark::State& state) {
    const long b = state.range(0);
    const LinearMapQ f(b / 2 + 1, b, Rational(1, 3));
    for (auto _ : state) {
        LaurentPoly2 p = rc(Rational(1, 2), f);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_rc_polynomial)->Arg(100)->Arg(1000)->Arg(5000);

void BM_verify_thm1(benchmark::State& state) {
    for (auto _ : state) {
        VerificationReport rep = verify_thm1(11, 15, Rational(-5, 4), Rational(1, 3));
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_verify_thm1);

void BM_parallelogram_points(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    const HalfOpenCone cone{{Rational(1, 3), Rational(-2, 5)}, {1, 0}, {n, n - 1}, true, false};
    for (auto _ : state) {
        auto pts = parallelogram_points(cone);
        benchmark::DoNotOptimize(pts);
    }
}
BENCHMARK(BM_parallelogram_points)->Arg(100)->Arg(1000);

void BM_triangle_closed_form_vs_brion(benchmark::State& state) {
    const RightTriangleParams params(9, 2, 7, 3, 1, 4, 1, 5);
    const ConvexRationalPolygon tri({{params.corner_x(), params.corner_y()},
                                     {params.east_x(), params.corner_y()},
                                     {params.corner_x(), params.north_y()}});
    for (auto _ : state) {
        bool equal = gf_equal(triangle_ipt_thm2(params), brion_ipt(tri));
        benchmark::DoNotOptimize(equal);
    }
}
BENCHMARK(BM_triangle_closed_form_vs_brion);

void BM_polygon_pipeline(benchmark::State& state) {
    const ConvexRationalPolygon pentagon({{Rational(0), Rational(0)},
                                          {Rational(5), Rational(0)},
                                          {Rational(7), Rational(7, 2)},
                                          {Rational(7, 2), Rational(6)},
                                          {Rational(0), Rational(4)}});
    for (auto _ : state) {
        LaurentPoly2 p = gf_as_polynomial(polygon_ipt(pentagon));
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_polygon_pipeline);

}  // namespace

BENCHMARK_MAIN();
