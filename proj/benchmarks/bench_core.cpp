#include <benchmark/benchmark.h>

#include <random>

#include "alexmod/amalgam.hpp"
#include "alexmod/seifert.hpp"

using namespace alexmod;
using exactlin::IntMatrix;
using laurent::LaurentMatrix;
using laurent::LaurentPoly;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long long lo, long long hi) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = static_cast<long long>(lo + rng() % (hi - lo + 1));
    return m;
}

present::LambdaPresentation trefoil() {
    return knot::seifert_to_presentation(
        knot::SeifertMatrix{IntMatrix::from_rows({{-1, 1}, {0, -1}})});
}

void BM_snf(benchmark::State& state) {
    std::mt19937_64 rng(1);
    auto a = random_matrix(rng, static_cast<std::size_t>(state.range(0)), -9, 9);
    for (auto _ : state) benchmark::DoNotOptimize(exactlin::snf(a));
}
BENCHMARK(BM_snf)->Arg(4)->Arg(8)->Arg(16);

void BM_laurent_gcd(benchmark::State& state) {
    std::mt19937_64 rng(2);
    auto rand_poly = [&](int deg) {
        std::vector<std::pair<int, Int>> ps;
        for (int e = 0; e <= deg; ++e)
            ps.emplace_back(e, Int(static_cast<long long>(rng() % 19) - 9));
        return LaurentPoly::from_pairs(ps);
    };
    auto d = rand_poly(3);
    auto a = rand_poly(static_cast<int>(state.range(0))) * d;
    auto b = rand_poly(static_cast<int>(state.range(0))) * d;
    for (auto _ : state) benchmark::DoNotOptimize(laurent::gcd(a, b));
}
BENCHMARK(BM_laurent_gcd)->Arg(4)->Arg(8)->Arg(16);

void BM_det_laurent(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    LaurentMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::pair<int, Int>> ps;
            for (int e = 0; e <= 1; ++e)
                ps.emplace_back(e, Int(static_cast<long long>(rng() % 7) - 3));
            m(i, j) = LaurentPoly::from_pairs(ps);
        }
    for (auto _ : state) benchmark::DoNotOptimize(det_laurent(m));
}
BENCHMARK(BM_det_laurent)->Arg(4)->Arg(6)->Arg(8);

void BM_order_trefoil(benchmark::State& state) {
    auto p = trefoil();
    for (auto _ : state) benchmark::DoNotOptimize(present::order(p));
}
BENCHMARK(BM_order_trefoil);

void BM_decompose_trefoil(benchmark::State& state) {
    auto p = trefoil();
    for (auto _ : state) benchmark::DoNotOptimize(decomp::decompose(p));
}
BENCHMARK(BM_decompose_trefoil);

void BM_decompose_pencil(benchmark::State& state) {
    std::mt19937_64 rng(4);
    std::size_t d = static_cast<std::size_t>(state.range(0));
    IntMatrix f = random_matrix(rng, d, -5, 5), g = random_matrix(rng, d, -5, 5);
    while (exactlin::det(f) == 0) f = random_matrix(rng, d, -5, 5);
    while (exactlin::det(g) == 0) g = random_matrix(rng, d, -5, 5);
    auto p = present::LambdaPresentation::from_matrix(laurent::pencil(f, g));
    for (auto _ : state) benchmark::DoNotOptimize(decomp::decompose(p));
}
BENCHMARK(BM_decompose_pencil)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
