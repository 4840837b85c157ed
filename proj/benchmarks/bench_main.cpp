#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "qcox/algebra.hpp"
#include "qcox/coxeter.hpp"
#include "qcox/dsl.hpp"
#include "qcox/matrix.hpp"
#include "qcox/verify.hpp"

using namespace qcox;

namespace {

PolyMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> c(-3, 3);
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Polynomial{c(rng), c(rng), c(rng)};
    return m;
}

// Linear quiver 1 -> 2 -> ... -> n with every composite of length `zero` killed.
BoundQuiver linear(std::size_t n, std::size_t zero) {
    std::string text = "quiver L { vertices:";
    for (std::size_t v = 1; v <= n; ++v) text += " " + std::to_string(v);
    text += "; arrows:";
    for (std::size_t v = 1; v < n; ++v) text += " a" + std::to_string(v) + ": " + std::to_string(v) + " -> " + std::to_string(v + 1) + ";";
    if (zero > 0 && zero < n) {
        text += " relations:";
        for (std::size_t v = 1; v + zero <= n; ++v) {
            text += " a" + std::to_string(v);
            for (std::size_t k = 1; k < zero; ++k) text += "*a" + std::to_string(v + k);
            text += ";";
        }
    }
    return parse_quiver(text + " }");
}

}  // namespace

static void BM_Det(benchmark::State& state) {
    const PolyMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Det)->DenseRange(4, 16, 4);

static void BM_InverseUnimodular(benchmark::State& state) {
    const PolyMatrix c = cartan_matrix(linear(static_cast<std::size_t>(state.range(0)), 0));
    for (auto _ : state) benchmark::DoNotOptimize(inverse_unimodular(c));
}
BENCHMARK(BM_InverseUnimodular)->DenseRange(4, 16, 4);

static void BM_GradedDims(benchmark::State& state) {
    const BoundQuiver bq = linear(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(graded_dims(bq));
}
BENCHMARK(BM_GradedDims)->DenseRange(4, 16, 4);

static void BM_CoxeterGamma(benchmark::State& state) {
    const BoundQuiver bq = linear(static_cast<std::size_t>(state.range(0)), 2);
    const PolyMatrix c = cartan_matrix(bq);
    const AdmissibleNumbering num = admissible_numbering(bq.quiver);
    for (auto _ : state) benchmark::DoNotOptimize(coxeter_matrix_gamma(c, num));
}
BENCHMARK(BM_CoxeterGamma)->DenseRange(4, 12, 4);

static void BM_Verify(benchmark::State& state) {
    const BoundQuiver bq = linear(static_cast<std::size_t>(state.range(0)), 0);
    for (auto _ : state) benchmark::DoNotOptimize(verify_identities(bq));
}
BENCHMARK(BM_Verify)->DenseRange(3, 9, 3);

BENCHMARK_MAIN();
