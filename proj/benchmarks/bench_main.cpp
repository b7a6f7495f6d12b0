#include <birack/algebra.hpp>
#include <birack/diagram.hpp>
#include <birack/homology.hpp>
#include <birack/invariants.hpp>
#include <birack/smith.hpp>

#include <benchmark/benchmark.h>

#include <string>

using namespace birack;

namespace {

std::string data(const std::string& rel) { return std::string(BIRACK_BENCH_DATA) + "/" + rel; }

const AugmentedBirack& four() {
    static const auto b = read_birack_file(data("biracks/four_element.txt"));
    return b;
}

const AugmentedBirack& five() {
    static const auto b = read_birack_file(data("biracks/five_element.txt"));
    return b;
}

void BM_CountLabelings(benchmark::State& state, const char* file) {
    const auto d = read_diagram_file(data(file));
    for (auto _ : state) benchmark::DoNotOptimize(count_labelings(d, five()));
}
BENCHMARK_CAPTURE(BM_CountLabelings, L2a1, "links/L2a1.xl");
BENCHMARK_CAPTURE(BM_CountLabelings, L6a4, "links/L6a4.xl");
BENCHMARK_CAPTURE(BM_CountLabelings, L7a7, "links/L7a7.xl");
BENCHMARK_CAPTURE(BM_CountLabelings, K8_19, "knots/8_19.xl");

void BM_CocycleTile(benchmark::State& state) {
    const auto d = read_diagram_file(data("links/L6a5.xl"));
    const auto phi = read_cochain_file(data("cocycles/four_element_phi.txt"), 4);
    InvariantOptions opt;
    opt.threads = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cocycle_invariant(d, four(), phi, opt));
}
BENCHMARK(BM_CocycleTile)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BoundaryMatrix(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sparse_boundary_matrix(five(), n));
}
BENCHMARK(BM_BoundaryMatrix)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_SparseInvariantFactors(benchmark::State& state) {
    const auto m = sparse_boundary_matrix(five(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(m));
}
BENCHMARK(BM_SparseInvariantFactors)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_DenseSmith(benchmark::State& state) {
    const auto m = boundary_matrix(five(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_DenseSmith)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_ReducedCocycles(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reduced_2_cocycles(five()));
}
BENCHMARK(BM_ReducedCocycles)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
