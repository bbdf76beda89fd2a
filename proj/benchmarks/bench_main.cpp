#include <benchmark/benchmark.h>

#include "monores/betti.hpp"
#include "monores/msquare.hpp"
#include "monores/permutation.hpp"

using namespace monores;

namespace {

MonomialIdeal comparison_ideal() {
    RingPtr R = VariableSet::make({"x1", "x2", "x3", "x4"});
    std::vector<Monomial> gens = {
        Monomial::from_dense(R, std::vector<std::int64_t>{5, 0, 0, 0}),
        Monomial::from_dense(R, std::vector<std::int64_t>{2, 4, 3, 0}),
        Monomial::from_dense(R, std::vector<std::int64_t>{3, 3, 5, 2}),
        Monomial::from_dense(R, std::vector<std::int64_t>{4, 2, 3, 3}),
    };
    return MonomialIdeal{R, std::move(gens), true};
}

void BM_SquarePermutationIdeal(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    PermutationIdeal p = build_permutation_ideal(q);
    for (auto _ : state) {
        SquarePresentation sq = square(p.ideal);
        benchmark::DoNotOptimize(sq.minimal_square.generators.size());
    }
}
BENCHMARK(BM_SquarePermutationIdeal)->DenseRange(2, 5);

void BM_ScarfSquaredPermutation(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    MonomialIdeal sq = square(build_permutation_ideal(q).ideal).minimal_square;
    for (auto _ : state) {
        LabeledComplex scarf = scarf_complex(sq);
        benchmark::DoNotOptimize(scarf.complex.facets().size());
    }
}
BENCHMARK(BM_ScarfSquaredPermutation)->DenseRange(2, 5);

void BM_BettiKoszul(benchmark::State& state) {
    MonomialIdeal sq = square(comparison_ideal()).minimal_square;
    const FieldConfig field{};
    for (auto _ : state) {
        BettiTable t = betti_koszul(sq, field);
        benchmark::DoNotOptimize(t.pd);
    }
}
BENCHMARK(BM_BettiKoszul);

void BM_BettiSupported(benchmark::State& state) {
    MonomialIdeal base = comparison_ideal();
    MonomialIdeal sq = square(base).minimal_square;
    LabeledComplex lc = build_m2_of_ideal(base).labeled;
    const FieldConfig field{};
    for (auto _ : state) {
        BettiTable t = betti_supported(lc, sq, field);
        benchmark::DoNotOptimize(t.pd);
    }
}
BENCHMARK(BM_BettiSupported);

void BM_IsTreePairComplex(benchmark::State& state) {
    MSquareComplex mq = build_mq2(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_tree(mq.complex));
}
BENCHMARK(BM_IsTreePairComplex)->DenseRange(3, 6);

void BM_SupportCheckPairComplex(benchmark::State& state) {
    MonomialIdeal base = comparison_ideal();
    LabeledComplex lc = labeled_by_pair_products(build_mq2(4), base);
    std::vector<Monomial> gens;
    for (const PairProduct& p : square(base).pairs) gens.push_back(p.value);
    const FieldConfig field{};
    for (auto _ : state) {
        SupportReport r = supports_resolution(lc, gens, SupportMethod::automatic, field);
        benchmark::DoNotOptimize(r.supports);
    }
}
BENCHMARK(BM_SupportCheckPairComplex);

void BM_ReducedHomology(benchmark::State& state) {
    MSquareComplex mq = build_mq2(static_cast<int>(state.range(0)));
    const FieldConfig field{};
    for (auto _ : state) {
        auto h = reduced_homology_dims(mq.complex, field);
        benchmark::DoNotOptimize(h.size());
    }
}
BENCHMARK(BM_ReducedHomology)->DenseRange(3, 4);

}  // namespace

int main(int argc, char** argv) {
    ::benchmark::Initialize(&argc, argv);
    if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    ::benchmark::RunSpecifiedBenchmarks();
    ::benchmark::Shutdown();
    return 0;
}
