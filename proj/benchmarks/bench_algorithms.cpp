#include <benchmark/benchmark.h>

#include <random>

#include "lcsz/algorithms.hpp"
#include "lcsz/binary_fast.hpp"
#include "lcsz/gadgets.hpp"
#include "lcsz/reductions.hpp"

using namespace lcsz;

namespace {

Text random_text(std::uint64_t seed, std::size_t len, Symbol sigma, double one_bias = -1) {
    std::mt19937_64 rng(seed);
    Text t(len);
    if (one_bias >= 0) {
        std::bernoulli_distribution coin(one_bias);
        for (auto& s : t) s = coin(rng);
    } else {
        std::uniform_int_distribution<Symbol> dist(0, sigma - 1);
        for (auto& s : t) s = dist(rng);
    }
    return t;
}

// y is x with k random deletions, so delta = k up to coincidences.
Text delete_some(Text x, std::size_t k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (; k > 0 && !x.empty(); --k) x.erase(x.begin() + static_cast<std::ptrdiff_t>(rng() % x.size()));
    return x;
}

void run_pair(benchmark::State& state, algo::Algorithm a, const Text& x, const Text& y) {
    std::uint64_t ops = 0;
    for (auto _ : state) {
        const auto r = algo::run(a, x, y);
        ops = r.ops;
        benchmark::DoNotOptimize(r.length);
    }
    state.counters["ops"] = static_cast<double>(ops);
    state.counters["n"] = static_cast<double>(x.size());
}

template <algo::Algorithm A>
void random_binary(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    run_pair(state, A, random_text(1, n, 2), random_text(2, n, 2));
}

template <algo::Algorithm A>
void random_sigma16(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    run_pair(state, A, random_text(3, n, 16), random_text(4, n, 16));
}

template <algo::Algorithm A>
void similar_binary(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = random_text(5, n, 2);
    run_pair(state, A, x, delete_some(x, 8, 6));
}

template <algo::Algorithm A>
void sparse_ones(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    run_pair(state, A, random_text(7, n, 2, 0.95), random_text(8, n / 2, 2, 0.02));
}

template <algo::Algorithm A>
void dominant_pair_gadget(benchmark::State& state) {
    const auto R = static_cast<std::uint64_t>(state.range(0));
    const auto g = gadgets::dom_pair_strings(R, 2 * R);
    run_pair(state, A, g.x, g.y);
}

void large_reduction_binary_fast(benchmark::State& state) {
    const auto inst = reductions::random_ov_instance(11, 4, 4, static_cast<std::size_t>(state.range(0)));
    const auto r = reductions::large_lcs_reduction(inst);
    run_pair(state, algo::Algorithm::binary_fast, r.x, r.y);
}

} // namespace

using algo::Algorithm;

BENCHMARK(random_binary<Algorithm::dp>)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(random_binary<Algorithm::hunt_szymanski>)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(random_binary<Algorithm::sparse_dominant>)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(random_binary<Algorithm::binary_fast>)->RangeMultiplier(4)->Range(256, 4096);

BENCHMARK(random_sigma16<Algorithm::dp>)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(random_sigma16<Algorithm::hunt_szymanski>)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(random_sigma16<Algorithm::sparse_dominant>)->RangeMultiplier(4)->Range(256, 4096);

BENCHMARK(similar_binary<Algorithm::dp>)->RangeMultiplier(4)->Range(256, 16384);
BENCHMARK(similar_binary<Algorithm::band_diff>)->RangeMultiplier(4)->Range(256, 16384);
BENCHMARK(similar_binary<Algorithm::binary_fast>)->RangeMultiplier(4)->Range(256, 16384);

BENCHMARK(sparse_ones<Algorithm::dp>)->RangeMultiplier(4)->Range(1024, 16384);
BENCHMARK(sparse_ones<Algorithm::hunt_szymanski>)->RangeMultiplier(4)->Range(1024, 16384);
BENCHMARK(sparse_ones<Algorithm::binary_fast>)->RangeMultiplier(4)->Range(1024, 16384);

BENCHMARK(dominant_pair_gadget<Algorithm::dp>)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(dominant_pair_gadget<Algorithm::sparse_dominant>)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(dominant_pair_gadget<Algorithm::binary_fast>)->RangeMultiplier(2)->Range(16, 256);

BENCHMARK(large_reduction_binary_fast)->DenseRange(2, 4);
BENCHMARK_MAIN();
