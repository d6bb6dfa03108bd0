#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "lcsz/text.hpp"

namespace lcsz::algo {

enum class Algorithm { dp, hunt_szymanski, band_diff, sparse_dominant, binary_fast };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::dp, Algorithm::hunt_szymanski, Algorithm::band_diff,
                                               Algorithm::sparse_dominant, Algorithm::binary_fast};

std::string_view name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view s);

struct HuntSzymanskiResult {
    std::size_t length = 0;
    std::uint64_t ops = 0; // rows visited plus binary-search probes per match
};

// Threshold algorithm; matches of a row are visited in decreasing column order.
HuntSzymanskiResult lcs_hunt_szymanski(const Text& x, const Text& y);

struct BandDiffResult {
    std::size_t length = 0;
    std::size_t D = 0; // deletion-only edit distance, |x| + |y| - 2L
    std::uint64_t ops = 0;
};

// Greedy furthest-reaching diagonal search; work O((n + m) D).
BandDiffResult lcs_band_diff(const Text& x, const Text& y);

struct SparseDominantResult {
    std::size_t length = 0;
    std::uint64_t materialized = 0; // dominant pairs produced, equals d(x, y)
    std::uint64_t ops = 0;
};

// Row-wise frontier of k-dominant pairs: thresholds only move at dominant pairs.
SparseDominantResult lcs_sparse_dominant(const Text& x, const Text& y);

struct AlgorithmChoice {
    Algorithm name = Algorithm::dp;
    double cost_estimate = 0; // abstract operations, from lengths, histograms and M only
};

AlgorithmChoice auto_select(const Text& x, const Text& y);

struct RunResult {
    std::size_t length = 0;
    std::uint64_t ops = 0;
};

// Uniform entry point. binary_fast normalizes the pair first and throws
// InfeasibleError when more than two common symbols remain.
RunResult run(Algorithm a, const Text& x, const Text& y);

} // namespace lcsz::algo
