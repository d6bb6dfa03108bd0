#include "lcsz/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <vector>

#include "lcsz/binary_fast.hpp"
#include "lcsz/core.hpp"
#include "lcsz/errors.hpp"

namespace lcsz::algo {

std::string_view name(Algorithm a) {
    switch (a) {
    case Algorithm::dp: return "dp";
    case Algorithm::hunt_szymanski: return "hunt-szymanski";
    case Algorithm::band_diff: return "band-diff";
    case Algorithm::sparse_dominant: return "sparse-dominant";
    case Algorithm::binary_fast: return "binary-fast";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view s) {
    for (auto a : kAllAlgorithms)
        if (name(a) == s) return a;
    return std::nullopt;
}

namespace {

using Occurrences = std::unordered_map<Symbol, std::vector<std::uint32_t>>;

Occurrences occurrences(const Text& y) {
    Occurrences occ;
    for (std::size_t j = 0; j < y.size(); ++j) occ[y[j]].push_back(static_cast<std::uint32_t>(j + 1));
    return occ;
}

} // namespace

HuntSzymanskiResult lcs_hunt_szymanski(const Text& x, const Text& y) {
    HuntSzymanskiResult res;
    const auto occ = occurrences(y);
    // thresh[k-1] = smallest column j such that the current row prefix has a common
    // subsequence of length k ending at or before j
    std::vector<std::uint32_t> thresh;
    for (Symbol c : x) {
        ++res.ops;
        auto it = occ.find(c);
        if (it == occ.end()) continue;
        const auto& cols = it->second;
        for (auto jt = cols.rbegin(); jt != cols.rend(); ++jt) {
            const std::uint32_t j = *jt;
            // first k with thresh[k] >= j
            std::size_t lo = 0, hi = thresh.size();
            ++res.ops;
            while (lo < hi) {
                std::size_t mid = (lo + hi) / 2;
                ++res.ops;
                if (thresh[mid] < j) lo = mid + 1;
                else hi = mid;
            }
            if (lo == thresh.size()) thresh.push_back(j);
            else if (thresh[lo] > j) thresh[lo] = j;
        }
    }
    res.length = thresh.size();
    return res;
}

BandDiffResult lcs_band_diff(const Text& x, const Text& y) {
    BandDiffResult res;
    const std::int64_t n = static_cast<std::int64_t>(x.size()), m = static_cast<std::int64_t>(y.size());
    const std::int64_t max_d = n + m;
    const std::int64_t off = max_d + 1;
    // v[k + off] = furthest x-index reached on diagonal k = i - j
    std::vector<std::int64_t> v(static_cast<std::size_t>(2 * max_d + 3), 0);
    for (std::int64_t d = 0; d <= max_d; ++d) {
        for (std::int64_t k = -d; k <= d; k += 2) {
            ++res.ops;
            std::int64_t i;
            if (k == -d || (k != d && v[k - 1 + off] < v[k + 1 + off])) i = v[k + 1 + off];
            else i = v[k - 1 + off] + 1;
            std::int64_t j = i - k;
            while (i < n && j < m && x[static_cast<std::size_t>(i)] == y[static_cast<std::size_t>(j)]) {
                ++i;
                ++j;
                ++res.ops;
            }
            v[k + off] = i;
            if (i >= n && j >= m) {
                res.D = static_cast<std::size_t>(d);
                res.length = static_cast<std::size_t>((n + m - d) / 2);
                return res;
            }
        }
    }
    return res; // unreachable: d = n + m always reaches the corner
}

SparseDominantResult lcs_sparse_dominant(const Text& x, const Text& y) {
    SparseDominantResult res;
    const auto occ = occurrences(y);
    // frontier[k] = column of the last k-dominant pair seen so far (frontier[0] = 0)
    std::vector<std::uint32_t> frontier{0};
    std::vector<std::pair<std::size_t, std::uint32_t>> updates;
    for (Symbol c : x) {
        ++res.ops;
        auto it = occ.find(c);
        if (it == occ.end()) continue;
        const auto& cols = it->second;
        updates.clear();
        std::size_t k = 1;
        while (k <= frontier.size()) {
            // next occurrence of c strictly after frontier[k-1]
            auto nx = std::upper_bound(cols.begin(), cols.end(), frontier[k - 1]);
            ++res.ops;
            if (nx == cols.end()) break;
            const std::uint32_t j = *nx;
            // every level k'' with frontier[k''-1] < j sees the same candidate j;
            // only the largest one can gain a dominant pair
            const std::size_t kk = static_cast<std::size_t>(
                std::lower_bound(frontier.begin(), frontier.end(), j) - frontier.begin());
            ++res.ops;
            if (kk == frontier.size() || j < frontier[kk]) updates.emplace_back(kk, j);
            k = kk + 1;
        }
        for (auto [lvl, j] : updates) {
            ++res.materialized;
            if (lvl == frontier.size()) frontier.push_back(j);
            else frontier[lvl] = j;
        }
    }
    res.length = frontier.size() - 1;
    return res;
}

AlgorithmChoice auto_select(const Text& x, const Text& y) {
    const auto norm = normalize_common_alphabet(x, y);
    const double n = static_cast<double>(std::max(x.size(), y.size()));
    const double m = static_cast<double>(std::min(x.size(), y.size()));
    const double full = n * m;
    if (full == 0) return {Algorithm::dp, 0};

    std::unordered_map<Symbol, std::pair<std::uint64_t, std::uint64_t>> hist;
    for (Symbol s : norm.x) ++hist[s].first;
    for (Symbol s : norm.y) ++hist[s].second;
    double M = 0, common = 0;
    for (auto& [s, h] : hist) {
        M += static_cast<double>(h.first) * static_cast<double>(h.second);
        common += static_cast<double>(std::min(h.first, h.second));
    }
    const double sigma = static_cast<double>(hist.size());
    // histogram lower bound on the deletion distance
    const double d_lower = n + m - 2 * common;

    const double est_binary = n + m * M / n;
    const double est_hs = (n + M) * std::log2(n + 2);
    const double est_band = (n + m) * (d_lower + 1);

    if (sigma == 2 && est_binary < full) return {Algorithm::binary_fast, est_binary};
    if (4 * est_hs < full) return {Algorithm::hunt_szymanski, est_hs};
    if (4 * est_band < full) return {Algorithm::band_diff, est_band};
    return {Algorithm::dp, full};
}

RunResult run(Algorithm a, const Text& x, const Text& y) {
    switch (a) {
    case Algorithm::dp:
        return {lcs_length_dp(x, y), static_cast<std::uint64_t>(x.size()) * y.size()};
    case Algorithm::hunt_szymanski: {
        auto r = lcs_hunt_szymanski(x, y);
        return {r.length, r.ops};
    }
    case Algorithm::band_diff: {
        auto r = lcs_band_diff(x, y);
        return {r.length, r.ops};
    }
    case Algorithm::sparse_dominant: {
        auto r = lcs_sparse_dominant(x, y);
        return {r.length, r.ops};
    }
    case Algorithm::binary_fast: {
        auto norm = normalize_common_alphabet(x, y);
        if (symbol_bound(norm.x) > 2) throw InfeasibleError("binary-fast needs at most two common symbols");
        auto r = binfast::lcs_binary_fast(norm.x, norm.y);
        return {r.length, r.work};
    }
    }
    return {};
}

} // namespace lcsz::algo
