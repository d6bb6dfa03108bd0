#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "lcsz/text.hpp"

namespace lcsz::testing {

inline Text random_text(std::mt19937_64& rng, std::size_t len, Symbol sigma) {
    std::uniform_int_distribution<Symbol> dist(0, sigma - 1);
    Text t(len);
    for (auto& s : t) s = dist(rng);
    return t;
}

// Binary text where each symbol is 1 with probability p.
inline Text biased_binary(std::mt19937_64& rng, std::size_t len, double p) {
    std::bernoulli_distribution coin(p);
    Text t(len);
    for (auto& s : t) s = coin(rng) ? 1 : 0;
    return t;
}

// Texts whose bits spell out `code` in little-endian order, length `len`.
inline Text bits(std::uint64_t code, std::size_t len) {
    Text t(len);
    for (std::size_t i = 0; i < len; ++i) t[i] = (code >> i) & 1u;
    return t;
}

// Exponential recursion without memoization; only for very short inputs.
inline std::size_t lcs_recursive(const Symbol* x, std::size_t n, const Symbol* y, std::size_t m) {
    if (n == 0 || m == 0) return 0;
    if (x[n - 1] == y[m - 1]) return 1 + lcs_recursive(x, n - 1, y, m - 1);
    return std::max(lcs_recursive(x, n - 1, y, m), lcs_recursive(x, n, y, m - 1));
}

inline std::size_t lcs_recursive(const Text& x, const Text& y) {
    return lcs_recursive(x.data(), x.size(), y.data(), y.size());
}

// Full quadratic table kept locally so the counts below do not depend on the library.
inline std::vector<std::vector<std::uint32_t>> plain_table(const Text& x, const Text& y) {
    std::vector<std::vector<std::uint32_t>> t(x.size() + 1, std::vector<std::uint32_t>(y.size() + 1, 0));
    for (std::size_t i = 1; i <= x.size(); ++i)
        for (std::size_t j = 1; j <= y.size(); ++j)
            t[i][j] = x[i - 1] == y[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
    return t;
}

inline std::size_t lcs_plain(const Text& x, const Text& y) { return plain_table(x, y)[x.size()][y.size()]; }

// (i, j) is dominant iff L[i][j] = k > 0 and both L[i-1][j] and L[i][j-1] equal k - 1.
inline std::uint64_t dominant_by_definition(const Text& x, const Text& y) {
    const auto t = plain_table(x, y);
    std::uint64_t d = 0;
    for (std::size_t i = 1; i <= x.size(); ++i)
        for (std::size_t j = 1; j <= y.size(); ++j)
            if (t[i][j] > 0 && t[i - 1][j] + 1 == t[i][j] && t[i][j - 1] + 1 == t[i][j]) ++d;
    return d;
}

inline std::uint64_t matching_by_definition(const Text& x, const Text& y) {
    std::uint64_t M = 0;
    for (Symbol a : x)
        for (Symbol b : y) M += a == b;
    return M;
}

} // namespace lcsz::testing
