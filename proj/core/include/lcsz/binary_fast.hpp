#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "lcsz/text.hpp"

// LCS over {0,1} in O(n + delta * #1(y)) time.
namespace lcsz::binfast {

using Pos = std::int64_t;
inline constexpr Pos kInf = std::numeric_limits<Pos>::max(); // saturating "no such position"

// Rank/select over x (positions are 1-based, 0 means "before x").
class NextIndex {
public:
    explicit NextIndex(const Text& x);

    std::size_t size() const noexcept { return n_; }
    Pos rank(Symbol s, Pos i) const; // #s(x[1..i]); kInf stays kInf
    // Position of the t-th occurrence of s after i; Next^0(i) = i.
    Pos next(Symbol s, Pos t, Pos i) const;
    Pos next_any(Pos i) const { return i == kInf || i + 1 > static_cast<Pos>(n_) ? kInf : i + 1; }

private:
    std::size_t n_;
    std::vector<std::uint32_t> rank0_;
    std::vector<Pos> pos_[2];
};

struct Prepared {
    Text x, y;
    bool flipped = false; // 0 and 1 were exchanged so that #1(x) >= n/2
};

// Throws InfeasibleError if a symbol other than 0 or 1 occurs.
Prepared prepare(const Text& x, const Text& y);

// Sparse table with argmin, O(k log k) build, O(1) query.
class RangeMin {
public:
    explicit RangeMin(const std::vector<Pos>& a);
    std::size_t argmin(std::size_t lo, std::size_t hi) const; // over [lo, hi), requires lo < hi

private:
    std::vector<Pos> a_;
    std::vector<std::vector<std::uint32_t>> levels_;
};

enum class RmqKind { sliding_window, sparse_table };

// Run lengths z_1..z_lambda of y = 0^{z_1} 1 ... 0^{z_lambda} 1; y must end in 1.
std::vector<Pos> zero_runs(const Text& y);

// Row l of the threshold table from row l-1. The row width is prev.size().
std::vector<Pos> build_row(const std::vector<Pos>& prev, Pos z, const NextIndex& idx,
                           RmqKind rmq = RmqKind::sliding_window, std::uint64_t* work = nullptr);

// Full table T[0..lambda][0..width-1] for already prepared strings.
std::vector<std::vector<Pos>> threshold_table(const Text& px, const Text& py, std::size_t width,
                                              RmqKind rmq = RmqKind::sliding_window);

struct Result {
    std::size_t length = 0;
    std::uint64_t work = 0;
    std::size_t delta_tilde = 0; // final search budget
    std::size_t ones_y = 0;      // #1 of y after orientation, before the appended 1
    bool flipped = false;
    bool swapped = false;        // x was shorter than y and the roles were exchanged
};

Result lcs_binary_fast(const Text& x, const Text& y, RmqKind rmq = RmqKind::sliding_window);

} // namespace lcsz::binfast
