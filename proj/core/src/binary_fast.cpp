#include "lcsz/binary_fast.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <optional>

#include "lcsz/errors.hpp"

namespace lcsz::binfast {

NextIndex::NextIndex(const Text& x) : n_(x.size()), rank0_(x.size() + 1, 0) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        rank0_[i + 1] = rank0_[i] + (x[i] == 0 ? 1 : 0);
        pos_[x[i] == 0 ? 0 : 1].push_back(static_cast<Pos>(i + 1));
    }
}

Pos NextIndex::rank(Symbol s, Pos i) const {
    if (i == kInf) return kInf;
    Pos r0 = rank0_[static_cast<std::size_t>(i)];
    return s == 0 ? r0 : i - r0;
}

Pos NextIndex::next(Symbol s, Pos t, Pos i) const {
    if (i == kInf || t == kInf) return kInf;
    if (t == 0) return i;
    const auto& p = pos_[s == 0 ? 0 : 1];
    Pos r = rank(s, i) + t;
    return r > static_cast<Pos>(p.size()) ? kInf : p[static_cast<std::size_t>(r - 1)];
}

Prepared prepare(const Text& x, const Text& y) {
    auto binary = [](const Text& t) { return std::all_of(t.begin(), t.end(), [](Symbol s) { return s <= 1; }); };
    if (!binary(x) || !binary(y)) throw InfeasibleError("binary-fast requires symbols in {0,1}");
    Prepared p{x, y, false};
    if (2 * count(x, 1) < x.size()) {
        p.flipped = true;
        for (auto& s : p.x) s ^= 1u;
        for (auto& s : p.y) s ^= 1u;
    }
    // the appended pair is matched greedily and adds exactly one to the LCS
    p.x.push_back(1);
    p.y.push_back(1);
    return p;
}

RangeMin::RangeMin(const std::vector<Pos>& a) : a_(a) {
    const std::size_t n = a_.size();
    levels_.emplace_back(n);
    for (std::size_t i = 0; i < n; ++i) levels_[0][i] = static_cast<std::uint32_t>(i);
    for (std::size_t w = 1; 2 * w <= n; w *= 2) {
        const auto& prev = levels_.back();
        std::vector<std::uint32_t> cur(n - 2 * w + 1);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            auto l = prev[i], r = prev[i + w];
            cur[i] = a_[r] < a_[l] ? r : l;
        }
        levels_.push_back(std::move(cur));
    }
}

std::size_t RangeMin::argmin(std::size_t lo, std::size_t hi) const {
    const std::size_t len = hi - lo;
    const std::size_t lvl = std::bit_width(len) - 1;
    auto l = levels_[lvl][lo], r = levels_[lvl][hi - (std::size_t{1} << lvl)];
    return a_[r] < a_[l] ? r : l;
}

std::vector<Pos> zero_runs(const Text& y) {
    std::vector<Pos> z;
    Pos run = 0;
    for (Symbol s : y) {
        if (s == 0) {
            ++run;
        } else {
            z.push_back(run);
            run = 0;
        }
    }
    if (run != 0) throw InfeasibleError("zero_runs: y must end in 1");
    return z;
}

std::vector<Pos> build_row(const std::vector<Pos>& prev, Pos z, const NextIndex& idx, RmqKind rmq,
                           std::uint64_t* work) {
    const std::size_t width = prev.size();
    std::vector<Pos> cur(width, kInf);
    std::uint64_t ops = width;

    // A[k'] = k' + #0(x[1..T[l-1,k']]); for Next_0 exponents >= 1 the first branch only
    // depends on this sum, so its minimum over the window decides the branch.
    std::vector<Pos> a(width, kInf);
    for (std::size_t k = 0; k < width; ++k)
        if (prev[k] != kInf) a[k] = static_cast<Pos>(k) + idx.rank(0, prev[k]);

    std::deque<std::size_t> window; // indices with increasing a[]
    std::optional<RangeMin> table;
    if (rmq == RmqKind::sparse_table && width > 0) {
        table.emplace(a);
        ops += width;
    }

    for (std::size_t k = 0; k < width; ++k) {
        const Pos kk = static_cast<Pos>(k);
        // (b) z zeros then the closing 1 of this block
        Pos best = idx.next(1, 1, idx.next(0, z, prev[k]));
        // (c) the whole block 0^z 1 is deleted
        if (kk - z - 1 >= 0) best = std::min(best, prev[static_cast<std::size_t>(kk - z - 1)]);
        // (a) with k' = k - z the Next_0 exponent is 0: one arbitrary symbol after T[l-1,k']
        if (z >= 1 && kk - z >= 0) best = std::min(best, idx.next_any(prev[static_cast<std::size_t>(kk - z)]));
        // (a) remaining k' in [max(0, k-z+1), k)
        const std::size_t lo = static_cast<std::size_t>(std::max<Pos>(0, kk - z + 1));
        std::optional<std::size_t> r;
        if (rmq == RmqKind::sliding_window) {
            if (k >= 1) {
                const std::size_t add = k - 1;
                while (!window.empty() && a[window.back()] >= a[add]) {
                    window.pop_back();
                    ++ops;
                }
                window.push_back(add);
                ++ops;
            }
            while (!window.empty() && window.front() < lo) {
                window.pop_front();
                ++ops;
            }
            if (!window.empty()) r = window.front();
        } else if (lo < k) {
            r = table->argmin(lo, k);
        }
        if (r && a[*r] != kInf) {
            const Pos exponent = z - kk + a[*r];
            best = std::min(best, idx.next_any(idx.next(0, exponent, 0)));
        }
        cur[k] = best;
    }
    if (work) *work += ops;
    return cur;
}

std::vector<std::vector<Pos>> threshold_table(const Text& px, const Text& py, std::size_t width, RmqKind rmq) {
    NextIndex idx(px);
    const auto z = zero_runs(py);
    std::vector<std::vector<Pos>> t;
    std::vector<Pos> row(width, kInf);
    if (width > 0) row[0] = 0;
    t.push_back(row);
    for (Pos zl : z) t.push_back(build_row(t.back(), zl, idx, rmq));
    return t;
}

Result lcs_binary_fast(const Text& x, const Text& y, RmqKind rmq) {
    Result res;
    const bool swap = x.size() < y.size();
    res.swapped = swap;
    const Prepared p = swap ? prepare(y, x) : prepare(x, y);
    res.flipped = p.flipped;
    res.ones_y = count(p.y, 1) - 1;

    NextIndex idx(p.x);
    const auto z = zero_runs(p.y);
    const std::size_t m = p.y.size();
    res.work = p.x.size() + p.y.size();

    std::size_t dt = 1;
    for (;;) {
        dt = std::min(dt, m);
        const std::size_t width = dt + 1;
        std::vector<Pos> row(width, kInf);
        row[0] = 0;
        for (Pos zl : z) row = build_row(row, zl, idx, rmq, &res.work);
        for (std::size_t k = 0; k < width; ++k) {
            if (row[k] != kInf) {
                res.delta_tilde = dt;
                res.length = m - k - 1;
                return res;
            }
        }
        // T[lambda, m] = 0 always holds, so the search ends once dt reaches m
        dt *= 2;
    }
}

} // namespace lcsz::binfast
