#include "lcsz/gadgets.hpp"

#include <algorithm>
#include <map>

#include "lcsz/core.hpp"
#include "lcsz/errors.hpp"

namespace lcsz::gadgets {

namespace {

// Dense relabeling of one part onto [next, next + sigma_i).
Relabel lift(const Pair& part, Symbol& next, Text& x, Text& y) {
    std::map<Symbol, Symbol> to;
    for (Symbol s : part.first) to.emplace(s, 0);
    for (Symbol s : part.second) to.emplace(s, 0);
    Relabel table;
    for (auto& [s, t] : to) {
        t = next++;
        table.emplace_back(s, t);
    }
    x.clear();
    y.clear();
    for (Symbol s : part.first) x.push_back(to[s]);
    for (Symbol s : part.second) y.push_back(to[s]);
    return table;
}

std::uint64_t dom_count(const Text& x, const Text& y) { return dominant_pairs(x, y).count; }

Text alternating(std::uint64_t k) { return repeat(Text{0, 1}, k); }

Text ascending(std::uint64_t from, std::uint64_t to) {
    Text t;
    for (std::uint64_t s = from; s <= to; ++s) t.push_back(static_cast<Symbol>(s));
    return t;
}

Text descending(std::uint64_t from, std::uint64_t to) {
    Text t;
    for (std::uint64_t s = from; s >= to && s > 0; --s) t.push_back(static_cast<Symbol>(s));
    return t;
}

} // namespace

GadgetOutput concat_disjoint(const std::vector<Pair>& parts) {
    GadgetOutput out;
    out.notes = "disjoint alphabets, " + std::to_string(parts.size()) + " parts";
    Symbol next = 0;
    Bounds d{0, 0}, M{0, 0};
    for (const auto& part : parts) {
        if (part.first.size() < part.second.size())
            throw InfeasibleError("concat_disjoint: every part needs |x_i| >= |y_i|");
        Text x, y;
        out.relabel.push_back(lift(part, next, x, y));
        out.predicted_L += lcs_length_dp(x, y);
        const auto dc = dom_count(x, y);
        const auto mc = matching_pairs(x, y);
        d.lo += dc, d.hi += dc, M.lo += mc, M.hi += mc;
        append(out.x, x);
        append(out.y, y);
    }
    out.predicted_d = d;
    out.predicted_M = M;
    return out;
}

GadgetOutput cross(const std::vector<Pair>& parts) {
    GadgetOutput out;
    out.notes = "crossing alphabets, " + std::to_string(parts.size()) + " parts";
    Symbol next = 0;
    Bounds d{0, 0}, M{0, 0};
    std::vector<Text> ys;
    for (const auto& part : parts) {
        Text x, y;
        out.relabel.push_back(lift(part, next, x, y));
        out.predicted_L = std::max<std::uint64_t>(out.predicted_L, lcs_length_dp(x, y));
        const auto dc = dom_count(x, y);
        const auto mc = matching_pairs(x, y);
        d.lo += dc, d.hi += dc, M.lo += mc, M.hi += mc;
        append(out.x, x);
        ys.push_back(std::move(y));
    }
    for (auto it = ys.rbegin(); it != ys.rend(); ++it) append(out.y, *it);
    out.predicted_d = d;
    out.predicted_M = M;
    return out;
}

GadgetOutput dom_pair_strings(std::uint64_t R, std::uint64_t S, std::uint64_t alpha, std::uint64_t beta,
                              std::uint64_t beta2) {
    GadgetOutput out;
    out.x = cat({alternating(R + S), repeat(1, alpha)});
    out.y = cat({repeat(0, beta + R), alternating(S), repeat(0, beta2)});
    out.predicted_L = R + 2 * S;
    const std::uint64_t L = R + 2 * S;
    std::uint64_t hi = 2 * (std::max(R + alpha, beta + beta2) + 1) * L;
    // the unpadded bound breaks at S = 0 < R, where d((01)^R, 0^R) = R
    if (alpha == 0 && beta == 0 && beta2 == 0 && S > 0) hi = std::min(hi, std::min(2 * (R + 1), 5 * S) * L);
    out.predicted_d = Bounds{R * S, hi};
    out.notes = "dominant-pair strings R=" + std::to_string(R) + " S=" + std::to_string(S);
    return out;
}

GadgetOutput dom_pair_strings_large(std::uint64_t t, std::uint64_t tp, std::uint64_t R, std::uint64_t S) {
    if (t < 2 || tp < 1 || tp > t || R < 1 || S < R)
        throw InfeasibleError("dom_pair_strings_large needs t >= 2, 1 <= t' <= t, S >= R >= 1");
    GadgetOutput out;
    const Text w = ascending(1, t), wp = descending(tp, 1);
    out.x = cat({repeat(cat({w, wp}), R), repeat(w, S - R)});
    out.y = repeat(w, S);
    out.predicted_L = S * t;
    if (S >= R * (tp + 1)) {
        const std::uint64_t prod = S * t * R * tp;
        out.predicted_d = Bounds{(prod + 7) / 8, 4 * prod};
    }
    out.predicted_M = Bounds{t * S * S, t * (S + R) * S};
    out.notes = "large-alphabet dominant-pair strings";
    return out;
}

GadgetOutput reduce_dominant_pairs(const Text& x, const Text& y, std::uint64_t ell, ReductionMode mode) {
    const std::uint64_t L = lcs_length_dp(x, y);
    if (ell + L <= y.size()) throw InfeasibleError("reduce_dominant_pairs needs ell > |y| - L(x,y)");
    GadgetOutput out;
    const std::uint64_t ny = y.size(), nx = x.size();
    if (mode == ReductionMode::fresh_symbol) {
        const Symbol fresh = std::max(symbol_bound(x), symbol_bound(y));
        out.x = cat({y, repeat(fresh, ell), x});
        out.y = cat({repeat(fresh, ell), y});
        out.predicted_L = L + ell;
        // |y|(ell+1) + ell from the proof; equals at most 3 ell |y| once y is nonempty
        out.predicted_d = Bounds{L + ell, ny == 0 ? ell : 3 * ell * ny};
        out.notes = "dominant-pair reduction, fresh symbol " + std::to_string(fresh);
    } else {
        const std::uint64_t k = 2 * ny + nx + 1;
        const Text block = cat({repeat(0, k), repeat(1, k)});
        out.x = cat({block, y, repeat(1, ell), block, x});
        out.y = cat({repeat(1, ell), block, y});
        out.predicted_L = L + ell + 2 * k;
        out.predicted_d = Bounds{out.predicted_L, (2 * k + ny) * (ell + 1) + ell * ell};
        out.notes = "dominant-pair reduction, binary, k=" + std::to_string(k);
    }
    return out;
}

GadgetOutput delta_pad(const Text& x, const Text& y, std::uint64_t mu, std::uint64_t nu) {
    if (nu < mu + y.size()) throw InfeasibleError("delta_pad needs nu >= mu + |y|");
    GadgetOutput out;
    out.x = cat({repeat(0, mu), repeat(1, nu), repeat(0, mu), x});
    out.y = cat({repeat(1, nu), repeat(0, mu), y});
    out.predicted_L = mu + nu + lcs_length_dp(x, y);
    // Without a 0-block (mu = 0) this is plain greedy prefix matching and the #1(y) term vanishes.
    const std::uint64_t d = mu == 0 ? nu + dom_count(x, y) : 2 * mu + nu + count(y, 1) + dom_count(x, y);
    out.predicted_d = Bounds{d, d};
    out.notes = "delta padding mu=" + std::to_string(mu) + " nu=" + std::to_string(nu);
    return out;
}

GadgetOutput bbb1(const Text& x, const Text& y, std::uint64_t alpha, std::uint64_t beta, std::uint64_t R,
                  std::uint64_t S) {
    const std::uint64_t ell = x.size() + y.size();
    const auto ab = dom_pair_strings(R, S);
    GadgetOutput out;
    out.x = cat({ab.x, repeat(1, alpha), repeat(0, ell), x});
    out.y = cat({ab.y, repeat(0, beta), repeat(0, ell), y});
    out.predicted_L = R + 2 * S + ell + lcs_length_dp(x, cat({repeat(0, beta), y}));
    out.notes = "building block I, l=" + std::to_string(ell);
    return out;
}

GadgetOutput bbb2(const Text& x, const Text& y, std::uint64_t R, std::uint64_t S, std::uint64_t ell,
                  std::uint64_t beta, bool assume_lcs_shift) {
    if (ell < R + x.size() + y.size()) throw InfeasibleError("bbb2 needs l >= R + |x| + |y|");
    if (S < x.size() && !assume_lcs_shift)
        throw InfeasibleError("bbb2 needs S >= |x| unless L(x, 0^beta y) = L(x, y) is asserted");
    const auto ab = dom_pair_strings(R, S);
    GadgetOutput out;
    out.x = cat({ab.x, repeat(0, ell), x});
    out.y = cat({repeat(0, beta), ab.y, repeat(0, ell), y});
    out.predicted_L = R + 2 * S + ell + lcs_length_dp(x, y);
    if (beta == 0 && S >= x.size())
        out.predicted_d = Bounds{R * S, (R + 1) * (4 * R + 6 * S + ell) + dom_count(x, y)};
    out.notes = "building block II, l=" + std::to_string(ell);
    return out;
}

} // namespace lcsz::gadgets
