#include "lcsz/core.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace lcsz {

NormalizedPair normalize_common_alphabet(const Text& x, const Text& y) {
    std::map<Symbol, int> seen; // bit 1: in x, bit 2: in y
    for (Symbol s : x) seen[s] |= 1;
    for (Symbol s : y) seen[s] |= 2;

    NormalizedPair out;
    std::unordered_map<Symbol, Symbol> to;
    Symbol next = 0;
    for (auto [s, mask] : seen) {
        if (mask == 3) {
            to[s] = next;
            out.remap.push_back({s, next++});
        } else {
            out.remap.push_back({s, std::nullopt});
        }
    }
    auto project = [&](const Text& t) {
        Text r;
        r.reserve(t.size());
        for (Symbol s : t)
            if (auto it = to.find(s); it != to.end()) r.push_back(it->second);
        return r;
    };
    out.x = project(x);
    out.y = project(y);
    return out;
}

void check_cells(std::size_t n, std::size_t m, std::size_t budget) {
    // (n+1)(m+1) without overflow
    if (m + 1 != 0 && n + 1 > budget / (m + 1)) throw SizeGuardError((n + 1) * (m + 1), budget);
    if ((n + 1) * (m + 1) > budget) throw SizeGuardError((n + 1) * (m + 1), budget);
}

LTable lcs_table(const Text& x, const Text& y, std::size_t budget) {
    check_cells(x.size(), y.size(), budget);
    LTable t(x.size(), y.size());
    for (std::size_t i = 1; i <= x.size(); ++i)
        for (std::size_t j = 1; j <= y.size(); ++j)
            t(i, j) = x[i - 1] == y[j - 1] ? t(i - 1, j - 1) + 1 : std::max(t(i - 1, j), t(i, j - 1));
    return t;
}

std::size_t lcs_length_dp(const Text& x, const Text& y) {
    const Text& a = x.size() >= y.size() ? x : y;
    const Text& b = x.size() >= y.size() ? y : x;
    std::vector<std::uint32_t> row(b.size() + 1, 0);
    for (Symbol c : a) {
        std::uint32_t diag = 0; // L[i-1][j-1]
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::uint32_t up = row[j];
            row[j] = c == b[j - 1] ? diag + 1 : std::max(up, row[j - 1]);
            diag = up;
        }
    }
    return row[b.size()];
}

std::uint64_t matching_pairs(const Text& x, const Text& y) {
    std::unordered_map<Symbol, std::uint64_t> hx;
    for (Symbol s : x) ++hx[s];
    std::uint64_t total = 0;
    for (Symbol s : y)
        if (auto it = hx.find(s); it != hx.end()) total += it->second;
    return total;
}

DominantPairs dominant_pairs(const Text& x, const Text& y, bool emit_list, std::size_t budget) {
    check_cells(x.size(), y.size(), budget);
    const std::size_t m = y.size();
    std::vector<std::uint32_t> prev(m + 1, 0), cur(m + 1, 0);
    DominantPairs out;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        cur[0] = 0;
        const Symbol c = x[i - 1];
        for (std::size_t j = 1; j <= m; ++j) {
            if (c == y[j - 1]) {
                cur[j] = prev[j - 1] + 1;
                // a match cell is dominant iff neither neighbour already reaches its value
                if (prev[j] + 1 == cur[j] && cur[j - 1] + 1 == cur[j]) {
                    ++out.count;
                    if (emit_list)
                        out.pairs.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), cur[j]});
                }
            } else {
                cur[j] = std::max(prev[j], cur[j - 1]);
            }
        }
        std::swap(prev, cur);
    }
    out.lcs = prev[m];
    return out;
}

std::uint64_t dominant_pairs_from_table(const LTable& t) {
    std::uint64_t d = 0;
    for (std::size_t i = 1; i <= t.rows(); ++i)
        for (std::size_t j = 1; j <= t.cols(); ++j) {
            auto k = t(i, j);
            if (k >= 1 && t(i - 1, j) == k - 1 && t(i, j - 1) == k - 1) ++d;
        }
    return d;
}

ParameterProfile profile(const Text& x, const Text& y, std::size_t budget) {
    auto norm = normalize_common_alphabet(x, y);
    ParameterProfile p;
    if (norm.x.size() < norm.y.size()) {
        std::swap(norm.x, norm.y);
        p.swapped = true;
    }
    auto dom = dominant_pairs(norm.x, norm.y, false, budget);
    p.n = norm.x.size();
    p.m = norm.y.size();
    p.L = dom.lcs;
    p.delta = p.m - p.L;
    p.Delta = p.n - p.L;
    p.sigma = static_cast<std::uint64_t>(std::count_if(norm.remap.begin(), norm.remap.end(),
                                                       [](const SymbolRemap& r) { return r.mapped.has_value(); }));
    p.M = matching_pairs(norm.x, norm.y);
    p.d = dom.count;
    return p;
}

bool RelationReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const RelationCheck& r) { return r.pass; });
}

namespace {

__extension__ typedef __int128 I128; // products of two 64-bit counts

// lhs_num/lhs_den <= rhs_num/rhs_den, denominators positive
RelationCheck leq(std::string id, std::string scope, I128 ln, I128 ld, I128 rn, I128 rd) {
    RelationCheck r;
    r.id = std::move(id);
    r.scope = std::move(scope);
    r.lhs = ld == 0 ? 0.0L : static_cast<long double>(ln) / static_cast<long double>(ld);
    r.rhs = rd == 0 ? 0.0L : static_cast<long double>(rn) / static_cast<long double>(rd);
    r.pass = ln * rd <= rn * ld;
    return r;
}

RelationCheck leq(std::string id, std::string scope, I128 l, I128 r) {
    return leq(std::move(id), std::move(scope), l, 1, r, 1);
}

} // namespace

RelationReport check_relations(const ParameterProfile& p) {
    RelationReport rep;
    rep.profile = p;
    const I128 n = p.n, m = p.m, L = p.L, dl = p.delta, Dl = p.Delta, s = p.sigma, M = p.M, d = p.d;
    auto& r = rep.rows;
    const std::string g = "general";
    r.push_back(leq("L<=m", g, L, m));
    r.push_back(leq("m<=n", g, m, n));
    r.push_back(leq("L<=d", g, L, d));
    r.push_back(leq("d<=M", g, d, M));
    r.push_back(leq("Delta<=n", g, Dl, n));
    r.push_back(leq("delta<=m", g, dl, m));
    r.push_back(leq("delta<=Delta", g, dl, Dl));
    r.push_back(leq("sigma<=m", g, s, m));
    r.push_back(leq("n<=M", g, n, M));
    r.push_back(leq("d<=L*m", g, d, L * m));
    r.push_back(leq("d<=L^2*sigma", g, d, L * L * s));
    r.push_back(leq("d<=2L(Delta+1)", g, d, 2 * L * (Dl + 1)));
    r.push_back(leq("sigma<=d", g, s, d));
    // cross-multiplied, so the empty instance (sigma = 0) passes
    r.push_back(leq("L^2/sigma<=M", g, L * L, s, M, 1));
    r.push_back(leq("M<=2Ln", g, M, 2 * L * n));
    if (p.sigma == 2) {
        r.push_back(leq("M>=Lm/4", "binary", L * m, 4, M, 1));
        r.push_back(leq("M>=nd/(5L)", "binary", n * d, 5 * L, M, 1));
    }
    if (p.sigma == 3) r.push_back(leq("M>=md/(80L)", "ternary", m * d, 80 * L, M, 1));
    return rep;
}

RelationReport check_relations(const Text& x, const Text& y, std::size_t budget) {
    return check_relations(profile(x, y, budget));
}

} // namespace lcsz
