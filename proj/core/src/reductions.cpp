#include "lcsz/reductions.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>

#include "lcsz/core.hpp"
#include "lcsz/errors.hpp"
#include "lcsz/gadgets.hpp"

namespace lcsz::reductions {

void OVInstance::validate() const {
    auto check = [this](const std::vector<BoolVec>& vs, const char* side) {
        for (const auto& v : vs) {
            if (v.size() != D)
                throw InfeasibleError(std::string("OV vector in ") + side + " has dimension " +
                                      std::to_string(v.size()) + ", expected " + std::to_string(D));
            for (auto e : v)
                if (e > 1) throw InfeasibleError("OV vectors must be Boolean");
        }
    };
    check(A, "A");
    check(B, "B");
}

OVAnswer ov_brute_force(const OVInstance& inst) {
    for (std::size_t i = 0; i < inst.A.size(); ++i)
        for (std::size_t j = 0; j < inst.B.size(); ++j) {
            bool orth = true;
            for (std::size_t k = 0; k < inst.D && orth; ++k) orth = !(inst.A[i][k] && inst.B[j][k]);
            if (orth) return {true, std::pair{i, j}};
        }
    return {};
}

OVInstance random_ov_instance(std::uint64_t seed, std::size_t A, std::size_t B, std::size_t D,
                              double one_probability) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(one_probability);
    OVInstance inst;
    inst.D = D;
    auto draw = [&](std::size_t count) {
        std::vector<BoolVec> vs(count, BoolVec(D));
        for (auto& v : vs)
            for (auto& e : v) e = coin(rng) ? 1 : 0;
        return vs;
    };
    inst.A = draw(A);
    inst.B = draw(B);
    return inst;
}

namespace {

// Coordinate gadgets: a 1-coordinate loses a 0 on the x side, the missing zeros are
// restored at the end so that all x-gadgets have the same length and zero count.
Text coord_x(const BoolVec& a) {
    Text t;
    std::size_t ones = 0;
    for (auto v : a) {
        t.push_back(1);
        if (!v) t.push_back(0);
        append(t, Text{1, 0, 1, 0});
        ones += v;
    }
    append(t, repeat(0, ones));
    return t;
}

Text coord_y(const BoolVec& b) {
    Text t;
    for (auto v : b) append(t, v ? Text{1, 0, 1, 1} : Text{1, 1, 0, 1});
    return t;
}

} // namespace

GadgetFamily inner_vector_gadgets(const OVInstance& inst) {
    inst.validate();
    const std::uint64_t D = inst.D, T = 2 * D + 2;
    GadgetFamily f;
    const Text frame = repeat(1, T);
    for (const auto& a : inst.A) f.xs.push_back(cat({frame, coord_x(a), frame}));
    for (const auto& b : inst.B) f.ys.push_back(cat({frame, coord_y(b), frame}));
    f.ell_x = 2 * T + 6 * D;
    f.ell_y = 2 * T + 4 * D;
    f.rho0 = f.ell_y;
    f.rho1 = f.rho0 - 1;
    return f;
}

GadgetFamily normalized_vector_gadgets(const OVInstance& inst) {
    if (inst.A.empty() || inst.B.empty()) throw InfeasibleError("vector gadgets need nonempty A and B");
    GadgetFamily inner = inner_vector_gadgets(inst);
    const std::uint64_t l = inner.ell_y;
    const Text xp = cat({repeat(1, l), repeat(0, l + 1)}), yp = repeat(0, l + 1);
    GadgetFamily f;
    for (const auto& x : inner.xs) f.xs.push_back(cat({xp, x}));
    for (const auto& y : inner.ys) f.ys.push_back(cat({yp, y}));
    f.ell_x = 2 * l + 1 + inner.ell_x;
    f.ell_y = 2 * l + 1;
    f.rho0 = inner.rho0 + l + 1;
    f.rho1 = inner.rho1 + l + 1;
    return f;
}

ReductionOutput small_lcs_reduction(const OVInstance& inst) {
    if (inst.B.empty()) throw InfeasibleError("small_lcs_reduction needs nonempty B");
    if (inst.A.size() < inst.B.size()) throw InfeasibleError("small_lcs_reduction needs |A| >= |B|");
    const GadgetFamily f = inner_vector_gadgets(inst);
    const std::uint64_t A = inst.A.size(), B = inst.B.size();
    const std::uint64_t gamma = f.ell_x;

    ReductionOutput out;
    for (std::uint64_t k = 0; k < 2 * A; ++k) {
        if (k) append(out.x, repeat(0, gamma));
        append(out.x, f.xs[k % A]);
    }
    const std::uint64_t zeros_x = count(out.x, 0);
    const std::uint64_t gamma2 = (zeros_x + A - 1) / A; // smallest with A * gamma2 >= #0(x)
    const Text guard = repeat(0, A * gamma2);
    out.y = guard;
    for (std::uint64_t j = 0; j < B; ++j) {
        if (j) append(out.y, repeat(0, gamma));
        append(out.y, f.ys[j]);
    }
    append(out.y, guard);

    const std::uint64_t gadget_zeros = count(f.xs[0], 0), gadget_ones = count(f.ys[0], 1);
    out.rho = zeros_x + count(out.y, 1) - B * (gadget_zeros + gadget_ones) + (B - 1) * f.rho1 + f.rho0;
    out.provenance = "small-lcs A=" + std::to_string(A) + " B=" + std::to_string(B) + " D=" + std::to_string(inst.D);
    out.params = {{"A", A}, {"B", B}, {"D", inst.D}, {"gamma", gamma}, {"gamma_prime", gamma2},
                  {"rho0_inner", f.rho0}, {"rho1_inner", f.rho1}};
    return out;
}

ReductionOutput or_composition(const std::vector<OVInstance>& instances) {
    if (instances.empty()) throw InfeasibleError("or_composition needs at least one group");
    const auto& B = instances.front().B;
    const std::size_t D = instances.front().D;
    std::size_t width = B.size();
    for (const auto& g : instances) {
        if (g.B != B || g.D != D) throw InfeasibleError("or_composition groups must share B and D");
        if (g.A.empty()) throw InfeasibleError("or_composition groups must be nonempty");
        width = std::max(width, g.A.size());
    }
    std::vector<gadgets::Pair> parts;
    std::optional<std::uint64_t> rho;
    for (const auto& g : instances) {
        OVInstance padded = g;
        padded.A.resize(width, BoolVec(D, 1)); // all-ones rows only meet a zero b, which any a meets too
        auto r = small_lcs_reduction(padded);
        if (rho && *rho != r.rho) throw std::logic_error("or_composition: part thresholds differ");
        rho = r.rho;
        parts.emplace_back(std::move(r.x), std::move(r.y));
    }
    auto crossed = gadgets::cross(parts);
    ReductionOutput out;
    out.x = std::move(crossed.x);
    out.y = std::move(crossed.y);
    out.rho = *rho;
    out.provenance = "or-composition t=" + std::to_string(instances.size()) + " width=" + std::to_string(width);
    out.params = {{"t", instances.size()}, {"width", width}, {"B", B.size()}, {"D", D}};
    return out;
}

GParams default_g_params(std::uint64_t ell_x, std::uint64_t ell_y) {
    GParams g;
    g.g3 = ell_x + ell_y;
    g.g2 = 8 * g.g3;
    g.g1 = 6 * g.g2;
    return g;
}

Text gadget_G(const Text& w, std::uint64_t g1, std::uint64_t g2, std::uint64_t g3) {
    return cat({repeat(0, g1), repeat(1, g2), repeat(Text{0, 1}, g3), w, repeat(1, g3)});
}

ReductionOutput large_lcs_reduction(const OVInstance& source, const LargeOptions& opt) {
    if (source.A.empty() || source.B.empty()) throw InfeasibleError("large_lcs_reduction needs nonempty A and B");
    OVInstance inst = source;
    const std::uint64_t A = inst.A.size();
    if (inst.B.size() % A != 0) {
        if (!opt.auto_duplicate) throw InfeasibleError("large_lcs_reduction needs |A| to divide |B|");
        while (inst.B.size() % A != 0) inst.B.push_back(inst.B.front());
    }
    const std::uint64_t B = inst.B.size();
    const GadgetFamily f = normalized_vector_gadgets(inst);
    const GParams g = default_g_params(f.ell_x, f.ell_y);
    const std::uint64_t P = 2 * B + 3 * A, Q = B + 2 * A;

    ReductionOutput out;
    for (std::uint64_t k = 0; k < P; ++k) append(out.x, gadget_G(f.xs[k % A], g));
    const Text guard = gadget_G(f.ys[0], g);
    for (std::uint64_t k = 0; k < A; ++k) append(out.y, guard);
    for (std::uint64_t j = 0; j < B; ++j) append(out.y, gadget_G(f.ys[j], g));
    for (std::uint64_t k = 0; k < A; ++k) append(out.y, guard);
    out.rho = Q * (g.g1 + g.g2 + 3 * g.g3) + (A - 1) * f.rho1 + f.rho0 + (Q - A) * f.ell_y;
    out.params = {{"A", A}, {"B", B}, {"D", inst.D}, {"P", P}, {"Q", Q}, {"gamma1", g.g1}, {"gamma2", g.g2},
                  {"gamma3", g.g3}, {"rho0", f.rho0}, {"rho1", f.rho1}, {"ell_x", f.ell_x}, {"ell_y", f.ell_y}};
    out.provenance = "large-lcs A=" + std::to_string(A) + " B=" + std::to_string(B) + " D=" + std::to_string(inst.D);

    if (opt.post_compose) {
        // delta(x, y) <= A (ell_y - rho1) because a (1,2)-alignment with A unique slots always exists
        const std::uint64_t ell = A * (f.ell_y - f.rho1) + 1;
        const std::uint64_t k = 2 * out.y.size() + out.x.size() + 1;
        const Text block = cat({repeat(0, k), repeat(1, k)});
        Text x2 = cat({block, out.y, repeat(1, ell), block, out.x});
        Text y2 = cat({repeat(1, ell), block, out.y});
        out.x = std::move(x2);
        out.y = std::move(y2);
        out.rho += ell + 2 * k;
        out.params["post_ell"] = ell;
        out.params["post_k"] = k;
        out.provenance += " +dominant-pair-reduction";
    }
    return out;
}

namespace {

struct AlignmentInput {
    std::size_t P, Q;
    std::uint64_t ell_y;
    std::vector<std::vector<std::uint64_t>> lcs; // lcs[i][j] = L(x_i, y_j)
};

AlignmentInput prepare_alignment(const std::vector<Text>& xs, const std::vector<Text>& ys) {
    if (xs.empty() || ys.empty()) throw InfeasibleError("alignment needs P, Q >= 1");
    if (xs.size() < ys.size()) throw InfeasibleError("alignment needs P >= Q");
    for (const auto& x : xs)
        if (x.size() != xs[0].size()) throw InfeasibleError("alignment needs equal lengths among xs");
    for (const auto& y : ys)
        if (y.size() != ys[0].size()) throw InfeasibleError("alignment needs equal lengths among ys");
    AlignmentInput in{xs.size(), ys.size(), ys[0].size(), {}};
    in.lcs.assign(in.P, std::vector<std::uint64_t>(in.Q));
    for (std::size_t i = 0; i < in.P; ++i)
        for (std::size_t j = 0; j < in.Q; ++j) in.lcs[i][j] = lcs_length_dp(xs[i], ys[j]);
    return in;
}

} // namespace

std::uint64_t alignment_value_oracle(const std::vector<Text>& xs, const std::vector<Text>& ys, AlignmentMode mode) {
    if (xs.size() * ys.size() > kMaxAlignmentGrid)
        throw SizeGuardError(xs.size() * ys.size(), kMaxAlignmentGrid);
    const auto in = prepare_alignment(xs, ys);
    constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min() / 4;
    // f[j][i]: best value of y_1..y_j placed on x_1..x_i; one_two mode forbids unaligned j
    std::vector<std::vector<std::int64_t>> f(in.Q + 1, std::vector<std::int64_t>(in.P + 1, kNone));
    std::fill(f[0].begin(), f[0].end(), 0);
    for (std::size_t j = 1; j <= in.Q; ++j)
        for (std::size_t i = 0; i <= in.P; ++i) {
            std::int64_t best = kNone;
            if (i >= 1) best = std::max(best, f[j][i - 1]); // x_i unused
            if (mode == AlignmentMode::multi) best = std::max(best, f[j - 1][i]);
            if (i >= 1 && f[j - 1][i - 1] != kNone)
                best = std::max(best, f[j - 1][i - 1] + static_cast<std::int64_t>(in.lcs[i - 1][j - 1]));
            // j aligned to x_i and an earlier x_{i'}; f is monotone in i, so i' = i - 1 suffices
            if (i >= 2 && f[j - 1][i - 2] != kNone)
                best = std::max(best, f[j - 1][i - 2] + static_cast<std::int64_t>(in.ell_y));
            f[j][i] = best;
        }
    return static_cast<std::uint64_t>(f[in.Q][in.P]);
}

std::uint64_t alignment_value_enumerate(const std::vector<Text>& xs, const std::vector<Text>& ys,
                                        AlignmentMode mode) {
    const auto in = prepare_alignment(xs, ys);
    double candidates = 1;
    for (std::size_t i = 0; i < in.P; ++i) candidates *= static_cast<double>(in.Q + 1);
    if (candidates > 2e6) throw SizeGuardError(static_cast<std::size_t>(std::min(candidates, 1e18)), 2'000'000);

    // label[i] in {0 (unused), 1..Q}; nonzero labels are nondecreasing in i
    std::vector<std::size_t> label(in.P, 0);
    std::uint64_t best = 0;
    bool any = false;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t last) {
        if (i == in.P) {
            std::vector<std::size_t> cnt(in.Q + 1, 0), who(in.Q + 1, 0);
            for (std::size_t k = 0; k < in.P; ++k)
                if (label[k]) ++cnt[label[k]], who[label[k]] = k;
            std::uint64_t v = 0;
            for (std::size_t j = 1; j <= in.Q; ++j) {
                if (mode == AlignmentMode::one_two && (cnt[j] == 0 || cnt[j] > 2)) return;
                if (cnt[j] == 1) v += in.lcs[who[j]][j - 1];
                else if (cnt[j] >= 2) v += in.ell_y;
            }
            best = std::max(best, v);
            any = true;
            return;
        }
        label[i] = 0;
        rec(i + 1, last);
        for (std::size_t j = std::max<std::size_t>(last, 1); j <= in.Q; ++j) {
            label[i] = j;
            rec(i + 1, j);
        }
        label[i] = 0;
    };
    rec(0, 1);
    if (!any) throw InfeasibleError("no alignment of the requested kind exists");
    return best;
}

} // namespace lcsz::reductions
