#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcsz/text.hpp"

namespace lcsz::gadgets {

struct Bounds {
    std::uint64_t lo = 0, hi = 0;
    bool contains(std::uint64_t v) const { return lo <= v && v <= hi; }
    bool exact() const { return lo == hi; }
};

using Relabel = std::vector<std::pair<Symbol, Symbol>>; // (original, new), one table per part

struct GadgetOutput {
    Text x, y;
    std::uint64_t predicted_L = 0;
    std::optional<Bounds> predicted_d; // absent when no bound is claimed
    std::optional<Bounds> predicted_M;
    std::string notes;
    std::vector<Relabel> relabel;
};

using Pair = std::pair<Text, Text>;

// Parts are moved onto consecutive disjoint symbol ranges and concatenated.
// Requires |x_i| >= |y_i| for each part (InfeasibleError otherwise).
GadgetOutput concat_disjoint(const std::vector<Pair>& parts);

// Same lifting, but the y side is concatenated in reverse part order; L becomes the maximum.
GadgetOutput cross(const std::vector<Pair>& parts);

// a = (01)^{R+S} 1^alpha, b = 0^beta 0^R (01)^S 0^beta2.
GadgetOutput dom_pair_strings(std::uint64_t R, std::uint64_t S, std::uint64_t alpha = 0, std::uint64_t beta = 0,
                              std::uint64_t beta2 = 0);

// a = ((1..t)(t'..1))^R (1..t)^{S-R}, b = (1..t)^S over symbols 1..t.
GadgetOutput dom_pair_strings_large(std::uint64_t t, std::uint64_t tp, std::uint64_t R, std::uint64_t S);

enum class ReductionMode { fresh_symbol, binary };

GadgetOutput reduce_dominant_pairs(const Text& x, const Text& y, std::uint64_t ell, ReductionMode mode);

// x' = 0^mu 1^nu 0^mu x, y' = 1^nu 0^mu y; needs nu >= mu + |y|. d is predicted exactly
// (2mu + nu + #1(y) + d(x, y) for mu >= 1, nu + d(x, y) for mu = 0).
GadgetOutput delta_pad(const Text& x, const Text& y, std::uint64_t mu, std::uint64_t nu);

// x' = a 1^alpha 0^l x, y' = b 0^beta 0^l y with l = |x| + |y|.
GadgetOutput bbb1(const Text& x, const Text& y, std::uint64_t alpha, std::uint64_t beta, std::uint64_t R,
                  std::uint64_t S);

// x' = a 0^l x, y' = 0^beta b 0^l y. Needs l >= R + |x| + |y| and either S >= |x| or
// assume_lcs_shift (the caller vouches that L(x, 0^beta y) = L(x, y)).
GadgetOutput bbb2(const Text& x, const Text& y, std::uint64_t R, std::uint64_t S, std::uint64_t ell,
                  std::uint64_t beta, bool assume_lcs_shift = false);

} // namespace lcsz::gadgets
