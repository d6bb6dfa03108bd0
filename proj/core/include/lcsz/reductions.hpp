#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcsz/text.hpp"

namespace lcsz::reductions {

using BoolVec = std::vector<std::uint8_t>; // entries 0 or 1

struct OVInstance {
    std::size_t D = 0;
    std::vector<BoolVec> A, B;

    // Throws InfeasibleError if some vector has the wrong dimension or a non-Boolean entry.
    void validate() const;
};

struct OVAnswer {
    bool found = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness; // 0-based (i, j) with <a_i, b_j> = 0
};

OVAnswer ov_brute_force(const OVInstance& inst);

OVInstance random_ov_instance(std::uint64_t seed, std::size_t A, std::size_t B, std::size_t D,
                              double one_probability = 0.5);

struct GadgetFamily {
    std::vector<Text> xs, ys;
    std::uint64_t ell_x = 0, ell_y = 0;
    std::uint64_t rho0 = 0, rho1 = 0; // L(x_i, y_j) >= rho0 iff orthogonal, = rho1 otherwise
};

// Binary coordinate gadgets framed by 1-blocks; before the normalization prefix.
// Orthogonal pairs reach exactly rho0 = |y_j|, all others rho1 = rho0 - 1.
GadgetFamily inner_vector_gadgets(const OVInstance& inst);

// inner_vector_gadgets followed by x_i = 1^l 0^{l+1} x'_i, y_j = 0^{l+1} y'_j with l = |y'_j|.
GadgetFamily normalized_vector_gadgets(const OVInstance& inst);

struct ReductionOutput {
    Text x, y;
    std::uint64_t rho = 0; // L(x, y) >= rho iff the source has an orthogonal pair
    std::string provenance;
    std::map<std::string, std::uint64_t> params;
};

// Requires |A| >= |B| >= 1.
ReductionOutput small_lcs_reduction(const OVInstance& inst);

// All instances must share B and D. Groups are padded with all-ones vectors to a
// common size so that every part has the same threshold.
ReductionOutput or_composition(const std::vector<OVInstance>& instances);

struct GParams {
    std::uint64_t g1 = 0, g2 = 0, g3 = 0;
};

GParams default_g_params(std::uint64_t ell_x, std::uint64_t ell_y);

// 0^g1 1^g2 (01)^g3 w 1^g3
Text gadget_G(const Text& w, std::uint64_t g1, std::uint64_t g2, std::uint64_t g3);
inline Text gadget_G(const Text& w, const GParams& g) { return gadget_G(w, g.g1, g.g2, g.g3); }

struct LargeOptions {
    bool auto_duplicate = true; // append copies of b_1 until |A| divides |B|
    bool post_compose = false;  // wrap with the binary dominant-pair reduction
};

ReductionOutput large_lcs_reduction(const OVInstance& inst, const LargeOptions& opt = {});

enum class AlignmentMode { one_two, multi };

inline constexpr std::size_t kMaxAlignmentGrid = 100; // P * Q

// Maximum alignment value v(Lambda) by dynamic programming over (P, Q).
// Requires equal lengths within xs and within ys, P >= Q and P * Q <= kMaxAlignmentGrid.
std::uint64_t alignment_value_oracle(const std::vector<Text>& xs, const std::vector<Text>& ys, AlignmentMode mode);

// Same value by literal enumeration of all alignments; refuses more than ~2e6 candidates.
std::uint64_t alignment_value_enumerate(const std::vector<Text>& xs, const std::vector<Text>& ys,
                                        AlignmentMode mode);

} // namespace lcsz::reductions
