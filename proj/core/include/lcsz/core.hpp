#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcsz/errors.hpp"
#include "lcsz/text.hpp"

namespace lcsz {

inline constexpr std::size_t kDefaultCellBudget = 200'000'000;

struct SymbolRemap {
    Symbol original;
    std::optional<Symbol> mapped; // empty when the symbol was dropped
};

struct NormalizedPair {
    Text x;
    Text y;
    std::vector<SymbolRemap> remap; // sorted by original symbol
};

// Drops symbols not common to both texts, then renumbers the rest densely,
// preserving their numeric order.
NormalizedPair normalize_common_alphabet(const Text& x, const Text& y);

class LTable {
public:
    LTable(std::size_t n, std::size_t m) : n_(n), m_(m), cells_((n + 1) * (m + 1), 0) {}
    std::size_t rows() const noexcept { return n_; }
    std::size_t cols() const noexcept { return m_; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return cells_[i * (m_ + 1) + j]; }
    std::uint32_t& operator()(std::size_t i, std::size_t j) { return cells_[i * (m_ + 1) + j]; }
    std::uint32_t final_value() const { return (*this)(n_, m_); }

private:
    std::size_t n_, m_;
    std::vector<std::uint32_t> cells_;
};

// Throws SizeGuardError if (|x|+1)(|y|+1) > budget.
void check_cells(std::size_t n, std::size_t m, std::size_t budget);

LTable lcs_table(const Text& x, const Text& y, std::size_t budget = kDefaultCellBudget);

std::size_t lcs_length_dp(const Text& x, const Text& y);

std::uint64_t matching_pairs(const Text& x, const Text& y);

struct DominantPair {
    std::uint32_t i, j, k;
    friend bool operator==(const DominantPair&, const DominantPair&) = default;
};

struct DominantPairs {
    std::uint64_t count = 0;
    std::size_t lcs = 0; // final table cell, free by-product of the sweep
    std::vector<DominantPair> pairs; // only filled on request, row-major order
};

DominantPairs dominant_pairs(const Text& x, const Text& y, bool emit_list = false,
                             std::size_t budget = kDefaultCellBudget);

// Recount from a materialized table; used as an oracle for the sweep.
std::uint64_t dominant_pairs_from_table(const LTable& t);

struct ParameterProfile {
    std::uint64_t n = 0, m = 0, L = 0, delta = 0, Delta = 0, sigma = 0, M = 0, d = 0;
    bool swapped = false; // true when the inputs were exchanged so that n >= m
    friend bool operator==(const ParameterProfile&, const ParameterProfile&) = default;
};

ParameterProfile profile(const Text& x, const Text& y, std::size_t budget = kDefaultCellBudget);

struct RelationCheck {
    std::string id;       // e.g. "d<=L*m"
    std::string scope;    // "general", "binary" or "ternary"
    long double lhs = 0;  // display values; pass/fail is decided in exact integers
    long double rhs = 0;
    bool pass = true;
};

struct RelationReport {
    ParameterProfile profile;
    std::vector<RelationCheck> rows;
    bool all_pass() const;
};

// Audits the parameter relations on the normalized pair.
RelationReport check_relations(const Text& x, const Text& y, std::size_t budget = kDefaultCellBudget);
RelationReport check_relations(const ParameterProfile& p);

} // namespace lcsz
