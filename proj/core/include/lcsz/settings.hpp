#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "lcsz/text.hpp"

namespace lcsz::settings {

// Compare against Rational(k), not raw integers: boost 1.74 recurses on mixed
// comparisons under C++20 rewritten operators.
using Rational = boost::rational<long long>;

// Accepts "2", "0.5", "3/2". Throws std::invalid_argument otherwise, or for negative values.
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& r);

enum class Param { n, m, L, delta, Delta, Sigma, M, d };

inline constexpr Param kAllParams[] = {Param::n, Param::m, Param::L, Param::delta,
                                       Param::Delta, Param::Sigma, Param::M, Param::d};

std::string_view name(Param p);
std::optional<Param> parse_param(std::string_view s);

struct ParameterSetting {
    Rational m{1}, L{1}, delta{1}, Delta{1}, Sigma{0}, d{1}, M{1};
    std::optional<std::uint64_t> fixed_sigma; // forces Sigma = 0

    Rational alpha(Param p) const; // alpha_n = 1
};

// "m=1,L=1,delta=0.5,Delta=1,Sigma=0,d=1.5,M=2"; all seven keys are required.
// Throws std::invalid_argument on malformed input.
ParameterSetting parse_setting(std::string_view alpha, std::optional<std::uint64_t> fixed_sigma = std::nullopt);
std::string to_string(const ParameterSetting& s);

struct Restriction {
    std::string id;   // stable identifier, e.g. "d.upper.L+m"
    std::string text; // human-readable inequality
    Rational lhs, rhs;
    bool equality = false; // lhs = rhs instead of lhs <= rhs
    bool holds = true;
};

struct ClassificationReport {
    bool nontrivial = false;
    std::vector<Restriction> rows;     // every row that applies to the setting
    std::vector<Restriction> violated; // subset of rows
    std::optional<Rational> exponent;  // absent when trivial
};

ClassificationReport validate_setting(const ParameterSetting& s);

// Optimal time exponent, polynomial part only. Throws InfeasibleError for trivial settings.
Rational predicted_exponent(const ParameterSetting& s);

// ceil(n^alpha), exact.
std::uint64_t target_value(std::uint64_t n, const Rational& alpha);

struct Targets {
    std::uint64_t n, m, L, delta, Delta, Sigma, M, d;
    std::uint64_t get(Param p) const;
    Targets scaled_down(std::uint64_t k) const; // lengths and Sigma over k, M and d over k^2; at least 1
};

Targets targets(const ParameterSetting& s, std::uint64_t n);

struct Padding {
    Text x, y;
    std::uint64_t known_L = 0;
    std::string construction;
};

// Strings realizing parameter p at its target while keeping the others at or below theirs (up to
// constants). Throws InfeasibleError for trivial settings or when the case conditions fail.
Padding pad_parameter(Param p, const ParameterSetting& s, std::uint64_t n);

// Non-trivial, and either alpha_Sigma > 0 or fixed_sigma >= 8.
bool hostable(const ParameterSetting& s);

inline constexpr std::uint64_t kSynthesisScale = 2;

// Disjoint-alphabet concatenation of all eight paddings, each built for targets / kSynthesisScale.
Padding synthesize_instance(const ParameterSetting& s, std::uint64_t n);

} // namespace lcsz::settings
