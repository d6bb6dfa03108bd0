#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace lcsz {

using Symbol = std::uint32_t;
using Text = std::vector<Symbol>;

// Digits map to 0..9 so that "0101" and the integer list 0 1 0 1 denote the same text.
inline constexpr std::string_view kAsciiAlphabet =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";

// Throws std::invalid_argument on characters outside kAsciiAlphabet.
Text from_ascii(std::string_view s);
// Throws std::invalid_argument if some symbol has no ASCII code.
std::string to_ascii(const Text& t);
bool ascii_encodable(const Text& t);

inline Text repeat(Symbol s, std::size_t k) { return Text(k, s); }

inline Text repeat(const Text& t, std::size_t k) {
    Text out;
    out.reserve(t.size() * k);
    for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), t.begin(), t.end());
    return out;
}

inline Text cat(std::initializer_list<Text> parts) {
    Text out;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    out.reserve(total);
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

inline void append(Text& dst, const Text& src) { dst.insert(dst.end(), src.begin(), src.end()); }

inline std::size_t count(const Text& t, Symbol s) {
    return static_cast<std::size_t>(std::count(t.begin(), t.end(), s));
}

inline Text reversed(Text t) {
    std::reverse(t.begin(), t.end());
    return t;
}

// Largest symbol + 1, or 0 for the empty text.
inline Symbol symbol_bound(const Text& t) {
    Symbol b = 0;
    for (Symbol s : t) b = std::max<Symbol>(b, s + 1);
    return b;
}

std::size_t distinct_symbols(const Text& x, const Text& y);

} // namespace lcsz
