#include "lcsz/text.hpp"

#include <array>
#include <stdexcept>
#include <unordered_set>

namespace lcsz {

namespace {

constexpr std::array<int, 256> make_decode() {
    std::array<int, 256> table{};
    for (auto& v : table) v = -1;
    for (std::size_t i = 0; i < kAsciiAlphabet.size(); ++i)
        table[static_cast<unsigned char>(kAsciiAlphabet[i])] = static_cast<int>(i);
    return table;
}

constexpr auto kDecode = make_decode();

} // namespace

Text from_ascii(std::string_view s) {
    Text t;
    t.reserve(s.size());
    for (char c : s) {
        int v = kDecode[static_cast<unsigned char>(c)];
        if (v < 0) throw std::invalid_argument(std::string("character not in ascii codec: '") + c + "'");
        t.push_back(static_cast<Symbol>(v));
    }
    return t;
}

bool ascii_encodable(const Text& t) {
    return std::all_of(t.begin(), t.end(), [](Symbol s) { return s < kAsciiAlphabet.size(); });
}

std::string to_ascii(const Text& t) {
    std::string s;
    s.reserve(t.size());
    for (Symbol v : t) {
        if (v >= kAsciiAlphabet.size())
            throw std::invalid_argument("symbol " + std::to_string(v) + " has no ascii code");
        s.push_back(kAsciiAlphabet[v]);
    }
    return s;
}

std::size_t distinct_symbols(const Text& x, const Text& y) {
    std::unordered_set<Symbol> seen(x.begin(), x.end());
    seen.insert(y.begin(), y.end());
    return seen.size();
}

} // namespace lcsz
