#include "lcsz/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "lcsz/errors.hpp"

namespace lcsz::io {

namespace {

struct LineReader {
    std::istream& in;
    std::size_t line = 0;

    bool next(std::string& s) {
        if (!std::getline(in, s)) return false;
        ++line;
        if (!s.empty() && s.back() == '\r') s.pop_back();
        return true;
    }
};

// "key=value" token at 1-based column col of the header
std::string header_value(const std::string& token, const std::string& key, std::size_t line, std::size_t col) {
    if (token.rfind(key + "=", 0) != 0) throw ParseError(line, col, "expected '" + key + "=...', got '" + token + "'");
    return token.substr(key.size() + 1);
}

std::uint64_t parse_u64(const std::string& s, std::size_t line, std::size_t col) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
        throw ParseError(line, col, "expected a non-negative integer, got '" + s + "'");
    return v;
}

std::vector<std::pair<std::string, std::size_t>> tokens(const std::string& s) {
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        if (i == s.size()) break;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        out.emplace_back(s.substr(i, j - i), i + 1);
        i = j;
    }
    return out;
}

Text parse_text_line(const std::string& s, Encoding enc, std::size_t line) {
    Text t;
    if (enc == Encoding::ascii) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            const auto pos = kAsciiAlphabet.find(s[i]);
            if (pos == std::string_view::npos)
                throw ParseError(line, i + 1, std::string("character '") + s[i] + "' has no symbol code");
            t.push_back(static_cast<Symbol>(pos));
        }
        return t;
    }
    for (const auto& [tok, col] : tokens(s)) {
        const auto v = parse_u64(tok, line, col);
        if (v > std::numeric_limits<Symbol>::max()) throw ParseError(line, col, "symbol out of range");
        t.push_back(static_cast<Symbol>(v));
    }
    return t;
}

} // namespace

Instance parse_instance(std::istream& in) {
    LineReader r{in};
    std::string header, lx, ly;
    if (!r.next(header)) throw ParseError(1, 1, "empty file, expected 'lcsz v1' header");
    const auto tk = tokens(header);
    if (tk.size() != 4 || tk[0].first != "lcsz" || tk[1].first != "v1")
        throw ParseError(1, 1, "expected header 'lcsz v1 sigma=<k> enc=<ascii|ints>'");
    const auto sigma = parse_u64(header_value(tk[2].first, "sigma", 1, tk[2].second), 1, tk[2].second + 6);
    const auto enc_s = header_value(tk[3].first, "enc", 1, tk[3].second);
    Instance inst;
    if (enc_s == "ascii") inst.encoding = Encoding::ascii;
    else if (enc_s == "ints") inst.encoding = Encoding::ints;
    else throw ParseError(1, tk[3].second + 4, "unknown encoding '" + enc_s + "'");

    if (!r.next(lx)) throw ParseError(2, 1, "truncated file: missing x line");
    inst.x = parse_text_line(lx, inst.encoding, 2);
    if (!r.next(ly)) throw ParseError(3, 1, "truncated file: missing y line");
    inst.y = parse_text_line(ly, inst.encoding, 3);
    std::string rest;
    while (r.next(rest))
        if (!tokens(rest).empty()) throw ParseError(r.line, 1, "unexpected content after the y line");
    const auto actual = distinct_symbols(inst.x, inst.y);
    if (actual != sigma)
        throw ParseError(1, tk[2].second, "sigma=" + std::to_string(sigma) + " but the texts use " +
                                              std::to_string(actual) + " distinct symbols");
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError(0, 0, "cannot open '" + path + "'");
    return parse_instance(f);
}

Encoding preferred_encoding(const Text& x, const Text& y) {
    return ascii_encodable(x) && ascii_encodable(y) ? Encoding::ascii : Encoding::ints;
}

void write_instance(std::ostream& out, const Text& x, const Text& y, Encoding enc) {
    if (enc == Encoding::ascii && !(ascii_encodable(x) && ascii_encodable(y)))
        throw std::invalid_argument("texts are not ascii-encodable");
    out << "lcsz v1 sigma=" << distinct_symbols(x, y) << " enc=" << (enc == Encoding::ascii ? "ascii" : "ints") << '\n';
    for (const Text* t : {&x, &y}) {
        if (enc == Encoding::ascii) {
            out << to_ascii(*t);
        } else {
            for (std::size_t i = 0; i < t->size(); ++i) out << (i ? " " : "") << (*t)[i];
        }
        out << '\n';
    }
}

void save_instance(const std::string& path, const Text& x, const Text& y, Encoding enc) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    write_instance(f, x, y, enc);
}

reductions::OVInstance parse_ov(std::istream& in) {
    LineReader r{in};
    std::string header;
    if (!r.next(header)) throw ParseError(1, 1, "empty file, expected 'ov v1' header");
    const auto tk = tokens(header);
    if (tk.size() != 3 || tk[0].first != "ov" || tk[1].first != "v1")
        throw ParseError(1, 1, "expected header 'ov v1 D=<D>'");
    reductions::OVInstance inst;
    inst.D = parse_u64(header_value(tk[2].first, "D", 1, tk[2].second), 1, tk[2].second + 2);
    if (inst.D == 0) throw ParseError(1, tk[2].second + 2, "D must be at least 1");
    bool in_b = false;
    std::string s;
    while (r.next(s)) {
        if (s.empty()) {
            if (in_b) throw ParseError(r.line, 1, "more than one blank separator");
            in_b = true;
            continue;
        }
        if (s.size() != inst.D)
            throw ParseError(r.line, std::min(s.size(), inst.D) + 1,
                             "row has " + std::to_string(s.size()) + " characters, expected D=" + std::to_string(inst.D));
        reductions::BoolVec v(inst.D);
        for (std::size_t k = 0; k < inst.D; ++k) {
            if (s[k] != '0' && s[k] != '1') throw ParseError(r.line, k + 1, "rows may only contain 0 and 1");
            v[k] = s[k] == '1';
        }
        (in_b ? inst.B : inst.A).push_back(std::move(v));
    }
    if (!in_b) throw ParseError(r.line + 1, 1, "truncated file: missing blank line before the B rows");
    return inst;
}

reductions::OVInstance load_ov(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError(0, 0, "cannot open '" + path + "'");
    return parse_ov(f);
}

void write_ov(std::ostream& out, const reductions::OVInstance& inst) {
    out << "ov v1 D=" << inst.D << '\n';
    auto rows = [&](const std::vector<reductions::BoolVec>& vs) {
        for (const auto& v : vs) {
            for (auto e : v) out << (e ? '1' : '0');
            out << '\n';
        }
    };
    rows(inst.A);
    out << '\n';
    rows(inst.B);
}

} // namespace lcsz::io
