#include "lcsz/settings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcsz/errors.hpp"
#include "lcsz/gadgets.hpp"

namespace lcsz::settings {

namespace {

long long parse_ll(std::string_view s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view s) {
    s = trim(s);
    if (s.empty()) throw std::invalid_argument("empty exponent");
    if (s.front() == '-') throw std::invalid_argument("exponents must be non-negative: '" + std::string(s) + "'");
    Rational r;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        const long long den = parse_ll(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
        r = Rational(parse_ll(s.substr(0, slash)), den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        const auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (frac.size() > 12 || (whole.empty() && frac.empty()))
            throw std::invalid_argument("bad decimal '" + std::string(s) + "'");
        long long scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const long long w = whole.empty() ? 0 : parse_ll(whole), f = frac.empty() ? 0 : parse_ll(frac);
        r = Rational(w * scale + f, scale);
    } else {
        r = Rational(parse_ll(s));
    }
    if (r < Rational(0)) throw std::invalid_argument("exponents must be non-negative");
    return r;
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string_view name(Param p) {
    switch (p) {
    case Param::n: return "n";
    case Param::m: return "m";
    case Param::L: return "L";
    case Param::delta: return "delta";
    case Param::Delta: return "Delta";
    case Param::Sigma: return "Sigma";
    case Param::M: return "M";
    case Param::d: return "d";
    }
    return "?";
}

std::optional<Param> parse_param(std::string_view s) {
    for (auto p : kAllParams)
        if (name(p) == s) return p;
    return std::nullopt;
}

Rational ParameterSetting::alpha(Param p) const {
    switch (p) {
    case Param::n: return Rational(1);
    case Param::m: return m;
    case Param::L: return L;
    case Param::delta: return delta;
    case Param::Delta: return Delta;
    case Param::Sigma: return Sigma;
    case Param::M: return M;
    case Param::d: return d;
    }
    return Rational(0);
}

ParameterSetting parse_setting(std::string_view alpha, std::optional<std::uint64_t> fixed_sigma) {
    std::map<Param, Rational> seen;
    while (!alpha.empty()) {
        const auto comma = alpha.find(',');
        const auto item = trim(alpha.substr(0, comma));
        alpha = comma == std::string_view::npos ? std::string_view{} : alpha.substr(comma + 1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("expected key=value, got '" + std::string(item) + "'");
        const auto key = trim(item.substr(0, eq));
        const auto p = parse_param(key);
        if (!p || *p == Param::n) throw std::invalid_argument("unknown exponent key '" + std::string(key) + "'");
        if (!seen.emplace(*p, parse_rational(item.substr(eq + 1))).second)
            throw std::invalid_argument("duplicate key '" + std::string(key) + "'");
    }
    for (auto p : kAllParams)
        if (p != Param::n && !seen.count(p))
            throw std::invalid_argument("missing exponent '" + std::string(name(p)) + "'");
    ParameterSetting s;
    s.m = seen[Param::m];
    s.L = seen[Param::L];
    s.delta = seen[Param::delta];
    s.Delta = seen[Param::Delta];
    s.Sigma = seen[Param::Sigma];
    s.d = seen[Param::d];
    s.M = seen[Param::M];
    if (fixed_sigma) {
        if (*fixed_sigma < 2) throw std::invalid_argument("a fixed alphabet needs at least two symbols");
        if (s.Sigma != Rational(0)) throw std::invalid_argument("a fixed alphabet requires Sigma=0");
        s.fixed_sigma = fixed_sigma;
    }
    return s;
}

std::string to_string(const ParameterSetting& s) {
    std::string out;
    for (auto p : kAllParams) {
        if (p == Param::n) continue;
        if (!out.empty()) out += ',';
        out += std::string(name(p)) + "=" + to_string(s.alpha(p));
    }
    if (s.fixed_sigma) out += " sigma=" + std::to_string(*s.fixed_sigma);
    return out;
}

namespace {

ClassificationReport evaluate_rows(const ParameterSetting& s) {
    ClassificationReport rep;
    auto leq = [&](std::string id, std::string text, Rational l, Rational r) {
        rep.rows.push_back({std::move(id), std::move(text), l, r, false, l <= r});
    };
    auto eq = [&](std::string id, std::string text, Rational l, Rational r) {
        rep.rows.push_back({std::move(id), std::move(text), l, r, true, l == r});
    };
    const Rational one(1);
    leq("m.upper", "alpha_m <= 1", s.m, one);
    leq("L.upper", "alpha_L <= alpha_m", s.L, s.m);
    if (s.L == s.m) leq("delta.upper", "alpha_delta <= alpha_m", s.delta, s.m);
    else eq("delta.eq", "alpha_delta = alpha_m (since alpha_L != alpha_m)", s.delta, s.m);
    if (s.L == s.m && s.m == one) {
        leq("Delta.lower", "alpha_delta <= alpha_Delta", s.delta, s.Delta);
        leq("Delta.upper", "alpha_Delta <= 1", s.Delta, one);
    } else {
        eq("Delta.eq", "alpha_Delta = 1 (since not alpha_L = alpha_m = 1)", s.Delta, one);
    }
    leq("Sigma.upper", "alpha_Sigma <= alpha_m", s.Sigma, s.m);
    leq("d.lower.L", "alpha_L <= alpha_d", s.L, s.d);
    leq("d.lower.Sigma", "alpha_Sigma <= alpha_d", s.Sigma, s.d);
    leq("d.upper.2L+Sigma", "alpha_d <= 2 alpha_L + alpha_Sigma", s.d, 2 * s.L + s.Sigma);
    leq("d.upper.L+m", "alpha_d <= alpha_L + alpha_m", s.d, s.L + s.m);
    leq("d.upper.L+Delta", "alpha_d <= alpha_L + alpha_Delta", s.d, s.L + s.Delta);
    leq("M.lower.1", "1 <= alpha_M", one, s.M);
    leq("M.lower.d", "alpha_d <= alpha_M", s.d, s.M);
    leq("M.lower.2L-Sigma", "2 alpha_L - alpha_Sigma <= alpha_M", 2 * s.L - s.Sigma, s.M);
    leq("M.upper", "alpha_M <= alpha_L + 1", s.M, s.L + 1);
    if (s.fixed_sigma == 2u) {
        leq("M.binary.L+m", "alpha_L + alpha_m <= alpha_M", s.L + s.m, s.M);
        leq("M.binary.1+d-L", "1 + alpha_d - alpha_L <= alpha_M", 1 + s.d - s.L, s.M);
    }
    if (s.fixed_sigma == 3u) leq("M.ternary", "alpha_m + alpha_d - alpha_L <= alpha_M", s.m + s.d - s.L, s.M);

    for (const auto& r : rep.rows)
        if (!r.holds) rep.violated.push_back(r);
    rep.nontrivial = rep.violated.empty();
    return rep;
}

Rational exponent_of(const ParameterSetting& s) {
    const Rational one(1);
    // binary strings: the delta * M / n term replaces delta * m
    const Rational third = s.fixed_sigma == 2u ? s.delta + s.M - one : s.delta + s.m;
    return std::max(one, std::min({s.d, s.delta + s.Delta, third}));
}

void require_nontrivial(const ParameterSetting& s) {
    const auto rep = evaluate_rows(s);
    if (!rep.nontrivial) throw InfeasibleError("trivial setting, violates " + rep.violated.front().id);
}

} // namespace

ClassificationReport validate_setting(const ParameterSetting& s) {
    auto rep = evaluate_rows(s);
    if (rep.nontrivial) rep.exponent = exponent_of(s);
    return rep;
}

Rational predicted_exponent(const ParameterSetting& s) {
    require_nontrivial(s);
    return exponent_of(s);
}

std::uint64_t target_value(std::uint64_t n, const Rational& alpha) {
    using boost::multiprecision::cpp_int;
    if (alpha < Rational(0)) throw std::invalid_argument("negative exponent");
    const auto p = static_cast<unsigned>(alpha.numerator()), q = static_cast<unsigned>(alpha.denominator());
    if (n <= 1 || p == 0) return 1;
    const cpp_int N = boost::multiprecision::pow(cpp_int(n), p);
    // smallest k with k^q >= n^p
    cpp_int lo = 1, hi = boost::multiprecision::pow(cpp_int(n), (p + q - 1) / q);
    while (lo < hi) {
        cpp_int mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, q) >= N) hi = mid;
        else lo = mid + 1;
    }
    if (lo > cpp_int(std::numeric_limits<std::uint64_t>::max())) throw std::overflow_error("target exceeds 64 bits");
    return lo.convert_to<std::uint64_t>();
}

std::uint64_t Targets::get(Param p) const {
    switch (p) {
    case Param::n: return n;
    case Param::m: return m;
    case Param::L: return L;
    case Param::delta: return delta;
    case Param::Delta: return Delta;
    case Param::Sigma: return Sigma;
    case Param::M: return M;
    case Param::d: return d;
    }
    return 0;
}

Targets Targets::scaled_down(std::uint64_t k) const {
    auto f = [](std::uint64_t v, std::uint64_t q) { return std::max<std::uint64_t>(1, (v + q - 1) / q); };
    return {f(n, k), f(m, k), f(L, k), f(delta, k), f(Delta, k), f(Sigma, k), f(M, k * k), f(d, k * k)};
}

Targets targets(const ParameterSetting& s, std::uint64_t n) {
    Targets t{};
    t.n = n;
    t.m = target_value(n, s.m);
    t.L = target_value(n, s.L);
    t.delta = target_value(n, s.delta);
    t.Delta = target_value(n, s.Delta);
    t.Sigma = s.fixed_sigma ? *s.fixed_sigma : target_value(n, s.Sigma);
    t.M = target_value(n, s.M);
    t.d = target_value(n, s.d);
    return t;
}

namespace {

std::uint64_t isqrt(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// x = y = 0^b 1^b ... (k-1)^b with k blocks of length b
Padding blocks(std::uint64_t k, std::uint64_t b, std::string construction) {
    Padding p;
    for (std::uint64_t s = 0; s < k; ++s) append(p.x, repeat(static_cast<Symbol>(s), b));
    p.y = p.x;
    p.known_L = k * b;
    p.construction = std::move(construction);
    return p;
}

Padding pad_L(const Targets& t) {
    const std::uint64_t k = std::max<std::uint64_t>(1, std::min(t.Sigma, t.L));
    return blocks(k, t.L / k, "block strings over min(Sigma, L) symbols");
}

Padding pad_Delta(const Targets& t) {
    return {repeat(1, t.Delta + 1), Text{1}, 1, "x = 1^(Delta+1), y = 1"};
}

Padding pad_delta(const Targets& t) {
    return {Text{1}, repeat(1, t.delta + 1), 1, "x = 1, y = 1^(delta+1)"};
}

Padding pad_Sigma(const ParameterSetting& s, const Targets& t) {
    Padding p;
    for (std::uint64_t c = 0; c < t.Sigma; ++c) p.x.push_back(static_cast<Symbol>(c));
    if (s.L == s.m) {
        p.y = p.x;
        p.known_L = t.Sigma;
        p.construction = "w, w";
    } else {
        p.y = reversed(p.x);
        p.known_L = t.Sigma ? 1 : 0;
        p.construction = "w, rev(w)";
    }
    return p;
}

Padding pad_M(const ParameterSetting& s, const Targets& t) {
    if (s.Delta == Rational(1)) {
        const std::uint64_t k = t.M / t.n;
        return {repeat(0, k + t.Delta), repeat(0, k), k, "x = 1^(M/n + Delta), y = 1^(M/n)"};
    }
    const std::uint64_t want = (t.m * t.m + t.M - 1) / t.M;
    const std::uint64_t k = std::max<std::uint64_t>(1, std::min(want, t.Sigma));
    return blocks(k, t.m / k, "block strings over min(m^2/M, Sigma) symbols");
}

Padding pad_d(const ParameterSetting& s, const Targets& t) {
    Padding p;
    if (s.d > 2 * s.L) {
        // crossing copies of v = (01)^{2L}, w = 0^L (01)^L
        const std::uint64_t c = std::max<std::uint64_t>(1, t.d / (t.L * t.L));
        const Text v = repeat(Text{0, 1}, 2 * t.L), w = cat({repeat(0, t.L), repeat(Text{0, 1}, t.L)});
        for (std::uint64_t k = 0; k < c; ++k)
            for (Symbol sym : v) p.x.push_back(sym + 2 * static_cast<Symbol>(k));
        for (std::uint64_t k = c; k-- > 0;)
            for (Symbol sym : w) p.y.push_back(sym + 2 * static_cast<Symbol>(k));
        p.known_L = 3 * t.L;
        p.construction = "crossing copies of dominant-pair strings, copies=" + std::to_string(c);
        return p;
    }
    if (2 * s.L <= s.M) {
        const std::uint64_t R = std::max<std::uint64_t>(1, std::min(t.Delta, isqrt(t.d)));
        const std::uint64_t S = (t.d + R - 1) / R;
        auto g = gadgets::dom_pair_strings(R, S);
        p.x = std::move(g.x);
        p.y = std::move(g.y);
        p.known_L = g.predicted_L;
        p.construction = "binary dominant-pair strings R=" + std::to_string(R) + " S=" + std::to_string(S);
        return p;
    }
    const std::uint64_t tt = (t.L * t.L) / t.M;
    const std::uint64_t r = std::min(t.Delta, isqrt(t.d / std::max<std::uint64_t>(tt, 1)));
    if (tt < 2 || r < 1) throw InfeasibleError("large-alphabet dominant-pair padding needs t >= 2 and r >= 1");
    const std::uint64_t tp = std::min(r, tt), R = (r + tt - 1) / tt, S = 4 * ((t.d + r * tt - 1) / (r * tt));
    auto g = gadgets::dom_pair_strings_large(tt, tp, R, S);
    p.x = std::move(g.x);
    p.y = std::move(g.y);
    p.known_L = g.predicted_L;
    p.construction = "large-alphabet dominant-pair strings t=" + std::to_string(tt) + " R=" + std::to_string(R) +
                     " S=" + std::to_string(S);
    return p;
}

Padding pad_with_targets(Param p, const ParameterSetting& s, const Targets& t) {
    switch (p) {
    case Param::n: return s.L == Rational(1) ? pad_L(t) : pad_Delta(t);
    case Param::m: return s.L == s.m ? pad_L(t) : pad_delta(t);
    case Param::L: return pad_L(t);
    case Param::delta: return pad_delta(t);
    case Param::Delta: return pad_Delta(t);
    case Param::Sigma: return pad_Sigma(s, t);
    case Param::M: return pad_M(s, t);
    case Param::d: return pad_d(s, t);
    }
    throw std::logic_error("unknown parameter");
}

} // namespace

Padding pad_parameter(Param p, const ParameterSetting& s, std::uint64_t n) {
    if (n < 1) throw InfeasibleError("padding needs n >= 1");
    require_nontrivial(s);
    return pad_with_targets(p, s, targets(s, n));
}

bool hostable(const ParameterSetting& s) {
    if (!evaluate_rows(s).nontrivial) return false;
    return s.fixed_sigma ? *s.fixed_sigma >= 8 : s.Sigma > Rational(0);
}

Padding synthesize_instance(const ParameterSetting& s, std::uint64_t n) {
    require_nontrivial(s);
    if (!hostable(s)) throw InfeasibleError("setting needs alpha_Sigma > 0 or at least 8 fixed symbols to host the paddings");
    // Eight parts each contribute up to about their own target, so every part is built at
    // reduced scale. M and d shrink quadratically so that ratios such as L^2/M survive.
    const Targets t = targets(s, n).scaled_down(kSynthesisScale);
    Padding out;
    Symbol next = 0;
    for (auto p : kAllParams) {
        Padding part = pad_with_targets(p, s, t);
        // dense relabel of the part above all symbols used so far
        std::map<Symbol, Symbol> to;
        for (Symbol c : part.x) to.emplace(c, 0);
        for (Symbol c : part.y) to.emplace(c, 0);
        for (auto& [c, v] : to) v = next++;
        for (Symbol c : part.x) out.x.push_back(to[c]);
        for (Symbol c : part.y) out.y.push_back(to[c]);
        out.known_L += part.known_L;
        if (!out.construction.empty()) out.construction += "; ";
        out.construction += std::string(name(p)) + ": " + part.construction;
    }
    return out;
}

} // namespace lcsz::settings
