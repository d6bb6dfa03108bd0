#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcsz/algorithms.hpp"
#include "lcsz/binary_fast.hpp"
#include "lcsz/core.hpp"
#include "lcsz/errors.hpp"
#include "lcsz/gadgets.hpp"
#include "lcsz/io.hpp"
#include "lcsz/reductions.hpp"
#include "lcsz/settings.hpp"

namespace lcsz::cli {
namespace {

using nlohmann::json;

constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kInfeasible = 3;
constexpr int kSizeGuard = 4;
constexpr int kMismatch = 5;

// Thrown by handlers after they already reported a failed check.
struct Mismatch {};

// dp and sparse-dominant sweep the full table, so they honour --max-cells.
void guard(algo::Algorithm a, const Text& x, const Text& y, std::size_t budget) {
    if (a == algo::Algorithm::dp || a == algo::Algorithm::sparse_dominant) check_cells(x.size(), y.size(), budget);
}

bool binary_applicable(const Text& x, const Text& y) {
    auto np = normalize_common_alphabet(x, y);
    return std::all_of(np.x.begin(), np.x.end(), [](Symbol s) { return s < 2; }) &&
           std::all_of(np.y.begin(), np.y.end(), [](Symbol s) { return s < 2; });
}

std::string bounds_text(const std::optional<gadgets::Bounds>& b) {
    if (!b) return "none";
    return "[" + std::to_string(b->lo) + "," + std::to_string(b->hi) + "]";
}

// Instances go to --out when given; otherwise to stdout with the summary on stderr,
// so that the instance can be piped directly.
void emit_instance(const Text& x, const Text& y, const std::vector<std::pair<std::string, std::string>>& summary,
                   const std::string& out_path, std::ostream& out, std::ostream& err) {
    const auto enc = io::preferred_encoding(x, y);
    std::ostream& info = out_path.empty() ? err : out;
    if (out_path.empty())
        io::write_instance(out, x, y, enc);
    else
        io::save_instance(out_path, x, y, enc);
    for (const auto& [k, v] : summary) info << k << '=' << v << '\n';
}

void emit_gadget(const gadgets::GadgetOutput& g, const std::string& out_path, std::ostream& out, std::ostream& err) {
    emit_instance(g.x, g.y,
                  {{"len_x", std::to_string(g.x.size())},
                   {"len_y", std::to_string(g.y.size())},
                   {"predicted_L", std::to_string(g.predicted_L)},
                   {"predicted_d", bounds_text(g.predicted_d)},
                   {"predicted_M", bounds_text(g.predicted_M)}},
                  out_path, out, err);
}

json profile_json(const ParameterProfile& p) {
    return {{"n", p.n},         {"m", p.m}, {"L", p.L}, {"delta", p.delta}, {"Delta", p.Delta},
            {"sigma", p.sigma}, {"M", p.M}, {"d", p.d}, {"swapped", p.swapped}};
}

void print_profile(const ParameterProfile& p, std::ostream& out) {
    out << "n=" << p.n << "\nm=" << p.m << "\nL=" << p.L << "\ndelta=" << p.delta << "\nDelta=" << p.Delta
        << "\nsigma=" << p.sigma << "\nM=" << p.M << "\nd=" << p.d << "\nswapped=" << (p.swapped ? 1 : 0) << '\n';
}

std::string fmt(long double v) {
    std::ostringstream s;
    s << std::setprecision(6) << static_cast<double>(v);
    return s.str();
}

// --- handlers ---

struct LcsArgs {
    std::string file, algo = "auto";
    bool stats = false;
};

void do_lcs(const LcsArgs& a, std::size_t budget, std::ostream& out) {
    const auto inst = io::load_instance(a.file);
    algo::Algorithm which;
    if (a.algo == "auto") {
        which = algo::auto_select(inst.x, inst.y).name;
    } else {
        auto parsed = algo::parse_algorithm(a.algo);
        if (!parsed) throw CLI::ValidationError("--algo", "unknown algorithm '" + a.algo + "'");
        which = *parsed;
    }
    guard(which, inst.x, inst.y, budget);
    const auto r = algo::run(which, inst.x, inst.y);
    out << r.length << '\n';
    if (a.stats) out << "algorithm=" << algo::name(which) << "\nops=" << r.ops << '\n';
}

void do_analyze(const std::string& file, bool as_json, std::size_t budget, std::ostream& out) {
    const auto inst = io::load_instance(file);
    const auto p = profile(inst.x, inst.y, budget);
    if (as_json)
        out << profile_json(p).dump(2) << '\n';
    else
        print_profile(p, out);
}

void do_audit(const std::string& file, bool as_json, std::size_t budget, std::ostream& out) {
    const auto inst = io::load_instance(file);
    const auto rep = check_relations(inst.x, inst.y, budget);
    std::size_t failures = 0;
    for (const auto& r : rep.rows) failures += r.pass ? 0 : 1;
    if (as_json) {
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"id", r.id},
                            {"scope", r.scope},
                            {"lhs", static_cast<double>(r.lhs)},
                            {"rhs", static_cast<double>(r.rhs)},
                            {"pass", r.pass}});
        out << json{{"profile", profile_json(rep.profile)}, {"rows", rows}, {"violations", failures}}.dump(2)
            << '\n';
        return;
    }
    for (const auto& r : rep.rows)
        out << (r.pass ? "PASS " : "FAIL ") << r.scope << ' ' << r.id << ' ' << fmt(r.lhs) << " <= " << fmt(r.rhs)
            << '\n';
    out << "violations=" << failures << '\n';
}

struct ReduceArgs {
    std::string file, construction = "small", out_path;
    std::size_t groups = 2;
    bool verify = false, post_compose = false;
};

void do_reduce(const ReduceArgs& a, std::size_t budget, std::ostream& out) {
    auto inst = io::load_ov(a.file);
    reductions::ReductionOutput r;
    bool swapped = false;
    if (a.construction == "small") {
        if (inst.A.size() < inst.B.size()) {
            std::swap(inst.A, inst.B); // orthogonality is symmetric
            swapped = true;
        }
        r = reductions::small_lcs_reduction(inst);
    } else if (a.construction == "or") {
        if (a.groups == 0 || a.groups > inst.A.size())
            throw InfeasibleError("--groups must lie in [1, |A|]");
        std::vector<reductions::OVInstance> parts(a.groups);
        for (std::size_t g = 0; g < a.groups; ++g) {
            parts[g].D = inst.D;
            parts[g].B = inst.B;
            const std::size_t lo = g * inst.A.size() / a.groups, hi = (g + 1) * inst.A.size() / a.groups;
            parts[g].A.assign(inst.A.begin() + lo, inst.A.begin() + hi);
        }
        r = reductions::or_composition(parts);
    } else if (a.construction == "large") {
        reductions::LargeOptions opt;
        opt.post_compose = a.post_compose;
        r = reductions::large_lcs_reduction(inst, opt);
    } else {
        throw CLI::ValidationError("--construction", "expected small, or, large");
    }
    if (!a.out_path.empty()) io::save_instance(a.out_path, r.x, r.y, io::preferred_encoding(r.x, r.y));
    out << "construction=" << r.provenance << "\nrho=" << r.rho << "\nlen_x=" << r.x.size()
        << "\nlen_y=" << r.y.size() << '\n';
    if (swapped) out << "swapped=1\n";
    for (const auto& [k, v] : r.params) out << "param." << k << '=' << v << '\n';
    if (!a.verify) return;

    const auto truth = reductions::ov_brute_force(inst);
    std::size_t L;
    const std::size_t cells = (r.x.size() + 1) * (r.y.size() + 1);
    if (cells <= budget)
        L = lcs_length_dp(r.x, r.y);
    else if (binary_applicable(r.x, r.y))
        L = binfast::lcs_binary_fast(r.x, r.y).length; // dp beyond the budget; the binary algorithm is exact
    else
        throw SizeGuardError(cells, budget);
    out << "L=" << L << "\northogonal_pair=" << (truth.found ? "yes" : "no") << '\n';
    if (truth.witness) out << "witness=" << truth.witness->first << ',' << truth.witness->second << '\n';
    if ((L >= r.rho) == truth.found) {
        out << "threshold matches brute force\n";
    } else {
        out << "threshold does not match brute force\n";
        throw Mismatch{};
    }
}

void print_classification(const settings::ParameterSetting& s, bool as_json, std::ostream& out) {
    const auto rep = settings::validate_setting(s);
    if (as_json) {
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"id", r.id},
                            {"text", r.text},
                            {"lhs", settings::to_string(r.lhs)},
                            {"rhs", settings::to_string(r.rhs)},
                            {"equality", r.equality},
                            {"holds", r.holds}});
        json doc{{"setting", settings::to_string(s)}, {"nontrivial", rep.nontrivial}, {"rows", rows}};
        if (rep.exponent) doc["exponent"] = settings::to_string(*rep.exponent);
        out << doc.dump(2) << '\n';
        return;
    }
    if (rep.nontrivial) {
        out << "non-trivial, exponent " << settings::to_string(*rep.exponent) << '\n';
        return;
    }
    out << "trivial\n";
    for (const auto& r : rep.violated)
        out << "violated " << r.id << ": " << r.text << " (" << settings::to_string(r.lhs)
            << (r.equality ? " vs " : " > ") << settings::to_string(r.rhs) << ")\n";
}

struct SynthArgs {
    std::string alpha, out_path;
    std::optional<std::uint64_t> sigma;
    std::uint64_t n = 0;
    double gamma = 8;
    bool check = false;
};

void do_synth(const SynthArgs& a, std::size_t budget, std::ostream& out, std::ostream& err) {
    const auto s = settings::parse_setting(a.alpha, a.sigma);
    if (!settings::hostable(s)) {
        const auto rep = settings::validate_setting(s);
        throw InfeasibleError(rep.nontrivial ? "setting is non-trivial but its alphabet is too small to host"
                                             : "setting is trivial");
    }
    const auto pad = settings::synthesize_instance(s, a.n);
    const auto t = settings::targets(s, a.n);
    std::vector<std::pair<std::string, std::string>> summary{{"construction", pad.construction},
                                                             {"known_L", std::to_string(pad.known_L)}};
    for (auto p : settings::kAllParams)
        summary.emplace_back("target." + std::string(settings::name(p)), std::to_string(t.get(p)));
    emit_instance(pad.x, pad.y, summary, a.out_path, out, err);
    if (!a.check) return;

    std::ostream& info = a.out_path.empty() ? err : out;
    const auto prof = profile(pad.x, pad.y, budget);
    const std::uint64_t measured[] = {prof.n, prof.m, prof.L, prof.delta, prof.Delta, prof.sigma, prof.M, prof.d};
    bool ok = prof.L == pad.known_L;
    for (std::size_t i = 0; i < std::size(settings::kAllParams); ++i) {
        const double tgt = static_cast<double>(t.get(settings::kAllParams[i]));
        const double got = static_cast<double>(std::max<std::uint64_t>(measured[i], 1));
        const double ratio = got / std::max(tgt, 1.0);
        const bool in = ratio <= a.gamma && ratio >= 1 / a.gamma;
        ok = ok && in;
        info << "measured." << settings::name(settings::kAllParams[i]) << '=' << measured[i] << " ratio=" << fmt(ratio)
             << (in ? "" : " OUTSIDE") << '\n';
    }
    info << (ok ? "within gamma" : "outside gamma") << '\n';
    if (!ok) throw Mismatch{};
}

struct BenchArgs {
    std::string dir, algos;
    bool as_json = false;
};

void do_bench(const BenchArgs& a, std::size_t budget, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(a.dir)) throw CLI::ValidationError("DIR", "not a directory: " + a.dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(a.dir))
        if (e.is_regular_file() && e.path().filename().string().front() != '.') files.push_back(e.path());
    std::sort(files.begin(), files.end());

    std::vector<algo::Algorithm> algos;
    if (a.algos.empty()) {
        algos.assign(std::begin(algo::kAllAlgorithms), std::end(algo::kAllAlgorithms));
    } else {
        std::stringstream ss(a.algos);
        for (std::string tok; std::getline(ss, tok, ',');) {
            auto p = algo::parse_algorithm(tok);
            if (!p) throw CLI::ValidationError("--algos", "unknown algorithm '" + tok + "'");
            algos.push_back(*p);
        }
    }

    json rows = json::array();
    bool consistent = true;
    if (!a.as_json)
        out << std::left << std::setw(28) << "instance" << std::setw(18) << "algorithm" << std::setw(10) << "L"
            << std::setw(14) << "ops" << "ms\n";
    for (const auto& f : files) {
        const auto inst = io::load_instance(f.string());
        const bool binary = binary_applicable(inst.x, inst.y);
        const bool fits = (inst.x.size() + 1) * (inst.y.size() + 1) <= budget;
        std::optional<std::size_t> agreed;
        for (auto al : algos) {
            const bool skip = (al == algo::Algorithm::binary_fast && !binary) ||
                              ((al == algo::Algorithm::dp || al == algo::Algorithm::sparse_dominant) && !fits);
            json row{{"instance", f.filename().string()}, {"algorithm", std::string(algo::name(al))}};
            if (skip) {
                row["skipped"] = true;
            } else {
                const auto t0 = std::chrono::steady_clock::now();
                const auto r = algo::run(al, inst.x, inst.y);
                const auto t1 = std::chrono::steady_clock::now();
                row["L"] = r.length;
                row["ops"] = r.ops;
                row["ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
                if (agreed && *agreed != r.length) {
                    consistent = false;
                    err << "L disagreement on " << f.filename().string() << ": " << algo::name(al) << " gives "
                        << r.length << ", expected " << *agreed << '\n';
                }
                if (!agreed) agreed = r.length;
            }
            if (!a.as_json) {
                out << std::left << std::setw(28) << f.filename().string() << std::setw(18) << algo::name(al);
                if (skip)
                    out << "n/a\n";
                else
                    out << std::setw(10) << row["L"].get<std::size_t>() << std::setw(14)
                        << row["ops"].get<std::uint64_t>() << fmt(row["ms"].get<double>()) << '\n';
            }
            rows.push_back(std::move(row));
        }
    }
    if (a.as_json) out << json{{"rows", rows}, {"consistent", consistent}}.dump(2) << '\n';
    if (!consistent) throw Mismatch{};
}

// --- gen ---

struct GenArgs {
    std::string out_path, in_path;
    std::uint64_t seed = 1, n = 16, m = 16, sigma = 2;
    std::uint64_t R = 1, S = 1, alpha = 0, beta = 0, beta2 = 0, t = 2, tp = 1, ell = 1, mu = 1, nu = 1;
    std::uint64_t A = 4, B = 4, D = 4;
    double p = 0.5;
    bool binary = false, assume_shift = false;
    std::string setting, param;
    std::optional<std::uint64_t> fixed_sigma;
};

Text random_text(std::mt19937_64& rng, std::uint64_t len, std::uint64_t sigma) {
    std::uniform_int_distribution<Symbol> dist(0, static_cast<Symbol>(sigma - 1));
    Text t(len);
    for (auto& s : t) s = dist(rng);
    return t;
}

io::Instance source(const GenArgs& g) {
    if (g.in_path.empty()) throw CLI::ValidationError("--in", "this generator needs a source instance");
    return io::load_instance(g.in_path);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parameterized LCS toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    std::size_t max_cells = kDefaultCellBudget;
    app.add_option("--max-cells", max_cells, "DP cell budget for table-based computations")->capture_default_str();

    LcsArgs lcs_args;
    auto* lcs_cmd = app.add_subcommand("lcs", "Compute the LCS length");
    lcs_cmd->add_option("file", lcs_args.file, "Instance file")->required();
    lcs_cmd->add_option("--algo", lcs_args.algo, "dp, hunt-szymanski, band-diff, sparse-dominant, binary-fast or auto")
        ->capture_default_str();
    lcs_cmd->add_flag("--stats", lcs_args.stats, "Also print the algorithm and its operation counter");

    std::string file;
    bool as_json = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Print the parameter profile");
    analyze_cmd->add_option("file", file, "Instance file")->required();
    analyze_cmd->add_flag("--json", as_json, "Emit JSON");

    auto* audit_cmd = app.add_subcommand("audit", "Check the parameter relations");
    audit_cmd->add_option("file", file, "Instance file")->required();
    audit_cmd->add_flag("--json", as_json, "Emit JSON");

    ReduceArgs red;
    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce an orthogonal-vectors instance to LCS");
    reduce_cmd->add_option("file", red.file, "OV file")->required();
    reduce_cmd->add_option("--construction", red.construction, "small, or, large")->capture_default_str();
    reduce_cmd->add_option("--groups", red.groups, "Number of A groups for the or construction")->capture_default_str();
    reduce_cmd->add_flag("--post-compose", red.post_compose, "Wrap the large construction to shrink d");
    reduce_cmd->add_flag("--verify", red.verify, "Compare the threshold test against brute force");
    reduce_cmd->add_option("--out", red.out_path, "Write the LCS instance here");

    std::string alpha;
    std::optional<std::uint64_t> sigma;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a parameter setting");
    classify_cmd->add_option("--alpha", alpha, "m=..,L=..,delta=..,Delta=..,Sigma=..,d=..,M=..")->required();
    classify_cmd->add_option("--sigma", sigma, "Fixed alphabet size (requires Sigma=0)");
    classify_cmd->add_flag("--json", as_json, "Emit JSON");

    SynthArgs syn;
    auto* synth_cmd = app.add_subcommand("synth", "Synthesize an instance for a parameter setting");
    synth_cmd->add_option("--alpha", syn.alpha, "Parameter setting")->required();
    synth_cmd->add_option("--sigma", syn.sigma, "Fixed alphabet size (requires Sigma=0)");
    synth_cmd->add_option("--n", syn.n, "Target length of x")->required()->check(CLI::PositiveNumber);
    synth_cmd->add_option("--gamma", syn.gamma, "Containment factor for --check")->capture_default_str()
        ->check(CLI::Range(1.0, 1e9));
    synth_cmd->add_flag("--check", syn.check, "Measure the instance and compare against the targets");
    synth_cmd->add_option("--out", syn.out_path, "Write the instance here");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time every algorithm on every instance of a directory");
    bench_cmd->add_option("dir", bench.dir, "Directory of instance files")->required();
    bench_cmd->add_option("--algos", bench.algos, "Comma-separated subset of algorithms");
    bench_cmd->add_flag("--json", bench.as_json, "Emit JSON");

    GenArgs g;
    auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
    gen_cmd->require_subcommand(1);
    gen_cmd->fallthrough();
    auto out_opt = [&](CLI::App* c) { c->add_option("--out", g.out_path, "Write the output here"); };
    auto in_opt = [&](CLI::App* c) { c->add_option("--in", g.in_path, "Source instance")->required(); };

    auto* gen_random = gen_cmd->add_subcommand("random", "Uniform random pair");
    gen_random->add_option("--n", g.n, "Length of x")->capture_default_str();
    gen_random->add_option("--m", g.m, "Length of y")->capture_default_str();
    gen_random->add_option("--sigma", g.sigma, "Alphabet size")->capture_default_str()->check(CLI::PositiveNumber);
    gen_random->add_option("--seed", g.seed, "RNG seed")->capture_default_str();
    out_opt(gen_random);

    auto* gen_ov = gen_cmd->add_subcommand("ov", "Random orthogonal-vectors instance");
    gen_ov->add_option("--A", g.A, "|A|")->capture_default_str();
    gen_ov->add_option("--B", g.B, "|B|")->capture_default_str();
    gen_ov->add_option("--D", g.D, "Dimension")->capture_default_str()->check(CLI::PositiveNumber);
    gen_ov->add_option("--p", g.p, "Probability of a one")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    gen_ov->add_option("--seed", g.seed, "RNG seed")->capture_default_str();
    out_opt(gen_ov);

    auto* gen_dom = gen_cmd->add_subcommand("dom-pairs", "Binary strings with many dominant pairs");
    gen_dom->add_option("--R", g.R)->capture_default_str();
    gen_dom->add_option("--S", g.S)->capture_default_str();
    gen_dom->add_option("--alpha", g.alpha)->capture_default_str();
    gen_dom->add_option("--beta", g.beta)->capture_default_str();
    gen_dom->add_option("--beta2", g.beta2)->capture_default_str();
    out_opt(gen_dom);

    auto* gen_dom_large = gen_cmd->add_subcommand("dom-pairs-large", "Dominant-pair strings over t symbols");
    gen_dom_large->add_option("--t", g.t)->capture_default_str();
    gen_dom_large->add_option("--tp", g.tp)->capture_default_str();
    gen_dom_large->add_option("--R", g.R)->capture_default_str();
    gen_dom_large->add_option("--S", g.S)->capture_default_str();
    out_opt(gen_dom_large);

    auto* gen_reduce_dom = gen_cmd->add_subcommand("reduce-dom", "Shrink the dominant pairs of an instance");
    in_opt(gen_reduce_dom);
    gen_reduce_dom->add_option("--ell", g.ell)->capture_default_str();
    gen_reduce_dom->add_flag("--binary", g.binary, "Use the binary variant instead of a fresh symbol");
    out_opt(gen_reduce_dom);

    auto* gen_delta = gen_cmd->add_subcommand("delta-pad", "Pad with 0/1 blocks to raise delta");
    in_opt(gen_delta);
    gen_delta->add_option("--mu", g.mu)->capture_default_str();
    gen_delta->add_option("--nu", g.nu)->capture_default_str();
    out_opt(gen_delta);

    auto* gen_bbb1 = gen_cmd->add_subcommand("bbb1", "Prefix dominant-pair strings, first variant");
    in_opt(gen_bbb1);
    gen_bbb1->add_option("--alpha", g.alpha)->capture_default_str();
    gen_bbb1->add_option("--beta", g.beta)->capture_default_str();
    gen_bbb1->add_option("--R", g.R)->capture_default_str();
    gen_bbb1->add_option("--S", g.S)->capture_default_str();
    out_opt(gen_bbb1);

    auto* gen_bbb2 = gen_cmd->add_subcommand("bbb2", "Prefix dominant-pair strings, second variant");
    in_opt(gen_bbb2);
    gen_bbb2->add_option("--R", g.R)->capture_default_str();
    gen_bbb2->add_option("--S", g.S)->capture_default_str();
    gen_bbb2->add_option("--ell", g.ell)->capture_default_str();
    gen_bbb2->add_option("--beta", g.beta)->capture_default_str();
    gen_bbb2->add_flag("--assume-shift", g.assume_shift, "Vouch that L(x, 0^beta y) = L(x, y)");
    out_opt(gen_bbb2);

    auto* gen_pad = gen_cmd->add_subcommand("pad", "Padding that realizes one parameter of a setting");
    gen_pad->add_option("--alpha", g.setting, "Parameter setting")->required();
    gen_pad->add_option("--sigma", g.fixed_sigma, "Fixed alphabet size");
    gen_pad->add_option("--param", g.param, "n, m, L, delta, Delta, Sigma, M or d")->required();
    gen_pad->add_option("--n", g.n, "Target length of x")->capture_default_str()->check(CLI::PositiveNumber);
    out_opt(gen_pad);

    try {
        app.parse(argc, argv);

        if (lcs_cmd->parsed()) {
            do_lcs(lcs_args, max_cells, out);
        } else if (analyze_cmd->parsed()) {
            do_analyze(file, as_json, max_cells, out);
        } else if (audit_cmd->parsed()) {
            do_audit(file, as_json, max_cells, out);
        } else if (reduce_cmd->parsed()) {
            do_reduce(red, max_cells, out);
        } else if (classify_cmd->parsed()) {
            print_classification(settings::parse_setting(alpha, sigma), as_json, out);
        } else if (synth_cmd->parsed()) {
            do_synth(syn, max_cells, out, err);
        } else if (bench_cmd->parsed()) {
            do_bench(bench, max_cells, out, err);
        } else if (gen_random->parsed()) {
            std::mt19937_64 rng(g.seed);
            const auto x = random_text(rng, g.n, g.sigma);
            const auto y = random_text(rng, g.m, g.sigma);
            emit_instance(x, y, {{"len_x", std::to_string(x.size())}, {"len_y", std::to_string(y.size())}},
                          g.out_path, out, err);
        } else if (gen_ov->parsed()) {
            const auto inst = reductions::random_ov_instance(g.seed, g.A, g.B, g.D, g.p);
            if (g.out_path.empty()) {
                io::write_ov(out, inst);
            } else {
                std::ofstream f(g.out_path);
                if (!f) throw ParseError(0, 0, "cannot open " + g.out_path + " for writing");
                io::write_ov(f, inst);
            }
        } else if (gen_dom->parsed()) {
            emit_gadget(gadgets::dom_pair_strings(g.R, g.S, g.alpha, g.beta, g.beta2), g.out_path, out, err);
        } else if (gen_dom_large->parsed()) {
            emit_gadget(gadgets::dom_pair_strings_large(g.t, g.tp, g.R, g.S), g.out_path, out, err);
        } else if (gen_reduce_dom->parsed()) {
            const auto s = source(g);
            emit_gadget(gadgets::reduce_dominant_pairs(
                            s.x, s.y, g.ell,
                            g.binary ? gadgets::ReductionMode::binary : gadgets::ReductionMode::fresh_symbol),
                        g.out_path, out, err);
        } else if (gen_delta->parsed()) {
            const auto s = source(g);
            emit_gadget(gadgets::delta_pad(s.x, s.y, g.mu, g.nu), g.out_path, out, err);
        } else if (gen_bbb1->parsed()) {
            const auto s = source(g);
            emit_gadget(gadgets::bbb1(s.x, s.y, g.alpha, g.beta, g.R, g.S), g.out_path, out, err);
        } else if (gen_bbb2->parsed()) {
            const auto s = source(g);
            emit_gadget(gadgets::bbb2(s.x, s.y, g.R, g.S, g.ell, g.beta, g.assume_shift), g.out_path, out, err);
        } else if (gen_pad->parsed()) {
            const auto p = settings::parse_param(g.param);
            if (!p) throw CLI::ValidationError("--param", "unknown parameter '" + g.param + "'");
            const auto pad = settings::pad_parameter(*p, settings::parse_setting(g.setting, g.fixed_sigma), g.n);
            emit_instance(pad.x, pad.y,
                          {{"construction", pad.construction}, {"known_L", std::to_string(pad.known_L)}},
                          g.out_path, out, err);
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::Error& e) {
        app.exit(e, out, err);
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const SizeGuardError& e) {
        err << e.what() << '\n';
        return kSizeGuard;
    } catch (const Mismatch&) {
        return kMismatch;
    } catch (const std::invalid_argument& e) {
        // malformed settings and symbols outside the codec
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace lcsz::cli
