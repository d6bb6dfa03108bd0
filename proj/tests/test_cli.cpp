#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "lcsz/core.hpp"
#include "lcsz/io.hpp"
#include "lcsz/reductions.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(std::vector<std::string> args) {
    args.insert(args.begin(), "lcsz");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = lcsz::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("lcsz_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& body) const {
        const auto p = path / name;
        std::ofstream(p) << body;
        return p.string();
    }
};

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("lcs with binary-fast and auto") {
    TempDir t;
    const auto f = t.file("a.lcsz", "lcsz v1 sigma=2 enc=ascii\n0101100\n1101\n");
    const auto want = std::to_string(lcsz::lcs_length_dp(lcsz::from_ascii("0101100"), lcsz::from_ascii("1101")));
    auto r = call({"lcs", "--algo", "binary-fast", f});
    CHECK(r.code == 0);
    CHECK(r.out == want + "\n");
    r = call({"lcs", f, "--stats"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "algorithm="));
    for (const char* a : {"dp", "hunt-szymanski", "band-diff", "sparse-dominant"})
        CHECK(call({"lcs", "--algo", a, f}).out == want + "\n");
}

TEST_CASE("analyze emits one key per field, or JSON") {
    TempDir t;
    const auto f = t.file("a.lcsz", "lcsz v1 sigma=2 enc=ascii\n0101\n101\n");
    auto r = call({"analyze", f});
    CHECK(r.code == 0);
    CHECK(r.out == "n=4\nm=3\nL=3\ndelta=0\nDelta=1\nsigma=2\nM=6\nd=5\nswapped=0\n");
    r = call({"analyze", "--json", f});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["L"] == 3);
    CHECK(j["M"] == 6);
}

TEST_CASE("audit reports zero violations on a real instance") {
    TempDir t;
    const auto f = t.file("a.lcsz", "lcsz v1 sigma=3 enc=ascii\n0120210\n2101\n");
    const auto r = call({"audit", f});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "violations=0"));
    CHECK(contains(r.out, "ternary"));
}

TEST_CASE("classify") {
    auto r = call({"classify", "--alpha", "m=1,L=1,delta=0.5,Delta=1,Sigma=0,d=1.5,M=2", "--sigma", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "non-trivial, exponent 3/2\n");
    r = call({"classify", "--alpha", "m=1,L=1,delta=1,Delta=1,Sigma=0,d=2.5,M=2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "trivial"));
    CHECK(contains(r.out, "d.upper.L+m"));
    r = call({"classify", "--json", "--alpha", "m=1,L=1,delta=0.5,Delta=1,Sigma=0,d=1.5,M=2", "--sigma", "3"});
    CHECK(nlohmann::json::parse(r.out)["exponent"] == "3/2");
}

TEST_CASE("reduce --verify matches brute force for every construction") {
    TempDir t;
    const auto f = t.file("o.ov", "ov v1 D=3\n101\n011\n110\n\n010\n111\n");
    for (const char* c : {"small", "or", "large"}) {
        const auto r = call({"reduce", "--verify", "--construction", c, f});
        CHECK_MESSAGE(r.code == 0, c);
        CHECK(contains(r.out, "threshold matches brute force"));
    }
    const auto out = (t.path / "r.lcsz").string();
    const auto r = call({"reduce", f, "--out", out});
    CHECK(r.code == 0);
    const auto inst = lcsz::io::load_instance(out);
    CHECK(contains(r.out, "len_x=" + std::to_string(inst.x.size())));
}

TEST_CASE("reduce swaps A and B for the small construction when needed") {
    TempDir t;
    const auto f = t.file("o.ov", "ov v1 D=2\n10\n\n01\n11\n");
    const auto r = call({"reduce", "--verify", f});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "swapped=1"));
    CHECK(contains(r.out, "threshold matches brute force"));
}

TEST_CASE("gen is deterministic") {
    const auto a = call({"gen", "random", "--n", "30", "--m", "20", "--sigma", "4", "--seed", "9"});
    const auto b = call({"gen", "random", "--n", "30", "--m", "20", "--sigma", "4", "--seed", "9"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(call({"gen", "ov", "--A", "3", "--B", "2", "--D", "4", "--seed", "2"}).out ==
          call({"gen", "ov", "--A", "3", "--B", "2", "--D", "4", "--seed", "2"}).out);
}

TEST_CASE("gen gadgets report predictions that hold") {
    TempDir t;
    const auto out = (t.path / "g.lcsz").string();
    const auto r = call({"gen", "dom-pairs", "--R", "4", "--S", "5", "--out", out});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "predicted_L=14"));
    const auto inst = lcsz::io::load_instance(out);
    CHECK(lcsz::lcs_length_dp(inst.x, inst.y) == 14);
    const auto src = t.file("s.lcsz", "lcsz v1 sigma=1 enc=ascii\n1\n1\n");
    const auto d = call({"gen", "delta-pad", "--in", src, "--mu", "1", "--nu", "2"});
    CHECK(d.code == 0);
    CHECK(contains(d.err, "predicted_L=4"));
}

TEST_CASE("synth writes an instance and checks it") {
    TempDir t;
    const auto out = (t.path / "s.lcsz").string();
    const auto r = call({"synth", "--alpha", "m=1,L=1,delta=1,Delta=1,Sigma=0.5,d=2,M=2", "--n", "128", "--gamma",
                         "8", "--check", "--out", out});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "within gamma"));
    CHECK(fs::exists(out));
    const auto bad = call({"synth", "--alpha", "m=1,L=1,delta=1,Delta=1,Sigma=0,d=2.5,M=2", "--n", "128"});
    CHECK(bad.code == 3);
}

TEST_CASE("bench cross-checks every algorithm") {
    TempDir t;
    t.file("a.lcsz", "lcsz v1 sigma=2 enc=ascii\n0101100\n1101\n");
    t.file("b.lcsz", "lcsz v1 sigma=3 enc=ascii\n012012\n2101\n");
    const auto r = call({"bench", "--json", t.path.string()});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["consistent"] == true);
    CHECK(j["rows"].size() == 10);
}

TEST_CASE("exit codes") {
    TempDir t;
    CHECK(call({}).code == 1);
    CHECK(call({"nonsense"}).code == 1);
    CHECK(call({"lcs", "--algo", "nope", t.file("a.lcsz", "lcsz v1 sigma=2 enc=ascii\n01\n1\n")}).code == 1);
    CHECK(call({"lcs", t.file("b.lcsz", "lcsz v1 sigma=2 enc=ascii\n01\n")}).code == 2);
    CHECK(call({"classify", "--alpha", "m=1"}).code == 2);
    CHECK(call({"lcs", "--algo", "binary-fast", t.file("c.lcsz", "lcsz v1 sigma=3 enc=ascii\n012\n210\n")}).code ==
          3);
    CHECK(call({"lcs", "--algo", "dp", "--max-cells", "4", t.file("d.lcsz", "lcsz v1 sigma=2 enc=ascii\n0101\n101\n")})
              .code == 4);
    CHECK(call({"--help"}).code == 0);
}
}
