#include <doctest.h>

#include <random>

#include "lcsz/binary_fast.hpp"
#include "lcsz/core.hpp"
#include "lcsz/errors.hpp"
#include "lcsz/reductions.hpp"
#include "support.hpp"

using namespace lcsz;
using namespace lcsz::reductions;
using lcsz::testing::lcs_plain;

namespace {

OVInstance ov(std::size_t D, std::vector<BoolVec> A, std::vector<BoolVec> B) { return OVInstance{D, std::move(A), std::move(B)}; }

bool orthogonal(const BoolVec& a, const BoolVec& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] && b[k]) return false;
    return true;
}

} // namespace

TEST_SUITE("reductions") {

TEST_CASE("brute force OV") {
    const auto r = ov_brute_force(ov(2, {{1, 0}}, {{0, 1}}));
    CHECK(r.found);
    REQUIRE(r.witness);
    CHECK(r.witness->first == 0);
    CHECK(r.witness->second == 0);
    CHECK_FALSE(ov_brute_force(ov(2, {{1, 1}}, {{1, 0}, {0, 1}})).found);
}

TEST_CASE("validation rejects ragged or non-Boolean vectors") {
    CHECK_THROWS_AS(ov(2, {{1}}, {{0, 1}}).validate(), InfeasibleError);
    CHECK_THROWS_AS(ov(2, {{1, 2}}, {{0, 1}}).validate(), InfeasibleError);
}

TEST_CASE("random instances are reproducible") {
    const auto a = random_ov_instance(5, 3, 4, 6), b = random_ov_instance(5, 3, 4, 6);
    CHECK(a.A == b.A);
    CHECK(a.B == b.B);
    CHECK(a.A.size() == 3);
    CHECK(a.B.size() == 4);
}

TEST_CASE("inner and normalized gadgets separate orthogonal pairs") {
    for (std::size_t D = 1; D <= 3; ++D) {
        std::vector<BoolVec> all;
        for (std::uint64_t c = 0; c < (1u << D); ++c) {
            BoolVec v(D);
            for (std::size_t k = 0; k < D; ++k) v[k] = (c >> k) & 1u;
            all.push_back(v);
        }
        const auto inst = ov(D, all, all);
        for (const auto& f : {inner_vector_gadgets(inst), normalized_vector_gadgets(inst)}) {
            CHECK(f.rho0 > f.rho1);
            for (std::size_t i = 0; i < all.size(); ++i)
                for (std::size_t j = 0; j < all.size(); ++j) {
                    CHECK(f.xs[i].size() == f.ell_x);
                    CHECK(f.ys[j].size() == f.ell_y);
                    const auto L = lcs_plain(f.xs[i], f.ys[j]);
                    if (orthogonal(all[i], all[j]))
                        CHECK(L >= f.rho0);
                    else
                        CHECK(L == f.rho1);
                }
        }
        const auto nf = normalized_vector_gadgets(inst);
        CHECK(2 * nf.rho1 > nf.ell_y);
    }
}

TEST_CASE("small reduction examples") {
    const auto yes = small_lcs_reduction(ov(2, {{1, 0}, {1, 1}}, {{0, 1}}));
    CHECK(lcs_plain(yes.x, yes.y) >= yes.rho);
    const auto no = small_lcs_reduction(ov(2, {{1, 1}}, {{1, 1}}));
    CHECK(lcs_plain(no.x, no.y) < no.rho);
    CHECK_THROWS_AS(small_lcs_reduction(ov(1, {{1}}, {{0}, {1}})), InfeasibleError);
}

TEST_CASE("small reduction tolerates a zero prefix on y") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto inst = random_ov_instance(seed, 3, 2, 3);
        const auto r = small_lcs_reduction(inst);
        const auto L = lcs_plain(r.x, r.y);
        const auto A = r.params.at("A");
        for (auto beta : {std::uint64_t{0}, std::uint64_t{1}, r.params.at("gamma"), A * r.params.at("gamma_prime")})
            CHECK(lcs_plain(r.x, cat({repeat(0, beta), r.y})) == L);
    }
}

TEST_CASE("large reduction examples") {
    const auto no = large_lcs_reduction(ov(2, {{1, 1}}, {{1, 1}}));
    const auto L = binfast::lcs_binary_fast(no.x, no.y).length;
    CHECK(L == no.rho - (no.params.at("rho0") - no.params.at("rho1")));
    const auto yes = large_lcs_reduction(ov(2, {{1, 0}}, {{0, 1}}));
    CHECK(binfast::lcs_binary_fast(yes.x, yes.y).length >= yes.rho);
}

TEST_CASE("large reduction duplicates a B vector until |A| divides |B|") {
    const auto r = large_lcs_reduction(random_ov_instance(3, 2, 3, 2));
    CHECK(r.params.at("B") == 4);
    LargeOptions strict;
    strict.auto_duplicate = false;
    CHECK_THROWS_AS(large_lcs_reduction(random_ov_instance(3, 2, 3, 2), strict), InfeasibleError);
}

TEST_CASE("post-composition shifts the threshold by ell + 2k") {
    const auto inst = random_ov_instance(9, 2, 2, 2);
    LargeOptions opt;
    opt.post_compose = true;
    const auto plain = large_lcs_reduction(inst);
    const auto post = large_lcs_reduction(inst, opt);
    CHECK(post.rho == plain.rho + post.params.at("post_ell") + 2 * post.params.at("post_k"));
    CHECK(binfast::lcs_binary_fast(post.x, post.y).length ==
          binfast::lcs_binary_fast(plain.x, plain.y).length + post.params.at("post_ell") + 2 * post.params.at("post_k"));
}

TEST_CASE("or-composition agrees with brute force") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto src = random_ov_instance(100 + seed, 4, 2, 3);
        std::vector<OVInstance> groups(2);
        for (int g = 0; g < 2; ++g) {
            groups[g].D = src.D;
            groups[g].B = src.B;
            groups[g].A.assign(src.A.begin() + 2 * g, src.A.begin() + 2 * g + 2);
        }
        const auto r = or_composition(groups);
        CHECK((lcs_plain(r.x, r.y) >= r.rho) == ov_brute_force(src).found);
    }
}

TEST_CASE("G wrapper and default parameters") {
    CHECK(gadget_G(from_ascii("0"), 1, 1, 1) == from_ascii("010101"));
    const auto g = default_g_params(2, 2);
    CHECK(g.g3 == 4);
    CHECK(g.g2 == 32);
    CHECK(g.g1 == 192);
}

TEST_CASE("alignment values: trivial shapes") {
    const Text a = from_ascii("0110"), b = from_ascii("101");
    CHECK(alignment_value_oracle({a, a}, {b}, AlignmentMode::one_two) == b.size());
    CHECK(alignment_value_oracle({a}, {b}, AlignmentMode::one_two) == lcs_plain(a, b));
    CHECK(alignment_value_enumerate({a}, {b}, AlignmentMode::multi) == lcs_plain(a, b));
}

TEST_CASE("alignment oracle equals enumeration") {
    std::mt19937_64 rng(51);
    for (int it = 0; it < 40; ++it) {
        const std::size_t Q = 1 + rng() % 3, P = Q + rng() % 3;
        std::vector<Text> xs, ys;
        for (std::size_t i = 0; i < P; ++i) xs.push_back(lcsz::testing::biased_binary(rng, 5, 0.5));
        for (std::size_t j = 0; j < Q; ++j) ys.push_back(lcsz::testing::biased_binary(rng, 4, 0.5));
        for (auto mode : {AlignmentMode::one_two, AlignmentMode::multi})
            CHECK(alignment_value_oracle(xs, ys, mode) == alignment_value_enumerate(xs, ys, mode));
    }
}

TEST_CASE("alignment oracle rejects bad shapes") {
    const Text a = from_ascii("01");
    CHECK_THROWS_AS(alignment_value_oracle({a}, {a, a}, AlignmentMode::multi), InfeasibleError);
    CHECK_THROWS_AS(alignment_value_oracle({a, from_ascii("0")}, {a}, AlignmentMode::multi), InfeasibleError);
    CHECK_THROWS_AS(alignment_value_oracle(std::vector<Text>(101, a), {a}, AlignmentMode::multi), SizeGuardError);
}
}
