#include <doctest.h>

#include <random>

#include "lcsz/binary_fast.hpp"
#include "lcsz/core.hpp"
#include "lcsz/errors.hpp"
#include "support.hpp"

using namespace lcsz;
using namespace lcsz::binfast;
using lcsz::testing::biased_binary;
using lcsz::testing::lcs_plain;

TEST_SUITE("binary-fast") {

TEST_CASE("prepare flips when ones are the minority of x and appends a one to y") {
    const auto p = prepare(from_ascii("010"), from_ascii("01"));
    CHECK(p.flipped);
    CHECK(p.x == from_ascii("1011"));
    CHECK(p.y == from_ascii("101"));
    CHECK_THROWS_AS(prepare(from_ascii("012"), from_ascii("1")), InfeasibleError);
}

TEST_CASE("next-index queries") {
    const NextIndex idx(from_ascii("01001"));
    CHECK(idx.next(0, 1, 0) == 1);
    CHECK(idx.next(0, 2, 1) == 4);
    CHECK(idx.next(1, 3, 0) == kInf);
    CHECK(idx.next(1, 0, 3) == 3);
    CHECK(idx.rank(0, 5) == 3);
    CHECK(idx.rank(1, 2) == 1);
    CHECK(idx.next_any(4) == 5);
    CHECK(idx.next_any(5) == kInf);
}

TEST_CASE("next-index agrees with a linear scan") {
    std::mt19937_64 rng(31);
    const auto x = biased_binary(rng, 200, 0.4);
    const NextIndex idx(x);
    for (int it = 0; it < 2000; ++it) {
        const Symbol s = rng() % 2;
        const Pos t = static_cast<Pos>(rng() % 6), i = static_cast<Pos>(rng() % 201);
        Pos want = i, seen = 0;
        if (t > 0) {
            want = kInf;
            for (Pos p = i + 1; p <= 200; ++p)
                if (x[p - 1] == s && ++seen == t) {
                    want = p;
                    break;
                }
        }
        CHECK(idx.next(s, t, i) == want);
    }
}

TEST_CASE("range minimum returns the leftmost argmin") {
    std::mt19937_64 rng(32);
    std::vector<Pos> a(97);
    for (auto& v : a) v = static_cast<Pos>(rng() % 10);
    const RangeMin rmq(a);
    for (std::size_t lo = 0; lo < a.size(); ++lo)
        for (std::size_t hi = lo + 1; hi <= a.size(); hi += 7) {
            std::size_t best = lo;
            for (std::size_t k = lo; k < hi; ++k)
                if (a[k] < a[best]) best = k;
            CHECK(a[rmq.argmin(lo, hi)] == a[best]);
        }
}

TEST_CASE("zero runs") {
    CHECK(zero_runs(from_ascii("0010111")) == std::vector<Pos>{2, 1, 0, 0});
    CHECK(zero_runs(from_ascii("1")) == std::vector<Pos>{0});
}

TEST_CASE("disjoint supports give zero") { CHECK(lcs_binary_fast(from_ascii("0000"), from_ascii("1111")).length == 0); }

TEST_CASE("both RMQ variants match dp") {
    std::mt19937_64 rng(33);
    for (int it = 0; it < 300; ++it) {
        const auto x = biased_binary(rng, rng() % 80, (rng() % 10) / 10.0);
        const auto y = biased_binary(rng, rng() % 80, (rng() % 10) / 10.0);
        const auto want = lcs_plain(x, y);
        CHECK(lcs_binary_fast(x, y, RmqKind::sliding_window).length == want);
        CHECK(lcs_binary_fast(x, y, RmqKind::sparse_table).length == want);
    }
}

TEST_CASE("sliding-window and sparse-table RMQ build the same threshold table") {
    std::mt19937_64 rng(34);
    for (int it = 0; it < 40; ++it) {
        auto x = biased_binary(rng, 30 + rng() % 20, 0.6);
        auto y = biased_binary(rng, 3 + rng() % 10, 0.5);
        y.push_back(1);
        const auto p = prepare(x, y);
        const auto t1 = threshold_table(p.x, p.y, 8, RmqKind::sliding_window);
        const auto t2 = threshold_table(p.x, p.y, 8, RmqKind::sparse_table);
        CHECK(t1 == t2);
    }
}
}
