#include <catch2/catch_amalgamated.hpp>

#include "dp/common.hpp"

using namespace dp;

TEST_CASE("rng streams are deterministic and purpose-separated") {
    Rng a(42, "weights");
    Rng b(42, "weights");
    Rng c(42, "noise");
    for (int i = 0; i < 100; ++i) {
        uint64_t va = a.next_u64();
        REQUIRE(va == b.next_u64());
        if (i == 0) REQUIRE(va != c.next_u64());
    }
}

TEST_CASE("uniform ints cover the whole range and stay inside it") {
    Rng rng(7);
    std::vector<int> counts(21, 0);
    for (int i = 0; i < 50000; ++i) {
        int64_t v = rng.next_int(20, 40);
        REQUIRE(v >= 20);
        REQUIRE(v <= 40);
        ++counts[size_t(v - 20)];
    }
    for (int k = 0; k < 21; ++k) REQUIRE(counts[size_t(k)] > 0);
}

TEST_CASE("next_double lies in [0,1)") {
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        double v = rng.next_double();
        REQUIRE(v >= 0.0);
        REQUIRE(v < 1.0);
    }
}

TEST_CASE("gaussian draws have roughly unit scale") {
    Rng rng(11, "gauss");
    double sum = 0, sq = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        double g = rng.next_gaussian();
        sum += g;
        sq += g * g;
    }
    double mean = sum / n;
    double var = sq / n - mean * mean;
    REQUIRE(std::abs(mean) < 0.05);
    REQUIRE(std::abs(var - 1.0) < 0.05);
}

TEST_CASE("hash64 mixes both arguments") {
    REQUIRE(hash64(1, 2) != hash64(2, 1));
    REQUIRE(hash64(1, 2) != hash64(1, 3));
    REQUIRE(hash64(0, 0) == hash64(0, 0));
}

TEST_CASE("shuffle is a permutation and seed-stable") {
    std::vector<int> v(100);
    std::iota(v.begin(), v.end(), 0);
    Rng rng(5, "shuffle");
    rng.shuffle(v);
    std::vector<int> w(100);
    std::iota(w.begin(), w.end(), 0);
    Rng rng2(5, "shuffle");
    rng2.shuffle(w);
    REQUIRE(v == w);
    std::sort(w.begin(), w.end());
    for (int i = 0; i < 100; ++i) REQUIRE(w[size_t(i)] == i);
}

TEST_CASE("digest reacts to every byte") {
    Digest a, b;
    a.update("hello");
    b.update("hellp");
    REQUIRE(a.value() != b.value());
    REQUIRE(a.hex().size() == 16);
}

TEST_CASE("errors carry their kind") {
    try {
        fail(ErrorKind::length, "too long");
        FAIL("unreachable");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::length);
        REQUIRE(std::string(e.what()) == "too long");
    }
}
