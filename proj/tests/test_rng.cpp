#include <doctest.h>

#include <cmath>
#include <vector>

#include "pqwf/rng.hpp"

using pqwf::RngStream;

TEST_CASE("same seed gives identical streams") {
    RngStream a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("derived streams differ per key") {
    RngStream a = RngStream::derive(1, 2, 3);
    RngStream b = RngStream::derive(1, 2, 4);
    RngStream c = RngStream::derive(1, 3, 3);
    int same_ab = 0, same_ac = 0;
    for (int i = 0; i < 64; ++i) {
        const auto va = a.next_u64();
        same_ab += va == b.next_u64();
        same_ac += va == c.next_u64();
    }
    CHECK(same_ab == 0);
    CHECK(same_ac == 0);
}

TEST_CASE("uniform01 stays in [0,1) and is roughly uniform") {
    RngStream rng(7);
    double sum = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / 10000 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("uniform_index covers the full range without bias") {
    RngStream rng(11);
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 7000; ++i) ++counts[rng.uniform_index(7)];
    for (int c : counts) CHECK(c > 800);
}

TEST_CASE("normal deviates match first two moments") {
    RngStream rng(1234);
    double sum = 0.0, sq = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double v = rng.normal();
        sum += v;
        sq += v * v;
    }
    CHECK(sum / n == doctest::Approx(0.0).epsilon(0.02));
    CHECK(sq / n == doctest::Approx(1.0).epsilon(0.02));
}