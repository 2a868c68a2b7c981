#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "pqwf/dwt.hpp"
#include "pqwf/errors.hpp"
#include "pqwf/rng.hpp"

using namespace pqwf;

namespace {

std::vector<double> random_signal(std::size_t n, std::uint64_t seed, double scale = 10.0) {
    RngStream rng(seed);
    std::vector<double> x(n);
    for (double& v : x) v = rng.uniform(-scale, scale);
    return x;
}

double energy(const std::vector<double>& x) {
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum;
}

double total_energy(const DecompositionResult& d) {
    double sum = energy(d.approx);
    for (const auto& band : d.details) sum += energy(band);
    return sum;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("db4 lowpass sums to sqrt(2)") {
    const auto f = db4_filters();
    double sum = 0.0;
    for (double h : f.lowpass) sum += h;
    CHECK(std::abs(sum - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("db4 orthonormal shifts") {
    const auto f = db4_filters();
    for (int m = 0; m <= 3; ++m) {
        double sum = 0.0;
        for (int k = 0; k + 2 * m < 8; ++k)
            sum += f.lowpass[static_cast<std::size_t>(k)] *
                   f.lowpass[static_cast<std::size_t>(k + 2 * m)];
        CHECK(std::abs(sum - (m == 0 ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("db4 quadrature mirror relation") {
    const auto f = db4_filters();
    for (int k = 0; k < 8; ++k) {
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        CHECK(f.highpass[static_cast<std::size_t>(k)] ==
              sign * f.lowpass[static_cast<std::size_t>(7 - k)]);
    }
}

TEST_CASE("db4 has four vanishing moments") {
    const auto f = db4_filters();
    for (int p = 0; p <= 3; ++p) {
        double sum = 0.0;
        for (int k = 0; k < 8; ++k)
            sum += std::pow(k, p) * f.highpass[static_cast<std::size_t>(k)];
        CHECK(std::abs(sum) < 1e-10);
    }
}

TEST_CASE("dwt_level on a constant signal") {
    const auto f = db4_filters();
    const std::vector<double> x(64, 3.25);
    const auto [approx, detail] = dwt_level(x, f);
    CHECK(approx.size() == 32);
    CHECK(detail.size() == 32);
    for (double d : detail) CHECK(std::abs(d) < 1e-12);
    for (double a : approx) CHECK(std::abs(a - 3.25 * std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("dwt_level matches the defining sums on an impulse") {
    const auto f = db4_filters();
    std::vector<double> x(16, 0.0);
    x[0] = 1.0;
    const auto [approx, detail] = dwt_level(x, f);
    // independent brute-force evaluation of the periodized analysis sums
    for (std::size_t n = 0; n < 8; ++n) {
        double a = 0.0, d = 0.0;
        for (std::size_t k = 0; k < 8; ++k) {
            const double v = x[(2 * n + k) % 16];
            a += f.lowpass[k] * v;
            d += f.highpass[k] * v;
        }
        CHECK(approx[n] == doctest::Approx(a).epsilon(1e-15));
        CHECK(detail[n] == doctest::Approx(d).epsilon(1e-15));
    }
    // the impulse picks out circularly placed taps at even strides
    CHECK(detail[0] == f.highpass[0]);
    CHECK(detail[5] == f.highpass[6]);
    CHECK(detail[6] == f.highpass[4]);
    CHECK(detail[7] == f.highpass[2]);
}

TEST_CASE("dwt_level rejects odd-length input") {
    const auto f = db4_filters();
    const std::vector<double> x(15, 1.0);
    CHECK_THROWS_AS((void)dwt_level(x, f), ShapeError);
}

TEST_CASE("wavedec band lengths for a 640-sample record") {
    const auto f = db4_filters();
    const auto x = random_signal(640, 5);
    const auto d = wavedec(x, 3, f);
    REQUIRE(d.details.size() == 3);
    CHECK(d.details[0].size() == 320);
    CHECK(d.details[1].size() == 160);
    CHECK(d.details[2].size() == 80);
    CHECK(d.approx.size() == 80);
}

TEST_CASE("wavedec with one level equals dwt_level") {
    const auto f = db4_filters();
    const auto x = random_signal(128, 6);
    const auto d = wavedec(x, 1, f);
    const auto [approx, detail] = dwt_level(x, f);
    CHECK(max_abs_diff(d.approx, approx) == 0.0);
    CHECK(max_abs_diff(d.details[0], detail) == 0.0);
}

TEST_CASE("wavedec rejects lengths not divisible by 2^levels") {
    const auto f = db4_filters();
    CHECK_THROWS_AS((void)wavedec(random_signal(100, 7), 3, f), ShapeError);
    CHECK_THROWS_AS((void)wavedec(random_signal(64, 7), 0, f), ShapeError);
}

TEST_CASE("Parseval identity on random signals") {
    const auto f = db4_filters();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto x = random_signal(640, 100 + seed);
        const auto d = wavedec(x, 3, f);
        const double ex = energy(x);
        CHECK(std::abs(total_energy(d) - ex) <= 1e-9 * ex);
    }
}

TEST_CASE("perfect reconstruction") {
    const auto f = db4_filters();
    SUBCASE("single level on length 8") {
        const auto x = random_signal(8, 21);
        const auto d = wavedec(x, 1, f);
        CHECK(max_abs_diff(waverec(d, f), x) < 1e-12);
    }
    SUBCASE("three levels on length 640") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto x = random_signal(640, 300 + seed);
            const auto d = wavedec(x, 3, f);
            CHECK(max_abs_diff(waverec(d, f), x) < 1e-10);
        }
    }
    SUBCASE("any level count the length supports") {
        for (int levels = 1; levels <= 6; ++levels) {
            const auto x = random_signal(512, 400 + static_cast<std::uint64_t>(levels));
            const auto d = wavedec(x, levels, f);
            CHECK(max_abs_diff(waverec(d, f), x) < 1e-10);
        }
    }
}

TEST_CASE("waverec of all-zero coefficients is the zero signal") {
    const auto f = db4_filters();
    DecompositionResult d;
    d.levels = 2;
    d.details = {std::vector<double>(32, 0.0), std::vector<double>(16, 0.0)};
    d.approx = std::vector<double>(16, 0.0);
    for (double v : waverec(d, f)) CHECK(v == 0.0);
}

TEST_CASE("waverec rejects mismatched shapes") {
    const auto f = db4_filters();
    DecompositionResult d;
    d.levels = 2;
    d.details = {std::vector<double>(32, 0.0)};
    d.approx = std::vector<double>(16, 0.0);
    CHECK_THROWS_AS((void)waverec(d, f), ShapeError);

    DecompositionResult e;
    e.levels = 1;
    e.details = {std::vector<double>(32, 0.0)};
    e.approx = std::vector<double>(16, 0.0); // should be 32
    CHECK_THROWS_AS((void)waverec(e, f), ShapeError);
}

TEST_CASE("linearity of the transform") {
    const auto f = db4_filters();
    const auto x = random_signal(256, 31);
    const auto y = random_signal(256, 32);
    const double a = 2.5, b = -1.25;
    std::vector<double> combo(256);
    for (std::size_t i = 0; i < 256; ++i) combo[i] = a * x[i] + b * y[i];

    const auto dx = wavedec(x, 3, f);
    const auto dy = wavedec(y, 3, f);
    const auto dc = wavedec(combo, 3, f);
    for (std::size_t level = 0; level < 3; ++level) {
        for (std::size_t i = 0; i < dc.details[level].size(); ++i) {
            const double expected = a * dx.details[level][i] + b * dy.details[level][i];
            CHECK(std::abs(dc.details[level][i] - expected) < 1e-10);
        }
    }
    for (std::size_t i = 0; i < dc.approx.size(); ++i)
        CHECK(std::abs(dc.approx[i] - (a * dx.approx[i] + b * dy.approx[i])) < 1e-10);
}

TEST_CASE("interior detail coefficients annihilate a cubic") {
    const auto f = db4_filters();
    std::vector<double> x(640);
    for (std::size_t n = 0; n < 640; ++n) {
        const double t = (static_cast<double>(n) - 300.0) / 200.0;
        x[n] = t * t * t;
    }
    const auto d = wavedec(x, 3, f);
    // a level-j coefficient n reaches original samples 2^j*n .. 2^j*n + (2^j - 1)*7
    // and its support wraps once that range passes the end of the record
    const std::size_t interior_end[3] = {316, 154, 73};
    for (std::size_t level = 0; level < 3; ++level)
        for (std::size_t n = 0; n <= interior_end[level]; ++n)
            CHECK(std::abs(d.details[level][n]) < 1e-8);
}

TEST_CASE("circular shift by 2 shifts level-1 coefficients by 1") {
    const auto f = db4_filters();
    const auto x = random_signal(640, 77);
    std::vector<double> shifted(640);
    for (std::size_t n = 0; n < 640; ++n) shifted[n] = x[(n + 2) % 640];

    const auto d0 = wavedec(x, 1, f);
    const auto d1 = wavedec(shifted, 1, f);
    for (std::size_t n = 0; n < 320; ++n) {
        CHECK(d1.details[0][n] == doctest::Approx(d0.details[0][(n + 1) % 320]).epsilon(1e-14));
        CHECK(d1.approx[n] == doctest::Approx(d0.approx[(n + 1) % 320]).epsilon(1e-14));
    }
}
