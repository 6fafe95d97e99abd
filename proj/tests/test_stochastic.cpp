#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ltikit/errors.hpp"
#include "ltikit/filters.hpp"
#include "ltikit/spectral.hpp"
#include "ltikit/stochastic.hpp"

using namespace ltikit;

namespace {

double mean(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double stddev(std::span<const double> x) {
    const double m = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return std::sqrt(s / static_cast<double>(x.size() - 1));
}

}  // namespace

TEST_CASE("Noise generation") {
    SUBCASE("deterministic per seed") {
        auto a = white_noise(NoiseSpec{17, Gaussian{0.0, 1.0}}, 1000);
        auto b = white_noise(NoiseSpec{17, Gaussian{0.0, 1.0}}, 1000);
        auto c = white_noise(NoiseSpec{18, Gaussian{0.0, 1.0}}, 1000);
        CHECK(a.values() == b.values());
        CHECK(a.values() != c.values());
    }

    SUBCASE("uniform moments") {
        auto u = white_noise(NoiseSpec{1, Uniform01{}}, 100000);
        CHECK(std::abs(mean(u.samples()) - 0.5) < 0.01);
        CHECK(*std::min_element(u.values().begin(), u.values().end()) >= 0.0);
        CHECK(*std::max_element(u.values().begin(), u.values().end()) < 1.0);
        CHECK(std::abs(stddev(u.samples()) - std::sqrt(1.0 / 12.0)) < 0.005);
    }

    SUBCASE("gaussian moments") {
        auto g = white_noise(NoiseSpec{2, Gaussian{0.0, 0.2}}, 100000);
        CHECK(std::abs(stddev(g.samples()) - 0.2) < 0.005);
        CHECK(std::abs(mean(g.samples())) < 0.005);
        auto h = white_noise(NoiseSpec{2, Gaussian{3.0, 2.0}}, 100000);
        CHECK(std::abs(mean(h.samples()) - 3.0) < 0.05);
    }

    SUBCASE("generator copies fork the stream") {
        NoiseGenerator g(5);
        g.standard_normal();
        NoiseGenerator copy = g;
        CHECK(g.standard_normal() == copy.standard_normal());
        CHECK(g.uniform01() == copy.uniform01());
    }

    CHECK(white_noise(NoiseSpec{}, 4, 50.0).sample_rate() == 50.0);
    CHECK_THROWS_AS(white_noise(NoiseSpec{0, Gaussian{0.0, 0.0}}, 4), ArgumentError);
    CHECK_THROWS_AS(white_noise(NoiseSpec{}, 0), ArgumentError);
}

TEST_CASE("Synthetic signals") {
    SUBCASE("no components, no noise") {
        auto s = synthetic_signal(100.0, 10, {}, std::nullopt);
        for (double v : s.values()) CHECK(v == 0.0);
    }

    SUBCASE("burst envelope") {
        const GaussianBurst b{2.0, 5.0, 0.5, 0.01};
        auto s = synthetic_signal(100.0, 100, std::span(&b, 1), std::nullopt);
        for (std::size_t k = 0; k < 100; ++k) {
            const double t = k / 100.0;
            const double want = 2.0 * std::sin(2.0 * std::numbers::pi * 5.0 * t) * std::exp(-(t - 0.5) * (t - 0.5) / 0.01);
            CHECK(s[k] == doctest::Approx(want).epsilon(1e-12));
        }
    }

    SUBCASE("multiscale test signal has peaks at 1, 20 and 90 Hz") {
        auto s = multiscale_test_signal(7);
        CHECK(s.size() == 4096);
        CHECK(s.sample_rate() == 1000.0);
        CHECK(s.values() == multiscale_test_signal(7).values());
        auto f = fft_pow2(s);
        std::vector<double> mag(2048);
        for (std::size_t k = 0; k < 2048; ++k) mag[k] = std::abs(f.bins[k]);
        std::vector<double> sorted(mag);
        std::nth_element(sorted.begin(), sorted.begin() + 1024, sorted.end());
        const double median = sorted[1024];
        const auto peak = std::max_element(mag.begin(), mag.end()) - mag.begin();
        CHECK(std::abs(f.grid[static_cast<std::size_t>(peak)] - 90.0) < 0.5);
        auto band_max = [&](double lo, double hi) {
            double m = 0.0;
            for (std::size_t k = 0; k < 2048; ++k) {
                if (f.grid[k] >= lo && f.grid[k] <= hi) m = std::max(m, mag[k]);
            }
            return m;
        };
        CHECK(band_max(0.5, 2.0) > 5.0 * median);
        CHECK(band_max(18.0, 22.0) > 5.0 * median);
    }
}

TEST_CASE("Mean propagation") {
    const std::vector<double> avg{0.5, 0.5};
    CHECK(propagate_mean(avg, 1.0) == 1.0);
    auto fir = firwin(31, 100.0, 1000.0);
    CHECK(std::abs(propagate_mean(highpass_complement(fir), 7.0)) < 1e-14);

    auto u = white_noise(NoiseSpec{4, Uniform01{}}, 100000);
    auto y = convolve(u.samples(), fir.taps, ConvolutionMode::causal_truncated);
    std::span<const double> steady(y.begin() + 30, y.end());
    CHECK(std::abs(mean(steady) - propagate_mean(fir.taps, 0.5)) < 0.01);
}

TEST_CASE("Autocorrelation propagation") {
    SUBCASE("impulse autocorrelation") {
        const std::vector<double> h{1.0, 2.0, 3.0};
        auto r = impulse_autocorrelation(h);
        CHECK(r.min_lag == -2);
        CHECK(r.values == std::vector<double>{3.0, 8.0, 14.0, 8.0, 3.0});
    }

    SUBCASE("white input") {
        const std::vector<double> h{0.5, -1.0, 0.25};
        const LagSequence white{0, {2.5}};
        auto r = autocorr_propagation(h, white);
        auto rh = impulse_autocorrelation(h);
        for (long m = -3; m <= 3; ++m) CHECK(r.at(m) == doctest::Approx(2.5 * rh.at(m)));
    }

    SUBCASE("deterministic identity against the output autocorrelation") {
        const std::vector<double> g{1.0, 0.5, -0.25};
        const std::vector<double> h{2.0, -1.0};
        auto r = autocorr_propagation(h, impulse_autocorrelation(g));
        auto direct = impulse_autocorrelation(convolve(g, h));
        REQUIRE(r.min_lag <= direct.min_lag);
        for (long m = direct.min_lag; m <= direct.max_lag(); ++m) CHECK(r.at(m) == doctest::Approx(direct.at(m)));
    }

    SUBCASE("empirical r_yy(0) for a two-tap sum") {
        auto g = white_noise(NoiseSpec{12, Gaussian{0.0, 1.0}}, 100000);
        const std::vector<double> h{1.0, 1.0};
        DiscreteSignal y(convolve(g.samples(), h, ConvolutionMode::causal_truncated));
        CHECK(std::abs(autocorrelate(y, 0).at(0) - 2.0) < 0.05);
    }

    CHECK_THROWS_AS(autocorr_propagation(std::vector<double>{1.0}, LagSequence{0, {1.0, 0.5}}), ArgumentError);
}

TEST_CASE("Power spectral density") {
    SUBCASE("white sequence is flat") {
        auto p = psd(LagSequence{0, {3.0}}, 10.0, 8);
        for (const auto& b : p.bins) CHECK(b.real() == doctest::Approx(3.0));
        CHECK(p.grid[1] == doctest::Approx(1.25));
    }

    SUBCASE("two-tap sum: 2 + 2 cos theta") {
        auto p = psd(impulse_autocorrelation(std::vector<double>{1.0, 1.0}), 1.0, 16);
        for (std::size_t k = 0; k < 16; ++k) {
            const double th = 2.0 * std::numbers::pi * k / 16.0;
            CHECK(p.bins[k].real() == doctest::Approx(2.0 + 2.0 * std::cos(th)));
        }
    }

    SUBCASE("product identity") {
        const std::vector<double> g{0.3, 1.0, -0.7, 0.2};
        const std::vector<double> h{1.0, -0.5, 0.25};
        auto ruu = impulse_autocorrelation(g);
        auto ryy = autocorr_propagation(h, ruu);
        for (std::size_t n : {ryy.values.size(), std::size_t{32}}) {
            auto syy = psd(ryy, 1.0, n), suu = psd(ruu, 1.0, n), shh = psd(impulse_autocorrelation(h), 1.0, n);
            for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(syy.bins[k] - suu.bins[k] * shh.bins[k]) < 1e-12);
        }
    }

    CHECK_THROWS_AS(psd(LagSequence{-1, {1.0, 2.0, 3.0}}, 1.0), ArgumentError);
    CHECK_THROWS_AS(psd(LagSequence{-1, {1.0, 2.0, 1.0}}, 1.0, 2), ArgumentError);
}
