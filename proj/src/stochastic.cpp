#include "ltikit/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "ltikit/errors.hpp"

namespace ltikit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_symmetric(const LagSequence& r, const char* what) {
    double scale = 1.0;
    for (double v : r.values) scale = std::max(scale, std::abs(v));
    const long reach = std::max(std::abs(r.min_lag), std::abs(r.max_lag()));
    for (long m = 1; m <= reach; ++m) {
        if (std::abs(r.at(m) - r.at(-m)) > 1e-9 * scale) {
            throw ArgumentError(std::string(what) + ": lag sequence is not symmetric at lag " +
                                std::to_string(m));
        }
    }
}

}  // namespace

double NoiseGenerator::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double NoiseGenerator::standard_normal() {
    if (spare_) {
        const double z = *spare_;
        spare_.reset();
        return z;
    }
    // u1 in (0, 1] keeps the logarithm finite
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = kTwoPi * u2;
    spare_ = radius * std::sin(angle);
    return radius * std::cos(angle);
}

double NoiseGenerator::sample(const NoiseSpec& spec) {
    if (const auto* g = std::get_if<Gaussian>(&spec.distribution)) {
        return g->mu + g->sigma * standard_normal();
    }
    return uniform01();
}

DiscreteSignal white_noise(const NoiseSpec& spec, std::size_t n, std::optional<double> sample_rate) {
    if (n == 0) throw ArgumentError("white_noise: n must be >= 1");
    if (const auto* g = std::get_if<Gaussian>(&spec.distribution)) {
        if (!(g->sigma > 0.0)) throw ArgumentError("white_noise: gaussian sigma must be positive");
    }
    NoiseGenerator gen(spec.seed);
    std::vector<double> v(n);
    for (auto& x : v) x = gen.sample(spec);
    return DiscreteSignal(std::move(v), sample_rate);
}

DiscreteSignal synthetic_signal(double fs, std::size_t n_t, std::span<const GaussianBurst> components,
                                const std::optional<NoiseSpec>& noise) {
    if (!(fs > 0.0)) throw ArgumentError("synthetic_signal: fs must be positive");
    if (n_t == 0) throw ArgumentError("synthetic_signal: n_t must be >= 1");
    std::vector<double> v(n_t, 0.0);
    for (std::size_t k = 0; k < n_t; ++k) {
        const double t = static_cast<double>(k) / fs;
        double acc = 0.0;
        for (const auto& c : components) {
            double envelope = 1.0;
            if (std::isfinite(c.width)) {
                const double d = t - c.center;
                envelope = std::exp(-d * d / c.width);
            }
            acc += c.amplitude * std::sin(kTwoPi * c.frequency * t) * envelope;
        }
        v[k] = acc;
    }
    if (noise) {
        const DiscreteSignal n = white_noise(*noise, n_t);
        for (std::size_t k = 0; k < n_t; ++k) v[k] += n[k];
    }
    return DiscreteSignal(std::move(v), fs);
}

DiscreteSignal multiscale_test_signal(std::uint64_t seed) {
    const GaussianBurst parts[] = {
        {2.0, 1.0, 1.0, 0.05},
        {1.0, 20.0, 2.2, 0.05},
        {1.0, 90.0, 0.0, std::numeric_limits<double>::infinity()},
    };
    return synthetic_signal(1000.0, 4096, parts, NoiseSpec{seed, Gaussian{0.0, 0.2}});
}

double propagate_mean(std::span<const double> h, double mu_in) {
    return mu_in * std::accumulate(h.begin(), h.end(), 0.0);
}

LagSequence impulse_autocorrelation(std::span<const double> h) {
    if (h.empty()) throw ArgumentError("impulse_autocorrelation: empty impulse response");
    const long n = static_cast<long>(h.size());
    LagSequence r{-(n - 1), std::vector<double>(static_cast<std::size_t>(2 * n - 1), 0.0)};
    for (long m = -(n - 1); m <= n - 1; ++m) {
        double acc = 0.0;
        for (long l = std::max(0L, -m); l < n && l + m < n; ++l) {
            acc += h[static_cast<std::size_t>(l)] * h[static_cast<std::size_t>(l + m)];
        }
        r.values[static_cast<std::size_t>(m + n - 1)] = acc;
    }
    return r;
}

LagSequence autocorr_propagation(std::span<const double> h, const LagSequence& r_uu) {
    if (r_uu.values.empty()) throw ArgumentError("autocorr_propagation: empty r_uu");
    require_symmetric(r_uu, "autocorr_propagation");
    const LagSequence r_hh = impulse_autocorrelation(h);
    return LagSequence{r_uu.min_lag + r_hh.min_lag, convolve(r_uu.values, r_hh.values)};
}

SpectrumFrame psd(const LagSequence& r, double fs, std::optional<std::size_t> n_bins) {
    if (r.values.empty()) throw ArgumentError("psd: empty lag sequence");
    require_symmetric(r, "psd");
    const std::size_t n = n_bins.value_or(r.values.size());
    if (n < r.values.size()) throw ArgumentError("psd: n_bins shorter than the lag sequence");

    // wrap lags onto the circle of length n, lag 0 at index 0
    std::vector<Complex> circ(n, Complex{0.0, 0.0});
    const long ln = static_cast<long>(n);
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        const long m = r.min_lag + static_cast<long>(i);
        circ[static_cast<std::size_t>(((m % ln) + ln) % ln)] += r.values[i];
    }
    std::vector<Complex> spec =
        is_power_of_two(n) ? fft_pow2(std::span<const Complex>(circ)) : dft(std::span<const Complex>(circ));
    const double unscale = std::sqrt(static_cast<double>(n));

    SpectrumFrame f;
    f.grid = frequency_grid(n, fs);
    f.unit = FrequencyUnit::hertz;
    f.sample_rate = fs;
    f.bins.resize(n);
    double max_re = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        spec[k] *= unscale;
        max_re = std::max(max_re, std::abs(spec[k].real()));
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(spec[k].imag()) > 1e-9 * std::max(1.0, max_re)) {
            throw NumericalError("psd: imaginary residual above tolerance");
        }
        f.bins[k] = Complex{spec[k].real(), 0.0};
    }
    return f;
}

}  // namespace ltikit
