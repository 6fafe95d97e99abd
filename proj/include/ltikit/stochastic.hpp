#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <variant>
#include <span>
#include <vector>

#include "ltikit/signal.hpp"
#include "ltikit/spectral.hpp"

namespace ltikit {

struct Uniform01 {};

struct Gaussian {
    double mu = 0.0;
    double sigma = 1.0;
};

struct NoiseSpec {
    std::uint64_t seed = 0;
    std::variant<Uniform01, Gaussian> distribution = Uniform01{};
};

/// Seeded noise source. The stream is fully determined by the seed; copying
/// a generator forks the stream.
class NoiseGenerator {
public:
    explicit NoiseGenerator(std::uint64_t seed = 0) : engine_(seed) {}

    // Uniform on [0, 1) from the top 53 bits of one engine draw.
    double uniform01();

    // Standard normal via Box-Muller; the second variate of each pair is cached.
    double standard_normal();

    double sample(const NoiseSpec& spec);

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

DiscreteSignal white_noise(const NoiseSpec& spec, std::size_t n,
                           std::optional<double> sample_rate = std::nullopt);

/// a sin(2 pi f t) exp(-(t - center)^2 / width); width = infinity is a pure tone.
struct GaussianBurst {
    double amplitude = 1.0;
    double frequency = 0.0;
    double center = 0.0;
    double width = std::numeric_limits<double>::infinity();
};

// Sum of bursts on t_k = k / fs plus noise (no noise when `noise` is empty).
DiscreteSignal synthetic_signal(double fs, std::size_t n_t, std::span<const GaussianBurst> components,
                                const std::optional<NoiseSpec>& noise);

// Bursts at 1, 20 and 90 Hz sampled at 1 kHz over 4096 points with N(0, 0.2) noise.
DiscreteSignal multiscale_test_signal(std::uint64_t seed);

// mu_out = mu_in * sum h.
double propagate_mean(std::span<const double> h, double mu_in);

// r_hh[m] = sum_l h[l] h[l+m] for m in [-(n-1), n-1] (unnormalized).
LagSequence impulse_autocorrelation(std::span<const double> h);

// r_yy = r_uu * r_hh (convolution of lag sequences). r_uu must be symmetric.
LagSequence autocorr_propagation(std::span<const double> h, const LagSequence& r_uu);

/// Power spectral density of a symmetric lag sequence: the transform
/// sum_m r[m] e^{-j theta_n m} on the n_bins-point DFT grid theta_n = 2 pi n / n_bins
/// (lag 0 at bin 0, negative lags wrapped). Unscaled, so the PSD of a
/// convolution of lag sequences is the product of their PSDs whenever n_bins
/// covers the full support. n_bins defaults to the sequence length.
/// Bins hold the real part; throws ArgumentError for asymmetric input.
SpectrumFrame psd(const LagSequence& r, double fs, std::optional<std::size_t> n_bins = std::nullopt);

}  // namespace ltikit
