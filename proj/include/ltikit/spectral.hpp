#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ltikit/signal.hpp"

namespace ltikit {

using Complex = std::complex<double>;

enum class FrequencyUnit {
    radians_per_sample,  // digital frequency theta
    hertz                // physical frequency, sample rate attached
};

/// Complex spectrum sampled on an explicit frequency grid.
///
/// DFT frames are unitary: forward and inverse both carry 1/sqrt(n).
struct SpectrumFrame {
    std::vector<Complex> bins;
    std::vector<double> grid;
    FrequencyUnit unit = FrequencyUnit::radians_per_sample;
    std::optional<double> sample_rate;  // set iff unit == hertz

    [[nodiscard]] std::size_t size() const noexcept { return bins.size(); }
};

// Unitary DFT by direct O(n^2) summation.
SpectrumFrame dft(const DiscreteSignal& u);
std::vector<Complex> dft(std::span<const Complex> x);

// Inverse unitary DFT; the imaginary residue of the result is discarded.
DiscreteSignal idft(const SpectrumFrame& spectrum);
std::vector<Complex> idft(std::span<const Complex> x);

// Unitary radix-2 FFT; length must be a power of two.
SpectrumFrame fft_pow2(const DiscreteSignal& u);
std::vector<Complex> fft_pow2(std::span<const Complex> x);
std::vector<Complex> ifft_pow2(std::span<const Complex> x);

[[nodiscard]] bool is_power_of_two(std::size_t n) noexcept;
[[nodiscard]] std::size_t next_power_of_two(std::size_t n) noexcept;

// Linear (full-length) convolution through zero-padded power-of-two FFTs.
std::vector<double> fft_convolve(std::span<const double> a, std::span<const double> b);

// U(theta) = sum_k u[k] e^{-j theta k}, with k the absolute sample index.
SpectrumFrame dtft(const DiscreteSignal& u, std::span<const double> thetas);
Complex dtft_at(std::span<const double> taps, double theta);

// f_n = n * fs / n_t for n in [0, n_t).
std::vector<double> frequency_grid(std::size_t n_t, double fs);

}  // namespace ltikit
