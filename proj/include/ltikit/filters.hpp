#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ltikit/lti.hpp"
#include "ltikit/signal.hpp"

namespace ltikit {

enum class WindowKind { rectangular, hanning, hamming, blackman };

std::string to_string(WindowKind kind);
WindowKind window_from_string(const std::string& name);

/// Linear-phase low-pass FIR designed by the window method.
///
/// Taps are symmetric, sum to one, and delay the input by (N-1)/2 samples.
struct FirDesign {
    std::vector<double> taps;
    double cutoff = 0.0;
    double sample_rate = 0.0;
    WindowKind window_kind = WindowKind::hamming;

    [[nodiscard]] std::size_t order() const noexcept { return taps.size(); }
    [[nodiscard]] std::size_t group_delay() const noexcept { return (taps.size() - 1) / 2; }
};

// h[k] = sin((k - alpha) theta_c) / (pi (k - alpha)), alpha = (N-1)/2.
std::vector<double> ideal_lowpass_ir(double theta_c, std::size_t n);

std::vector<double> window(WindowKind kind, std::size_t n);

FirDesign firwin(std::size_t n, double fc, double fs, WindowKind kind = WindowKind::hamming);

// delta at the group delay minus the low-pass taps.
std::vector<double> highpass_complement(const FirDesign& fir);

// (-1)^n taps[n]: mirrors the response about fs/4.
std::vector<double> spectral_reverse(const FirDesign& fir);

/// Digital Butterworth low-pass of order N: analog poles on a circle of
/// radius 2 pi f', f' the pre-warped cutoff, mapped by the bilinear transform.
/// Unit DC gain, |H| = 1/sqrt(2) at fc. Orders above 20 are refused.
TransferFunction butterworth(std::size_t order, double fc, double fs);

using Filter = std::variant<FirDesign, TransferFunction>;

// Causal filtering: convolution for FIR, recursion for IIR.
DiscreteSignal apply(const Filter& filter, const DiscreteSignal& u);

/// Offline zero-phase filtering.
///
/// FIR: the full convolution advanced by the group delay, so the output is
/// the convolution with the taps centred on k = 0. The first and last
/// group_delay() samples see the zero padding beyond the signal edges.
///
/// IIR: forward pass, reversal, second pass, reversal, on a signal extended
/// at both ends by odd mirror reflection of length 3 * max(len a, len b).
/// Each pass starts from the steady state for a constant input equal to its
/// first sample, so constants pass through unchanged.
DiscreteSignal zero_phase(const Filter& filter, const DiscreteSignal& u);

std::vector<double> zero_phase_fir(std::span<const double> taps, std::span<const double> u);

}  // namespace ltikit
