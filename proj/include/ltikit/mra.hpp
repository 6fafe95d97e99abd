#pragma once

#include <cstddef>
#include <vector>

#include "ltikit/filters.hpp"
#include "ltikit/signal.hpp"

namespace ltikit {

/// Frequency splitting vector [f_1, ..., f_{M-1}] defining M scales
/// [0, f_1], [f_1, f_2], ..., [f_{M-1}, fs/2].
struct FrequencySplitting {
    std::vector<double> cutoffs;
    double sample_rate = 0.0;
    std::size_t filter_order = 511;
    WindowKind window_kind = WindowKind::hamming;

    [[nodiscard]] std::size_t scale_count() const noexcept { return cutoffs.size() + 1; }
    [[nodiscard]] std::size_t group_delay() const noexcept { return (filter_order - 1) / 2; }

    // Throws ArgumentError unless 0 < f_1 < ... < f_{M-1} < fs/2 and the order is odd.
    void validate() const;
};

// Band m is lowpass(f_m) - lowpass(f_{m-1}); the first band is lowpass(f_1)
// and the last is delta - sum of the others, so the bands sum to delta at the
// group delay.
std::vector<std::vector<double>> band_impulse_responses(const FrequencySplitting& split);

// Zero-phase filtering of u with each band. Bands are filtered in parallel.
std::vector<DiscreteSignal> decompose(const DiscreteSignal& u, const FrequencySplitting& split);

DiscreteSignal reconstruct(const std::vector<DiscreteSignal>& scales);

}  // namespace ltikit
