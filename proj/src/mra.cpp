#include "ltikit/mra.hpp"

#include <future>
#include <string>

#include "ltikit/errors.hpp"

namespace ltikit {

void FrequencySplitting::validate() const {
    if (cutoffs.empty()) throw ArgumentError("FrequencySplitting: at least one cutoff is required");
    if (!(sample_rate > 0.0)) throw ArgumentError("FrequencySplitting: sample rate must be positive");
    if (filter_order < 3 || filter_order % 2 == 0) {
        throw ArgumentError("FrequencySplitting: filter order must be odd and >= 3");
    }
    double prev = 0.0;
    for (double f : cutoffs) {
        if (!(f > prev)) {
            throw ArgumentError("FrequencySplitting: cutoffs must be positive and strictly increasing");
        }
        prev = f;
    }
    if (!(prev < sample_rate / 2.0)) {
        throw ArgumentError("FrequencySplitting: cutoffs must stay below fs/2");
    }
}

std::vector<std::vector<double>> band_impulse_responses(const FrequencySplitting& split) {
    split.validate();
    const std::size_t n = split.filter_order;
    std::vector<std::vector<double>> lows;
    lows.reserve(split.cutoffs.size());
    for (double f : split.cutoffs) {
        lows.push_back(firwin(n, f, split.sample_rate, split.window_kind).taps);
    }

    std::vector<std::vector<double>> bands;
    bands.push_back(lows.front());
    for (std::size_t m = 1; m < lows.size(); ++m) {
        std::vector<double> h(n);
        for (std::size_t k = 0; k < n; ++k) h[k] = lows[m][k] - lows[m - 1][k];
        bands.push_back(std::move(h));
    }
    // last band closes the partition: delta minus everything below it
    std::vector<double> high(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double below = 0.0;
        for (const auto& b : bands) below += b[k];
        high[k] = -below;
    }
    high[split.group_delay()] += 1.0;
    bands.push_back(std::move(high));
    return bands;
}

std::vector<DiscreteSignal> decompose(const DiscreteSignal& u, const FrequencySplitting& split) {
    split.validate();
    if (u.size() <= split.filter_order) {
        throw ArgumentError("decompose: signal length " + std::to_string(u.size()) +
                            " must exceed the filter order " + std::to_string(split.filter_order));
    }
    const auto bands = band_impulse_responses(split);

    std::vector<std::future<std::vector<double>>> jobs;
    jobs.reserve(bands.size());
    for (const auto& h : bands) {
        jobs.push_back(std::async(std::launch::async,
                                  [&h, &u] { return zero_phase_fir(h, u.samples()); }));
    }
    std::vector<DiscreteSignal> scales;
    scales.reserve(bands.size());
    for (auto& j : jobs) scales.push_back(u.with_samples(j.get()));
    return scales;
}

DiscreteSignal reconstruct(const std::vector<DiscreteSignal>& scales) {
    if (scales.empty()) throw ArgumentError("reconstruct: no scales");
    std::vector<double> sum(scales.front().size(), 0.0);
    for (const auto& s : scales) {
        if (s.size() != sum.size()) throw ArgumentError("reconstruct: scale length mismatch");
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += s[k];
    }
    return scales.front().with_samples(std::move(sum));
}

}  // namespace ltikit
