#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace ltikit {

/// Real-valued, finite-duration sample sequence.
///
/// Samples outside [start_index, start_index + size()) are zero. The optional
/// sample rate ties index k to time t_k = k / sample_rate.
class DiscreteSignal {
public:
    DiscreteSignal() = default;
    explicit DiscreteSignal(std::vector<double> samples,
                            std::optional<double> sample_rate = std::nullopt,
                            long start_index = 0);

    [[nodiscard]] std::span<const double> samples() const noexcept { return samples_; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return samples_; }
    [[nodiscard]] std::optional<double> sample_rate() const noexcept { return sample_rate_; }
    [[nodiscard]] long start_index() const noexcept { return start_index_; }
    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
    [[nodiscard]] bool empty() const noexcept { return samples_.empty(); }

    double operator[](std::size_t i) const { return samples_[i]; }

    // Value at absolute index k, zero outside the support.
    [[nodiscard]] double at_index(long k) const noexcept;

    // Time of sample i; requires a sample rate.
    [[nodiscard]] double time_of(std::size_t i) const;

    [[nodiscard]] DiscreteSignal with_samples(std::vector<double> samples) const;

private:
    std::vector<double> samples_;
    std::optional<double> sample_rate_;
    long start_index_ = 0;
};

enum class ElementaryKind { delta, step, box };

DiscreteSignal elementary(ElementaryKind kind, std::size_t length, long k0,
                          std::optional<long> k1 = std::nullopt);

double inner_product(const DiscreteSignal& a, const DiscreteSignal& b);
double energy(const DiscreteSignal& a);
double norm(const DiscreteSignal& a);
double normalized_correlation(const DiscreteSignal& a, const DiscreteSignal& b);

enum class ConvolutionMode {
    full,             // length len(a) + len(b) - 1
    causal_truncated  // first len(a) samples of the full result
};

std::vector<double> convolve(std::span<const double> a, std::span<const double> b,
                             ConvolutionMode mode = ConvolutionMode::full);

// Keeps the sample rate of `a`; the start index is the sum of both start indices.
DiscreteSignal convolve(const DiscreteSignal& a, const DiscreteSignal& b,
                        ConvolutionMode mode = ConvolutionMode::full);

/// Lag-indexed sequence r[m] for m in [min_lag, min_lag + values.size()).
struct LagSequence {
    long min_lag = 0;
    std::vector<double> values;

    [[nodiscard]] long max_lag() const noexcept {
        return min_lag + static_cast<long>(values.size()) - 1;
    }
    // r[m], zero outside the stored range.
    [[nodiscard]] double at(long lag) const noexcept;
};

// Biased estimator r[m] = (1/n) sum_k a[k] b[k+m], m in [-max_lag, max_lag].
LagSequence cross_correlate(const DiscreteSignal& a, const DiscreteSignal& b,
                            std::size_t max_lag);
LagSequence autocorrelate(const DiscreteSignal& v, std::size_t max_lag);

// samples[k] = evaluator(t0 + k / fs).
DiscreteSignal sample_continuous(const std::function<double(double)>& evaluator, double fs,
                                 std::size_t n_t, double t0 = 0.0);

// Samples u(t) * step(t) starting at t = 0 with the jump sample taken at its
// midpoint value u(0)/2. Use this for inputs switched on at t = 0 when the
// discrete response is compared against the continuous one.
DiscreteSignal sample_causal(const std::function<double(double)>& evaluator, double fs,
                             std::size_t n_t);

}  // namespace ltikit
