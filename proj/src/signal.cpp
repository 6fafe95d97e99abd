#include "ltikit/signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ltikit/errors.hpp"

namespace ltikit {

namespace {

void require_finite(std::span<const double> v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) {
            throw DataError(std::string(what) + ": non-finite sample at position " +
                            std::to_string(i));
        }
    }
}

}  // namespace

DiscreteSignal::DiscreteSignal(std::vector<double> samples, std::optional<double> sample_rate,
                               long start_index)
    : samples_(std::move(samples)), sample_rate_(sample_rate), start_index_(start_index) {
    require_finite(samples_, "DiscreteSignal");
    if (sample_rate_ && !(*sample_rate_ > 0.0 && std::isfinite(*sample_rate_))) {
        throw ArgumentError("DiscreteSignal: sample rate must be positive and finite");
    }
}

double DiscreteSignal::at_index(long k) const noexcept {
    const long i = k - start_index_;
    if (i < 0 || i >= static_cast<long>(samples_.size())) return 0.0;
    return samples_[static_cast<std::size_t>(i)];
}

double DiscreteSignal::time_of(std::size_t i) const {
    if (!sample_rate_) throw ArgumentError("DiscreteSignal::time_of: no sample rate attached");
    return static_cast<double>(start_index_ + static_cast<long>(i)) / *sample_rate_;
}

DiscreteSignal DiscreteSignal::with_samples(std::vector<double> samples) const {
    return DiscreteSignal(std::move(samples), sample_rate_, start_index_);
}

DiscreteSignal elementary(ElementaryKind kind, std::size_t length, long k0,
                          std::optional<long> k1) {
    const long n = static_cast<long>(length);
    if (length == 0) throw ArgumentError("elementary: length must be positive");
    if (k0 < 0 || k0 >= n) throw ArgumentError("elementary: k0 outside [0, length)");

    std::vector<double> s(length, 0.0);
    switch (kind) {
        case ElementaryKind::delta:
            s[static_cast<std::size_t>(k0)] = 1.0;
            break;
        case ElementaryKind::step:
            for (long k = k0; k < n; ++k) s[static_cast<std::size_t>(k)] = 1.0;
            break;
        case ElementaryKind::box:
            if (!k1 || *k1 <= k0 || *k1 > n) {
                throw ArgumentError("elementary: box requires k0 < k1 <= length");
            }
            for (long k = k0; k < *k1; ++k) s[static_cast<std::size_t>(k)] = 1.0;
            break;
    }
    return DiscreteSignal(std::move(s));
}

double inner_product(const DiscreteSignal& a, const DiscreteSignal& b) {
    if (a.size() != b.size()) {
        throw ArgumentError("inner_product: length mismatch (" + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()) + ")");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
    return acc;
}

double energy(const DiscreteSignal& a) { return inner_product(a, a); }

double norm(const DiscreteSignal& a) { return std::sqrt(energy(a)); }

double normalized_correlation(const DiscreteSignal& a, const DiscreteSignal& b) {
    const double na = norm(a);
    const double nb = norm(b);
    if (na == 0.0 || nb == 0.0) {
        throw DomainError("normalized_correlation: zero-norm input");
    }
    return inner_product(a, b) / (na * nb);
}

std::vector<double> convolve(std::span<const double> a, std::span<const double> b,
                             ConvolutionMode mode) {
    if (a.empty() || b.empty()) throw ArgumentError("convolve: empty input");
    const std::size_t n_full = a.size() + b.size() - 1;
    const std::size_t n_out = mode == ConvolutionMode::full ? n_full : a.size();
    std::vector<double> y(n_out, 0.0);
    for (std::size_t k = 0; k < n_out; ++k) {
        // l runs over indices where both a[l] and b[k-l] exist
        const std::size_t l_lo = k >= b.size() ? k - b.size() + 1 : 0;
        const std::size_t l_hi = std::min(k, a.size() - 1);
        double acc = 0.0;
        for (std::size_t l = l_lo; l <= l_hi; ++l) acc += a[l] * b[k - l];
        y[k] = acc;
    }
    return y;
}

DiscreteSignal convolve(const DiscreteSignal& a, const DiscreteSignal& b,
                        ConvolutionMode mode) {
    return DiscreteSignal(convolve(a.samples(), b.samples(), mode), a.sample_rate(),
                          a.start_index() + b.start_index());
}

double LagSequence::at(long lag) const noexcept {
    const long i = lag - min_lag;
    if (i < 0 || i >= static_cast<long>(values.size())) return 0.0;
    return values[static_cast<std::size_t>(i)];
}

LagSequence cross_correlate(const DiscreteSignal& a, const DiscreteSignal& b,
                            std::size_t max_lag) {
    if (a.size() != b.size()) throw ArgumentError("cross_correlate: length mismatch");
    const std::size_t n = a.size();
    if (max_lag >= n) throw ArgumentError("cross_correlate: max_lag must be < length");

    const long L = static_cast<long>(max_lag);
    LagSequence r{-L, std::vector<double>(2 * max_lag + 1, 0.0)};
    const double inv_n = 1.0 / static_cast<double>(n);
    for (long m = -L; m <= L; ++m) {
        double acc = 0.0;
        for (long k = std::max(0L, -m); k < static_cast<long>(n) && k + m < static_cast<long>(n);
             ++k) {
            acc += a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k + m)];
        }
        r.values[static_cast<std::size_t>(m + L)] = acc * inv_n;
    }
    return r;
}

LagSequence autocorrelate(const DiscreteSignal& v, std::size_t max_lag) {
    return cross_correlate(v, v, max_lag);
}

DiscreteSignal sample_continuous(const std::function<double(double)>& evaluator, double fs,
                                 std::size_t n_t, double t0) {
    if (!(fs > 0.0)) throw ArgumentError("sample_continuous: fs must be positive");
    if (n_t == 0) throw ArgumentError("sample_continuous: n_t must be >= 1");
    std::vector<double> s(n_t);
    for (std::size_t k = 0; k < n_t; ++k) {
        const double t = t0 + static_cast<double>(k) / fs;
        s[k] = evaluator(t);
        if (!std::isfinite(s[k])) {
            throw DataError("sample_continuous: evaluator returned a non-finite value at t=" +
                            std::to_string(t));
        }
    }
    return DiscreteSignal(std::move(s), fs);
}

DiscreteSignal sample_causal(const std::function<double(double)>& evaluator, double fs,
                             std::size_t n_t) {
    DiscreteSignal s = sample_continuous(evaluator, fs, n_t, 0.0);
    std::vector<double> v = s.values();
    v[0] *= 0.5;
    return s.with_samples(std::move(v));
}

}  // namespace ltikit
