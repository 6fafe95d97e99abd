#include "ltikit/filters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>

#include "ltikit/errors.hpp"

namespace ltikit {

namespace {

constexpr double kPi = std::numbers::pi;

struct Normalized {
    std::vector<double> b, a;  // equal length, a[0] = 1
};

Normalized normalized(const TransferFunction& tf) {
    const std::size_t m = std::max(tf.a().size(), tf.b().size());
    Normalized out{std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)};
    const double a0 = tf.a().front();
    for (std::size_t i = 0; i < tf.b().size(); ++i) out.b[i] = tf.b()[i] / a0;
    for (std::size_t i = 0; i < tf.a().size(); ++i) out.a[i] = tf.a()[i] / a0;
    return out;
}

// Transposed direct form II state of the unit-step steady state.
std::vector<double> step_state(const Normalized& f) {
    const std::size_t m = f.a.size() - 1;
    if (m == 0) return {};
    Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(static_cast<long>(m), static_cast<long>(m));
    Eigen::VectorXd rhs(static_cast<long>(m));
    for (std::size_t i = 0; i < m; ++i) {
        const auto r = static_cast<long>(i);
        lhs(r, 0) += f.a[i + 1];
        if (i + 1 < m) lhs(r, r + 1) -= 1.0;
        rhs(r) = f.b[i + 1] - f.a[i + 1] * f.b[0];
    }
    const Eigen::VectorXd z = lhs.partialPivLu().solve(rhs);
    return {z.data(), z.data() + m};
}

std::vector<double> run_from_state(const Normalized& f, std::vector<double> z, std::span<const double> x) {
    const std::size_t m = z.size();
    std::vector<double> y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double yk = f.b[0] * x[k] + (m > 0 ? z[0] : 0.0);
        for (std::size_t i = 0; i + 1 < m; ++i) z[i] = z[i + 1] + f.b[i + 1] * x[k] - f.a[i + 1] * yk;
        if (m > 0) z[m - 1] = f.b[m] * x[k] - f.a[m] * yk;
        y[k] = yk;
    }
    return y;
}

void require_odd_order(std::size_t n, const char* what) {
    if (n < 3 || n % 2 == 0) {
        throw ArgumentError(std::string(what) + ": filter order must be odd and >= 3");
    }
}

}  // namespace

std::string to_string(WindowKind kind) {
    switch (kind) {
        case WindowKind::rectangular: return "rectangular";
        case WindowKind::hanning: return "hanning";
        case WindowKind::hamming: return "hamming";
        case WindowKind::blackman: return "blackman";
    }
    return "unknown";
}

WindowKind window_from_string(const std::string& name) {
    if (name == "rectangular" || name == "boxcar") return WindowKind::rectangular;
    if (name == "hanning" || name == "hann") return WindowKind::hanning;
    if (name == "hamming") return WindowKind::hamming;
    if (name == "blackman") return WindowKind::blackman;
    throw ArgumentError("unknown window kind '" + name + "'");
}

std::vector<double> ideal_lowpass_ir(double theta_c, std::size_t n) {
    if (!(theta_c > 0.0) || !(theta_c <= kPi)) {
        throw ArgumentError("ideal_lowpass_ir: theta_c must lie in (0, pi]");
    }
    if (n == 0 || n % 2 == 0) throw ArgumentError("ideal_lowpass_ir: N must be odd");
    const long alpha = static_cast<long>(n - 1) / 2;
    std::vector<double> h(n);
    for (std::size_t k = 0; k < n; ++k) {
        const long m = static_cast<long>(k) - alpha;
        if (m == 0) {
            h[k] = theta_c / kPi;
        } else {
            const double x = static_cast<double>(m);
            h[k] = std::sin(x * theta_c) / (kPi * x);
        }
    }
    if (theta_c == kPi) {
        // sin(m pi) is only approximately zero in floating point
        for (std::size_t k = 0; k < n; ++k) {
            if (static_cast<long>(k) != alpha) h[k] = 0.0;
        }
    }
    return h;
}

std::vector<double> window(WindowKind kind, std::size_t n) {
    if (n < 2) throw ArgumentError("window: N must be >= 2");
    std::vector<double> w(n);
    const double denom = static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        // evaluate on the folded index so w[k] == w[N-1-k] bit for bit
        const std::size_t kk = std::min(k, n - 1 - k);
        const double x = 2.0 * kPi * static_cast<double>(kk) / denom;
        switch (kind) {
            case WindowKind::rectangular: w[k] = 1.0; break;
            case WindowKind::hanning: w[k] = 0.5 - 0.5 * std::cos(x); break;
            case WindowKind::hamming: w[k] = 0.54 - 0.46 * std::cos(x); break;
            case WindowKind::blackman:
                w[k] = 0.42 - 0.5 * std::cos(x) + 0.08 * std::cos(2.0 * x);
                break;
        }
    }
    return w;
}

FirDesign firwin(std::size_t n, double fc, double fs, WindowKind kind) {
    require_odd_order(n, "firwin");
    if (!(fs > 0.0)) throw ArgumentError("firwin: fs must be positive");
    if (!(fc > 0.0) || !(fc < fs / 2.0)) throw ArgumentError("firwin: fc must lie in (0, fs/2)");

    std::vector<double> h = ideal_lowpass_ir(2.0 * kPi * fc / fs, n);
    const std::vector<double> w = window(kind, n);
    for (std::size_t k = 0; k < n; ++k) h[k] *= w[k];

    // symmetric pairwise sum keeps the normalized taps exactly symmetric
    const std::size_t alpha = (n - 1) / 2;
    double sum = h[alpha];
    for (std::size_t k = 0; k < alpha; ++k) sum += 2.0 * h[k];
    if (sum == 0.0) throw NumericalError("firwin: windowed response has zero DC gain");
    for (double& v : h) v /= sum;

    return FirDesign{std::move(h), fc, fs, kind};
}

std::vector<double> highpass_complement(const FirDesign& fir) {
    std::vector<double> h(fir.taps.size());
    for (std::size_t k = 0; k < h.size(); ++k) h[k] = -fir.taps[k];
    h[fir.group_delay()] += 1.0;
    return h;
}

std::vector<double> spectral_reverse(const FirDesign& fir) {
    std::vector<double> h(fir.taps);
    for (std::size_t k = 1; k < h.size(); k += 2) h[k] = -h[k];
    return h;
}

TransferFunction butterworth(std::size_t order, double fc, double fs) {
    if (order == 0) throw ArgumentError("butterworth: order must be >= 1");
    if (order > 20) {
        throw NumericalError("butterworth: orders above 20 lose precision in coefficient form");
    }
    if (!(fs > 0.0)) throw ArgumentError("butterworth: fs must be positive");
    if (!(fc > 0.0) || !(fc < fs / 2.0)) throw ArgumentError("butterworth: fc must lie in (0, fs/2)");

    const double omega = 2.0 * kPi * prewarp_frequency(fc, fs);
    const double n = static_cast<double>(order);

    ZeroPoleGain analog;
    analog.domain = Domain::s;
    analog.gain = 1.0;
    for (std::size_t k = 0; k < order; ++k) {
        const double angle = kPi * (2.0 * static_cast<double>(k) + n + 1.0) / (2.0 * n);
        Complex p = std::polar(omega, angle);
        if (2 * k + 1 == order) p = Complex{-omega, 0.0};  // real pole of odd orders
        analog.poles.push_back(p);
        analog.gain *= omega;
    }
    // conjugate pairs must be exact for the real expansion
    for (std::size_t k = 0; k < order / 2; ++k) {
        analog.poles[order - 1 - k] = std::conj(analog.poles[k]);
    }

    const ZeroPoleGain digital = bilinear(analog, 1.0 / fs);
    TransferFunction tf = tf_from_zpk(digital);

    // exact unit DC gain
    const double dc = std::accumulate(tf.b().begin(), tf.b().end(), 0.0) /
                      std::accumulate(tf.a().begin(), tf.a().end(), 0.0);
    std::vector<double> b = tf.b();
    for (double& v : b) v /= dc;
    return TransferFunction(std::move(b), tf.a(), Domain::z, 1.0 / fs);
}

std::vector<double> zero_phase_fir(std::span<const double> taps, std::span<const double> u) {
    if (taps.empty() || taps.size() % 2 == 0) {
        throw ArgumentError("zero_phase: FIR length must be odd");
    }
    if (u.empty()) throw ArgumentError("zero_phase: empty signal");
    const std::size_t alpha = (taps.size() - 1) / 2;
    const auto full = convolve(u, taps, ConvolutionMode::full);
    return {full.begin() + static_cast<long>(alpha),
            full.begin() + static_cast<long>(alpha + u.size())};
}

DiscreteSignal apply(const Filter& filter, const DiscreteSignal& u) {
    if (const auto* fir = std::get_if<FirDesign>(&filter)) {
        return u.with_samples(convolve(u.samples(), fir->taps, ConvolutionMode::causal_truncated));
    }
    return simulate(std::get<TransferFunction>(filter), u);
}

DiscreteSignal zero_phase(const Filter& filter, const DiscreteSignal& u) {
    if (const auto* fir = std::get_if<FirDesign>(&filter)) {
        return u.with_samples(zero_phase_fir(fir->taps, u.samples()));
    }
    const auto& tf = std::get<TransferFunction>(filter);
    if (tf.domain() != Domain::z) throw ArgumentError("zero_phase: IIR filter must be z-domain");
    if (is_stable(tf) != Stability::stable) {
        throw ArgumentError("zero_phase: IIR filter is not stable");
    }
    const std::size_t pad = 3 * std::max(tf.a().size(), tf.b().size());
    const std::size_t n = u.size();
    if (n <= pad) {
        throw ArgumentError("zero_phase: signal length must exceed " + std::to_string(pad) +
                            " samples");
    }
    const auto& x = u.values();

    // odd reflection about both end samples
    std::vector<double> ext;
    ext.reserve(n + 2 * pad);
    for (std::size_t i = pad; i >= 1; --i) ext.push_back(2.0 * x.front() - x[i]);
    ext.insert(ext.end(), x.begin(), x.end());
    for (std::size_t i = 1; i <= pad; ++i) ext.push_back(2.0 * x.back() - x[n - 1 - i]);

    // each pass starts in the steady state of its first sample
    const Normalized f = normalized(tf);
    const std::vector<double> zi = step_state(f);
    auto scaled = [&zi](double v) {
        std::vector<double> z(zi);
        for (double& e : z) e *= v;
        return z;
    };
    std::vector<double> y = run_from_state(f, scaled(ext.front()), ext);
    std::reverse(y.begin(), y.end());
    y = run_from_state(f, scaled(y.front()), y);
    std::reverse(y.begin(), y.end());
    return u.with_samples({y.begin() + static_cast<long>(pad),
                           y.begin() + static_cast<long>(pad + n)});
}

}  // namespace ltikit
