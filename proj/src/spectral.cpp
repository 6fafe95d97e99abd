#include "ltikit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ltikit/errors.hpp"

namespace ltikit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<Complex> to_complex(std::span<const double> x) {
    return {x.begin(), x.end()};
}

std::vector<double> bin_grid(std::size_t n, std::optional<double> fs) {
    if (fs) return frequency_grid(n, *fs);
    std::vector<double> g(n);
    for (std::size_t k = 0; k < n; ++k) g[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    return g;
}

SpectrumFrame make_frame(std::vector<Complex> bins, std::optional<double> fs) {
    SpectrumFrame f;
    f.grid = bin_grid(bins.size(), fs);
    f.bins = std::move(bins);
    f.unit = fs ? FrequencyUnit::hertz : FrequencyUnit::radians_per_sample;
    f.sample_rate = fs;
    return f;
}

// Direct summation with sign -1 (forward) or +1 (inverse), scaled by 1/sqrt(n).
std::vector<Complex> naive_transform(std::span<const Complex> x, double sign) {
    const std::size_t n = x.size();
    if (n == 0) throw ArgumentError("dft: empty input");
    std::vector<Complex> out(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t m = 0; m < n; ++m) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            // reduce m*k mod n first so the phase stays accurate for large n
            const std::size_t mk = (m * k) % n;
            const double phase = sign * kTwoPi * static_cast<double>(mk) / static_cast<double>(n);
            acc += x[k] * std::polar(1.0, phase);
        }
        out[m] = acc * scale;
    }
    return out;
}

// complex product without the NaN/inf recovery of operator*
inline Complex mul(Complex x, Complex y) {
    return {x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
}

// Iterative in-place Cooley-Tukey, decimation in time, unscaled.
void radix2(std::vector<Complex>& a, double sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        std::vector<Complex> tw(half);
        for (std::size_t k = 0; k < half; ++k) {
            tw[k] = std::polar(1.0, sign * kTwoPi * static_cast<double>(k) / static_cast<double>(len));
        }
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const Complex t = mul(tw[k], a[i + k + half]);
                a[i + k + half] = a[i + k] - t;
                a[i + k] += t;
            }
        }
    }
}

std::vector<Complex> scaled_fft(std::span<const Complex> x, double sign) {
    if (x.empty() || !is_power_of_two(x.size())) {
        throw ArgumentError("fft_pow2: length " + std::to_string(x.size()) +
                            " is not a power of two; zero-pad explicitly");
    }
    std::vector<Complex> a(x.begin(), x.end());
    radix2(a, sign);
    const double scale = 1.0 / std::sqrt(static_cast<double>(a.size()));
    for (auto& v : a) v *= scale;
    return a;
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) noexcept {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::vector<Complex> dft(std::span<const Complex> x) { return naive_transform(x, -1.0); }

std::vector<Complex> idft(std::span<const Complex> x) { return naive_transform(x, +1.0); }

SpectrumFrame dft(const DiscreteSignal& u) {
    if (u.empty()) throw ArgumentError("dft: empty input");
    return make_frame(dft(to_complex(u.samples())), u.sample_rate());
}

DiscreteSignal idft(const SpectrumFrame& spectrum) {
    if (spectrum.bins.empty()) throw ArgumentError("idft: empty spectrum");
    const auto x = idft(spectrum.bins);
    std::vector<double> re(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) re[k] = x[k].real();
    return DiscreteSignal(std::move(re), spectrum.sample_rate);
}

std::vector<Complex> fft_pow2(std::span<const Complex> x) { return scaled_fft(x, -1.0); }

std::vector<Complex> ifft_pow2(std::span<const Complex> x) { return scaled_fft(x, +1.0); }

SpectrumFrame fft_pow2(const DiscreteSignal& u) {
    return make_frame(fft_pow2(to_complex(u.samples())), u.sample_rate());
}

std::vector<double> fft_convolve(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw ArgumentError("fft_convolve: empty input");
    const std::size_t n_full = a.size() + b.size() - 1;
    const std::size_t n = next_power_of_two(n_full);
    std::vector<Complex> pa(n), pb(n);
    std::copy(a.begin(), a.end(), pa.begin());
    std::copy(b.begin(), b.end(), pb.begin());
    auto fa = fft_pow2(pa);
    const auto fb = fft_pow2(pb);
    // unitary scaling: conv = sqrt(n) * ifft(fa * fb)
    const double root_n = std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) fa[k] = mul(fa[k], fb[k]) * root_n;
    const auto y = ifft_pow2(fa);
    std::vector<double> out(n_full);
    for (std::size_t k = 0; k < n_full; ++k) out[k] = y[k].real();
    return out;
}

Complex dtft_at(std::span<const double> taps, double theta) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < taps.size(); ++k) {
        acc += taps[k] * std::polar(1.0, -theta * static_cast<double>(k));
    }
    return acc;
}

SpectrumFrame dtft(const DiscreteSignal& u, std::span<const double> thetas) {
    SpectrumFrame f;
    f.grid.assign(thetas.begin(), thetas.end());
    f.bins.reserve(thetas.size());
    const double k0 = static_cast<double>(u.start_index());
    for (double theta : thetas) {
        f.bins.push_back(dtft_at(u.samples(), theta) * std::polar(1.0, -theta * k0));
    }
    f.unit = FrequencyUnit::radians_per_sample;
    return f;
}

std::vector<double> frequency_grid(std::size_t n_t, double fs) {
    if (n_t == 0) throw ArgumentError("frequency_grid: n_t must be >= 1");
    if (!(fs > 0.0)) throw ArgumentError("frequency_grid: fs must be positive");
    std::vector<double> f(n_t);
    for (std::size_t n = 0; n < n_t; ++n) {
        f[n] = static_cast<double>(n) * fs / static_cast<double>(n_t);
    }
    return f;
}

}  // namespace ltikit
