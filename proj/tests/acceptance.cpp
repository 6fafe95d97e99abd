// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ltikit/filters.hpp"
#include "ltikit/lti.hpp"
#include "ltikit/mra.hpp"
#include "ltikit/signal.hpp"
#include "ltikit/spectral.hpp"
#include "ltikit/stochastic.hpp"
#include "ltikit/sysid.hpp"

using namespace ltikit;

namespace {

constexpr double kPi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

template <class F>
void run(int id, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(id, false, std::string("exception: ") + e.what());
    }
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

// Unit step response of 1/(s^2 + 2s + 5), poles -1 +- 2j.
double step_closed_form(double t) {
    return 0.2 - 0.2 * std::exp(-t) * (std::cos(2.0 * t) + 0.5 * std::sin(2.0 * t));
}

// Response of 1/(s^2 + 2s + 5) to e^{-t} u(t): 1/((s+1)((s+1)^2 + 4)).
double exp_input_closed_form(double t) {
    return 0.25 * std::exp(-t) * (1.0 - std::cos(2.0 * t));
}

const TransferFunction kPlant({1.0}, {5.0, 2.0, 1.0}, Domain::s);

double step_error(const TransferFunction& tf_z, double fs, double t_end) {
    const auto n = static_cast<std::size_t>(std::round(t_end * fs)) + 1;
    const DiscreteSignal u = sample_causal([](double) { return 1.0; }, fs, n);
    const auto y = simulate(tf_z, u.samples());
    double err = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        err = std::max(err, std::abs(y[k] - step_closed_form(static_cast<double>(k) / fs)));
    }
    return err;
}

void criterion1() {
    const auto t0 = Clock::now();
    const double e10 = step_error(bilinear(kPlant, 0.1), 10.0, 5.0);
    const double e3 = step_error(bilinear(kPlant, 1.0 / 3.0), 3.0, 5.0);
    const TransferFunction mz = matched_z(kPlant, 0.1);
    const double em = step_error(mz, 10.0, 5.0);
    const double dc = eval(mz, Complex{1.0, 0.0}).real();
    const auto long_run = simulate(mz, std::vector<double>(2000, 1.0));
    const double ss = long_run.back();
    const double elapsed = seconds_since(t0);
    const bool ok = e10 < 5e-3 && e3 < 5e-2 && em < 5e-3 && std::abs(dc - 0.2) <= 1e-6 &&
                    std::abs(ss - 0.2) <= 1e-6 && elapsed < 1.0;
    report(1, ok,
           fmt("bilinear fs=10 err=%.3e, fs=3 err=%.3e; matched fs=10 err=%.3e", e10, e3, em) +
               fmt(", steady=%.9f (H(1)=%.9f), %.3fs", ss, dc, elapsed));
}

void criterion2() {
    const double fs = 10.0, dt = 0.1;
    const std::size_t n = 51;
    std::vector<double> t(n);
    for (std::size_t k = 0; k < n; ++k) t[k] = static_cast<double>(k) * dt;

    const TransferFunction u_s({1.0}, {1.0, 1.0}, Domain::s);
    const auto y_residue = inverse_laplace(series(kPlant, u_s), t);

    const auto h = impulse_response_s(kPlant, t);
    const DiscreteSignal u = sample_causal([](double tt) { return std::exp(-tt); }, fs, n);
    auto y_conv = convolve(h, u.samples(), ConvolutionMode::causal_truncated);
    for (auto& v : y_conv) v *= dt;

    const auto y_lccde = simulate(bilinear(kPlant, dt), u.samples());

    std::vector<double> oracle(n);
    for (std::size_t k = 0; k < n; ++k) oracle[k] = exp_input_closed_form(t[k]);

    const double d_rc = max_abs_diff(y_residue, y_conv);
    const double d_rl = max_abs_diff(y_residue, y_lccde);
    const double d_cl = max_abs_diff(y_conv, y_lccde);
    const double d_ro = max_abs_diff(y_residue, oracle);
    const bool ok = d_rc < 2e-2 && d_rl < 2e-2 && d_cl < 2e-2 && d_ro < 1e-12;
    report(2, ok,
           fmt("residue-conv=%.3e residue-lccde=%.3e conv-lccde=%.3e residue-closed=%.1e", d_rc,
               d_rl, d_cl, d_ro));
}

void criterion3() {
    const FirDesign fir = firwin(5, 10.0, 1000.0, WindowKind::hamming);
    // windowed sinc, cutoff 2 pi 10/1000 rad/sample, centre tap theta_c / pi
    const double wc = 2.0 * kPi * 10.0 / 1000.0;
    std::vector<double> hand(5);
    double sum = 0.0;
    for (int k = 0; k < 5; ++k) {
        const double m = k - 2;
        const double ideal = m == 0 ? wc / kPi : std::sin(m * wc) / (kPi * m);
        const double w = 0.54 - 0.46 * std::cos(2.0 * kPi * k / 4.0);
        hand[k] = ideal * w;
        sum += hand[k];
    }
    for (auto& v : hand) v /= sum;
    const double err = max_abs_diff(fir.taps, hand);
    report(3, err < 1e-10 && fir.taps.size() == 5, fmt("max tap error %.3e", err));
}

void criterion4() {
    const DiscreteSignal u = multiscale_test_signal(7);
    const FirDesign fir = firwin(511, 10.0, 1000.0, WindowKind::hamming);

    std::vector<double> direct, fast;
    double t_direct = 1e9, t_fft = 1e9;
    for (int rep = 0; rep < 5; ++rep) {
        auto t0 = Clock::now();
        direct = convolve(fir.taps, u.samples());
        t_direct = std::min(t_direct, seconds_since(t0));
        t0 = Clock::now();
        fast = fft_convolve(fir.taps, u.samples());
        t_fft = std::min(t_fft, seconds_since(t0));
    }
    const TransferFunction as_lccde(fir.taps, {1.0}, Domain::z, 1.0 / 1000.0);
    std::vector<double> padded(u.values());
    padded.resize(direct.size(), 0.0);
    const auto recursive = simulate(as_lccde, padded);

    const double d1 = max_abs_diff(direct, fast);
    const double d2 = max_abs_diff(direct, recursive);
    const double d3 = max_abs_diff(fast, recursive);
    const bool ok = direct.size() == fast.size() && d1 < 1e-8 && d2 < 1e-8 && d3 < 1e-8;
    report(4, ok,
           fmt("direct-fft=%.3e direct-lccde=%.3e fft-lccde=%.3e", d1, d2, d3) +
               fmt("; n=4096 direct %.2f ms, fft %.2f ms (best of 5)", t_direct * 1e3, t_fft * 1e3));
}

void criterion5() {
    const auto t0 = Clock::now();
    const DiscreteSignal u = multiscale_test_signal(5);
    FrequencySplitting split;
    split.cutoffs = {10.0, 70.0, 100.0, 300.0};
    split.sample_rate = 1000.0;
    split.filter_order = 511;
    split.window_kind = WindowKind::hamming;
    const auto scales = decompose(u, split);
    const DiscreteSignal back = reconstruct(scales);
    const std::size_t edge = split.group_delay();
    double err = 0.0;
    for (std::size_t k = edge; k + edge < u.size(); ++k) err = std::max(err, std::abs(back[k] - u[k]));

    // the 90 Hz tone on its own, noise-free
    const GaussianBurst tone{1.0, 90.0, 0.0};
    const DiscreteSignal v = synthetic_signal(1000.0, 4096, std::span(&tone, 1), std::nullopt);
    const auto tone_scales = decompose(v, split);
    std::vector<double> band_energy(tone_scales.size(), 0.0);
    double total = 0.0;
    for (std::size_t m = 0; m < tone_scales.size(); ++m) {
        for (std::size_t k = edge; k + edge < v.size(); ++k) band_energy[m] += tone_scales[m][k] * tone_scales[m][k];
        total += band_energy[m];
    }
    const double share = band_energy[2] / total;
    const double elapsed = seconds_since(t0);
    const bool ok = scales.size() == 5 && err < 1e-8 && share >= 0.95 && elapsed < 10.0;
    report(5, ok, fmt("interior reconstruction error %.3e, 90 Hz share in [70,100] = %.4f, %.2fs", err,
                      share, elapsed));
}

void criterion6() {
    const double dt = 0.02;
    const std::size_t n = 2000;
    const DiscreteSignal u = sample_continuous(
        [](double t) { return std::sin(8.0 * kPi * t) + 3.0 * std::exp(-(t - 3.0) * (t - 3.0) / 2.0); },
        1.0 / dt, n);
    const TransferFunction truth({2.0, 1.8, -1.2}, {1.0, -0.5, 0.0}, Domain::z, dt);
    const DiscreteSignal y_clean = simulate(truth, u);

    const HankelRegression h0 = build_hankel(u, y_clean, 2, 2).drop_initial_rows();
    const RidgeSolution exact = ridge_solve(h0, 0.0);
    const std::vector<double> expected{2.0, 1.8, -1.2, 0.5, 0.0};
    const double coef_err = max_abs_diff(exact.w, expected);

    const DiscreteSignal noise = white_noise(NoiseSpec{42, Uniform01{}}, n);
    std::vector<double> y_noisy(n);
    for (std::size_t k = 0; k < n; ++k) y_noisy[k] = y_clean[k] + noise[k];
    const DiscreteSignal y(y_noisy, 1.0 / dt);
    const RidgeSolution fit = ridge_solve(build_hankel(u, y, 2, 2), 1.0);
    const TransferFunction model = model_from_coefficients(fit.w, 2, 2, dt);
    const Stability stab = is_stable(model);

    const DiscreteSignal pred = predict(fit.w, 2, 2, u, PredictionMode::free_run);
    double rms = 0.0, y_max = 0.0;
    bool finite = true;
    for (std::size_t k = 0; k < n; ++k) {
        const double e = pred[k] - y[k];
        finite = finite && std::isfinite(pred[k]);
        rms += e * e;
        y_max = std::max(y_max, std::abs(y[k]));
    }
    rms = std::sqrt(rms / static_cast<double>(n));

    // continue the same input pattern for four times the training horizon
    const DiscreteSignal u_long = sample_continuous(
        [](double t) { return std::sin(8.0 * kPi * t) + 3.0 * std::exp(-(t - 3.0) * (t - 3.0) / 2.0); },
        1.0 / dt, 4 * n);
    const DiscreteSignal pred_long = predict(fit.w, 2, 2, u_long, PredictionMode::free_run);
    double p_max = 0.0;
    for (std::size_t k = 0; k < pred_long.size(); ++k) p_max = std::max(p_max, std::abs(pred_long[k]));

    const bool ok = coef_err < 1e-6 && finite && stab == Stability::stable && p_max <= 2.0 * y_max;
    report(6, ok,
           fmt("noiseless coefficient error %.3e; noisy fit free-run rms %.3f, max|pred| %.3f vs max|y| %.3f",
               coef_err, rms, p_max, y_max) +
               ", model " + to_string(stab));
}

void criterion7() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> gauss;
    double unitarity = 0.0, equivalence = 0.0, roundtrip = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Complex> x(256);
        for (auto& v : x) v = Complex{gauss(rng), gauss(rng)};
        const auto naive = dft(x);
        const auto fast = fft_pow2(x);
        const auto back = idft(naive);
        double nx = 0.0, nu = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) {
            nx += std::norm(x[k]);
            nu += std::norm(naive[k]);
            equivalence = std::max(equivalence, std::abs(naive[k] - fast[k]));
            roundtrip = std::max(roundtrip, std::abs(back[k] - x[k]));
        }
        unitarity = std::max(unitarity, std::abs(std::sqrt(nu) - std::sqrt(nx)));
    }
    const double elapsed = seconds_since(t0);
    const bool ok = unitarity < 1e-10 && equivalence < 1e-9 && roundtrip < 1e-10 && elapsed < 5.0;
    report(7, ok, fmt("norm gap %.3e, fft-vs-dft %.3e, round trip %.3e, %.2fs", unitarity, equivalence,
                      roundtrip, elapsed));
}

void criterion8() {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> re(-100.0, -1e-6), im(-100.0, 100.0);
    const double dt = 1e-2;
    double max_radius = 0.0;
    bool all_inside = true;
    for (int i = 0; i < 1000; ++i) {
        const Complex s{re(rng), im(rng)};
        const TransferFunction tf_s({1.0}, {-s.real(), 1.0}, Domain::s);
        // single real pole; complex poles go through a conjugate pair
        const Complex z = std::exp(s * dt);
        const TransferFunction pair({1.0}, {std::norm(s), -2.0 * s.real(), 1.0}, Domain::s);
        const auto poles = zpk(matched_z(pair, dt)).poles;
        for (const auto& p : poles) {
            max_radius = std::max(max_radius, std::abs(p));
            all_inside = all_inside && std::abs(p) < 1.0 && std::abs(std::abs(p) - std::abs(z)) < 1e-9;
        }
        const auto real_pole = zpk(matched_z(tf_s, dt)).poles;
        all_inside = all_inside && real_pole.size() == 1 && std::abs(real_pole[0]) < 1.0;
    }

    const double fp = prewarp_frequency(200.0, 1000.0);

    double worst_half_power = 0.0;
    bool all_stable = true;
    for (std::size_t order = 1; order <= 11; ++order) {
        const TransferFunction bw = butterworth(order, 100.0, 1000.0);
        all_stable = all_stable && is_stable(bw) == Stability::stable;
        const double mag = std::abs(eval(bw, std::polar(1.0, 2.0 * kPi * 100.0 / 1000.0)));
        worst_half_power = std::max(worst_half_power, std::abs(mag - 1.0 / std::sqrt(2.0)));
    }
    const bool ok = all_inside && std::abs(fp - 231.26) <= 0.01 && all_stable && worst_half_power <= 1e-6;
    report(8, ok,
           fmt("max |z| %.6f; prewarp %.4f Hz; Butterworth 1..11 half-power error %.3e", max_radius, fp,
               worst_half_power) +
               (all_stable ? ", all stable" : ", UNSTABLE design"));
}

void criterion9() {
    // mean propagation
    const std::vector<double> h{0.5, 0.3, -0.2, 0.7, 0.1};
    const DiscreteSignal uni = white_noise(NoiseSpec{9, Uniform01{}}, 100000);
    const auto y = convolve(uni.samples(), h, ConvolutionMode::causal_truncated);
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());
    double hsum = 0.0;
    for (double v : h) hsum += v;
    const double mean_err = std::abs(mean - 0.5 * hsum);
    const double mean_model_err = std::abs(propagate_mean(h, 0.5) - 0.5 * hsum);

    // r_yy(0) for h = [1, 1] on unit-variance white noise
    const DiscreteSignal g = white_noise(NoiseSpec{10, Gaussian{0.0, 1.0}}, 100000);
    const std::vector<double> ones{1.0, 1.0};
    const DiscreteSignal yg(convolve(g.samples(), ones, ConvolutionMode::causal_truncated));
    const double r0 = autocorrelate(yg, 0).at(0);

    // deterministic identities with y = g * h, r_uu the lag sequence of g
    const std::vector<double> gd{1.0, -0.5, 0.25, 2.0, -1.0, 0.75};
    const std::vector<double> hd{0.3, -1.2, 0.8, 0.4};
    const LagSequence r_uu = impulse_autocorrelation(gd);
    const LagSequence r_hh = impulse_autocorrelation(hd);
    const LagSequence r_yy = autocorr_propagation(hd, r_uu);
    const auto yd = convolve(gd, hd);
    double ident = 0.0;
    for (long m = -static_cast<long>(yd.size()); m <= static_cast<long>(yd.size()); ++m) {
        double direct = 0.0;
        for (long l = 0; l < static_cast<long>(yd.size()); ++l) {
            const long j = l + m;
            if (j >= 0 && j < static_cast<long>(yd.size())) direct += yd[static_cast<std::size_t>(l)] * yd[static_cast<std::size_t>(j)];
        }
        ident = std::max(ident, std::abs(direct - r_yy.at(m)));
    }
    const std::size_t bins = r_yy.values.size();
    const auto s_yy = psd(r_yy, 1.0, bins);
    const auto s_uu = psd(r_uu, 1.0, bins);
    const auto s_hh = psd(r_hh, 1.0, bins);
    double spec = 0.0;
    for (std::size_t k = 0; k < bins; ++k) {
        spec = std::max(spec, std::abs(s_yy.bins[k] - s_uu.bins[k] * s_hh.bins[k]));
    }
    const bool ok = mean_err <= 0.01 && mean_model_err < 1e-12 && std::abs(r0 - 2.0) <= 0.05 &&
                    ident < 1e-8 && spec < 1e-8;
    report(9, ok,
           fmt("mean error %.3e, r_yy(0)=%.4f, autocorrelation identity %.3e, spectral identity %.3e",
               mean_err, r0, ident, spec));
}

}  // namespace

int main() {
    run(1, criterion1);
    run(2, criterion2);
    run(3, criterion3);
    run(4, criterion4);
    run(5, criterion5);
    run(6, criterion6);
    run(7, criterion7);
    run(8, criterion8);
    run(9, criterion9);
    return failures == 0 ? 0 : 1;
}
