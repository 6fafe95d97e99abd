#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "ltikit/errors.hpp"
#include "ltikit/filters.hpp"
#include "ltikit/io.hpp"
#include "ltikit/lti.hpp"
#include "ltikit/mra.hpp"
#include "ltikit/spectral.hpp"
#include "ltikit/stochastic.hpp"
#include "ltikit/sysid.hpp"

namespace ltikit::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct Options {
    // shared
    std::string out_path;
    std::string in_path;
    std::string tf_path;
    std::string taps_path;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    double fs = 0.0;
    double fc = 0.0;
    std::size_t order = 0;
    std::string window = "hamming";

    // gen
    std::string kind;
    double freq = 1.0;
    double amp = 1.0;
    long k0 = 0;
    std::string dist = "uniform";
    double mu = 0.0;
    double sigma = 1.0;
    std::string input_out;
    bool noiseless = false;

    // discretize / freqz / responses
    std::string method = "bilinear";
    std::optional<double> prewarp;
    std::optional<double> fmax;
    double t_end = 5.0;

    // mra
    std::vector<double> split;

    // dft
    bool use_fft = false;

    // sysid
    std::string input_path;
    std::string output_path;
    std::size_t nb = 2;
    std::size_t na = 2;
    double alpha = 1.0;
    bool drop_initial = false;
    std::string report_path;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        io::write_file(path, text);
    }
}

DiscreteSignal load_signal(const std::string& path) {
    std::istringstream is(io::read_file(path));
    return io::read_signal_csv(is);
}

TransferFunction load_tf(const std::string& path) {
    try {
        return io::tf_from_json(nlohmann::json::parse(io::read_file(path)));
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError("'" + path + "': " + e.what());
    }
}

std::string signal_text(const DiscreteSignal& s) {
    std::ostringstream os;
    io::write_signal_csv(os, s);
    return os.str();
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// A filter from --taps (FIR) or --tf (IIR); FIR sample rate from --fs when given.
Filter load_filter(const Options& o) {
    if (!o.taps_path.empty() == !o.tf_path.empty()) {
        throw ArgumentError("exactly one of --taps or --tf is required");
    }
    if (!o.taps_path.empty()) {
        std::istringstream is(io::read_file(o.taps_path));
        FirDesign fir;
        fir.taps = io::read_taps_csv(is);
        fir.sample_rate = o.fs;
        return fir;
    }
    return load_tf(o.tf_path);
}

std::size_t default_n(const Options& o, std::size_t fallback) { return o.n > 0 ? o.n : fallback; }

int cmd_gen(const Options& o, std::ostream& out) {
    DiscreteSignal s;
    if (o.kind == "exercise1") {
        s = sample_continuous([](double t) { return std::exp(-0.2 * t) * std::cos(2.0 * kPi * t); },
                              100.0, default_n(o, 320));
    } else if (o.kind == "exercise5") {
        s = multiscale_test_signal(o.seed);
    } else if (o.kind == "exercise6") {
        const std::size_t n = default_n(o, 2000);
        const DiscreteSignal u = sample_continuous(
            [](double t) { return std::sin(8.0 * kPi * t) + 3.0 * std::exp(-(t - 3.0) * (t - 3.0) / 2.0); },
            50.0, n);
        const TransferFunction sys({2.0, 1.8, -1.2}, {1.0, -0.5, 0.0}, Domain::z, 0.02);
        std::vector<double> y = simulate(sys, u.samples());
        if (!o.noiseless) {
            const DiscreteSignal noise = white_noise(NoiseSpec{o.seed, Uniform01{}}, n);
            for (std::size_t k = 0; k < n; ++k) y[k] += noise[k];
        }
        if (o.input_out.empty()) throw ArgumentError("gen exercise6 requires --input-out for u");
        io::write_file(o.input_out, signal_text(u));
        s = u.with_samples(std::move(y));
    } else if (o.kind == "tone") {
        const double f = o.freq, a = o.amp;
        s = sample_continuous([f, a](double t) { return a * std::sin(2.0 * kPi * f * t); },
                              o.fs > 0.0 ? o.fs : 1000.0, default_n(o, 1024));
    } else if (o.kind == "noise") {
        NoiseSpec spec{o.seed, Uniform01{}};
        if (o.dist == "gaussian") {
            spec.distribution = Gaussian{o.mu, o.sigma};
        } else if (o.dist != "uniform") {
            throw ArgumentError("--dist must be uniform or gaussian");
        }
        s = white_noise(spec, default_n(o, 1024),
                        o.fs > 0.0 ? std::optional<double>(o.fs) : std::nullopt);
    } else if (o.kind == "step" || o.kind == "delta") {
        const auto kind = o.kind == "step" ? ElementaryKind::step : ElementaryKind::delta;
        s = elementary(kind, default_n(o, 16), o.k0);
        if (o.fs > 0.0) s = DiscreteSignal(s.values(), o.fs);
    }
    emit(signal_text(s), o.out_path, out);
    return kExitOk;
}

int cmd_fir_design(const Options& o, std::ostream& out) {
    const FirDesign fir = firwin(o.order, o.fc, o.fs, window_from_string(o.window));
    std::ostringstream os;
    io::write_taps_csv(os, fir.taps);
    emit(os.str(), o.out_path, out);
    return kExitOk;
}

int cmd_iir_design(const Options& o, std::ostream& out) {
    emit(json_text(io::tf_to_json(butterworth(o.order, o.fc, o.fs))), o.out_path, out);
    return kExitOk;
}

int cmd_discretize(const Options& o, std::ostream& out) {
    const TransferFunction tf = load_tf(o.tf_path);
    if (!(o.fs > 0.0)) throw ArgumentError("--fs must be positive");
    const double dt = 1.0 / o.fs;
    TransferFunction result = [&] {
        if (o.method == "bilinear") return bilinear(tf, dt, o.prewarp);
        if (o.method == "matched") return matched_z(tf, dt);
        throw ArgumentError("--method must be bilinear or matched");
    }();
    emit(json_text(io::tf_to_json(result)), o.out_path, out);
    return kExitOk;
}

int cmd_freqz(const Options& o, std::ostream& out) {
    const Filter filter = load_filter(o);
    const std::size_t n = default_n(o, 512);
    SpectrumFrame f;
    if (const auto* fir = std::get_if<FirDesign>(&filter)) {
        std::vector<double> thetas(n);
        for (std::size_t k = 0; k < n; ++k) thetas[k] = kPi * static_cast<double>(k) / static_cast<double>(n);
        f = dtft(DiscreteSignal(fir->taps), thetas);
        if (o.fs > 0.0) f.sample_rate = o.fs;
    } else {
        const auto& tf = std::get<TransferFunction>(filter);
        std::vector<double> hz(n);
        double top = 0.0;
        if (tf.domain() == Domain::z) {
            top = 0.5 / tf.sample_period();
        } else {
            if (!o.fmax) throw ArgumentError("freqz on an s-domain function needs --fmax");
            top = *o.fmax;
        }
        for (std::size_t k = 0; k < n; ++k) hz[k] = top * static_cast<double>(k) / static_cast<double>(n);
        f = freq_response_hz(tf, hz);
    }
    std::ostringstream os;
    io::write_spectrum_csv(os, f);
    emit(os.str(), o.out_path, out);
    return kExitOk;
}

int cmd_filter(const Options& o, std::ostream& out, bool zero_phase_mode) {
    const Filter filter = load_filter(o);
    const DiscreteSignal u = load_signal(o.in_path);
    const DiscreteSignal y = zero_phase_mode ? zero_phase(filter, u) : apply(filter, u);
    emit(signal_text(y), o.out_path, out);
    return kExitOk;
}

int cmd_mra(const Options& o, std::ostream& out) {
    const DiscreteSignal u = load_signal(o.in_path);
    FrequencySplitting split;
    split.cutoffs = o.split;
    split.filter_order = o.order > 0 ? o.order : 511;
    split.window_kind = window_from_string(o.window);
    if (o.fs > 0.0) {
        split.sample_rate = o.fs;
    } else if (u.sample_rate()) {
        split.sample_rate = *u.sample_rate();
    } else {
        throw ArgumentError("mra needs --fs when the input has no time column");
    }
    std::ostringstream os;
    io::write_scales_csv(os, decompose(u, split));
    emit(os.str(), o.out_path, out);
    return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const TransferFunction tf = load_tf(o.tf_path);
    const DiscreteSignal u = load_signal(o.in_path);
    emit(signal_text(simulate(tf, u)), o.out_path, out);
    return kExitOk;
}

std::vector<double> time_grid(double fs, double t_end) {
    if (!(fs > 0.0)) throw ArgumentError("--fs must be positive for s-domain responses");
    const auto n = static_cast<std::size_t>(std::floor(t_end * fs + 1e-9)) + 1;
    std::vector<double> t(n);
    for (std::size_t k = 0; k < n; ++k) t[k] = static_cast<double>(k) / fs;
    return t;
}

int cmd_response(const Options& o, std::ostream& out, bool step) {
    const TransferFunction tf = load_tf(o.tf_path);
    DiscreteSignal y;
    if (tf.domain() == Domain::z) {
        const std::size_t n = default_n(o, 64);
        const auto kind = step ? ElementaryKind::step : ElementaryKind::delta;
        const DiscreteSignal u(elementary(kind, n, 0).values(), 1.0 / tf.sample_period());
        y = simulate(tf, u);
    } else {
        const auto t = time_grid(o.fs, o.t_end);
        y = DiscreteSignal(step ? step_response_s(tf, t) : impulse_response_s(tf, t), o.fs);
    }
    emit(signal_text(y), o.out_path, out);
    return kExitOk;
}

int cmd_dft(const Options& o, std::ostream& out) {
    const DiscreteSignal u = load_signal(o.in_path);
    const SpectrumFrame f = o.use_fft ? fft_pow2(u) : dft(u);
    std::ostringstream os;
    io::write_spectrum_csv(os, f);
    emit(os.str(), o.out_path, out);
    return kExitOk;
}

int cmd_sysid(const Options& o, std::ostream& out) {
    const DiscreteSignal u = load_signal(o.input_path);
    const DiscreteSignal y = load_signal(o.output_path);
    HankelRegression h = build_hankel(u, y, o.nb, o.na);
    if (o.drop_initial) h = h.drop_initial_rows();
    const RidgeSolution sol = ridge_solve(h, o.alpha);
    const double dt = u.sample_rate() ? 1.0 / *u.sample_rate() : 1.0;
    const TransferFunction model = model_from_coefficients(sol.w, o.nb, o.na, dt);

    nlohmann::json report;
    report["n_b"] = o.nb;
    report["n_a"] = o.na;
    report["alpha"] = o.alpha;
    report["rows"] = h.rows();
    report["w"] = sol.w;
    report["residual_norm"] = sol.residual_norm;
    report["normal_residual"] = sol.normal_residual;
    report["condition_estimate"] = sol.condition_estimate;
    report["stability"] = to_string(is_stable(model));
    report["model"] = io::tf_to_json(model);

    emit(json_text(io::tf_to_json(model)), o.out_path, out);
    if (!o.report_path.empty()) {
        io::write_file(o.report_path, json_text(report));
    } else if (!o.out_path.empty() && o.out_path != "-") {
        out << json_text(report);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"ltikit: LTI system analysis, filter design and identification"};
    app.require_subcommand(1);

    auto add_out = [&](CLI::App* c) { c->add_option("-o,--out", o.out_path, "Output path (stdout if omitted)"); };

    auto* gen = app.add_subcommand("gen", "Generate a test signal");
    gen->add_option("kind", o.kind, "Signal kind")
        ->required()
        ->check(CLI::IsMember({"exercise1", "exercise5", "exercise6", "tone", "noise", "step", "delta"}));
    gen->add_option("--seed", o.seed, "Noise seed");
    gen->add_option("--n", o.n, "Sample count");
    gen->add_option("--fs", o.fs, "Sample rate in Hz");
    gen->add_option("--freq", o.freq, "Tone frequency in Hz");
    gen->add_option("--amp", o.amp, "Tone amplitude");
    gen->add_option("--k0", o.k0, "Step/delta position");
    gen->add_option("--dist", o.dist, "Noise distribution: uniform or gaussian");
    gen->add_option("--mu", o.mu, "Gaussian mean");
    gen->add_option("--sigma", o.sigma, "Gaussian standard deviation");
    gen->add_option("--input-out", o.input_out, "exercise6: path for the input signal u");
    gen->add_flag("--noiseless", o.noiseless, "exercise6: omit the output noise");
    add_out(gen);

    auto* fir = app.add_subcommand("fir-design", "Window-method low-pass FIR taps");
    fir->add_option("--order", o.order, "Odd number of taps")->required();
    fir->add_option("--fc", o.fc, "Cutoff in Hz")->required();
    fir->add_option("--fs", o.fs, "Sample rate in Hz")->required();
    fir->add_option("--window", o.window, "rectangular, hanning, hamming or blackman");
    add_out(fir);

    auto* iir = app.add_subcommand("iir-design", "Butterworth low-pass (bilinear, pre-warped)");
    iir->add_option("--order", o.order, "Filter order")->required();
    iir->add_option("--fc", o.fc, "Cutoff in Hz")->required();
    iir->add_option("--fs", o.fs, "Sample rate in Hz")->required();
    add_out(iir);

    auto* disc = app.add_subcommand("discretize", "Map an s-domain transfer function to z");
    disc->add_option("--tf", o.tf_path, "s-domain transfer function JSON")->required();
    disc->add_option("--fs", o.fs, "Sample rate in Hz")->required();
    disc->add_option("--method", o.method, "bilinear or matched");
    disc->add_option("--prewarp", o.prewarp, "Pre-warp frequency in Hz (bilinear)");
    add_out(disc);

    auto* freqz = app.add_subcommand("freqz", "Frequency response on [0, Nyquist)");
    freqz->add_option("--tf", o.tf_path, "Transfer function JSON");
    freqz->add_option("--taps", o.taps_path, "FIR taps CSV");
    freqz->add_option("--n", o.n, "Number of grid points");
    freqz->add_option("--fs", o.fs, "Sample rate for FIR taps");
    freqz->add_option("--fmax", o.fmax, "Upper frequency for s-domain functions (Hz)");
    add_out(freqz);

    CLI::App* filt_cmds[2];
    const char* filt_names[2] = {"filter", "filtfilt"};
    const char* filt_desc[2] = {"Causal filtering", "Zero-phase filtering"};
    for (int i = 0; i < 2; ++i) {
        auto* c = app.add_subcommand(filt_names[i], filt_desc[i]);
        c->add_option("--tf", o.tf_path, "IIR transfer function JSON");
        c->add_option("--taps", o.taps_path, "FIR taps CSV");
        c->add_option("--in", o.in_path, "Input signal CSV")->required();
        add_out(c);
        filt_cmds[i] = c;
    }

    auto* mra = app.add_subcommand("mra", "Multi-resolution decomposition");
    mra->add_option("--split", o.split, "Cutoffs in Hz, comma separated")->required()->delimiter(',');
    mra->add_option("--order", o.order, "Odd FIR order (default 511)");
    mra->add_option("--window", o.window, "Window kind");
    mra->add_option("--fs", o.fs, "Sample rate when the input has no time column");
    mra->add_option("--in", o.in_path, "Input signal CSV")->required();
    add_out(mra);

    auto* sim = app.add_subcommand("simulate", "Run a z-domain system from rest");
    sim->add_option("--tf", o.tf_path, "z-domain transfer function JSON")->required();
    sim->add_option("--in", o.in_path, "Input signal CSV")->required();
    add_out(sim);

    CLI::App* resp_cmds[2];
    const char* resp_names[2] = {"impulse", "step-response"};
    for (int i = 0; i < 2; ++i) {
        auto* c = app.add_subcommand(resp_names[i], i == 0 ? "Impulse response" : "Step response");
        c->add_option("--tf", o.tf_path, "Transfer function JSON")->required();
        c->add_option("--n", o.n, "Samples (z-domain)");
        c->add_option("--fs", o.fs, "Evaluation rate in Hz (s-domain)");
        c->add_option("--t-end", o.t_end, "Final time in seconds (s-domain)");
        add_out(c);
        resp_cmds[i] = c;
    }

    auto* dftc = app.add_subcommand("dft", "Unitary DFT of a signal");
    dftc->add_option("--in", o.in_path, "Input signal CSV")->required();
    dftc->add_flag("--fft", o.use_fft, "Use the radix-2 FFT (power-of-two length)");
    add_out(dftc);

    auto* sysid = app.add_subcommand("sysid", "Ridge identification of an LTI difference equation");
    sysid->add_option("--input", o.input_path, "Input signal CSV")->required();
    sysid->add_option("--output", o.output_path, "Output signal CSV")->required();
    sysid->add_option("--nb", o.nb, "Feedforward lags");
    sysid->add_option("--na", o.na, "Feedback lags");
    sysid->add_option("--alpha", o.alpha, "Ridge parameter");
    sysid->add_flag("--drop-initial", o.drop_initial, "Drop rows touching the zero pre-history");
    sysid->add_option("--report", o.report_path, "Diagnostics JSON path");
    add_out(sysid);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(o, out);
        if (fir->parsed()) return cmd_fir_design(o, out);
        if (iir->parsed()) return cmd_iir_design(o, out);
        if (disc->parsed()) return cmd_discretize(o, out);
        if (freqz->parsed()) return cmd_freqz(o, out);
        if (filt_cmds[0]->parsed()) return cmd_filter(o, out, false);
        if (filt_cmds[1]->parsed()) return cmd_filter(o, out, true);
        if (mra->parsed()) return cmd_mra(o, out);
        if (sim->parsed()) return cmd_simulate(o, out);
        if (resp_cmds[0]->parsed()) return cmd_response(o, out, false);
        if (resp_cmds[1]->parsed()) return cmd_response(o, out, true);
        if (dftc->parsed()) return cmd_dft(o, out);
        if (sysid->parsed()) return cmd_sysid(o, out);
    } catch (const std::exception& e) {
        std::string msg = e.what();
        for (char& c : msg) {
            if (c == '\n') c = ' ';
        }
        err << "error: " << msg << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace ltikit::cli
