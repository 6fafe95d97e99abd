#include "ltikit/lti.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ltikit/errors.hpp"
#include "ltikit/polynomial.hpp"

namespace ltikit {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(std::span<const double> c, const char* what) {
    for (double v : c) {
        if (!std::isfinite(v)) throw ArgumentError(std::string(what) + ": non-finite coefficient");
    }
}

std::string format_complex(Complex x) {
    std::ostringstream os;
    os.precision(17);
    os << x.real() << (x.imag() < 0 ? " - " : " + ") << std::abs(x.imag()) << "j";
    return os.str();
}

// Numerator and denominator of a z-domain function as polynomials in
// positive powers of z: H(z) = N(z) / D(z), both of degree <= L.
struct PositivePowers {
    std::vector<double> num;
    std::vector<double> den;
};

PositivePowers z_positive(const TransferFunction& tf) {
    const std::size_t L = std::max(tf.b().size(), tf.a().size()) - 1;
    PositivePowers p{std::vector<double>(L + 1, 0.0), std::vector<double>(L + 1, 0.0)};
    for (std::size_t n = 0; n < tf.b().size(); ++n) p.num[L - n] = tf.b()[n];
    for (std::size_t n = 0; n < tf.a().size(); ++n) p.den[L - n] = tf.a()[n];
    return p;
}

double leading(std::span<const double> c) {
    const int d = poly::degree(c);
    return d < 0 ? 0.0 : c[static_cast<std::size_t>(d)];
}

std::vector<double> trim_trailing(std::vector<double> c) {
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    return c;
}

double coefficient_scale(std::span<const double> c, double r) {
    double s = 0.0;
    double p = 1.0;
    for (double ci : c) {
        s += std::abs(ci) * p;
        p *= r;
    }
    return s;
}

Complex nearest(std::span<const Complex> pts, Complex x) {
    Complex best = pts.front();
    for (const Complex& p : pts) {
        if (std::abs(p - x) < std::abs(best - x)) best = p;
    }
    return best;
}

void require_simple(std::span<const Complex> poles) {
    double max_mag = 0.0;
    for (const auto& p : poles) max_mag = std::max(max_mag, std::abs(p));
    const double tol = 1e-8 * max_mag;
    for (std::size_t i = 0; i < poles.size(); ++i) {
        for (std::size_t j = i + 1; j < poles.size(); ++j) {
            if (std::abs(poles[i] - poles[j]) <= tol) {
                throw UnsupportedStructure("repeated pole at " + format_complex(poles[i]) +
                                           "; residue expansion needs simple poles");
            }
        }
    }
}

}  // namespace

std::string to_string(Domain d) { return d == Domain::s ? "s" : "z"; }

Domain domain_from_string(const std::string& s) {
    if (s == "s") return Domain::s;
    if (s == "z") return Domain::z;
    throw ArgumentError("unknown domain '" + s + "' (expected s or z)");
}

std::string to_string(Stability s) {
    switch (s) {
        case Stability::stable: return "stable";
        case Stability::unstable: return "unstable";
        case Stability::marginal: return "marginal";
    }
    return "unknown";
}

TransferFunction::TransferFunction(std::vector<double> b, std::vector<double> a, Domain domain,
                                   std::optional<double> dt)
    : b_(std::move(b)), a_(std::move(a)), domain_(domain), dt_(dt) {
    if (a_.empty()) throw ArgumentError("TransferFunction: empty denominator");
    if (b_.empty()) throw ArgumentError("TransferFunction: empty numerator");
    require_finite(a_, "TransferFunction");
    require_finite(b_, "TransferFunction");
    if (domain_ == Domain::z) {
        if (!dt_ || !(*dt_ > 0.0) || !std::isfinite(*dt_)) {
            throw ArgumentError("TransferFunction: z-domain requires a positive sample period dt");
        }
        if (a_.front() == 0.0) throw ArgumentError("TransferFunction: a[0] must be nonzero");
    } else {
        if (dt_) throw ArgumentError("TransferFunction: s-domain functions carry no dt");
        if (a_.back() == 0.0) {
            throw ArgumentError("TransferFunction: leading denominator coefficient must be nonzero");
        }
        if (poly::degree(b_) > poly::degree(a_)) {
            throw ArgumentError("TransferFunction: improper s-domain function (deg b > deg a)");
        }
    }
}

double TransferFunction::sample_period() const {
    if (!dt_) throw ArgumentError("TransferFunction: s-domain function has no sample period");
    return *dt_;
}

bool TransferFunction::is_strictly_proper() const {
    if (domain_ == Domain::s) return poly::degree(b_) < poly::degree(a_);
    return b_.front() == 0.0;
}

TransferFunction tf_from_lccde(std::vector<double> a, std::vector<double> b, Domain domain,
                               std::optional<double> dt) {
    return TransferFunction(std::move(b), std::move(a), domain, dt);
}

Lccde lccde_from_tf(const TransferFunction& tf) {
    const double norm = tf.domain() == Domain::z ? tf.a().front() : tf.a().back();
    Lccde out{tf.a(), tf.b()};
    for (double& v : out.a) v /= norm;
    for (double& v : out.b) v /= norm;
    return out;
}

Complex eval(const TransferFunction& tf, Complex x) {
    std::span<const double> num, den;
    PositivePowers zp;
    if (tf.domain() == Domain::s) {
        num = tf.b();
        den = tf.a();
    } else {
        zp = z_positive(tf);
        num = zp.num;
        den = zp.den;
    }
    const Complex d = poly::evaluate(den, x);
    if (std::abs(d) <= 1e-12 * coefficient_scale(den, std::abs(x))) {
        const auto poles = poly::roots(den);
        if (!poles.empty()) {
            const Complex p = nearest(poles, x);
            if (d == Complex{0.0, 0.0} || std::abs(p - x) <= 1e-12 * std::max(1.0, std::abs(p))) {
                throw DomainError("transfer function evaluated at pole " + format_complex(p));
            }
        }
    }
    return poly::evaluate(num, x) / d;
}

SpectrumFrame freq_response(const TransferFunction& tf, std::span<const double> grid) {
    SpectrumFrame f;
    f.grid.assign(grid.begin(), grid.end());
    f.bins.reserve(grid.size());
    for (double w : grid) {
        const Complex x = tf.domain() == Domain::s ? Complex{0.0, w} : std::polar(1.0, w);
        f.bins.push_back(eval(tf, x));
    }
    f.unit = FrequencyUnit::radians_per_sample;
    return f;
}

SpectrumFrame freq_response_hz(const TransferFunction& tf, std::span<const double> freqs_hz) {
    std::vector<double> grid(freqs_hz.begin(), freqs_hz.end());
    const double scale = tf.domain() == Domain::s ? 2.0 * kPi : 2.0 * kPi * tf.sample_period();
    for (double& g : grid) g *= scale;
    SpectrumFrame f = freq_response(tf, grid);
    f.grid.assign(freqs_hz.begin(), freqs_hz.end());
    f.unit = FrequencyUnit::hertz;
    if (tf.domain() == Domain::z) f.sample_rate = 1.0 / tf.sample_period();
    return f;
}

ZeroPoleGain zpk(const TransferFunction& tf) {
    ZeroPoleGain out;
    out.domain = tf.domain();
    out.dt = tf.dt();
    std::vector<double> num, den;
    if (tf.domain() == Domain::s) {
        num = poly::trim(tf.b());
        den = poly::trim(tf.a());
    } else {
        auto zp = z_positive(tf);
        num = poly::trim(zp.num);
        den = poly::trim(zp.den);
    }
    out.gain = leading(num) / leading(den);
    if (poly::degree(num) >= 0) out.zeros = poly::roots(num);
    out.poles = poly::roots(den);
    return out;
}

TransferFunction tf_from_zpk(const ZeroPoleGain& z) {
    if (z.zeros.size() > z.poles.size()) {
        throw ArgumentError("tf_from_zpk: more zeros than poles (improper or non-causal)");
    }
    std::vector<double> num = poly::from_roots(z.zeros);
    for (double& v : num) v *= z.gain;
    std::vector<double> den = poly::from_roots(z.poles);
    if (z.domain == Domain::s) {
        return TransferFunction(std::move(num), std::move(den), Domain::s);
    }
    const std::size_t L = z.poles.size();
    std::vector<double> b(L + 1, 0.0), a(L + 1, 0.0);
    for (std::size_t n = 0; n <= L; ++n) {
        const std::size_t p = L - n;
        if (p < num.size()) b[n] = num[p];
        a[n] = den[p];
    }
    return TransferFunction(trim_trailing(std::move(b)), trim_trailing(std::move(a)), Domain::z,
                            z.dt);
}

Stability classify_poles(std::span<const Complex> poles, Domain domain) {
    if (poles.empty()) return Stability::stable;
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& p : poles) {
        worst = std::max(worst, domain == Domain::s ? p.real() : std::abs(p));
    }
    const double boundary = domain == Domain::s ? 0.0 : 1.0;
    if (worst < boundary - kStabilityTolerance) return Stability::stable;
    if (worst > boundary + kStabilityTolerance) return Stability::unstable;
    return Stability::marginal;
}

Stability is_stable(const TransferFunction& tf) {
    return classify_poles(zpk(tf).poles, tf.domain());
}

std::vector<double> simulate(const TransferFunction& tf, std::span<const double> u) {
    if (tf.domain() != Domain::z) throw ArgumentError("simulate: requires a z-domain function");
    const auto& a = tf.a();
    const auto& b = tf.b();
    const double a0 = a.front();
    std::vector<double> y(u.size(), 0.0);
    for (std::size_t k = 0; k < u.size(); ++k) {
        double acc = 0.0;
        for (std::size_t n = 0; n < b.size() && n <= k; ++n) acc += b[n] * u[k - n];
        for (std::size_t n = 1; n < a.size() && n <= k; ++n) acc -= a[n] * y[k - n];
        y[k] = acc / a0;
    }
    return y;
}

DiscreteSignal simulate(const TransferFunction& tf, const DiscreteSignal& u) {
    return u.with_samples(simulate(tf, u.samples()));
}

DiscreteSignal impulse_response_z(const TransferFunction& tf, std::size_t n) {
    if (n == 0) throw ArgumentError("impulse_response_z: n must be >= 1");
    const DiscreteSignal d = elementary(ElementaryKind::delta, n, 0);
    return DiscreteSignal(simulate(tf, d.samples()), 1.0 / tf.sample_period());
}

TransferFunction series(const TransferFunction& h1, const TransferFunction& h2) {
    if (h1.domain() != h2.domain()) throw ArgumentError("series: domain mismatch");
    if (h1.domain() == Domain::z && std::abs(h1.sample_period() - h2.sample_period()) >
                                        1e-12 * h1.sample_period()) {
        throw ArgumentError("series: sample period mismatch");
    }
    return TransferFunction(poly::multiply(h1.b(), h2.b()), poly::multiply(h1.a(), h2.a()),
                            h1.domain(), h1.dt());
}

std::vector<double> inverse_laplace(const TransferFunction& tf, std::span<const double> t_grid) {
    if (tf.domain() != Domain::s) throw ArgumentError("inverse_laplace: requires an s-domain function");
    if (!tf.is_strictly_proper()) {
        throw ArgumentError("inverse_laplace: function must be strictly proper (deg b < deg a)");
    }
    std::vector<double> y(t_grid.size(), 0.0);
    if (poly::degree(tf.b()) < 0) return y;

    const auto poles = poly::roots(tf.a());
    require_simple(poles);
    const double a_lead = tf.a().back();

    // r_n = B(p_n) / A'(p_n), with A'(p_n) = a_lead prod_{m != n} (p_n - p_m)
    std::vector<Complex> residues(poles.size());
    for (std::size_t n = 0; n < poles.size(); ++n) {
        Complex d{a_lead, 0.0};
        for (std::size_t m = 0; m < poles.size(); ++m) {
            if (m != n) d *= poles[n] - poles[m];
        }
        residues[n] = poly::evaluate(tf.b(), poles[n]) / d;
    }

    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        Complex acc{0.0, 0.0};
        double mag = 0.0;
        for (std::size_t n = 0; n < poles.size(); ++n) {
            const Complex term = residues[n] * std::exp(poles[n] * t_grid[i]);
            acc += term;
            mag += std::abs(term);
        }
        if (std::abs(acc.imag()) > 1e-9 * std::max(1.0, mag)) {
            throw NumericalError("inverse_laplace: reconstructed response is not real");
        }
        y[i] = acc.real();
    }
    return y;
}

std::vector<double> impulse_response_s(const TransferFunction& tf, std::span<const double> t_grid) {
    return inverse_laplace(tf, t_grid);
}

std::vector<double> step_response_s(const TransferFunction& tf, std::span<const double> t_grid) {
    if (tf.domain() != Domain::s) throw ArgumentError("step_response_s: requires an s-domain function");
    const TransferFunction integrator({1.0}, {0.0, 1.0}, Domain::s);
    return inverse_laplace(series(tf, integrator), t_grid);
}

TransferFunction matched_z(const TransferFunction& tf_s, double dt) {
    if (tf_s.domain() != Domain::s) throw ArgumentError("matched_z: requires an s-domain function");
    if (!(dt > 0.0)) throw ArgumentError("matched_z: dt must be positive");

    const ZeroPoleGain zs = zpk(tf_s);
    require_simple(zs.poles);

    auto map = [dt](Complex x) {
        if (x.real() * dt > 700.0) {
            throw NumericalError("matched_z: exp overflow mapping " + format_complex(x));
        }
        return std::exp(x * dt);
    };

    ZeroPoleGain zz;
    zz.domain = Domain::z;
    zz.dt = dt;
    zz.gain = 1.0;
    for (const auto& x : zs.zeros) zz.zeros.push_back(map(x));
    for (const auto& x : zs.poles) zz.poles.push_back(map(x));
    while (zz.zeros.size() < zz.poles.size()) zz.zeros.emplace_back(-1.0, 0.0);

    auto at_origin = [](std::span<const Complex> v) {
        return std::any_of(v.begin(), v.end(), [](const Complex& x) { return std::abs(x) < 1e-12; });
    };
    const TransferFunction unit = tf_from_zpk(zz);
    double k = 0.0;
    if (zs.gain == 0.0) {
        k = 0.0;
    } else if (!at_origin(zs.poles) && !at_origin(zs.zeros)) {
        k = eval(tf_s, Complex{0.0, 0.0}).real() / eval(unit, Complex{1.0, 0.0}).real();
    } else {
        const Complex ratio = eval(tf_s, Complex{0.0, kPi / (2.0 * dt)}) / eval(unit, Complex{0.0, 1.0});
        k = std::abs(ratio) * (ratio.real() < 0.0 ? -1.0 : 1.0);
    }
    zz.gain = k;
    return tf_from_zpk(zz);
}

double prewarp_frequency(double fc, double fs) {
    if (!(fs > 0.0)) throw ArgumentError("prewarp_frequency: fs must be positive");
    if (!(fc > 0.0) || !(fc < fs / 2.0)) {
        throw ArgumentError("prewarp_frequency: fc must lie in (0, fs/2)");
    }
    return fs / kPi * std::tan(kPi * fc / fs);
}

namespace {

double bilinear_constant(double dt, std::optional<double> prewarp_fc) {
    if (!(dt > 0.0)) throw ArgumentError("bilinear: dt must be positive");
    if (!prewarp_fc) return 2.0 / dt;
    const double fc = *prewarp_fc;
    if (!(fc > 0.0) || !(fc < 0.5 / dt)) {
        throw ArgumentError("bilinear: pre-warp frequency must lie in (0, Nyquist)");
    }
    return 2.0 * kPi * fc / std::tan(kPi * fc * dt);
}

// coefficients of (1 - w)^m (1 + w)^n in ascending powers of w
std::vector<double> binomial_product(std::size_t m, std::size_t n) {
    std::vector<double> p{1.0};
    const std::vector<double> minus{1.0, -1.0};
    const std::vector<double> plus{1.0, 1.0};
    for (std::size_t i = 0; i < m; ++i) p = poly::multiply(p, minus);
    for (std::size_t i = 0; i < n; ++i) p = poly::multiply(p, plus);
    return p;
}

}  // namespace

TransferFunction bilinear(const TransferFunction& tf_s, double dt, std::optional<double> prewarp_fc) {
    if (tf_s.domain() != Domain::s) throw ArgumentError("bilinear: requires an s-domain function");
    const double c = bilinear_constant(dt, prewarp_fc);
    const std::size_t order = static_cast<std::size_t>(poly::degree(tf_s.a()));

    auto substitute = [&](std::span<const double> coeffs) {
        std::vector<double> out(order + 1, 0.0);
        double ck = 1.0;
        for (std::size_t k = 0; k < coeffs.size() && k <= order; ++k, ck *= c) {
            if (coeffs[k] == 0.0) continue;
            const auto term = binomial_product(k, order - k);
            for (std::size_t i = 0; i < term.size(); ++i) out[i] += coeffs[k] * ck * term[i];
        }
        return out;
    };
    std::vector<double> b = substitute(tf_s.b());
    std::vector<double> a = substitute(tf_s.a());
    if (std::abs(a.front()) <= 1e-14 * coefficient_scale(a, 1.0)) {
        throw NumericalError("bilinear: analog pole at s = c maps to z = infinity");
    }
    const double a0 = a.front();
    for (double& v : b) v /= a0;
    for (double& v : a) v /= a0;
    return TransferFunction(trim_trailing(std::move(b)), trim_trailing(std::move(a)), Domain::z, dt);
}

ZeroPoleGain bilinear(const ZeroPoleGain& zs, double dt, std::optional<double> prewarp_fc) {
    if (zs.domain != Domain::s) throw ArgumentError("bilinear: requires an s-domain factorization");
    if (zs.zeros.size() > zs.poles.size()) throw ArgumentError("bilinear: improper factorization");
    const double c = bilinear_constant(dt, prewarp_fc);

    ZeroPoleGain zz;
    zz.domain = Domain::z;
    zz.dt = dt;
    Complex gain{zs.gain, 0.0};
    auto map = [&](Complex x) {
        if (std::abs(c - x) <= 1e-14 * c) {
            throw NumericalError("bilinear: analog root at s = c maps to z = infinity");
        }
        return (c + x) / (c - x);
    };
    for (const auto& x : zs.zeros) {
        zz.zeros.push_back(map(x));
        gain *= c - x;
    }
    for (const auto& x : zs.poles) {
        zz.poles.push_back(map(x));
        gain /= c - x;
    }
    while (zz.zeros.size() < zz.poles.size()) zz.zeros.emplace_back(-1.0, 0.0);
    zz.gain = gain.real();
    return zz;
}

}  // namespace ltikit
