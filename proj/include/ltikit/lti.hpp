#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ltikit/signal.hpp"
#include "ltikit/spectral.hpp"

namespace ltikit {

enum class Domain { s, z };

std::string to_string(Domain d);
Domain domain_from_string(const std::string& s);

/// Rational transfer function H = B / A of a SISO LTI system.
///
/// s-domain: b and a hold ascending powers of s, so a = {5, 2, 1} is
/// s^2 + 2 s + 5. The highest-degree coefficient of a must be nonzero and
/// deg b <= deg a.
///
/// z-domain: b and a hold ascending powers of z^-1, i.e. the coefficients of
/// the difference equation sum a_n y[k-n] = sum b_n u[k-n]; a[0] != 0 and
/// dt is the sample period.
class TransferFunction {
public:
    TransferFunction(std::vector<double> b, std::vector<double> a, Domain domain,
                     std::optional<double> dt = std::nullopt);

    [[nodiscard]] const std::vector<double>& b() const noexcept { return b_; }
    [[nodiscard]] const std::vector<double>& a() const noexcept { return a_; }
    [[nodiscard]] Domain domain() const noexcept { return domain_; }
    [[nodiscard]] std::optional<double> dt() const noexcept { return dt_; }

    // Sample period; throws for s-domain functions.
    [[nodiscard]] double sample_period() const;

    [[nodiscard]] bool is_strictly_proper() const;

private:
    std::vector<double> b_;
    std::vector<double> a_;
    Domain domain_;
    std::optional<double> dt_;
};

/// LCCDE coefficients, normalized so a[0] = 1 (z) or the leading a = 1 (s).
struct Lccde {
    std::vector<double> a;
    std::vector<double> b;
};

TransferFunction tf_from_lccde(std::vector<double> a, std::vector<double> b, Domain domain,
                               std::optional<double> dt = std::nullopt);
Lccde lccde_from_tf(const TransferFunction& tf);

/// Factored form. For both domains H(x) = gain * prod(x - zero) / prod(x - pole),
/// with x = s or x = z (positive powers). z-domain factorizations include the
/// roots at the origin implied by differing numerator/denominator lengths.
struct ZeroPoleGain {
    std::vector<Complex> zeros;
    std::vector<Complex> poles;
    double gain = 1.0;
    Domain domain = Domain::s;
    std::optional<double> dt;
};

Complex eval(const TransferFunction& tf, Complex x);

// s-domain: grid is angular frequency omega (rad/s), evaluated at s = j omega.
// z-domain: grid is digital frequency theta (rad/sample), evaluated at z = e^{j theta}.
SpectrumFrame freq_response(const TransferFunction& tf, std::span<const double> grid);

// Same, with the grid given in Hz (z-domain uses theta = 2 pi f dt).
SpectrumFrame freq_response_hz(const TransferFunction& tf, std::span<const double> freqs_hz);

ZeroPoleGain zpk(const TransferFunction& tf);
TransferFunction tf_from_zpk(const ZeroPoleGain& zpk);

enum class Stability { stable, unstable, marginal };

std::string to_string(Stability s);

inline constexpr double kStabilityTolerance = 1e-9;

Stability is_stable(const TransferFunction& tf);
Stability classify_poles(std::span<const Complex> poles, Domain domain);

// Recursive difference-equation solution from rest; z-domain only.
DiscreteSignal simulate(const TransferFunction& tf, const DiscreteSignal& u);
std::vector<double> simulate(const TransferFunction& tf, std::span<const double> u);

DiscreteSignal impulse_response_z(const TransferFunction& tf, std::size_t n);

// Series connection H1 * H2; both must share a domain (and dt for z).
TransferFunction series(const TransferFunction& h1, const TransferFunction& h2);

/// Inverse Laplace transform of a strictly proper s-domain function with
/// simple poles, by residue expansion sum r_n e^{p_n t}, evaluated on t_grid.
/// Throws UnsupportedStructure for repeated poles.
std::vector<double> inverse_laplace(const TransferFunction& tf, std::span<const double> t_grid);

std::vector<double> impulse_response_s(const TransferFunction& tf, std::span<const double> t_grid);
std::vector<double> step_response_s(const TransferFunction& tf, std::span<const double> t_grid);

/// Matched pole-zero discretization: every finite pole and zero x maps to
/// e^{x dt}, zeros at infinity map to z = -1, and the gain matches the DC
/// value H(z=1) = H(s=0). With a pole or zero at s = 0 the gain is matched at
/// a quarter of the sample rate instead.
TransferFunction matched_z(const TransferFunction& tf_s, double dt);

// f' = (fs / pi) tan(pi fc / fs).
double prewarp_frequency(double fc, double fs);

/// Bilinear (Tustin) substitution s = c (1 - z^-1) / (1 + z^-1), c = 2/dt, or
/// c = 2 pi fc / tan(pi fc dt) when a pre-warp frequency is given so that the
/// digital response equals the analog one at fc.
TransferFunction bilinear(const TransferFunction& tf_s, double dt,
                          std::optional<double> prewarp_fc = std::nullopt);

// Same mapping applied to a factored s-domain system, without root finding.
ZeroPoleGain bilinear(const ZeroPoleGain& zpk_s, double dt,
                      std::optional<double> prewarp_fc = std::nullopt);

}  // namespace ltikit
