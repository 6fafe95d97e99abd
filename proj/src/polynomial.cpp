#include "ltikit/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ltikit/errors.hpp"

namespace ltikit::poly {

Complex evaluate(std::span<const double> c, Complex x) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

double evaluate(std::span<const double> c, double x) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

int degree(std::span<const double> c) {
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] != 0.0) return static_cast<int>(i);
    }
    return -1;
}

std::vector<double> trim(std::span<const double> c) {
    const int d = degree(c);
    if (d < 0) return {0.0};
    return {c.begin(), c.begin() + d + 1};
}

std::vector<double> multiply(std::span<const double> p, std::span<const double> q) {
    if (p.empty() || q.empty()) return {};
    std::vector<double> r(p.size() + q.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    }
    return r;
}

std::vector<double> from_roots(std::span<const Complex> roots) {
    std::vector<Complex> c{Complex{1.0, 0.0}};
    for (const Complex& r : roots) {
        std::vector<Complex> next(c.size() + 1, Complex{0.0, 0.0});
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    double scale = 0.0;
    for (const auto& v : c) scale = std::max(scale, std::abs(v));
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (std::abs(c[i].imag()) > 1e-9 * std::max(scale, 1.0)) {
            throw ArgumentError("poly::from_roots: roots are not closed under conjugation");
        }
        out[i] = c[i].real();
    }
    return out;
}

namespace {

double residual_scale(std::span<const double> c, Complex r) {
    double s = 0.0;
    double p = 1.0;
    const double m = std::abs(r);
    for (double ci : c) {
        s += std::abs(ci) * p;
        p *= m;
    }
    return s;
}

// Newton refinement on p; keeps the better of the input and the refined root.
Complex polish(std::span<const double> c, std::span<const double> dc, Complex r) {
    Complex best = r;
    double best_res = std::abs(evaluate(c, r));
    for (int it = 0; it < 8 && best_res > 0.0; ++it) {
        const Complex d = evaluate(dc, r);
        if (d == Complex{0.0, 0.0}) break;
        r -= evaluate(c, r) / d;
        const double res = std::abs(evaluate(c, r));
        if (!(res < best_res)) break;
        best = r;
        best_res = res;
    }
    return best;
}

}  // namespace

std::vector<Complex> roots(std::span<const double> coeffs) {
    const std::vector<double> c = trim(coeffs);
    const int n = degree(c);
    if (n < 0) throw ArgumentError("poly::roots: zero polynomial");
    if (n == 0) return {};

    // exact roots at the origin
    std::size_t n_origin = 0;
    while (c[n_origin] == 0.0) ++n_origin;
    if (n_origin > 0) {
        std::vector<Complex> out(n_origin, Complex{0.0, 0.0});
        const auto rest = roots(std::span<const double>(c).subspan(n_origin));
        out.insert(out.end(), rest.begin(), rest.end());
        std::sort(out.begin(), out.end(), [](const Complex& x, const Complex& y) {
            if (x.real() != y.real()) return x.real() < y.real();
            return x.imag() < y.imag();
        });
        return out;
    }

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(n)];

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("poly::roots: companion eigenvalue iteration did not converge");
    }

    std::vector<double> dc(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) dc[static_cast<std::size_t>(i - 1)] = i * c[static_cast<std::size_t>(i)];

    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(n));
    const auto ev = solver.eigenvalues();
    for (int i = 0; i < n; ++i) {
        const Complex r = ev(i);
        if (r.imag() == 0.0) {
            const Complex p = polish(c, dc, r);
            out.emplace_back(p.real(), 0.0);
        } else if (r.imag() > 0.0) {
            const Complex p = polish(c, dc, r);
            out.push_back(p);
            out.push_back(std::conj(p));
        }
    }
    if (out.size() != static_cast<std::size_t>(n)) {
        throw NumericalError("poly::roots: eigenvalues are not conjugate-paired");
    }
    for (const Complex& r : out) {
        if (std::abs(evaluate(c, r)) > 1e-8 * residual_scale(c, r)) {
            throw NumericalError("poly::roots: residual too large at root (" +
                                 std::to_string(r.real()) + ", " + std::to_string(r.imag()) + ")");
        }
    }
    std::sort(out.begin(), out.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return out;
}

}  // namespace ltikit::poly
