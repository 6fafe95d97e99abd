#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ltikit::poly {

using Complex = std::complex<double>;

// All polynomials are coefficient vectors in ascending powers: c[0] + c[1] x + ...

Complex evaluate(std::span<const double> c, Complex x);
double evaluate(std::span<const double> c, double x);

// Degree after dropping trailing (highest-power) zeros; -1 for the zero polynomial.
int degree(std::span<const double> c);

std::vector<double> trim(std::span<const double> c);

std::vector<double> multiply(std::span<const double> p, std::span<const double> q);

// Monic real polynomial prod (x - r); roots must come in conjugate pairs.
std::vector<double> from_roots(std::span<const Complex> roots);

/// Roots of a real polynomial via the eigenvalues of its companion matrix,
/// refined by Newton steps. Complex roots are returned as exact conjugate pairs.
/// Throws NumericalError when a root's residual exceeds 1e-8 of the
/// coefficient scale sum |c_i| |r|^i.
std::vector<Complex> roots(std::span<const double> c);

}  // namespace ltikit::poly
