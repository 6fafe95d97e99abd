#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ltikit/lti.hpp"
#include "ltikit/signal.hpp"

namespace ltikit {

/// Lagged regression y = H w for an LTI difference equation.
///
/// Columns are u[k], u[k-1], ..., u[k-n_b], y[k-1], ..., y[k-n_a]; samples
/// before k = 0 read as zero. The matching coefficient vector is
/// w = [b_0, ..., b_{n_b}, -a_1, ..., -a_{n_a}] for a system normalized to a_0 = 1,
/// i.e. the feedback entries carry the sign they have in the recursion.
struct HankelRegression {
    std::vector<double> data;  // row-major, rows() x cols()
    std::vector<double> target;
    std::size_t n_b = 0;
    std::size_t n_a = 0;
    std::size_t first_row = 0;  // index of the original sample held in row 0

    [[nodiscard]] std::size_t rows() const noexcept { return target.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return n_b + 1 + n_a; }
    [[nodiscard]] double at(std::size_t r, std::size_t c) const { return data[r * cols() + c]; }

    // Copy without the first max(n_b, n_a) rows, whose lags reach into the zero pre-history.
    [[nodiscard]] HankelRegression drop_initial_rows() const;
};

HankelRegression build_hankel(const DiscreteSignal& u, const DiscreteSignal& y, std::size_t n_b,
                              std::size_t n_a);

struct RidgeSolution {
    std::vector<double> w;   // raw regression vector
    double residual_norm = 0.0;   // ||y - H w||
    double normal_residual = 0.0; // ||(H^T H + alpha I) w - H^T y|| / ||H^T y||
    double condition_estimate = 0.0;  // of H^T H + alpha I
};

/// w = (H^T H + alpha I)^{-1} H^T y by Cholesky factorization of the normal
/// matrix. With alpha = 0 a condition number at or above 1e12 is reported as
/// a NumericalError.
RidgeSolution ridge_solve(const HankelRegression& h, double alpha);

// LCCDE form of a regression vector: b = w[0..n_b], a = [1, -w[n_b+1], ...].
TransferFunction model_from_coefficients(std::span<const double> w, std::size_t n_b,
                                         std::size_t n_a, double dt);

// Inverse of model_from_coefficients; normalizes the system to a_0 = 1.
std::vector<double> coefficients_from_model(const TransferFunction& tf, std::size_t n_b,
                                            std::size_t n_a);

enum class PredictionMode {
    one_step,  // feedback columns use the measured outputs
    free_run   // feedback columns use the model's own predictions
};

// `y` supplies the measured outputs for one_step and is ignored for free_run.
DiscreteSignal predict(std::span<const double> w, std::size_t n_b, std::size_t n_a,
                       const DiscreteSignal& u, PredictionMode mode,
                       const DiscreteSignal* y = nullptr);

}  // namespace ltikit
