#include "ltikit/sysid.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ltikit/errors.hpp"

namespace ltikit {

HankelRegression HankelRegression::drop_initial_rows() const {
    const std::size_t skip = std::min(std::max(n_b, n_a), rows());
    HankelRegression out;
    out.n_b = n_b;
    out.n_a = n_a;
    out.first_row = first_row + skip;
    out.target.assign(target.begin() + static_cast<long>(skip), target.end());
    out.data.assign(data.begin() + static_cast<long>(skip * cols()), data.end());
    return out;
}

HankelRegression build_hankel(const DiscreteSignal& u, const DiscreteSignal& y, std::size_t n_b,
                              std::size_t n_a) {
    if (u.size() != y.size()) {
        throw ArgumentError("build_hankel: input and output lengths differ (" +
                            std::to_string(u.size()) + " vs " + std::to_string(y.size()) + ")");
    }
    if (n_b + n_a < 1) throw ArgumentError("build_hankel: need n_b + n_a >= 1");

    HankelRegression h;
    h.n_b = n_b;
    h.n_a = n_a;
    h.target = y.values();
    const std::size_t n = u.size();
    const std::size_t c = h.cols();
    h.data.assign(n * c, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        double* row = h.data.data() + r * c;
        for (std::size_t l = 0; l <= n_b && l <= r; ++l) row[l] = u[r - l];
        for (std::size_t l = 1; l <= n_a && l <= r; ++l) row[n_b + l] = y[r - l];
    }
    return h;
}

RidgeSolution ridge_solve(const HankelRegression& h, double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw ArgumentError("ridge_solve: alpha must be a finite non-negative number");
    }
    if (h.rows() == 0) throw ArgumentError("ridge_solve: empty regression");
    const auto rows = static_cast<Eigen::Index>(h.rows());
    const auto cols = static_cast<Eigen::Index>(h.cols());
    const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> H(
        h.data.data(), rows, cols);
    const Eigen::Map<const Eigen::VectorXd> y(h.target.data(), rows);

    Eigen::MatrixXd normal = H.transpose() * H;
    normal.diagonal().array() += alpha;
    const Eigen::VectorXd rhs = H.transpose() * y;

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> spectrum(normal, Eigen::EigenvaluesOnly);
    const double lo = spectrum.eigenvalues().minCoeff();
    const double hi = spectrum.eigenvalues().maxCoeff();
    const double cond = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    if (alpha == 0.0 && !(cond < 1e12)) {
        throw NumericalError("ridge_solve: normal matrix is singular or ill-conditioned (cond ~ " +
                             std::to_string(cond) + "); use alpha > 0");
    }

    const Eigen::LLT<Eigen::MatrixXd> llt(normal);
    if (llt.info() != Eigen::Success) {
        throw NumericalError("ridge_solve: normal matrix is not positive definite; use alpha > 0");
    }
    const Eigen::VectorXd w = llt.solve(rhs);

    RidgeSolution out;
    out.w.assign(w.data(), w.data() + w.size());
    out.residual_norm = (y - H * w).norm();
    const double rhs_norm = rhs.norm();
    out.normal_residual = (normal * w - rhs).norm() / (rhs_norm > 0.0 ? rhs_norm : 1.0);
    out.condition_estimate = cond;
    if (!(out.normal_residual < 1e-8)) {
        throw NumericalError("ridge_solve: solve residual " + std::to_string(out.normal_residual) +
                             " exceeds 1e-8");
    }
    return out;
}

TransferFunction model_from_coefficients(std::span<const double> w, std::size_t n_b,
                                         std::size_t n_a, double dt) {
    if (w.size() != n_b + 1 + n_a) {
        throw ArgumentError("model_from_coefficients: expected " + std::to_string(n_b + 1 + n_a) +
                            " coefficients, got " + std::to_string(w.size()));
    }
    std::vector<double> b(w.begin(), w.begin() + static_cast<long>(n_b + 1));
    std::vector<double> a{1.0};
    for (std::size_t l = 1; l <= n_a; ++l) a.push_back(-w[n_b + l]);
    return TransferFunction(std::move(b), std::move(a), Domain::z, dt);
}

std::vector<double> coefficients_from_model(const TransferFunction& tf, std::size_t n_b,
                                            std::size_t n_a) {
    if (tf.domain() != Domain::z) throw ArgumentError("coefficients_from_model: z-domain only");
    if (tf.b().size() > n_b + 1 || tf.a().size() > n_a + 1) {
        throw ArgumentError("coefficients_from_model: model order exceeds the requested lags");
    }
    const double a0 = tf.a().front();
    std::vector<double> w(n_b + 1 + n_a, 0.0);
    for (std::size_t n = 0; n < tf.b().size(); ++n) w[n] = tf.b()[n] / a0;
    for (std::size_t n = 1; n < tf.a().size(); ++n) w[n_b + n] = -tf.a()[n] / a0;
    return w;
}

DiscreteSignal predict(std::span<const double> w, std::size_t n_b, std::size_t n_a,
                       const DiscreteSignal& u, PredictionMode mode, const DiscreteSignal* y) {
    if (w.size() != n_b + 1 + n_a) {
        throw ArgumentError("predict: coefficient vector length does not match n_b + 1 + n_a");
    }
    if (mode == PredictionMode::one_step) {
        if (y == nullptr) throw ArgumentError("predict: one_step mode needs measured outputs");
        if (y->size() != u.size()) throw ArgumentError("predict: input and output lengths differ");
    }
    const std::size_t n = u.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t l = 0; l <= n_b && l <= k; ++l) acc += w[l] * u[k - l];
        for (std::size_t l = 1; l <= n_a && l <= k; ++l) {
            const double past = mode == PredictionMode::one_step ? (*y)[k - l] : out[k - l];
            acc += w[n_b + l] * past;
        }
        out[k] = acc;
    }
    return u.with_samples(std::move(out));
}

}  // namespace ltikit
