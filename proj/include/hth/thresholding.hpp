#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "hth/errors.hpp"

namespace hth {

/// eta_H(a,k): a survives when |a| > k, otherwise 0. The boundary |a| = k
/// maps to 0.
inline double hard_threshold(double a, double k) { return std::abs(a) > k ? a : 0.0; }

/// eta_S(a,k) = max(0, a-k) + min(0, a+k).
inline double soft_threshold(double a, double k) {
    return std::max(0.0, a - k) + std::min(0.0, a + k);
}

/// Trigonometric filter: 1 on [0,1/2], sin^2(pi x) on (1/2,1), 0 on [1,inf).
inline double filter_weight(double x) {
    if (x <= 0.5) return 1.0;
    if (x >= 1.0) return 0.0;
    const double s = std::sin(std::numbers::pi * x);
    return s * s;
}

enum class CoeffKind { plain, filtered, lasso, hard };

/// Hyperinterpolation coefficients indexed like the basis columns.
///
/// kind records which thresholding produced the entries; lambda is 0 for
/// plain/filtered, and mu holds the per-entry Lasso penalty factors (empty
/// means mu == 1).
struct CoefficientVector {
    Eigen::VectorXd entries;
    CoeffKind kind = CoeffKind::plain;
    double lambda = 0.0;
    Eigen::VectorXd mu;

    Eigen::Index size() const { return entries.size(); }

    /// Number of nonzero entries.
    Eigen::Index l0_norm() const {
        return (entries.array() != 0.0).count();
    }
};

/// Entrywise hard thresholding at level lambda.
inline CoefficientVector apply_hard(const CoefficientVector& alpha, double lambda) {
    if (lambda < 0.0) throw ParameterError("apply_hard: negative lambda");
    CoefficientVector out;
    out.entries = alpha.entries.unaryExpr(
        [lambda](double a) { return hard_threshold(a, lambda); });
    out.kind = CoeffKind::hard;
    out.lambda = lambda;
    return out;
}

/// Entrywise soft thresholding at level lambda * mu_l (mu empty means 1).
inline CoefficientVector apply_lasso(const CoefficientVector& alpha, double lambda,
                                     const Eigen::VectorXd& mu = {}) {
    if (lambda < 0.0) throw ParameterError("apply_lasso: negative lambda");
    if (mu.size() != 0 && mu.size() != alpha.size())
        throw DimensionError("apply_lasso: mu length mismatch");
    CoefficientVector out;
    out.entries.resize(alpha.size());
    for (Eigen::Index l = 0; l < alpha.size(); ++l) {
        const double m = mu.size() ? mu[l] : 1.0;
        if (mu.size() && !(m > 0.0)) throw ParameterError("apply_lasso: nonpositive mu");
        out.entries[l] = soft_threshold(alpha.entries[l], lambda * m);
    }
    out.kind = CoeffKind::lasso;
    out.lambda = lambda;
    out.mu = mu;
    return out;
}

/// Damp entries by h(deg p_l / L).
inline CoefficientVector apply_filtered(const CoefficientVector& alpha,
                                        std::span<const int> degrees, int total_degree) {
    if (static_cast<Eigen::Index>(degrees.size()) != alpha.size())
        throw DimensionError("apply_filtered: degree list length mismatch");
    if (total_degree <= 0) throw ParameterError("apply_filtered: total degree must be positive");
    CoefficientVector out;
    out.entries.resize(alpha.size());
    for (Eigen::Index l = 0; l < alpha.size(); ++l)
        out.entries[l] =
            filter_weight(static_cast<double>(degrees[static_cast<size_t>(l)]) / total_degree) *
            alpha.entries[l];
    out.kind = CoeffKind::filtered;
    return out;
}

/// Parseval norm: for an orthonormal basis, the L2 norm of the polynomial
/// equals the Euclidean norm of its coefficients.
inline double coeff_l2_norm(const CoefficientVector& c) { return c.entries.norm(); }

} // namespace hth
