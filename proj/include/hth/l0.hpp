#pragma once

#include <vector>

#include <Eigen/Core>

#include "hth/basis.hpp"
#include "hth/errors.hpp"
#include "hth/hyperinterpolation.hpp"

namespace hth {

/// G_l0(beta) = ||W^(1/2) (A beta - f)||^2 + lambda^2 ||beta||_0.
inline double l0_objective(const Eigen::VectorXd& beta, const BasisMatrix& basis,
                           const Eigen::VectorXd& weights, const Eigen::VectorXd& f_vals,
                           double lambda) {
    if (lambda < 0.0) throw ParameterError("l0_objective: negative lambda");
    if (beta.size() != basis.values.cols() || weights.size() != basis.values.rows() ||
        f_vals.size() != basis.values.rows())
        throw DimensionError("l0_objective: dimension mismatch");
    const Eigen::VectorXd residual = basis.values * beta - f_vals;
    const double fit = (weights.array() * residual.array().square()).sum();
    const double support = static_cast<double>((beta.array() != 0.0).count());
    return fit + lambda * lambda * support;
}

/// Exact minimizer of G_l0 by support enumeration.
///
/// For an orthonormal basis the optimal coefficients restricted to a support
/// S are the plain hyperinterpolation coefficients on S, so it suffices to
/// enumerate subsets of the nonzero-alpha index set. Each candidate objective
/// is evaluated through l0_objective (a dense residual computation), keeping
/// this routine an independent check on the closed-form thresholding path.
/// Ties break toward smaller support, then the lexicographically smallest
/// index set. Guarded to d <= 20.
inline Eigen::VectorXd brute_force_l0(const BasisMatrix& basis, const Eigen::VectorXd& weights,
                                      const Eigen::VectorXd& f_vals, double lambda) {
    const Eigen::Index d = basis.values.cols();
    if (d > 20) throw SizeError("brute_force_l0: d exceeds the enumeration guard (20)");
    {
        const double dev = gram_deviation(basis, weights);
        if (!(dev <= kGramTolerance))
            throw InvalidBasisError("brute_force_l0: discrete Gram identity violated");
    }
    const CoefficientVector alpha = hyper_coefficients(basis, weights, f_vals);

    std::vector<Eigen::Index> nonzero;
    for (Eigen::Index l = 0; l < d; ++l)
        if (alpha.entries[l] != 0.0) nonzero.push_back(l);
    const size_t k = nonzero.size();

    Eigen::VectorXd best = Eigen::VectorXd::Zero(d);
    double best_obj = l0_objective(best, basis, weights, f_vals, lambda);
    size_t best_size = 0;
    unsigned long best_mask = 0;

    Eigen::VectorXd beta(d);
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
        beta.setZero();
        size_t support_size = 0;
        for (size_t i = 0; i < k; ++i) {
            if (mask & (1ul << i)) {
                beta[nonzero[i]] = alpha.entries[nonzero[i]];
                ++support_size;
            }
        }
        const double obj = l0_objective(beta, basis, weights, f_vals, lambda);
        bool better = obj < best_obj;
        if (obj == best_obj) {
            if (support_size < best_size) {
                better = true;
            } else if (support_size == best_size) {
                // first index where the supports differ decides
                for (size_t i = 0; i < k; ++i) {
                    const bool a = mask & (1ul << i), b = best_mask & (1ul << i);
                    if (a != b) { better = a; break; }
                }
            }
        }
        if (better) {
            best = beta;
            best_obj = obj;
            best_size = support_size;
            best_mask = mask;
        }
    }
    return best;
}

} // namespace hth
