#pragma once

#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hth/basis.hpp"
#include "hth/errors.hpp"
#include "hth/quadrature.hpp"
#include "hth/thresholding.hpp"

namespace hth {

/// Plain hyperinterpolation coefficients alpha = A^T W f.
///
/// Orthonormality of the basis under the discrete inner product makes this
/// the exact solution of the weighted least squares problem
/// min_alpha ||W^(1/2) (A alpha - f)||^2, so no normal-equations solve is
/// involved. Bases coming from the built-in constructors are verified once;
/// an unverified matrix is Gram-checked here and InvalidBasisError is thrown
/// on failure.
inline CoefficientVector hyper_coefficients(const BasisMatrix& basis,
                                            const Eigen::VectorXd& weights,
                                            const Eigen::VectorXd& f_vals) {
    if (weights.size() != basis.values.rows() || f_vals.size() != basis.values.rows())
        throw DimensionError("hyper_coefficients: node count mismatch");
    if (!basis.gram_verified) {
        const double dev = gram_deviation(basis, weights);
        if (!(dev <= kGramTolerance))
            throw InvalidBasisError("hyper_coefficients: discrete Gram identity violated, "
                                    "max deviation " + std::to_string(dev));
    }
    CoefficientVector alpha;
    alpha.entries = basis.values.transpose() * (weights.asDiagonal() * f_vals);
    alpha.kind = CoeffKind::plain;
    return alpha;
}

/// A polynomial held as basis family + coefficients.
struct Approximant {
    std::shared_ptr<const BasisFamily> basis;
    CoefficientVector coeffs;

    double operator()(const Point& x) const {
        return basis->eval_point(x).dot(coeffs.entries);
    }
};

/// Evaluate sum_l c_l p_l at each point. Points must lie in the domain.
inline Eigen::VectorXd evaluate_approximant(const Approximant& p,
                                            const std::vector<Point>& points) {
    if (p.coeffs.size() != p.basis->dimension())
        throw DimensionError("evaluate_approximant: coefficient count != basis dimension");
    Eigen::VectorXd out(static_cast<Eigen::Index>(points.size()));
    std::vector<double> row(static_cast<size_t>(p.basis->dimension()));
    for (size_t i = 0; i < points.size(); ++i) {
        p.basis->eval_point(points[i], row);
        double acc = 0.0;
        for (Eigen::Index l = 0; l < p.coeffs.size(); ++l)
            acc += row[static_cast<size_t>(l)] * p.coeffs.entries[l];
        out[static_cast<Eigen::Index>(i)] = acc;
    }
    return out;
}

/// Values of the polynomial with coefficients c at the tabulated nodes: A c.
inline Eigen::VectorXd node_values(const BasisMatrix& basis, const CoefficientVector& c) {
    if (c.size() != basis.values.cols())
        throw DimensionError("node_values: coefficient count != basis dimension");
    return basis.values * c.entries;
}

} // namespace hth
