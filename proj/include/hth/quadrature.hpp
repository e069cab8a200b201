#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "hth/errors.hpp"

namespace hth {

/// A point in R^s, s <= 3. Unused trailing coordinates are zero.
using Point = std::array<double, 3>;

/// Positive-weight quadrature rule on some domain in R^s.
///
/// The rule carries its declared polynomial exactness degree and the measure
/// of the domain, V = sum of weights = integral of 1.
struct QuadratureRule {
    int dim = 1;                       ///< ambient dimension s
    std::vector<Point> nodes;          ///< N quadrature points
    Eigen::VectorXd weights;           ///< N strictly positive weights
    int exactness = 0;                 ///< exact for polynomials of this total degree
    double volume = 0.0;               ///< declared domain measure V

    Eigen::Index size() const { return weights.size(); }

    /// Check weight positivity and that sum(w) matches the declared volume
    /// to 1e-12 relative. Throws IntegrityError on violation.
    void validate() const {
        if (static_cast<Eigen::Index>(nodes.size()) != weights.size())
            throw DimensionError("quadrature rule: node/weight count mismatch");
        for (Eigen::Index j = 0; j < weights.size(); ++j)
            if (!(weights[j] > 0.0))
                throw IntegrityError("quadrature rule: nonpositive weight");
        const double s = weights.sum();
        if (std::abs(s - volume) > 1e-12 * std::abs(volume))
            throw IntegrityError("quadrature rule: weights do not sum to the domain volume");
    }

    /// Apply the rule to tabulated values.
    double integrate(const Eigen::VectorXd& values) const {
        if (values.size() != weights.size())
            throw DimensionError("integrate: value count != node count");
        return weights.dot(values);
    }
};

/// Discrete inner product <f,g>_N = sum_j w_j f(x_j) g(x_j).
inline double discrete_inner_product(const Eigen::VectorXd& f_vals,
                                     const Eigen::VectorXd& g_vals,
                                     const Eigen::VectorXd& weights) {
    if (f_vals.size() != g_vals.size() || f_vals.size() != weights.size())
        throw DimensionError("discrete_inner_product: length mismatch");
    return (weights.array() * f_vals.array() * g_vals.array()).sum();
}

/// Tabulate a callable on the rule's nodes.
template <class F>
Eigen::VectorXd tabulate(const QuadratureRule& rule, F&& f) {
    Eigen::VectorXd v(rule.size());
    for (Eigen::Index j = 0; j < v.size(); ++j) v[j] = f(rule.nodes[j]);
    return v;
}

} // namespace hth
