#pragma once

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "hth/errors.hpp"
#include "hth/quadrature.hpp"

namespace hth {

/// An orthonormal polynomial basis {p_1,...,p_d} of P_L on some domain,
/// evaluable at arbitrary points of that domain.
class BasisFamily {
public:
    virtual ~BasisFamily() = default;

    virtual int dimension() const = 0;                 ///< d = dim P_L
    virtual int total_degree() const = 0;              ///< L
    virtual int space_dim() const = 0;                 ///< ambient s
    virtual const std::vector<int>& degrees() const = 0;  ///< deg p_l per column

    /// Evaluate all d basis functions at x into out (size d).
    /// Throws DomainError when x is outside the domain.
    virtual void eval_point(const Point& x, std::span<double> out) const = 0;

    Eigen::VectorXd eval_point(const Point& x) const {
        Eigen::VectorXd row(dimension());
        eval_point(x, std::span<double>(row.data(), static_cast<size_t>(row.size())));
        return row;
    }
};

/// N x d evaluation matrix A with A(j,l) = p_l(x_j), plus column degrees.
struct BasisMatrix {
    Eigen::MatrixXd values;       ///< N x d
    std::vector<int> degrees;     ///< d entries, deg p_l <= total_degree
    int total_degree = 0;         ///< L
    bool gram_verified = false;   ///< set by builders after a full Gram check

    Eigen::Index node_count() const { return values.rows(); }
    Eigen::Index dimension() const { return values.cols(); }
};

/// Max-entry deviation |A^T W A - I|.
inline double gram_deviation(const BasisMatrix& basis, const Eigen::VectorXd& weights) {
    if (weights.size() != basis.values.rows())
        throw DimensionError("gram_deviation: weight count != node count");
    Eigen::MatrixXd g = basis.values.transpose() * (weights.asDiagonal() * basis.values);
    g.diagonal().array() -= 1.0;
    return g.cwiseAbs().maxCoeff();
}

/// Default tolerance for the discrete Gram identity; double-precision
/// accumulation over rules up to ~1e5 nodes stays well inside it.
inline constexpr double kGramTolerance = 1e-10;

/// Run the full Gram check and mark the matrix verified.
/// Throws InvalidBasisError when the deviation exceeds the tolerance.
inline void verify_gram(BasisMatrix& basis, const Eigen::VectorXd& weights,
                        double tol = kGramTolerance) {
    const double dev = gram_deviation(basis, weights);
    if (!(dev <= tol))
        throw InvalidBasisError("discrete Gram identity violated: max deviation " +
                                std::to_string(dev));
    basis.gram_verified = true;
}

/// Evaluate a family on a rule's nodes. Does not verify orthonormality.
inline BasisMatrix tabulate_basis(const BasisFamily& family, const QuadratureRule& rule) {
    BasisMatrix out;
    out.total_degree = family.total_degree();
    out.degrees = family.degrees();
    out.values.resize(rule.size(), family.dimension());
    std::vector<double> row(static_cast<size_t>(family.dimension()));
    for (Eigen::Index j = 0; j < rule.size(); ++j) {
        family.eval_point(rule.nodes[j], row);
        for (Eigen::Index l = 0; l < out.values.cols(); ++l)
            out.values(j, l) = row[static_cast<size_t>(l)];
    }
    return out;
}

} // namespace hth
