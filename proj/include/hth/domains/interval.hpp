#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "hth/basis.hpp"
#include "hth/errors.hpp"
#include "hth/quadrature.hpp"

namespace hth {

namespace detail {

/// Legendre P_n(x) and its derivative by the three-term recurrence.
inline void legendre_pair(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    if (n == 0) { p = p0; dp = 0.0; return; }
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

} // namespace detail

/// n-point Gauss-Legendre rule on [-1,1] with weight function 1.
///
/// Nodes are the eigenvalues of the symmetric tridiagonal Jacobi matrix
/// (Golub-Welsch), refined by one Newton pass on P_n; weights come from the
/// classical identity w_j = 2 / ((1 - x_j^2) P_n'(x_j)^2). Exact for
/// polynomials of degree 2n-1; V = 2.
inline QuadratureRule gauss_legendre_rule(int n) {
    if (n < 1) throw ParameterError("gauss_legendre_rule: n must be >= 1");
    QuadratureRule rule;
    rule.dim = 1;
    rule.exactness = 2 * n - 1;
    rule.volume = 2.0;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(n);

    if (n == 1) {
        rule.nodes[0] = {0.0, 0.0, 0.0};
        rule.weights[0] = 2.0;
        return rule;
    }

    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1);
    for (int k = 1; k < n; ++k) sub[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

    for (int j = 0; j < n; ++j) {
        double x = solver.eigenvalues()[j];
        double p, dp;
        // two Newton steps land well below 1e-14 node error
        for (int it = 0; it < 2; ++it) {
            detail::legendre_pair(n, x, p, dp);
            x -= p / dp;
        }
        detail::legendre_pair(n, x, p, dp);
        rule.nodes[static_cast<size_t>(j)] = {x, 0.0, 0.0};
        rule.weights[j] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    // enforce exact symmetry of the node set
    for (int j = 0; j < n / 2; ++j) {
        const int m = n - 1 - j;
        const double x = 0.5 * (rule.nodes[static_cast<size_t>(m)][0] -
                                rule.nodes[static_cast<size_t>(j)][0]);
        const double w = 0.5 * (rule.weights[j] + rule.weights[m]);
        rule.nodes[static_cast<size_t>(j)][0] = -x;
        rule.nodes[static_cast<size_t>(m)][0] = x;
        rule.weights[j] = rule.weights[m] = w;
    }
    if (n % 2) rule.nodes[static_cast<size_t>(n / 2)][0] = 0.0;
    return rule;
}

/// Normalized Legendre basis of P_L on [-1,1]: p_l = sqrt((2l+1)/2) P_l.
class LegendreBasis final : public BasisFamily {
public:
    explicit LegendreBasis(int total_degree) : degree_(total_degree) {
        if (total_degree < 0) throw ParameterError("LegendreBasis: negative degree");
        degrees_.resize(static_cast<size_t>(total_degree) + 1);
        for (int l = 0; l <= total_degree; ++l) degrees_[static_cast<size_t>(l)] = l;
    }

    int dimension() const override { return degree_ + 1; }
    int total_degree() const override { return degree_; }
    int space_dim() const override { return 1; }
    const std::vector<int>& degrees() const override { return degrees_; }

    void eval_point(const Point& x, std::span<double> out) const override {
        const double t = x[0];
        if (std::abs(t) > 1.0 + 1e-12)
            throw DomainError("LegendreBasis: point outside [-1,1]");
        double p0 = 1.0, p1 = t;
        out[0] = std::sqrt(0.5);
        if (degree_ >= 1) out[1] = std::sqrt(1.5) * t;
        for (int l = 2; l <= degree_; ++l) {
            const double p2 = ((2.0 * l - 1.0) * t * p1 - (l - 1.0) * p0) / l;
            p0 = p1;
            p1 = p2;
            out[static_cast<size_t>(l)] = std::sqrt(l + 0.5) * p2;
        }
    }

private:
    int degree_;
    std::vector<int> degrees_;
};

/// Tabulated, Gram-verified Legendre basis on the given rule.
inline BasisMatrix legendre_basis(int total_degree, const QuadratureRule& rule) {
    LegendreBasis family(total_degree);
    BasisMatrix basis = tabulate_basis(family, rule);
    verify_gram(basis, rule.weights);
    return basis;
}

} // namespace hth
