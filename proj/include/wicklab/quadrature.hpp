#ifndef WICKLAB_QUADRATURE_HPP
#define WICKLAB_QUADRATURE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "wicklab/chaos.hpp"
#include "wicklab/multi_index.hpp"

namespace wicklab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Gauss quadrature against the standard Gaussian density
/// e^{-x^2/2}/sqrt(2 pi) on one axis. Weights sum to 1; an order-n rule
/// integrates polynomials up to degree 2n - 1 exactly.
struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Golub-Welsch on the Jacobi matrix of the probabilists' Hermite
/// recurrence (off-diagonal sqrt(k)).
inline QuadratureRule gauss_hermite_rule(int order) {
    if (order < 1) throw std::invalid_argument("gauss_hermite_rule: order must be >= 1");
    if (order > 200) throw std::invalid_argument("gauss_hermite_rule: order > 200 unsupported");
    QuadratureRule rule;
    rule.order = order;
    if (order == 1) {
        rule.nodes = {0.0};
        rule.weights = {1.0};
        return rule;
    }
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        double b = std::sqrt(static_cast<double>(k));
        J(k, k - 1) = b;
        J(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    rule.nodes.resize(static_cast<std::size_t>(order));
    rule.weights.resize(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        double w0 = es.eigenvectors()(0, i);
        rule.weights[static_cast<std::size_t>(i)] = w0 * w0;
    }
    return rule;
}

/// A pointwise-evaluable complex function on R^d.
using Field = std::function<Complex(const std::vector<double>&)>;

inline Field as_field(const ChaosExpansion& phi) {
    return [phi](const std::vector<double>& x) { return chaos_eval(phi, x); };
}

namespace detail {

/// Apply fn at every tensor node of the rule (d = 1 or 2), in a fixed
/// row-major order so sums are bit-reproducible.
template <typename Fn>
void for_each_tensor_node(const QuadratureRule& rule, int dim, Fn&& fn) {
    if (dim == 1) {
        std::vector<double> x(1);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            x[0] = rule.nodes[i];
            fn(x, rule.weights[i]);
        }
    } else if (dim == 2) {
        std::vector<double> x(2);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
                x[0] = rule.nodes[i];
                x[1] = rule.nodes[j];
                fn(x, rule.weights[i] * rule.weights[j]);
            }
    } else {
        throw std::invalid_argument("tensor quadrature: only d in {1, 2} supported");
    }
}

} // namespace detail

/// Gaussian expectation E[f] over R^d by tensor quadrature.
inline Complex gaussian_expectation(const Field& f, const QuadratureRule& rule, int dim) {
    Complex s = 0.0;
    detail::for_each_tensor_node(rule, dim, [&](const std::vector<double>& x, double w) {
        s += w * f(x);
    });
    return s;
}

/// Gaussian L^p norm ||f||_p. For p = inf this is the max of |f| over the
/// tensor node set, a lower estimate of the essential sup.
inline double lp_norm_gaussian(const Field& f, double p, const QuadratureRule& rule, int dim) {
    if (p == kInf) {
        double m = 0.0;
        detail::for_each_tensor_node(rule, dim, [&](const std::vector<double>& x, double) {
            m = std::max(m, std::abs(f(x)));
        });
        return m;
    }
    if (p < 1.0) throw std::invalid_argument("lp_norm_gaussian: p must be >= 1 or inf");
    double s = 0.0;
    detail::for_each_tensor_node(rule, dim, [&](const std::vector<double>& x, double w) {
        s += w * std::pow(std::abs(f(x)), p);
    });
    return std::pow(s, 1.0 / p);
}

inline double lp_norm_gaussian(const ChaosExpansion& phi, double p, const QuadratureRule& rule) {
    return lp_norm_gaussian(as_field(phi), p, rule, phi.dim());
}

/// Chaos projection oracle: coefficients of P_k(f) on the degree-k layer,
/// coefficient at alpha = E[f He_alpha] / alpha!.
inline std::map<MultiIndex, Complex> chaos_projection(const Field& f, int dim, int k,
                                                      const QuadratureRule& rule) {
    std::map<MultiIndex, Complex> out;
    for (const auto& alpha : MultiIndex::with_total_degree(dim, k)) {
        Complex s = 0.0;
        detail::for_each_tensor_node(rule, dim, [&](const std::vector<double>& x, double w) {
            double he = 1.0;
            for (int i = 0; i < dim; ++i) he *= hermite_eval(alpha[i], x[static_cast<std::size_t>(i)]);
            s += w * f(x) * he;
        });
        out[alpha] = s / alpha.factorial();
    }
    return out;
}

} // namespace wicklab

#endif
