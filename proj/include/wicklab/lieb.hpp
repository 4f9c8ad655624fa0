#ifndef WICKLAB_LIEB_HPP
#define WICKLAB_LIEB_HPP

#include <array>
#include <cmath>
#include <stdexcept>

#include "wicklab/exponents.hpp"
#include "wicklab/quadrature.hpp"

namespace wicklab {

/// The Gaussian-trial quotient whose supremum over s, t > 0 equals
/// v^{1/r - 1/p} u^{1/r - 1/q}:
/// F(s, t) = (p^{1/p} q^{1/q} / r^{1/r})
///           * s^{1/p} t^{1/q}
///           / [(s + t + beta^2)^{1/r'} (gamma^2 s + alpha^2 t + s t)^{1/r}].
inline double lieb_objective(double s, double t, const ExponentTuple& e) {
    if (!e.finite()) throw std::invalid_argument("lieb_objective: exponents must be finite");
    LiebParams lp(e);
    double num = std::pow(e.p, 1.0 / e.p) * std::pow(e.q, 1.0 / e.q) / std::pow(e.r, 1.0 / e.r);
    num *= std::pow(s, 1.0 / e.p) * std::pow(t, 1.0 / e.q);
    double den = std::pow(s + t + lp.beta * lp.beta, 1.0 / e.rc) *
                 std::pow(lp.gamma * lp.gamma * s + lp.alpha * lp.alpha * t + s * t, 1.0 / e.r);
    return num / den;
}

/// Closed-form supremum of lieb_objective.
inline double lieb_sup_closed_form(const ExponentTuple& e) {
    return std::pow(e.v, 1.0 / e.r - 1.0 / e.p) * std::pow(e.u, 1.0 / e.r - 1.0 / e.q);
}

/// Closed-form argmax (s*, t*) = (1/(pv), 1/(qu)).
inline std::array<double, 2> lieb_argmax_closed_form(const ExponentTuple& e) {
    return {1.0 / (e.p * e.v), 1.0 / (e.q * e.u)};
}

struct LiebSearchResult {
    double s_star = 0.0;
    double t_star = 0.0;
    double sup_value = 0.0;
    int sweeps = 0;
};

namespace detail {

/// Golden-section maximization of fn over [a, b].
template <typename Fn>
double golden_max(Fn&& fn, double a, double b, double tol) {
    constexpr double invphi = 0.6180339887498949;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = fn(c), fd = fn(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = fn(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace detail

/// Derivative-free maximization of lieb_objective in (log s, log t):
/// line searches cycling over the axis and diagonal directions (the
/// diagonals decorrelate the coordinates near the maximum), golden
/// section per line, from 4 spread starts.
inline LiebSearchResult lieb_sup_search(const ExponentTuple& e) {
    auto f = [&](double ls, double lt) { return lieb_objective(std::exp(ls), std::exp(lt), e); };
    const std::array<std::array<double, 2>, 4> starts = {
        {{-2.0, -2.0}, {-2.0, 1.0}, {1.0, -2.0}, {1.0, 1.0}}};
    const std::array<std::array<double, 2>, 4> dirs = {
        {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {1.0, -1.0}}};
    LiebSearchResult best;
    best.sup_value = -1.0;
    for (const auto& start : starts) {
        double ls = start[0], lt = start[1];
        int sweep = 0;
        const int cap = 200;
        for (; sweep < cap; ++sweep) {
            double prev_ls = ls, prev_lt = lt;
            for (const auto& d : dirs) {
                double step = detail::golden_max(
                    [&](double h) { return f(ls + h * d[0], lt + h * d[1]); }, -4.0, 4.0, 1e-13);
                ls += step * d[0];
                lt += step * d[1];
            }
            // position resolution at a flat maximum is ~sqrt(eps); the
            // value there is converged to ~eps
            if (std::abs(ls - prev_ls) + std::abs(lt - prev_lt) < 1e-6) break;
        }
        if (sweep == cap)
            throw std::runtime_error("lieb_sup_search: line search descent did not converge");
        double val = f(ls, lt);
        if (val > best.sup_value) {
            best.s_star = std::exp(ls);
            best.t_star = std::exp(lt);
            best.sup_value = val;
            best.sweeps = sweep + 1;
        }
    }
    return best;
}

/// Numeric value of the Lieb kernel functional for product Gaussian
/// trials f(x) = prod_i c1 e^{-s x_i^2/2}, g likewise with (c2, t),
/// normalized to unit normalized-Lebesgue L^p / L^q norms:
///
///   K_d = { int [ int f(x-y) g(y) e^{-(1/(2p'q'r')) |q'/v x - r' y|^2} d_Ny ]^r d_Nx }^{1/r}.
///
/// Integrals are evaluated by Gauss quadrature recentered on the
/// integrand's Gaussian bulk (the y-mean and widths are located
/// numerically). For d = 1 at the argmax this equals sqrt(sup F) and
/// K_2 = K_1^2 by the product structure of the kernel.
inline double lieb_kernel_value(const ExponentTuple& e, double s, double t, int dim,
                                int order = 40) {
    if (dim < 1 || dim > 2) throw std::invalid_argument("lieb_kernel_value: dim must be 1 or 2");
    LiebParams lp(e);
    const double al = lp.alpha, be = lp.beta;
    const GaussianTrial ftrial(s, e.p), gtrial(t, e.q);
    const QuadratureRule rule = gauss_hermite_rule(order);

    // log of f1(x - y) g1(y) e^{-(al x - be y)^2 / 2} on one axis
    auto axis_log_kernel = [&](double x, double y) {
        double dxy = x - y, axby = al * x - be * y;
        return std::log(ftrial.normalization) + std::log(gtrial.normalization) -
               0.5 * (s * dxy * dxy + t * y * y + axby * axby);
    };

    // inner integral over y in R^dim at a fixed x, recentered per axis:
    // precision p_y = s + t + be^2, mean (s + al*be) x_i / p_y
    const double py = s + t + be * be;
    const double sq_py = std::sqrt(py);
    auto inner = [&](const std::vector<double>& x) {
        double total = 0.0; // log of the product over axes
        for (int axis = 0; axis < dim; ++axis) {
            double my = (s + al * be) * x[static_cast<std::size_t>(axis)] / py;
            double acc = 0.0;
            for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
                double z = rule.nodes[j];
                double y = my + z / sq_py;
                acc += rule.weights[j] *
                       std::exp(axis_log_kernel(x[static_cast<std::size_t>(axis)], y) + 0.5 * z * z);
            }
            total += std::log(acc / sq_py);
        }
        return std::exp(total);
    };

    // outer Gaussian width per axis, located from two inner evaluations
    std::vector<double> probe0(static_cast<std::size_t>(dim), 0.0);
    std::vector<double> probe1(static_cast<std::size_t>(dim), 0.0);
    probe1[0] = 1.0;
    double w = -2.0 * std::log(inner(probe1) / inner(probe0));
    if (!(w > 0.0)) throw std::runtime_error("lieb_kernel_value: outer width not positive");
    const double sq = std::sqrt(e.r * w);

    double integral = 0.0;
    std::vector<double> x(static_cast<std::size_t>(dim), 0.0);
    if (dim == 1) {
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            double z = rule.nodes[i];
            x[0] = z / sq;
            integral += rule.weights[i] / sq *
                        std::exp(e.r * std::log(inner(x)) + 0.5 * z * z);
        }
    } else {
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
                double zi = rule.nodes[i], zj = rule.nodes[j];
                x[0] = zi / sq;
                x[1] = zj / sq;
                integral += rule.weights[i] * rule.weights[j] / (sq * sq) *
                            std::exp(e.r * std::log(inner(x)) + 0.5 * (zi * zi + zj * zj));
            }
    }
    return std::pow(integral, 1.0 / e.r);
}

} // namespace wicklab

#endif
