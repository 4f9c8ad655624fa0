#ifndef WICKLAB_CHECKS_HPP
#define WICKLAB_CHECKS_HPP

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "wicklab/chaos.hpp"
#include "wicklab/exponents.hpp"
#include "wicklab/grid.hpp"
#include "wicklab/lieb.hpp"
#include "wicklab/quadrature.hpp"
#include "wicklab/report.hpp"

namespace wicklab {

inline constexpr double kDefaultSlack = 1e-8;      // relative slack for inequalities
inline constexpr double kDefaultGridTol = 1e-6;    // identity tolerance on grids
inline constexpr double kDefaultExactTol = 1e-12;  // identity tolerance, pure arithmetic

/// Gamma(1/sqrt(u)) phi <> Gamma(1/sqrt(v)) psi.
inline ChaosExpansion damped_wick(const ChaosExpansion& phi, const ChaosExpansion& psi,
                                  double u, double v) {
    return wick_product(second_quantization(1.0 / std::sqrt(u), phi),
                        second_quantization(1.0 / std::sqrt(v), psi));
}

/// Wick <-> Lebesgue convolution identity:
///   [phi(x/sqrt(v)) e^{-|x|^2/2v}] * [psi(x/sqrt(u)) e^{-|x|^2/2u}]
///     = [G(1/sqrt(u))phi <> G(1/sqrt(v))psi](x/sqrt(uv)) e^{-|x|^2/2uv},
/// with * against the normalized Lebesgue measure. Reports the max
/// pointwise residual over the grid.
inline CheckReport verify_conv_wick_identity(const ChaosExpansion& phi, const ChaosExpansion& psi,
                                             double u, double v, const GridSpec& grid,
                                             double tol = kDefaultGridTol) {
    if (std::abs(1.0 / u + 1.0 / v - 1.0) > 1e-12)
        throw std::invalid_argument("verify_conv_wick_identity: need 1/u + 1/v = 1");
    if (phi.dim() != grid.dim || psi.dim() != grid.dim)
        throw std::invalid_argument("verify_conv_wick_identity: dimension mismatch");
    const int d = grid.dim;

    auto damped = [d](const ChaosExpansion& e, double scale, double var) {
        return Field([&e, scale, var, d](const std::vector<double>& x) {
            std::vector<double> xs(x);
            double q = 0.0;
            for (int i = 0; i < d; ++i) {
                q += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
                xs[static_cast<std::size_t>(i)] *= scale;
            }
            return chaos_eval(e, xs) * std::exp(-q / (2.0 * var));
        });
    };

    GridFunction lhs_f = GridFunction::sample(grid, damped(phi, 1.0 / std::sqrt(v), v));
    GridFunction lhs_g = GridFunction::sample(grid, damped(psi, 1.0 / std::sqrt(u), u));
    GridFunction lhs = convolve_normalized(lhs_f, lhs_g);

    ChaosExpansion w = damped_wick(phi, psi, u, v);
    GridFunction rhs = GridFunction::sample(grid, damped(w, 1.0 / std::sqrt(u * v), u * v));

    double residual = 0.0, lmax = 0.0, rmax = 0.0;
    for (std::size_t i = 0; i < lhs.samples().size(); ++i) {
        residual = std::max(residual, std::abs(lhs.samples()[i] - rhs.samples()[i]));
        lmax = std::max(lmax, std::abs(lhs.samples()[i]));
        rmax = std::max(rmax, std::abs(rhs.samples()[i]));
    }

    CheckReport rep;
    rep.check = "conv-wick";
    rep.u = u;
    rep.v = v;
    rep.lhs = lmax;
    rep.rhs = rmax;
    rep.ratio = rmax > 0.0 ? lmax / rmax : 0.0;
    rep.residual = residual;
    rep.pass = residual <= tol;
    rep.note = "grid L=" + detail::format_double(grid.extent) +
               " h=" + detail::format_double(grid.step) +
               " boundary=" + detail::format_double(std::max(lhs_f.boundary_magnitude(),
                                                             lhs_g.boundary_magnitude()));
    return rep;
}

/// ||G(1/sqrt(u))phi <> G(1/sqrt(v))psi||_p / (||phi||_p ||psi||_p).
inline CheckReport holder_wick_ratio(const ChaosExpansion& phi, const ChaosExpansion& psi,
                                     double p, double u, double v, const QuadratureRule& rule,
                                     double slack = kDefaultSlack) {
    if (std::abs(1.0 / u + 1.0 / v - 1.0) > 1e-12)
        throw std::invalid_argument("holder_wick_ratio: need 1/u + 1/v = 1");
    double den = lp_norm_gaussian(phi, p, rule) * lp_norm_gaussian(psi, p, rule);
    if (den == 0.0) throw std::domain_error("holder_wick_ratio: zero denominator");
    double num = lp_norm_gaussian(damped_wick(phi, psi, u, v), p, rule);
    CheckReport rep;
    rep.check = "holder";
    rep.u = u;
    rep.v = v;
    rep.p = rep.q = rep.r = p;
    rep.lhs = num;
    rep.rhs = den;
    rep.ratio = num / den;
    rep.residual = std::max(0.0, rep.ratio - 1.0);
    rep.pass = rep.ratio <= 1.0 + slack;
    if (p == kInf) rep.note = "sup estimated by node max";
    return rep;
}

/// ||G(sqrt(p-1)/sqrt(r-1))phi <> G(sqrt(r-p)/sqrt(r-1))psi||_r
///   / (||phi||_p ||psi||_inf-estimate), 1 < p <= r.
/// r = p routes through Gamma(0)psi = E[psi].
inline CheckReport nelson_ratio(const ChaosExpansion& phi, const ChaosExpansion& psi, double p,
                                double r, const QuadratureRule& rule,
                                double slack = kDefaultSlack) {
    if (!(p > 1.0) || r < p) throw std::invalid_argument("nelson_ratio: need 1 < p <= r");
    double c1 = std::sqrt((p - 1.0) / (r - 1.0));
    double c2 = std::sqrt((r - p) / (r - 1.0));
    if (r == p) {
        c1 = 1.0;
        c2 = 0.0;
    }
    double sup_psi = lp_norm_gaussian(psi, kInf, rule);
    if (sup_psi == 0.0) throw std::domain_error("nelson_ratio: zero sup estimate for psi");
    double den = lp_norm_gaussian(phi, p, rule) * sup_psi;
    if (den == 0.0) throw std::domain_error("nelson_ratio: zero denominator");
    ChaosExpansion w = wick_product(second_quantization(c1, phi), second_quantization(c2, psi));
    double num = lp_norm_gaussian(w, r, rule);
    CheckReport rep;
    rep.check = "nelson";
    rep.p = p;
    rep.r = r;
    rep.q = kInf;
    rep.u = (r - 1.0) / (p - 1.0);
    rep.v = (r == p) ? kInf : (r - 1.0) / (r - p);
    rep.lhs = num;
    rep.rhs = den;
    rep.ratio = num / den;
    rep.residual = std::max(0.0, rep.ratio - 1.0);
    rep.pass = rep.ratio <= 1.0 + slack;
    rep.note = "psi sup estimated by node max";
    return rep;
}

/// ||G(1/sqrt(u))phi <> G(1/sqrt(v))psi||_r / (||phi||_p ||psi||_q)
/// under the full-Hoelder exponent condition.
inline CheckReport full_holder_ratio(const ChaosExpansion& phi, const ChaosExpansion& psi,
                                     const ExponentTuple& e, const QuadratureRule& rule,
                                     double slack = kDefaultSlack) {
    double den = lp_norm_gaussian(phi, e.p, rule) * lp_norm_gaussian(psi, e.q, rule);
    if (den == 0.0) throw std::domain_error("full_holder_ratio: zero denominator");
    double num = lp_norm_gaussian(damped_wick(phi, psi, e.u, e.v), e.r, rule);
    CheckReport rep;
    rep.check = "full-holder";
    rep.set_exponents(e);
    rep.lhs = num;
    rep.rhs = den;
    rep.ratio = num / den;
    rep.residual = std::max(0.0, rep.ratio - 1.0);
    rep.pass = rep.ratio <= 1.0 + slack;
    if (e.q == kInf) rep.note = "psi sup estimated by node max";
    return rep;
}

namespace detail {

/// x^e with the convention x^0 = 1 even for x = inf.
inline double pow_limit(double x, double e) {
    if (e == 0.0) return 1.0;
    return std::pow(x, e);
}

} // namespace detail

/// Residuals of every closed-form identity used by the proofs:
/// alpha + gamma = beta, J1, J2, the Nelson constant C = 1, both
/// perfect-square expansions, and the two Jensen steps.
inline std::vector<CheckReport> constants_identity_suite(const ExponentTuple& e,
                                                         double tol = kDefaultExactTol) {
    std::vector<CheckReport> out;
    LiebParams lp(e);
    const double al = lp.alpha, be = lp.beta, ga = lp.gamma;

    auto push = [&](const std::string& name, double residual, bool pass,
                    const std::string& note = "") {
        CheckReport rep;
        rep.check = name;
        rep.set_exponents(e);
        rep.residual = residual;
        rep.pass = pass;
        rep.note = note;
        out.push_back(rep);
    };

    push("const-alpha-gamma-beta", std::abs(al + ga - be), std::abs(al + ga - be) <= tol);

    double j1 = inv(e.p) * inv(e.v) + inv(e.q) * inv(e.u) + be * be - 1.0;
    push("const-J1", std::abs(j1), std::abs(j1) <= tol);

    double j2 = ga * ga * inv(e.p) * inv(e.v) + al * al * inv(e.q) * inv(e.u) +
                inv(e.p) * inv(e.q) * inv(e.u) * inv(e.v) - inv(e.u) * inv(e.v) * inv(e.r);
    push("const-J2", std::abs(j2), std::abs(j2) <= tol);

    // Nelson constant from the tuple's (p, r) pair
    {
        double pp = std::min(e.p, e.r), rr = std::max(e.p, e.r);
        auto n = nelson_exponents(pp, rr);
        double ppc = conjugate_exponent(pp), rrc = conjugate_exponent(rr);
        double iq = inv(n.q_young);
        double iqc = 1.0 - iq;
        double C = young_axis_constant(pp) * young_axis_constant(pp) *
                   young_axis_constant(n.q_young) * young_axis_constant(n.q_young) *
                   detail::pow_limit(n.s_prime, 2.0 / rr) * detail::pow_limit(ppc, iq) *
                   detail::pow_limit(n.v, iqc) /
                   (young_axis_constant(rr) * young_axis_constant(rr) *
                    detail::pow_limit(n.u, 1.0 / rr) * detail::pow_limit(n.q_young, iq) *
                    detail::pow_limit(rrc, iq));
        push("const-nelson-C", std::abs(C - 1.0), std::abs(C - 1.0) <= tol,
             "p=" + detail::format_double(pp) + " r=" + detail::format_double(rr));
    }

    const std::array<double, 5> lattice = {-2.0, -1.0, 0.0, 1.0, 2.0};

    // Nelson perfect square: E(x,y) = (x-y)^2/(2p'v) + y^2/(2u) - x^2/(2r'uv)
    //                              = (1/(2p'r'v^2)) (x - r'v y)^2
    {
        double pp = std::min(e.p, e.r), rr = std::max(e.p, e.r);
        auto n = nelson_exponents(pp, rr);
        double ppc = conjugate_exponent(pp), rrc = conjugate_exponent(rr);
        double res = 0.0;
        for (double x : lattice)
            for (double y : lattice) {
                double lhs, rhs;
                if (n.v == kInf) {
                    lhs = y * y / (2.0 * n.u);
                    rhs = rrc / (2.0 * ppc) * y * y;
                } else {
                    lhs = (x - y) * (x - y) / (2.0 * ppc * n.v) + y * y / (2.0 * n.u) -
                          x * x / (2.0 * rrc * n.u * n.v);
                    double z = x - rrc * n.v * y;
                    rhs = z * z / (2.0 * ppc * rrc * n.v * n.v);
                }
                res = std::max(res, std::abs(lhs - rhs));
            }
        push("const-square-nelson", res, res <= tol);
    }

    // Full perfect square: E(x,y) = (x-y)^2/(2p'v) + y^2/(2q'u) - x^2/(2r'uv)
    //                            = (1/(2p'q'r')) ((q'/v)x - r'y)^2
    {
        double res = 0.0;
        for (double x : lattice)
            for (double y : lattice) {
                double lhs = (x - y) * (x - y) / (2.0 * e.pc * e.v) +
                             y * y / (2.0 * e.qc * e.u) - x * x / (2.0 * e.rc * e.u * e.v);
                double z = (e.qc / e.v) * x - e.rc * y;
                double rhs = z * z / (2.0 * e.pc * e.qc * e.rc);
                res = std::max(res, std::abs(lhs - rhs));
            }
        push("const-square-full", res, res <= tol);
    }

    // Jensen steps: equality at S = T = 1; strict inequality away from it
    // (strictness only claimed for finite tuples, where both weights of
    // the log convex combination are positive).
    {
        auto lhs_rprime = [&](double S, double T) {
            return std::pow(inv(e.p) * inv(e.v) * S + inv(e.q) * inv(e.u) * T + be * be,
                            1.0 / e.rc);
        };
        auto rhs_rprime = [&](double S, double T) {
            return detail::pow_limit(S, inv(e.p) * inv(e.v) / e.rc) *
                   detail::pow_limit(T, inv(e.q) * inv(e.u) / e.rc);
        };
        auto lhs_r = [&](double S, double T) {
            return std::pow(ga * ga * inv(e.p) * inv(e.v) * S + al * al * inv(e.q) * inv(e.u) * T +
                                inv(e.p) * inv(e.q) * inv(e.u) * inv(e.v) * S * T,
                            1.0 / e.r);
        };
        auto rhs_r = [&](double S, double T) {
            return std::pow(inv(e.u) * inv(e.v) * inv(e.r), 1.0 / e.r) *
                   detail::pow_limit(S, e.u * ga * ga * inv(e.p) + inv(e.p) * inv(e.q)) *
                   detail::pow_limit(T, e.v * al * al * inv(e.q) + inv(e.p) * inv(e.q));
        };
        double res = std::max(std::abs(lhs_rprime(1.0, 1.0) - rhs_rprime(1.0, 1.0)),
                              std::abs(lhs_r(1.0, 1.0) - rhs_r(1.0, 1.0)));
        bool strict = true;
        if (e.finite()) {
            strict = lhs_rprime(2.0, 0.5) > rhs_rprime(2.0, 0.5) &&
                     lhs_r(2.0, 0.5) > rhs_r(2.0, 0.5);
        }
        push("const-jensen", res, res <= tol && strict,
             e.finite() ? "strict away from S=T=1" : "degenerate q=inf form");
    }

    return out;
}

/// Real exponential witnesses xi = e1/(sqrt(u)(p-1)), eta = e1/(sqrt(v)(q-1))
/// attaining equality in the full Hoelder inequality.
inline std::pair<ComplexVector, ComplexVector> sharpness_witness(const ExponentTuple& e,
                                                                 double lambda = 1.0) {
    if (!e.finite()) throw std::invalid_argument("sharpness_witness: exponents must be finite");
    ComplexVector xi = {Complex(lambda / (std::sqrt(e.u) * (e.p - 1.0)))};
    ComplexVector eta = {Complex(lambda / (std::sqrt(e.v) * (e.q - 1.0)))};
    return {xi, eta};
}

/// Closed-form Gaussian norm ||E_xi||_k = e^{(k-1)|xi|^2/2} for real xi.
inline double exponential_norm_closed_form(double xi_norm2, double k) {
    return std::exp(0.5 * (k - 1.0) * xi_norm2);
}

/// Closed-form ratio for phi = psi = E_{t e1}, p = q = r:
/// exp((p-1) t^2 [(1/sqrt(u) + 1/sqrt(v))^2/2 - 1]); exceeds 1 for small
/// 1/u + 1/v > 1.
inline double minimality_ratio(double u, double v, double p, double t) {
    double s = 1.0 / std::sqrt(u) + 1.0 / std::sqrt(v);
    return std::exp((p - 1.0) * t * t * (0.5 * s * s - 1.0));
}

struct MinimalityWitness {
    double t;
    double ratio;
};

/// Scale ladder search for a Hoelder violation when 1/u + 1/v > 1.
/// Returns the smallest ladder scale with ratio > 1.01; empty when no
/// violation is found (always the case for 1/u + 1/v <= 1).
inline std::optional<MinimalityWitness> minimality_counterexample(double u, double v, double p) {
    for (int k = 0; k <= 8; ++k) {
        double t = 0.25 * std::pow(2.0, k);
        double ratio = minimality_ratio(u, v, p, t);
        if (ratio > 1.01) return MinimalityWitness{t, ratio};
    }
    return std::nullopt;
}

/// d = 2 product fixtures must reproduce the square of the d = 1
/// full-Hoelder ratio and of the Lieb kernel value.
inline CheckReport tensorization_check(const ChaosExpansion& phi1, const ChaosExpansion& psi1,
                                       const ExponentTuple& e, const QuadratureRule& rule1,
                                       const QuadratureRule& rule2, double tol = 1e-5) {
    if (phi1.dim() != 1 || psi1.dim() != 1)
        throw std::invalid_argument("tensorization_check: inputs must be d=1 expansions");
    if (!e.finite()) throw std::invalid_argument("tensorization_check: exponents must be finite");

    double r1 = full_holder_ratio(phi1, psi1, e, rule1).ratio;
    ChaosExpansion phi2 = tensor_product(phi1, phi1);
    ChaosExpansion psi2 = tensor_product(psi1, psi1);
    double r2 = full_holder_ratio(phi2, psi2, e, rule2).ratio;
    double ratio_res = std::abs(r2 - r1 * r1) / std::max(1e-30, r1 * r1);

    auto st = lieb_argmax_closed_form(e);
    double k1 = lieb_kernel_value(e, st[0], st[1], 1);
    double k2 = lieb_kernel_value(e, st[0], st[1], 2);
    double kernel_res = std::abs(k2 - k1 * k1) / (k1 * k1);

    CheckReport rep;
    rep.check = "tensorization";
    rep.set_exponents(e);
    rep.lhs = r2;
    rep.rhs = r1 * r1;
    rep.ratio = r2 / (r1 * r1);
    rep.residual = std::max(ratio_res, kernel_res);
    rep.pass = rep.residual <= tol;
    rep.note = "kernel d1=" + detail::format_double(k1) + " d2=" + detail::format_double(k2);
    return rep;
}

} // namespace wicklab

#endif
