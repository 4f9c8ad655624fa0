#ifndef WICKLAB_EXPONENTS_HPP
#define WICKLAB_EXPONENTS_HPP

#include <cmath>
#include <stdexcept>

#include "wicklab/quadrature.hpp"

namespace wicklab {

/// 1/k with 1/inf = 0.
inline double inv(double k) { return k == kInf ? 0.0 : 1.0 / k; }

/// k' = k/(k - 1); 1 <-> inf involution. Rejects finite k < 1.
inline double conjugate_exponent(double k) {
    if (k == kInf) return 1.0;
    if (k < 1.0) throw std::invalid_argument("conjugate_exponent: k must be >= 1 or inf");
    if (k == 1.0) return kInf;
    return k / (k - 1.0);
}

/// r from the full-Hoelder condition
/// 1/(r - 1) = 1/(u(p - 1)) + 1/(v(q - 1)); q = inf drops the second term.
inline double full_holder_solve(double u, double v, double p, double q) {
    if (!(u > 1.0) || !(v > 1.0) || std::abs(1.0 / u + 1.0 / v - 1.0) > 1e-12)
        throw std::invalid_argument("full_holder_solve: need 1/u + 1/v = 1 with u, v > 1");
    if (!(p > 1.0)) throw std::invalid_argument("full_holder_solve: p must be > 1");
    if (!(q > 1.0)) throw std::invalid_argument("full_holder_solve: q must be > 1");
    double inv_rm1 = 1.0 / (u * (p - 1.0));
    if (q != kInf) inv_rm1 += 1.0 / (v * (q - 1.0));
    double r = 1.0 + 1.0 / inv_rm1;
    // dual form p'/u + q'/v = r'
    double dual = conjugate_exponent(p) / u + (q == kInf ? 1.0 : conjugate_exponent(q)) / v;
    if (std::abs(dual - conjugate_exponent(r)) > 1e-9 * dual)
        throw std::logic_error("full_holder_solve: dual exponent check failed");
    return r;
}

struct NelsonExponents {
    double u;       // (r - 1)/(p - 1)
    double v;       // (r - 1)/(r - p), inf when r = p
    double s_prime; // r/p
    double q_young; // from 1/r + 1 = 1/p + 1/q
};

/// Exponents of the hypercontractivity proof for 1 < p <= r.
inline NelsonExponents nelson_exponents(double p, double r) {
    if (!(p > 1.0) || r < p || r == kInf)
        throw std::invalid_argument("nelson_exponents: need 1 < p <= r < inf");
    NelsonExponents e;
    e.u = (r - 1.0) / (p - 1.0);
    e.v = (r == p) ? kInf : (r - 1.0) / (r - p);
    e.s_prime = r / p;
    double inv_q = 1.0 / p - 1.0 / r; // 1/q' actually; q from 1/r + 1 = 1/p + 1/q
    double iq = 1.0 - inv_q;
    e.q_young = (iq <= 0.0) ? kInf : 1.0 / iq;
    if (r == p) e.q_young = 1.0;
    return e;
}

/// The scalars (u, v, p, q, r) with conjugates; q may be inf (the
/// hypercontractivity marginal). Validates the conjugate pair and the
/// full-Hoelder condition on construction.
struct ExponentTuple {
    double u, v, p, q, r;
    double pc, qc, rc; // conjugates p', q', r'

    ExponentTuple(double u_, double v_, double p_, double q_, double r_)
        : u(u_), v(v_), p(p_), q(q_), r(r_) {
        // u = 1, v = inf is the degenerate hypercontractive pair (r = p)
        if (!(u >= 1.0) || !(v >= 1.0) || std::abs(inv(u) + inv(v) - 1.0) > 1e-12)
            throw std::invalid_argument("ExponentTuple: need 1/u + 1/v = 1 with u, v >= 1");
        if (!(p > 1.0) || !(q > 1.0) || !(r > 1.0))
            throw std::invalid_argument("ExponentTuple: exponents must exceed 1");
        pc = conjugate_exponent(p);
        qc = conjugate_exponent(q);
        rc = conjugate_exponent(r);
        double lhs = 1.0 / (u * (p - 1.0)) + (q == kInf ? 0.0 : 1.0 / (v * (q - 1.0)));
        double rhs = (r == kInf) ? 0.0 : 1.0 / (r - 1.0);
        if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(rhs)))
            throw std::invalid_argument("ExponentTuple: full-Hoelder condition violated");
        double lo = std::min(p, q), hi = std::max(p, q);
        if (r < lo - 1e-12 || r > hi + 1e-12)
            throw std::invalid_argument("ExponentTuple: r outside [min(p,q), max(p,q)]");
    }

    static ExponentTuple from_pq(double u, double v, double p, double q) {
        return ExponentTuple(u, v, p, q, full_holder_solve(u, v, p, q));
    }

    /// Hypercontractivity tuple for 1 < p <= r: q = inf,
    /// u = (r-1)/(p-1), v = (r-1)/(r-p).
    static ExponentTuple nelson(double p, double r) {
        auto n = nelson_exponents(p, r);
        return ExponentTuple(n.u, n.v, p, kInf, r);
    }

    bool finite() const { return p != kInf && q != kInf && r != kInf && v != kInf; }
};

/// alpha, beta, gamma of the Lieb supremum computation. q = inf enters
/// through q' = 1; v = inf sends alpha to 0.
struct LiebParams {
    double alpha, beta, gamma;

    explicit LiebParams(const ExponentTuple& e) {
        double root = std::sqrt(e.pc * e.qc * e.rc);
        alpha = e.qc / (e.v * root);
        beta = e.rc / root;
        gamma = e.pc / (e.u * root);
    }
};

/// C_k with C_k^2 = k^{1/k} / k'^{1/k'}; C_1 = C_inf = 1.
inline double young_axis_constant(double k) {
    if (k == 1.0 || k == kInf) return 1.0;
    if (k < 1.0) throw std::invalid_argument("young_axis_constant: k must be >= 1");
    double kc = conjugate_exponent(k);
    return std::sqrt(std::pow(k, 1.0 / k) / std::pow(kc, 1.0 / kc));
}

/// Sharp Young constant (C_p C_q / C_r)^d for 1/p + 1/q = 1/r + 1.
inline double sharp_young_constant(double p, double q, double r, int d) {
    if (p < 1.0 || q < 1.0 || r < 1.0)
        throw std::invalid_argument("sharp_young_constant: exponents must be >= 1");
    if (std::abs(inv(p) + inv(q) - inv(r) - 1.0) > 1e-12)
        throw std::invalid_argument("sharp_young_constant: need 1/p + 1/q = 1/r + 1");
    return std::pow(young_axis_constant(p) * young_axis_constant(q) / young_axis_constant(r),
                    static_cast<double>(d));
}

/// Gaussian trial c e^{-s x^2/2} normalized to unit normalized-Lebesgue
/// L^p norm: c = (sqrt(p s))^{1/p}.
struct GaussianTrial {
    double scale;         // s
    double norm_target;   // p
    double normalization; // c

    GaussianTrial(double s, double p) : scale(s), norm_target(p) {
        if (!(s > 0.0) || !(p > 1.0))
            throw std::invalid_argument("GaussianTrial: need s > 0, p > 1");
        normalization = std::pow(std::sqrt(p * s), 1.0 / p);
    }

    double operator()(double x) const {
        return normalization * std::exp(-0.5 * scale * x * x);
    }
};

} // namespace wicklab

#endif
