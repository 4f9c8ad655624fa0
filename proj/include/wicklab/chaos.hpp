#ifndef WICKLAB_CHAOS_HPP
#define WICKLAB_CHAOS_HPP

#include <cmath>
#include <complex>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "wicklab/multi_index.hpp"

namespace wicklab {

using Complex = std::complex<double>;

/// A vector in C^d; generates exponential vectors. The pairing
/// <xi, eta> = sum_i xi_i eta_i is bilinear (no conjugation).
using ComplexVector = std::vector<Complex>;

inline Complex bilinear_pairing(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("bilinear_pairing: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Probabilists' Hermite polynomial He_n(x).
/// He_{n+1} = x He_n - n He_{n-1}, He_0 = 1, He_1 = x.
inline double hermite_eval(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_eval: negative degree");
    double hm = 1.0, h = x;
    if (n == 0) return hm;
    for (int k = 1; k < n; ++k) {
        double hn = x * h - static_cast<double>(k) * hm;
        hm = h;
        h = hn;
    }
    return h;
}

/// Sparse Hermite chaos expansion: a finite map alpha -> c_alpha over
/// multi-indices with total degree <= max_degree, representing
/// phi = sum_alpha c_alpha He_alpha in L^2 of the standard Gaussian on R^d.
/// Hermite basis is orthogonal with ||He_alpha||^2 = alpha!.
class ChaosExpansion {
  public:
    ChaosExpansion(int dim, int max_degree) : dim_(dim), max_degree_(max_degree) {
        if (dim < 1) throw std::invalid_argument("ChaosExpansion: dim must be >= 1");
        if (max_degree < 0) throw std::invalid_argument("ChaosExpansion: negative degree");
    }

    static ChaosExpansion constant(int dim, Complex value) {
        ChaosExpansion e(dim, 0);
        e.set(MultiIndex::zero(dim), value);
        return e;
    }

    int dim() const { return dim_; }
    int max_degree() const { return max_degree_; }
    const std::map<MultiIndex, Complex>& coeffs() const { return coeffs_; }

    Complex coeff(const MultiIndex& alpha) const {
        auto it = coeffs_.find(alpha);
        return it == coeffs_.end() ? Complex(0.0) : it->second;
    }

    void set(const MultiIndex& alpha, Complex value) {
        if (alpha.dim() != dim_)
            throw std::invalid_argument("ChaosExpansion::set: index dim mismatch");
        if (alpha.total_degree() > max_degree_)
            throw std::invalid_argument("ChaosExpansion::set: degree beyond max_degree");
        if (value == Complex(0.0))
            coeffs_.erase(alpha);
        else
            coeffs_[alpha] = value;
    }

    void add(const MultiIndex& alpha, Complex value) { set(alpha, coeff(alpha) + value); }

    bool is_zero() const { return coeffs_.empty(); }

    /// sqrt(sum_alpha |c_alpha|^2 alpha!).
    double norm_l2() const {
        double s = 0.0;
        for (const auto& [alpha, c] : coeffs_) s += std::norm(c) * alpha.factorial();
        return std::sqrt(s);
    }

    /// E[phi] = degree-0 coefficient.
    Complex expectation() const { return coeff(MultiIndex::zero(dim_)); }

  private:
    int dim_;
    int max_degree_;
    std::map<MultiIndex, Complex> coeffs_;
};

/// Pointwise value sum_alpha c_alpha prod_i He_{alpha_i}(x_i).
inline Complex chaos_eval(const ChaosExpansion& phi, std::span<const double> x) {
    if (static_cast<int>(x.size()) != phi.dim())
        throw std::invalid_argument("chaos_eval: dimension mismatch");
    // Table of He_n(x_i) up to the max degree, one column per axis.
    const int N = phi.max_degree();
    std::vector<double> he(static_cast<std::size_t>(phi.dim()) * (N + 1));
    for (int i = 0; i < phi.dim(); ++i) {
        double* col = &he[static_cast<std::size_t>(i) * (N + 1)];
        col[0] = 1.0;
        if (N >= 1) col[1] = x[static_cast<std::size_t>(i)];
        for (int n = 1; n < N; ++n)
            col[n + 1] = x[static_cast<std::size_t>(i)] * col[n] - static_cast<double>(n) * col[n - 1];
    }
    Complex s = 0.0;
    for (const auto& [alpha, c] : phi.coeffs()) {
        double b = 1.0;
        for (int i = 0; i < phi.dim(); ++i)
            b *= he[static_cast<std::size_t>(i) * (N + 1) + alpha[i]];
        s += c * b;
    }
    return s;
}

inline Complex chaos_eval(const ChaosExpansion& phi, const std::vector<double>& x) {
    return chaos_eval(phi, std::span<const double>(x));
}

/// Wick product: coefficient-wise multi-index convolution,
/// He_alpha <> He_beta = He_{alpha+beta}. Exact for polynomial inputs.
inline ChaosExpansion wick_product(const ChaosExpansion& phi, const ChaosExpansion& psi) {
    if (phi.dim() != psi.dim())
        throw std::invalid_argument("wick_product: dimension mismatch");
    ChaosExpansion out(phi.dim(), phi.max_degree() + psi.max_degree());
    for (const auto& [a, ca] : phi.coeffs())
        for (const auto& [b, cb] : psi.coeffs()) out.add(a + b, ca * cb);
    return out;
}

/// Second quantization: the degree-n component is multiplied by c^n.
/// 0^0 = 1, so c = 0 projects onto the expectation.
inline ChaosExpansion second_quantization(Complex c, const ChaosExpansion& phi) {
    ChaosExpansion out(phi.dim(), phi.max_degree());
    for (const auto& [alpha, ca] : phi.coeffs()) {
        int n = alpha.total_degree();
        Complex factor = (n == 0) ? Complex(1.0) : std::pow(c, n);
        out.add(alpha, factor * ca);
    }
    return out;
}

/// Degree-<=N truncation of the renormalized exponential vector:
/// coefficient at alpha is xi^alpha / alpha!.
inline ChaosExpansion exponential_chaos(const ComplexVector& xi, int N) {
    if (N < 0) throw std::invalid_argument("exponential_chaos: negative truncation");
    if (xi.empty()) throw std::invalid_argument("exponential_chaos: empty generator");
    const int d = static_cast<int>(xi.size());
    ChaosExpansion out(d, N);
    for (const auto& alpha : MultiIndex::up_to_degree(d, N)) {
        Complex num = 1.0;
        for (int i = 0; i < d; ++i)
            num *= std::pow(xi[static_cast<std::size_t>(i)], alpha[i]);
        out.add(alpha, num / alpha.factorial());
    }
    return out;
}

/// Analytic L^2 tail of the truncation above:
/// sqrt(sum_{n > N} |<xi, conj(xi)>|^n / n!).
inline double exponential_tail_bound(const ComplexVector& xi, int N) {
    double norm2 = 0.0;
    for (const auto& z : xi) norm2 += std::norm(z);
    double s = 0.0, term = 1.0;
    for (int n = 1; n <= N; ++n) term *= norm2 / n;
    // term = norm2^N / N!; accumulate the tail
    for (int n = N + 1; n < N + 400; ++n) {
        term *= norm2 / n;
        s += term;
        if (term < 1e-300) break;
    }
    return std::sqrt(s);
}

/// Closed form exp(<xi, x> - <xi, xi>/2) with the bilinear pairing.
inline Complex exponential_eval(const ComplexVector& xi, std::span<const double> x) {
    if (xi.size() != x.size())
        throw std::invalid_argument("exponential_eval: dimension mismatch");
    Complex e = 0.0;
    Complex q = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        e += xi[i] * x[i];
        q += xi[i] * xi[i];
    }
    return std::exp(e - 0.5 * q);
}

inline Complex exponential_eval(const ComplexVector& xi, const std::vector<double>& x) {
    return exponential_eval(xi, std::span<const double>(x));
}

/// S-transform in coordinates: (S phi)(xi) = sum_alpha c_alpha xi^alpha.
/// Turns Wick products into pointwise products.
inline Complex s_transform(const ChaosExpansion& phi, const ComplexVector& xi) {
    if (static_cast<int>(xi.size()) != phi.dim())
        throw std::invalid_argument("s_transform: dimension mismatch");
    Complex s = 0.0;
    for (const auto& [alpha, c] : phi.coeffs()) {
        Complex m = 1.0;
        for (int i = 0; i < phi.dim(); ++i)
            m *= std::pow(xi[static_cast<std::size_t>(i)], alpha[i]);
        s += c * m;
    }
    return s;
}

/// Product expansion phi2(x1, x2) = a(x1) * b(x2) on R^{da+db}.
inline ChaosExpansion tensor_product(const ChaosExpansion& a, const ChaosExpansion& b) {
    ChaosExpansion out(a.dim() + b.dim(), a.max_degree() + b.max_degree());
    for (const auto& [alpha, ca] : a.coeffs())
        for (const auto& [beta, cb] : b.coeffs()) {
            std::vector<int> deg = alpha.degrees();
            deg.insert(deg.end(), beta.degrees().begin(), beta.degrees().end());
            out.add(MultiIndex(std::move(deg)), ca * cb);
        }
    return out;
}

} // namespace wicklab

#endif
