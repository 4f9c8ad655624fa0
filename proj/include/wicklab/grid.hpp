#ifndef WICKLAB_GRID_HPP
#define WICKLAB_GRID_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "wicklab/quadrature.hpp"

namespace wicklab {

/// Uniform grid on the box [-L, L]^d with step h; L/h must be an integer.
struct GridSpec {
    int dim = 1;
    double extent = 12.0; // L
    double step = 0.01;   // h

    GridSpec() = default;
    GridSpec(int d, double L, double h) : dim(d), extent(L), step(h) {
        if (d < 1 || d > 2) throw std::invalid_argument("GridSpec: dim must be 1 or 2");
        if (L <= 0.0 || h <= 0.0) throw std::invalid_argument("GridSpec: L, h must be positive");
        double ratio = L / h;
        if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio)
            throw std::invalid_argument("GridSpec: L/h must be an integer");
    }

    int nodes_per_axis() const { return 2 * static_cast<int>(std::round(extent / step)) + 1; }
    int half_count() const { return static_cast<int>(std::round(extent / step)); }
    double node(int i) const { return -extent + step * i; }
    std::size_t node_count() const {
        std::size_t n = static_cast<std::size_t>(nodes_per_axis());
        return dim == 1 ? n : n * n;
    }
    bool operator==(const GridSpec&) const = default;
};

/// Complex samples at all grid nodes, row-major by axis.
class GridFunction {
  public:
    GridFunction(GridSpec spec, std::vector<Complex> samples)
        : spec_(spec), samples_(std::move(samples)) {
        if (samples_.size() != spec_.node_count())
            throw std::invalid_argument("GridFunction: sample count mismatch");
    }

    static GridFunction sample(const GridSpec& spec, const Field& f) {
        std::vector<Complex> s;
        s.reserve(spec.node_count());
        const int n = spec.nodes_per_axis();
        if (spec.dim == 1) {
            std::vector<double> x(1);
            for (int i = 0; i < n; ++i) {
                x[0] = spec.node(i);
                s.push_back(f(x));
            }
        } else {
            std::vector<double> x(2);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    x[0] = spec.node(i);
                    x[1] = spec.node(j);
                    s.push_back(f(x));
                }
        }
        return GridFunction(spec, std::move(s));
    }

    const GridSpec& spec() const { return spec_; }
    const std::vector<Complex>& samples() const { return samples_; }
    std::vector<Complex>& samples() { return samples_; }

    Complex at(int i) const { return samples_[static_cast<std::size_t>(i)]; }
    Complex at(int i, int j) const {
        return samples_[static_cast<std::size_t>(i) * spec_.nodes_per_axis() + j];
    }

    /// Largest |sample| on the boundary faces of the box.
    double boundary_magnitude() const {
        const int n = spec_.nodes_per_axis();
        double m = 0.0;
        if (spec_.dim == 1) {
            m = std::max(std::abs(at(0)), std::abs(at(n - 1)));
        } else {
            for (int k = 0; k < n; ++k) {
                m = std::max(m, std::abs(at(0, k)));
                m = std::max(m, std::abs(at(n - 1, k)));
                m = std::max(m, std::abs(at(k, 0)));
                m = std::max(m, std::abs(at(k, n - 1)));
            }
        }
        return m;
    }

  private:
    GridSpec spec_;
    std::vector<Complex> samples_;
};

namespace detail {

inline void require_decay(const GridFunction& f, double threshold, const char* who) {
    if (f.boundary_magnitude() > threshold)
        throw std::domain_error(std::string(who) +
                                ": integrand does not decay at the box boundary; "
                                "increase the grid extent");
}

/// Trapezoid weight along one axis: h, halved at the two endpoints.
inline double trapezoid_weight(int i, int n, double h) {
    return (i == 0 || i == n - 1) ? 0.5 * h : h;
}

} // namespace detail

/// Normalized-Lebesgue L^p norm
/// ((2 pi)^{-d/2} int_box |f|^p dx)^{1/p} by the trapezoid rule.
inline double lp_norm_lebesgue(const GridFunction& f, double p, double decay_threshold = 1e-14) {
    if (p < 1.0) throw std::invalid_argument("lp_norm_lebesgue: p must be >= 1");
    detail::require_decay(f, decay_threshold, "lp_norm_lebesgue");
    const GridSpec& spec = f.spec();
    const int n = spec.nodes_per_axis();
    const double h = spec.step;
    double s = 0.0;
    if (spec.dim == 1) {
        for (int i = 0; i < n; ++i)
            s += detail::trapezoid_weight(i, n, h) * std::pow(std::abs(f.at(i)), p);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                s += detail::trapezoid_weight(i, n, h) * detail::trapezoid_weight(j, n, h) *
                     std::pow(std::abs(f.at(i, j)), p);
    }
    s *= std::pow(2.0 * std::numbers::pi, -0.5 * spec.dim);
    return std::pow(s, 1.0 / p);
}

/// Convolution with respect to the normalized Lebesgue measure:
/// (f * g)(x) = (2 pi)^{-d/2} int f(x - y) g(y) dy, approximated by the
/// discrete sum times h^d; x - y outside the box contributes 0.
/// Direct O(n^2) summation in the node count.
inline GridFunction convolve_normalized(const GridFunction& f, const GridFunction& g,
                                        double decay_threshold = 1e-4) {
    if (!(f.spec() == g.spec()))
        throw std::invalid_argument("convolve_normalized: grid spec mismatch");
    detail::require_decay(f, decay_threshold, "convolve_normalized");
    detail::require_decay(g, decay_threshold, "convolve_normalized");
    const GridSpec& spec = f.spec();
    const int n = spec.nodes_per_axis();
    const int n0 = spec.half_count(); // index of x = 0
    const double scale = std::pow(spec.step, spec.dim) *
                         std::pow(2.0 * std::numbers::pi, -0.5 * spec.dim);
    std::vector<Complex> out(spec.node_count(), Complex(0.0));
    if (spec.dim == 1) {
        for (int i = 0; i < n; ++i) {
            Complex s = 0.0;
            // x_i - y_j lands on node index i - j + n0
            const int jlo = std::max(0, i + n0 - (n - 1));
            const int jhi = std::min(n - 1, i + n0);
            for (int j = jlo; j <= jhi; ++j) s += f.at(i - j + n0) * g.at(j);
            out[static_cast<std::size_t>(i)] = s * scale;
        }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Complex s = 0.0;
                const int alo = std::max(0, i + n0 - (n - 1));
                const int ahi = std::min(n - 1, i + n0);
                const int blo = std::max(0, j + n0 - (n - 1));
                const int bhi = std::min(n - 1, j + n0);
                for (int a = alo; a <= ahi; ++a)
                    for (int b = blo; b <= bhi; ++b)
                        s += f.at(i - a + n0, j - b + n0) * g.at(a, b);
                out[static_cast<std::size_t>(i) * n + j] = s * scale;
            }
    }
    return GridFunction(spec, std::move(out));
}

} // namespace wicklab

#endif
