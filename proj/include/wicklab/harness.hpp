#ifndef WICKLAB_HARNESS_HPP
#define WICKLAB_HARNESS_HPP

#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "wicklab/checks.hpp"
#include "wicklab/io.hpp"

namespace wicklab {

inline constexpr const char* kVersion = "0.1.0";

/// Everything a run needs; loadable from JSON with per-field overrides.
struct RunConfig {
    int dim = 1;
    int chaos_degree = 12;    // cap for expansions (8 is the d = 2 default)
    int quad_order = 64;      // d = 1 rule
    int quad_order_2d = 32;   // d = 2 rule
    double grid_extent = 12.0;
    double grid_step = 0.01;
    double young_extent = 24.0; // convolved Gaussians are wider than their factors
    std::uint64_t seed = 20240801;
    int random_pairs = 200;
    int admissible_trials = 500;
    double slack = kDefaultSlack;
    double grid_tol = kDefaultGridTol;
    double exact_tol = kDefaultExactTol;
    double tensor_tol = 1e-5;
    std::vector<double> u_values = {4.0 / 3.0, 2.0, 4.0};
    std::vector<double> p_values = {1.5, 2.0, 3.0, 4.0};
    std::vector<double> q_values = {1.5, 2.0, 3.0, 4.0};
    int threads = 1;

    void validate() const {
        if (dim < 1 || dim > 2) throw std::invalid_argument("RunConfig: dim must be 1 or 2");
        if (chaos_degree < 0 || chaos_degree > 16)
            throw std::invalid_argument("RunConfig: chaos_degree must be in [0, 16]");
        if (quad_order < 1 || quad_order > 200 || quad_order_2d < 1 || quad_order_2d > 200)
            throw std::invalid_argument("RunConfig: quadrature order must be in [1, 200]");
        if (random_pairs < 1 || admissible_trials < 0)
            throw std::invalid_argument("RunConfig: nonpositive sample counts");
        if (threads < 1) throw std::invalid_argument("RunConfig: threads must be >= 1");
        GridSpec(dim, grid_extent, grid_step); // throws on a malformed grid
    }

    json to_json() const {
        return json{{"dim", dim},
                    {"chaos_degree", chaos_degree},
                    {"quad_order", quad_order},
                    {"quad_order_2d", quad_order_2d},
                    {"grid_extent", grid_extent},
                    {"grid_step", grid_step},
                    {"young_extent", young_extent},
                    {"seed", seed},
                    {"random_pairs", random_pairs},
                    {"admissible_trials", admissible_trials},
                    {"slack", slack},
                    {"grid_tol", grid_tol},
                    {"exact_tol", exact_tol},
                    {"tensor_tol", tensor_tol},
                    {"u_values", u_values},
                    {"p_values", p_values},
                    {"q_values", q_values},
                    {"threads", threads}};
    }

    static RunConfig from_json(const json& j) {
        RunConfig c;
        c.dim = j.value("dim", c.dim);
        c.chaos_degree = j.value("chaos_degree", c.chaos_degree);
        c.quad_order = j.value("quad_order", c.quad_order);
        c.quad_order_2d = j.value("quad_order_2d", c.quad_order_2d);
        c.grid_extent = j.value("grid_extent", c.grid_extent);
        c.grid_step = j.value("grid_step", c.grid_step);
        c.young_extent = j.value("young_extent", c.young_extent);
        c.seed = j.value("seed", c.seed);
        c.random_pairs = j.value("random_pairs", c.random_pairs);
        c.admissible_trials = j.value("admissible_trials", c.admissible_trials);
        c.slack = j.value("slack", c.slack);
        c.grid_tol = j.value("grid_tol", c.grid_tol);
        c.exact_tol = j.value("exact_tol", c.exact_tol);
        c.tensor_tol = j.value("tensor_tol", c.tensor_tol);
        c.u_values = j.value("u_values", c.u_values);
        c.p_values = j.value("p_values", c.p_values);
        c.q_values = j.value("q_values", c.q_values);
        c.threads = j.value("threads", c.threads);
        c.validate();
        return c;
    }

    static RunConfig load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("RunConfig: cannot open " + path);
        json j = json::parse(in);
        return from_json(j);
    }
};

/// 53-bit uniform in [0, 1) from the raw engine output; avoids the
/// platform-dependent std::*_distribution adapters.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Deterministic random expansion: c_alpha is a complex uniform on the
/// square, damped by decay^{|alpha|} / sqrt(alpha!) so L^2 mass decays
/// geometrically in degree.
inline ChaosExpansion random_chaos(std::uint64_t seed, int dim, int max_degree,
                                   double decay = 0.5) {
    std::mt19937_64 g(seed);
    ChaosExpansion e(dim, max_degree);
    for (const auto& alpha : MultiIndex::up_to_degree(dim, max_degree)) {
        double re = 2.0 * uniform01(g) - 1.0;
        double im = 2.0 * uniform01(g) - 1.0;
        double scale = std::pow(decay, alpha.total_degree()) / std::sqrt(alpha.factorial());
        e.set(alpha, Complex(re, im) * scale);
    }
    return e;
}

struct SweepResult {
    std::vector<CheckReport> rows;
    json config;
    std::string config_hash;
};

namespace detail {

inline std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline CheckReport error_row(const std::string& check, const std::string& what) {
    CheckReport rep;
    rep.check = check;
    rep.pass = false;
    rep.note = "error: " + what;
    return rep;
}

/// Run fn, converting any exception into a failure row named `check`.
template <typename Fn>
void guarded(std::vector<CheckReport>& rows, const std::string& check, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& ex) {
        rows.push_back(error_row(check, ex.what()));
    }
}

inline CheckReport identity_row(const std::string& check, double residual, double tol,
                                const std::string& note = "") {
    CheckReport rep;
    rep.check = check;
    rep.residual = residual;
    rep.pass = residual <= tol;
    rep.note = note;
    return rep;
}

} // namespace detail

/// All (u, v, p, q, r) tuples of the finite exponent grid.
inline std::vector<ExponentTuple> exponent_grid(const RunConfig& cfg) {
    std::vector<ExponentTuple> out;
    for (double u : cfg.u_values)
        for (double p : cfg.p_values)
            for (double q : cfg.q_values)
                out.push_back(ExponentTuple::from_pq(u, conjugate_exponent(u), p, q));
    return out;
}

/// Hypercontractivity tuples (q = inf): r solved from u = (r-1)/(p-1).
inline std::vector<ExponentTuple> nelson_grid(const RunConfig& cfg) {
    std::vector<ExponentTuple> out;
    for (double u : cfg.u_values)
        for (double p : cfg.p_values) out.push_back(ExponentTuple::nelson(p, 1.0 + u * (p - 1.0)));
    return out;
}

/// Fixture pairs for the convolution identity: constants, Hermite
/// monomials, truncated exponentials, mixed complex polynomials, random.
inline std::vector<std::pair<ChaosExpansion, ChaosExpansion>>
conv_fixture_pairs(std::uint64_t seed) {
    std::vector<std::pair<ChaosExpansion, ChaosExpansion>> out;
    auto he = [](int n) {
        ChaosExpansion e(1, n);
        e.set(MultiIndex{n}, 1.0);
        return e;
    };
    ChaosExpansion one = ChaosExpansion::constant(1, 1.0);
    out.emplace_back(one, one);
    out.emplace_back(one, he(1));
    out.emplace_back(he(2), he(1));
    {
        ChaosExpansion a = he(3);
        ChaosExpansion b = he(2);
        b.add(MultiIndex{0}, 1.0);
        out.emplace_back(a, b);
    }
    out.emplace_back(exponential_chaos({Complex(0.5)}, 10),
                     exponential_chaos({Complex(-0.3)}, 10));
    out.emplace_back(exponential_chaos({Complex(0.8)}, 10), he(2));
    {
        ChaosExpansion a(1, 3);
        a.set(MultiIndex{0}, 1.0);
        a.set(MultiIndex{1}, Complex(0.0, 1.0));
        a.set(MultiIndex{3}, 0.5);
        ChaosExpansion b(1, 2);
        b.set(MultiIndex{2}, 0.3);
        b.set(MultiIndex{0}, Complex(0.0, -1.0));
        out.emplace_back(a, b);
    }
    out.emplace_back(random_chaos(seed + 11, 1, 4), random_chaos(seed + 12, 1, 4));
    out.emplace_back(exponential_chaos({Complex(0.3, 0.4)}, 10),
                     exponential_chaos({Complex(0.0, -0.5)}, 10));
    {
        // degree-4 pair, damped so the u = 4 boundary truncation on the
        // L = 12 box stays within the identity tolerance
        ChaosExpansion a(1, 4);
        a.set(MultiIndex{4}, 0.2);
        a.set(MultiIndex{1}, 0.1);
        ChaosExpansion b(1, 4);
        b.set(MultiIndex{4}, 0.2);
        b.set(MultiIndex{2}, Complex(0.0, -0.2));
        out.emplace_back(a, b);
    }
    return out;
}

// ---------------------------------------------------------------------------
// verify sections
// ---------------------------------------------------------------------------

namespace detail {

inline void section_algebra(const RunConfig& cfg, const QuadratureRule& rule,
                            std::vector<CheckReport>& rows) {
    guarded(rows, "algebra-wick-unit", [&] {
        ChaosExpansion phi = random_chaos(cfg.seed + 1, 1, 6);
        ChaosExpansion w = wick_product(phi, ChaosExpansion::constant(1, 1.0));
        double res = 0.0;
        for (const auto& [a, c] : phi.coeffs()) res = std::max(res, std::abs(c - w.coeff(a)));
        rows.push_back(identity_row("algebra-wick-unit", res, cfg.exact_tol));
    });
    guarded(rows, "algebra-stransform-mult", [&] {
        ChaosExpansion phi = random_chaos(cfg.seed + 2, 1, 5);
        ChaosExpansion psi = random_chaos(cfg.seed + 3, 1, 5);
        ChaosExpansion w = wick_product(phi, psi);
        double res = 0.0;
        for (double t : {-0.7, 0.2, 1.1}) {
            ComplexVector xi = {Complex(t, 0.3)};
            res = std::max(res, std::abs(s_transform(w, xi) -
                                         s_transform(phi, xi) * s_transform(psi, xi)));
        }
        rows.push_back(identity_row("algebra-stransform-mult", res, cfg.exact_tol));
    });
    guarded(rows, "algebra-gamma-exponential", [&] {
        ComplexVector xi = {Complex(0.6, -0.2)};
        Complex c(0.4, 0.1);
        ChaosExpansion lhs = second_quantization(c, exponential_chaos(xi, 10));
        ChaosExpansion rhs = exponential_chaos({c * xi[0]}, 10);
        double res = 0.0;
        for (const auto& [a, cv] : lhs.coeffs()) res = std::max(res, std::abs(cv - rhs.coeff(a)));
        rows.push_back(identity_row("algebra-gamma-exponential", res, cfg.exact_tol));
    });
    guarded(rows, "algebra-exp-pairing", [&] {
        // E[E_xi E_eta] = e^{<xi, eta>}, real generators, truncated at 14
        ComplexVector xi = {Complex(0.5)}, eta = {Complex(-0.4)};
        ChaosExpansion prod = wick_product(exponential_chaos(xi, 14), exponential_chaos(eta, 14));
        // Wick product of exponentials is E_{xi + eta}; its expectation is 1,
        // so pair pointwise instead: quadrature of the plain product.
        ChaosExpansion a = exponential_chaos(xi, 14);
        ChaosExpansion b = exponential_chaos(eta, 14);
        Complex got = gaussian_expectation(
            [&](const std::vector<double>& x) { return chaos_eval(a, x) * chaos_eval(b, x); },
            rule, 1);
        Complex want = std::exp(bilinear_pairing(xi, eta));
        double res = std::abs(got - want);
        rows.push_back(identity_row("algebra-exp-pairing", res, 1e-8,
                                    "wick-exp expectation=" +
                                        format_double(std::abs(prod.expectation()))));
    });
}

inline void section_conv_wick(const RunConfig& cfg, std::vector<CheckReport>& rows) {
    const GridSpec grid1(1, cfg.grid_extent, cfg.grid_step);
    const std::array<std::array<double, 2>, 3> uvs = {{{2.0, 2.0}, {3.0, 1.5}, {4.0, 4.0 / 3.0}}};
    auto pairs = conv_fixture_pairs(cfg.seed);
    int idx = 0;
    for (const auto& [phi, psi] : pairs) {
        for (const auto& uv : uvs) {
            guarded(rows, "conv-wick", [&] {
                CheckReport rep =
                    verify_conv_wick_identity(phi, psi, uv[0], uv[1], grid1, cfg.grid_tol);
                rep.note = "fixture=" + std::to_string(idx) + " " + rep.note;
                rows.push_back(rep);
            });
        }
        ++idx;
    }
    // d = 2 spot checks on a coarser box; the integrands are entire with
    // Gaussian decay, so the trapezoid sums converge spectrally in h.
    guarded(rows, "conv-wick", [&] {
        const GridSpec grid2(2, 8.0, 0.2);
        ChaosExpansion phi = exponential_chaos({Complex(0.4), Complex(-0.2)}, 6);
        ChaosExpansion psi(2, 3);
        psi.set(MultiIndex{0, 0}, 1.0);
        psi.set(MultiIndex{2, 1}, 0.5);
        CheckReport rep = verify_conv_wick_identity(phi, psi, 2.0, 2.0, grid2, cfg.grid_tol);
        rep.note = "fixture=d2-0 " + rep.note;
        rows.push_back(rep);
    });
    guarded(rows, "conv-wick", [&] {
        const GridSpec grid2(2, 8.0, 0.2);
        ChaosExpansion phi = random_chaos(cfg.seed + 21, 2, 3);
        ChaosExpansion psi = random_chaos(cfg.seed + 22, 2, 3);
        CheckReport rep = verify_conv_wick_identity(phi, psi, 2.0, 2.0, grid2, cfg.grid_tol);
        rep.note = "fixture=d2-1 " + rep.note;
        rows.push_back(rep);
    });
}

inline void section_holder(const RunConfig& cfg, const QuadratureRule& rule,
                           std::vector<CheckReport>& rows) {
    const std::array<double, 4> ps = {1.0, 2.0, 3.0, kInf};
    const std::array<std::array<double, 2>, 3> uvs = {{{2.0, 2.0}, {3.0, 1.5}, {4.0, 4.0 / 3.0}}};
    for (double p : ps) {
        for (int k = 0; k < cfg.random_pairs; ++k) {
            guarded(rows, "holder", [&] {
                ChaosExpansion phi = random_chaos(cfg.seed + 1000 + 2 * k, 1, 6);
                ChaosExpansion psi = random_chaos(cfg.seed + 1001 + 2 * k, 1, 6);
                const auto& uv = uvs[static_cast<std::size_t>(k % 3)];
                CheckReport rep = holder_wick_ratio(phi, psi, p, uv[0], uv[1], rule, cfg.slack);
                rep.note = "pair=" + std::to_string(k) +
                           (rep.note.empty() ? "" : " " + rep.note);
                rows.push_back(rep);
            });
        }
    }
    // exponential equality case at p = q = r, u = v = 2: xi = eta = t/sqrt(u)(p-1)
    guarded(rows, "holder-sharp", [&] {
        for (double p : {2.0, 3.0}) {
            ExponentTuple e(2.0, 2.0, p, p, p);
            auto [xi, eta] = sharpness_witness(e, std::min(1.0, 0.6 * std::sqrt(2.0) * (p - 1.0)));
            ChaosExpansion phi = exponential_chaos(xi, 14);
            ChaosExpansion psi = exponential_chaos(eta, 14);
            CheckReport rep = holder_wick_ratio(phi, psi, p, 2.0, 2.0, rule, cfg.slack);
            rep.check = "holder-sharp";
            rep.residual = std::abs(rep.ratio - 1.0);
            rep.pass = rep.residual <= 1e-6;
            rep.note = "truncation tail=" + format_double(exponential_tail_bound(xi, 14));
            rows.push_back(rep);
        }
    });
}

inline void section_nelson(const RunConfig& cfg, const QuadratureRule& rule,
                           std::vector<CheckReport>& rows) {
    const std::array<std::array<double, 2>, 3> prs = {{{2.0, 4.0}, {1.5, 3.0}, {2.0, 2.0}}};
    for (const auto& pr : prs) {
        for (int k = 0; k < cfg.random_pairs; ++k) {
            guarded(rows, "nelson", [&] {
                ChaosExpansion phi = random_chaos(cfg.seed + 3000 + 2 * k, 1, 6);
                ChaosExpansion psi = random_chaos(cfg.seed + 3001 + 2 * k, 1, 6);
                CheckReport rep = nelson_ratio(phi, psi, pr[0], pr[1], rule, cfg.slack);
                rep.note = "pair=" + std::to_string(k) + " " + rep.note;
                rows.push_back(rep);
            });
        }
        // psi = 1: ||Gamma(sqrt((p-1)/(r-1))) E_xi||_r = ||E_xi||_p exactly
        guarded(rows, "nelson-sharp", [&] {
            ComplexVector xi = {Complex(0.5)};
            ChaosExpansion phi = exponential_chaos(xi, 14);
            CheckReport rep =
                nelson_ratio(phi, ChaosExpansion::constant(1, 1.0), pr[0], pr[1], rule, cfg.slack);
            rep.check = "nelson-sharp";
            rep.residual = std::abs(rep.ratio - 1.0);
            rep.pass = rep.residual <= 1e-6;
            rep.note = "truncation tail=" + format_double(exponential_tail_bound(xi, 14));
            rows.push_back(rep);
        });
    }
}

inline void section_full_holder(const RunConfig& cfg, const QuadratureRule& rule,
                                std::vector<CheckReport>& rows) {
    int tuple_idx = 0;
    for (const ExponentTuple& e : exponent_grid(cfg)) {
        for (int k = 0; k < 4; ++k) {
            guarded(rows, "full-holder", [&] {
                ChaosExpansion phi = random_chaos(cfg.seed + 5000 + 8 * tuple_idx + 2 * k, 1, 6);
                ChaosExpansion psi = random_chaos(cfg.seed + 5001 + 8 * tuple_idx + 2 * k, 1, 6);
                CheckReport rep = full_holder_ratio(phi, psi, e, rule, cfg.slack);
                rep.note = "pair=" + std::to_string(k);
                rows.push_back(rep);
            });
        }
        ++tuple_idx;
    }
    for (const ExponentTuple& e : nelson_grid(cfg)) {
        for (int k = 0; k < 2; ++k) {
            guarded(rows, "full-holder", [&] {
                ChaosExpansion phi = random_chaos(cfg.seed + 7000 + 4 * tuple_idx + 2 * k, 1, 6);
                ChaosExpansion psi = random_chaos(cfg.seed + 7001 + 4 * tuple_idx + 2 * k, 1, 6);
                CheckReport rep = full_holder_ratio(phi, psi, e, rule, cfg.slack);
                rep.note = "pair=" + std::to_string(k) + " " + rep.note;
                rows.push_back(rep);
            });
        }
        ++tuple_idx;
    }
    // p = q forces r = p: the full inequality must reproduce the plain
    // Hoelder ratio on the same inputs
    for (double u : cfg.u_values) {
        guarded(rows, "specialize-holder", [&] {
            double v = conjugate_exponent(u);
            ExponentTuple e = ExponentTuple::from_pq(u, v, 2.0, 2.0);
            ChaosExpansion phi = random_chaos(cfg.seed + 41, 1, 6);
            ChaosExpansion psi = random_chaos(cfg.seed + 42, 1, 6);
            double full = full_holder_ratio(phi, psi, e, rule, cfg.slack).ratio;
            double plain = holder_wick_ratio(phi, psi, 2.0, u, v, rule, cfg.slack).ratio;
            CheckReport rep = identity_row("specialize-holder", std::abs(full - plain),
                                           cfg.exact_tol, "r=p=q=2");
            rep.set_exponents(e);
            rows.push_back(rep);
        });
    }
    // q = inf with u = (r-1)/(p-1) is hypercontractivity: the damping
    // constants coincide with Nelson's
    for (double u : cfg.u_values) {
        guarded(rows, "specialize-nelson", [&] {
            double p = 2.0, r = 1.0 + u * (p - 1.0);
            ExponentTuple e = ExponentTuple::nelson(p, r);
            ChaosExpansion phi = random_chaos(cfg.seed + 43, 1, 6);
            ChaosExpansion psi = random_chaos(cfg.seed + 44, 1, 6);
            double full = full_holder_ratio(phi, psi, e, rule, cfg.slack).ratio;
            double nels = nelson_ratio(phi, psi, p, r, rule, cfg.slack).ratio;
            CheckReport rep =
                identity_row("specialize-nelson", std::abs(full - nels), cfg.exact_tol);
            rep.set_exponents(e);
            rows.push_back(rep);
        });
    }
}

inline void section_constants(const RunConfig& cfg, std::vector<CheckReport>& rows) {
    auto run_suite = [&](const ExponentTuple& e) {
        guarded(rows, "constants", [&] {
            auto suite = constants_identity_suite(e, cfg.exact_tol);
            rows.insert(rows.end(), suite.begin(), suite.end());
        });
    };
    for (const ExponentTuple& e : exponent_grid(cfg)) run_suite(e);
    for (const ExponentTuple& e : nelson_grid(cfg)) run_suite(e);
}

inline void section_lieb(const RunConfig& cfg, std::vector<CheckReport>& rows) {
    for (const ExponentTuple& e : exponent_grid(cfg)) {
        guarded(rows, "lieb-sup", [&] {
            LiebSearchResult found = lieb_sup_search(e);
            double want = lieb_sup_closed_form(e);
            auto st = lieb_argmax_closed_form(e);
            double value_res = std::abs(found.sup_value - want) / want;
            double argmax_res = std::max(std::abs(found.s_star - st[0]) / st[0],
                                         std::abs(found.t_star - st[1]) / st[1]);
            CheckReport rep;
            rep.check = "lieb-sup";
            rep.set_exponents(e);
            rep.lhs = found.sup_value;
            rep.rhs = want;
            rep.ratio = found.sup_value / want;
            rep.residual = value_res;
            rep.pass = value_res <= 1e-8 && argmax_res <= 1e-5;
            rep.note = "argmax_res=" + format_double(argmax_res) +
                       " sweeps=" + std::to_string(found.sweeps);
            rows.push_back(rep);
        });
        guarded(rows, "lieb-kernel", [&] {
            auto st = lieb_argmax_closed_form(e);
            double k1 = lieb_kernel_value(e, st[0], st[1], 1);
            double f = lieb_objective(st[0], st[1], e);
            CheckReport rep;
            rep.check = "lieb-kernel";
            rep.set_exponents(e);
            rep.lhs = k1 * k1;
            rep.rhs = f;
            rep.ratio = k1 * k1 / f;
            rep.residual = std::abs(k1 * k1 - f) / f;
            rep.pass = rep.residual <= 1e-6;
            rows.push_back(rep);
        });
    }
    guarded(rows, "lieb-worked", [&] {
        // (u, v, p, q) = (2, 2, 2, 4) gives r = 5/2 and sup = 2^{1/20}
        ExponentTuple e = ExponentTuple::from_pq(2.0, 2.0, 2.0, 4.0);
        double want = std::pow(2.0, 0.05);
        double got = lieb_sup_closed_form(e);
        CheckReport rep;
        rep.check = "lieb-worked";
        rep.set_exponents(e);
        rep.lhs = got;
        rep.rhs = want;
        rep.ratio = got / want;
        rep.residual = std::abs(got - want);
        rep.pass = rep.residual <= cfg.exact_tol && std::abs(e.r - 2.5) <= cfg.exact_tol;
        rows.push_back(rep);
    });
}

inline void section_sharpness(const RunConfig& cfg, const QuadratureRule& rule,
                              std::vector<CheckReport>& rows) {
    for (const ExponentTuple& e : exponent_grid(cfg)) {
        guarded(rows, "sharp-equality", [&] {
            double a = 1.0 / (std::sqrt(e.u) * (e.p - 1.0));
            double b = 1.0 / (std::sqrt(e.v) * (e.q - 1.0));
            double lam = std::min(1.0, 0.6 / std::max(a, b));
            auto [xi, eta] = sharpness_witness(e, lam);
            const int N = 14;
            ChaosExpansion phi = exponential_chaos(xi, N);
            ChaosExpansion psi = exponential_chaos(eta, N);
            CheckReport rep = full_holder_ratio(phi, psi, e, rule, cfg.slack);
            rep.check = "sharp-equality";
            rep.residual = std::abs(rep.ratio - 1.0);
            rep.pass = rep.residual <= 1e-6;
            rep.note = "lambda=" + format_double(lam) +
                       " tail=" + format_double(std::max(exponential_tail_bound(xi, N),
                                                         exponential_tail_bound(eta, N)));
            rows.push_back(rep);

            // perturbing one generator off the matched ray breaks equality:
            // closed-form and measured ratios agree and drop below 1
            ComplexVector eta2 = {1.5 * eta[0]};
            ChaosExpansion psi2 = exponential_chaos(eta2, 16);
            CheckReport pert = full_holder_ratio(phi, psi2, e, rule, cfg.slack);
            double x1 = (xi[0] / std::sqrt(e.u) + eta2[0] / std::sqrt(e.v)).real();
            double cf = std::exp(0.5 * ((e.r - 1.0) * x1 * x1 -
                                        (e.p - 1.0) * std::norm(xi[0]) -
                                        (e.q - 1.0) * std::norm(eta2[0])));
            pert.check = "sharp-perturbed";
            pert.residual = std::abs(pert.ratio - cf);
            pert.pass = pert.residual <= 1e-6 && pert.ratio < 1.0;
            pert.note = "closed_form=" + format_double(cf);
            rows.push_back(pert);
        });
    }
}

inline void section_minimality(const RunConfig& cfg, const QuadratureRule& rule,
                               std::vector<CheckReport>& rows) {
    const std::array<std::array<double, 3>, 4> violating = {
        {{1.5, 1.5, 2.0}, {1.9, 1.9, 2.0}, {1.2, 3.0, 2.0}, {1.5, 1.5, 3.0}}};
    for (const auto& t : violating) {
        guarded(rows, "minimality-violation", [&] {
            auto w = minimality_counterexample(t[0], t[1], t[2]);
            CheckReport rep;
            rep.check = "minimality-violation";
            rep.u = t[0];
            rep.v = t[1];
            rep.p = rep.q = rep.r = t[2];
            if (w) {
                rep.lhs = w->ratio;
                rep.rhs = 1.0;
                rep.ratio = w->ratio;
                rep.residual = w->ratio - 1.0;
                rep.pass = true;
                rep.note = "t=" + format_double(w->t);
            } else {
                rep.pass = false;
                rep.note = "no violation found on the scale ladder";
            }
            rows.push_back(rep);
        });
    }
    // measured confirmation of the closed form at the first witness
    guarded(rows, "minimality-measured", [&] {
        double u = 1.5, v = 1.5, p = 2.0;
        auto w = minimality_counterexample(u, v, p);
        if (!w) throw std::runtime_error("expected a violation at u = v = 1.5");
        ComplexVector xi = {Complex(w->t)};
        ChaosExpansion phi = exponential_chaos(xi, 14);
        double num = lp_norm_gaussian(damped_wick(phi, phi, u, v), p, rule);
        double den = lp_norm_gaussian(phi, p, rule);
        double measured = num / (den * den);
        CheckReport rep;
        rep.check = "minimality-measured";
        rep.u = u;
        rep.v = v;
        rep.p = rep.q = rep.r = p;
        rep.lhs = measured;
        rep.rhs = w->ratio;
        rep.ratio = measured / w->ratio;
        rep.residual = std::abs(measured - w->ratio) / w->ratio;
        rep.pass = rep.residual <= 1e-6 && measured > 1.01;
        rep.note = "t=" + format_double(w->t);
        rows.push_back(rep);
    });
    // admissible pairs (1/u + 1/v <= 1) must never trip the detector
    guarded(rows, "minimality-admissible", [&] {
        std::mt19937_64 g(cfg.seed ^ 0x9e3779b97f4a7c15ull);
        int hits = 0;
        double worst = 0.0;
        for (int k = 0; k < cfg.admissible_trials; ++k) {
            double iu = 0.02 + 0.96 * uniform01(g);
            double iv = (1.0 - iu) * uniform01(g);
            if (iv <= 0.0) iv = 1e-6;
            double u = 1.0 / iu, v = 1.0 / iv, p = 1.5 + 2.0 * uniform01(g);
            if (minimality_counterexample(u, v, p)) ++hits;
            for (int j = 0; j <= 8; ++j)
                worst = std::max(worst, minimality_ratio(u, v, p, 0.25 * std::pow(2.0, j)));
        }
        CheckReport rep;
        rep.check = "minimality-admissible";
        rep.lhs = static_cast<double>(hits);
        rep.rhs = 0.0;
        rep.residual = std::max(0.0, worst - 1.0);
        rep.pass = hits == 0;
        rep.note = "trials=" + std::to_string(cfg.admissible_trials) +
                   " worst_ratio=" + format_double(worst);
        rows.push_back(rep);
    });
}

inline void section_tensorization(const RunConfig& cfg, const QuadratureRule& rule1,
                                  const QuadratureRule& rule2, std::vector<CheckReport>& rows) {
    struct Fixture {
        ChaosExpansion phi, psi;
        ExponentTuple e;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({exponential_chaos({Complex(0.4)}, 8), exponential_chaos({Complex(-0.3)}, 8),
                        ExponentTuple::from_pq(2.0, 2.0, 2.0, 4.0)});
    fixtures.push_back({random_chaos(cfg.seed + 61, 1, 3), random_chaos(cfg.seed + 62, 1, 3),
                        ExponentTuple::from_pq(2.0, 2.0, 2.0, 2.0)});
    fixtures.push_back({exponential_chaos({Complex(0.3)}, 8), exponential_chaos({Complex(0.2)}, 8),
                        ExponentTuple::from_pq(4.0 / 3.0, 4.0, 1.5, 2.0)});
    int idx = 0;
    for (const auto& fx : fixtures) {
        guarded(rows, "tensorization", [&] {
            CheckReport rep = tensorization_check(fx.phi, fx.psi, fx.e, rule1, rule2,
                                                  cfg.tensor_tol);
            rep.note = "fixture=" + std::to_string(idx) + " " + rep.note;
            rows.push_back(rep);
        });
        ++idx;
    }
}

inline void section_young(const RunConfig& cfg, std::vector<CheckReport>& rows) {
    const GridSpec grid(1, cfg.young_extent, cfg.grid_step);
    auto gaussian = [](double s) {
        return Field([s](const std::vector<double>& x) {
            return Complex(std::exp(-0.5 * s * x[0] * x[0]));
        });
    };
    Field tent([](const std::vector<double>& x) {
        return Complex(std::max(0.0, 1.0 - std::abs(x[0])));
    });
    Field bump([](const std::vector<double>& x) {
        double t = 1.0 - x[0] * x[0];
        return Complex(t > 0.0 ? t * t : 0.0);
    });
    const std::array<std::array<double, 3>, 3> pqr = {
        {{4.0 / 3.0, 4.0 / 3.0, 2.0}, {1.0, 2.0, 2.0}, {1.5, 1.5, 3.0}}};

    auto check = [&](const Field& f, const Field& g, double p, double q, double r,
                     const std::string& tag, bool expect_equality) {
        guarded(rows, "young-grid", [&] {
            GridFunction ff = GridFunction::sample(grid, f);
            GridFunction gg = GridFunction::sample(grid, g);
            double C = sharp_young_constant(p, q, r, 1);
            double num = lp_norm_lebesgue(convolve_normalized(ff, gg), r);
            double den = C * lp_norm_lebesgue(ff, p) * lp_norm_lebesgue(gg, q);
            CheckReport rep;
            rep.check = expect_equality ? "young-sharp" : "young-grid";
            rep.p = p;
            rep.q = q;
            rep.r = r;
            rep.lhs = num;
            rep.rhs = den;
            rep.ratio = num / den;
            if (expect_equality) {
                rep.residual = std::abs(rep.ratio - 1.0);
                rep.pass = rep.residual <= 1e-4;
            } else {
                rep.residual = std::max(0.0, rep.ratio - 1.0);
                rep.pass = rep.ratio <= 1.0 + cfg.grid_tol;
            }
            rep.note = tag + " C=" + format_double(C);
            rows.push_back(rep);
        });
    };

    for (const auto& e : pqr) {
        double p = e[0], q = e[1], r = e[2];
        check(gaussian(1.0), gaussian(0.5), p, q, r, "gaussian(1,0.5)", false);
        check(tent, bump, p, q, r, "tent*bump", false);
        // extremal Gaussian widths 1/p', 1/q' attain the constant
        if (p > 1.0 && q > 1.0)
            check(gaussian(1.0 / conjugate_exponent(p)), gaussian(1.0 / conjugate_exponent(q)), p,
                  q, r, "gaussian-extremal", true);
    }
}

} // namespace detail

/// The full verification battery; one CheckReport per claim instance.
inline SweepResult run_verify(const RunConfig& cfg) {
    cfg.validate();
    SweepResult result;
    result.config = cfg.to_json();
    result.config_hash = detail::fnv1a_hex(result.config.dump());
    std::vector<CheckReport>& rows = result.rows;

    const QuadratureRule rule1 = gauss_hermite_rule(cfg.quad_order);
    const QuadratureRule rule2 = gauss_hermite_rule(cfg.quad_order_2d);

    detail::section_algebra(cfg, rule1, rows);
    detail::section_conv_wick(cfg, rows);
    detail::section_holder(cfg, rule1, rows);
    detail::section_nelson(cfg, rule1, rows);
    detail::section_full_holder(cfg, rule1, rows);
    detail::section_constants(cfg, rows);
    detail::section_lieb(cfg, rows);
    detail::section_sharpness(cfg, rule1, rows);
    detail::section_minimality(cfg, rule1, rows);
    detail::section_tensorization(cfg, rule1, rule2, rows);
    detail::section_young(cfg, rows);
    return result;
}

/// Exponent-grid sweep: one full-Hoelder row and one Lieb row per grid
/// point, optionally computed on a thread pool. Results are concatenated
/// in grid order, so serial and parallel runs emit identical bytes.
inline SweepResult run_sweep(const RunConfig& cfg) {
    cfg.validate();
    SweepResult result;
    result.config = cfg.to_json();
    result.config_hash = detail::fnv1a_hex(result.config.dump());

    struct GridPoint {
        double u, p, q;
        int idx;
    };
    std::vector<GridPoint> points;
    int idx = 0;
    for (double u : cfg.u_values)
        for (double p : cfg.p_values)
            for (double q : cfg.q_values) points.push_back({u, p, q, idx++});

    const QuadratureRule rule = gauss_hermite_rule(cfg.quad_order);
    auto eval_point = [&](const GridPoint& gp) {
        std::vector<CheckReport> out;
        try {
            ExponentTuple e = ExponentTuple::from_pq(gp.u, conjugate_exponent(gp.u), gp.p, gp.q);
            ChaosExpansion phi = random_chaos(cfg.seed + 9000 + 2 * gp.idx, 1, 6);
            ChaosExpansion psi = random_chaos(cfg.seed + 9001 + 2 * gp.idx, 1, 6);
            CheckReport fh = full_holder_ratio(phi, psi, e, rule, cfg.slack);
            fh.note = "grid=" + std::to_string(gp.idx);
            out.push_back(fh);

            LiebSearchResult found = lieb_sup_search(e);
            double want = lieb_sup_closed_form(e);
            CheckReport ls;
            ls.check = "lieb-sup";
            ls.set_exponents(e);
            ls.lhs = found.sup_value;
            ls.rhs = want;
            ls.ratio = found.sup_value / want;
            ls.residual = std::abs(found.sup_value - want) / want;
            ls.pass = ls.residual <= 1e-8;
            ls.note = "grid=" + std::to_string(gp.idx);
            out.push_back(ls);
        } catch (const std::exception& ex) {
            CheckReport rep = detail::error_row("sweep-point", ex.what());
            rep.u = gp.u;
            rep.p = gp.p;
            rep.q = gp.q;
            rep.note += " grid=" + std::to_string(gp.idx);
            out.push_back(rep);
        }
        return out;
    };

    if (cfg.threads <= 1) {
        for (const auto& gp : points)
            for (auto& rep : eval_point(gp)) result.rows.push_back(std::move(rep));
    } else {
        std::vector<std::future<std::vector<CheckReport>>> futures;
        futures.reserve(points.size());
        for (const auto& gp : points)
            futures.push_back(std::async(std::launch::async, eval_point, gp));
        for (auto& fut : futures)
            for (auto& rep : fut.get()) result.rows.push_back(std::move(rep));
    }
    return result;
}

/// Named single-purpose oracles for spot debugging.
inline SweepResult run_oracle(const std::string& name, const RunConfig& cfg) {
    cfg.validate();
    SweepResult result;
    result.config = cfg.to_json();
    result.config_hash = detail::fnv1a_hex(result.config.dump());
    std::vector<CheckReport>& rows = result.rows;
    const QuadratureRule rule = gauss_hermite_rule(cfg.quad_order);

    if (name == "quadrature") {
        // E[He_j He_k] = delta_{jk} j!
        for (int j = 0; j <= 8; ++j)
            for (int k = j; k <= 8; ++k) {
                Complex got = gaussian_expectation(
                    [&](const std::vector<double>& x) {
                        return Complex(hermite_eval(j, x[0]) * hermite_eval(k, x[0]));
                    },
                    rule, 1);
                double want = (j == k) ? std::tgamma(j + 1.0) : 0.0;
                double scale = std::sqrt(std::tgamma(j + 1.0) * std::tgamma(k + 1.0));
                double res = std::abs(got - want) / std::max(1.0, scale);
                CheckReport rep = detail::identity_row(
                    "oracle-quadrature", res, 1e-10,
                    "j=" + std::to_string(j) + " k=" + std::to_string(k));
                rep.lhs = got.real();
                rep.rhs = want;
                rows.push_back(rep);
            }
    } else if (name == "projection") {
        ChaosExpansion phi = random_chaos(cfg.seed + 71, 1, 6);
        double res = 0.0;
        for (int k = 0; k <= 6; ++k) {
            auto layer = chaos_projection(as_field(phi), 1, k, rule);
            for (const auto& [alpha, c] : layer) res = std::max(res, std::abs(c - phi.coeff(alpha)));
        }
        rows.push_back(detail::identity_row("oracle-projection", res, 1e-8));
    } else if (name == "exp-tail") {
        ComplexVector xi = {Complex(0.7, 0.2)};
        ChaosExpansion full = exponential_chaos(xi, 16);
        ChaosExpansion trunc = exponential_chaos(xi, 8);
        double direct2 = 0.0;
        for (const auto& [alpha, c] : full.coeffs())
            if (alpha.total_degree() > 8) direct2 += std::norm(c) * alpha.factorial();
        double bound = exponential_tail_bound(xi, 8);
        double res = std::abs(std::sqrt(direct2) - bound) / bound;
        CheckReport rep = detail::identity_row("oracle-exp-tail", res, 1e-6,
                                               "N=8 trunc_norm=" +
                                                   detail::format_double(trunc.norm_l2()));
        rep.lhs = std::sqrt(direct2);
        rep.rhs = bound;
        rows.push_back(rep);
    } else if (name == "norm-conversion") {
        // Gaussian ||phi||_p equals the normalized-Lebesgue norm of
        // phi(x) e^{-x^2/(2p)}. Fractional p uses a smooth positive
        // fixture: |poly|^p has kinks that degrade the Gauss rule.
        ChaosExpansion poly = random_chaos(cfg.seed + 73, 1, 5);
        ChaosExpansion expo = exponential_chaos({Complex(0.5)}, 14);
        for (double p : {1.5, 2.0, 3.0}) {
            const ChaosExpansion& phi = (p == 2.0) ? poly : expo;
            double gauss = lp_norm_gaussian(phi, p, rule);
            // fixed fine step: |f|^p has kinks near zeros of f, so the
            // trapezoid rule is only algebraically accurate here
            GridSpec grid(1, 20.0, 0.01);
            GridFunction f = GridFunction::sample(grid, [&](const std::vector<double>& x) {
                return chaos_eval(phi, x) * std::exp(-x[0] * x[0] / (2.0 * p));
            });
            double leb = lp_norm_lebesgue(f, p);
            double res = std::abs(gauss - leb) / gauss;
            CheckReport rep = detail::identity_row("oracle-norm-conversion", res, 1e-6,
                                                   "p=" + detail::format_double(p));
            rep.p = p;
            rep.lhs = gauss;
            rep.rhs = leb;
            rows.push_back(rep);
        }
    } else if (name == "lieb-worked") {
        ExponentTuple e = ExponentTuple::from_pq(2.0, 2.0, 2.0, 4.0);
        double got = lieb_sup_closed_form(e);
        double want = std::pow(2.0, 0.05);
        CheckReport rep = detail::identity_row("oracle-lieb-worked", std::abs(got - want), 1e-12,
                                               "r=" + detail::format_double(e.r));
        rep.set_exponents(e);
        rep.lhs = got;
        rep.rhs = want;
        rows.push_back(rep);
    } else {
        throw std::invalid_argument(
            "unknown oracle case '" + name +
            "' (expected: quadrature, projection, exp-tail, norm-conversion, lieb-worked)");
    }
    return result;
}

// ---------------------------------------------------------------------------
// artifact emission
// ---------------------------------------------------------------------------

inline std::string emit_csv(const SweepResult& r) {
    std::string out = csv_header();
    out += "\n";
    for (const auto& row : r.rows) {
        out += to_csv_row(row);
        out += "\n";
    }
    return out;
}

inline std::string emit_json(const SweepResult& r) {
    json rows = json::array();
    for (const auto& c : r.rows) {
        rows.push_back({{"check", c.check},
                        {"u", detail::format_double(c.u)},
                        {"v", detail::format_double(c.v)},
                        {"p", detail::format_double(c.p)},
                        {"q", detail::format_double(c.q)},
                        {"r", detail::format_double(c.r)},
                        {"lhs", detail::format_double(c.lhs)},
                        {"rhs", detail::format_double(c.rhs)},
                        {"ratio", detail::format_double(c.ratio)},
                        {"residual", detail::format_double(c.residual)},
                        {"pass", c.pass},
                        {"budget_note", c.note}});
    }
    json artifact = {{"version", kVersion},
                     {"config", r.config},
                     {"config_hash", r.config_hash},
                     {"all_pass", all_pass(r.rows)},
                     {"rows", rows}};
    return artifact.dump(2) + "\n";
}

/// Write to `path` or stdout when path is empty. Returns the artifact.
inline std::string write_artifact(const SweepResult& r, const std::string& path,
                                  const std::string& format) {
    std::string artifact;
    if (format == "csv")
        artifact = emit_csv(r);
    else if (format == "json")
        artifact = emit_json(r);
    else
        throw std::invalid_argument("write_artifact: format must be csv or json");
    if (path.empty()) {
        std::cout << artifact;
    } else {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("write_artifact: cannot open " + path);
        out << artifact;
    }
    return artifact;
}

} // namespace wicklab

#endif
