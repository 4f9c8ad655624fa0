#include <doctest.h>

#include "wicklab/harness.hpp"
#include "wicklab/quadrature.hpp"

using namespace wicklab;

TEST_CASE("rule weights sum to one and nodes are symmetric") {
    for (int order : {1, 2, 5, 64, 200}) {
        QuadratureRule rule = gauss_hermite_rule(order);
        double sw = 0.0;
        for (double w : rule.weights) sw += w;
        CHECK(sw == doctest::Approx(1.0).epsilon(1e-12));
        double sn = 0.0;
        for (double x : rule.nodes) sn += x;
        CHECK(std::abs(sn) <= 1e-9);
    }
    CHECK_THROWS_AS(gauss_hermite_rule(0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_hermite_rule(201), std::invalid_argument);
}

TEST_CASE("hermite orthogonality under the rule") {
    QuadratureRule rule = gauss_hermite_rule(64);
    for (int j = 0; j <= 10; ++j)
        for (int k = j; k <= 10; ++k) {
            Complex got = gaussian_expectation(
                [&](const std::vector<double>& x) {
                    return Complex(hermite_eval(j, x[0]) * hermite_eval(k, x[0]));
                },
                rule, 1);
            double want = (j == k) ? std::tgamma(j + 1.0) : 0.0;
            // scale-aware: the summands reach sqrt(j! k!), so roundoff does too
            double scale = std::sqrt(std::tgamma(j + 1.0) * std::tgamma(k + 1.0));
            CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, scale));
        }
}

TEST_CASE("gaussian moments") {
    QuadratureRule rule = gauss_hermite_rule(32);
    double want = 1.0; // (2m - 1)!!
    for (int m = 1; m <= 10; ++m) {
        want *= 2.0 * m - 1.0;
        Complex got = gaussian_expectation(
            [&](const std::vector<double>& x) { return Complex(std::pow(x[0], 2.0 * m)); },
            rule, 1);
        CHECK(got.real() == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("projection oracle recovers chaos coefficients") {
    QuadratureRule rule = gauss_hermite_rule(64);
    ChaosExpansion phi = random_chaos(7, 1, 6);
    for (int k = 0; k <= 6; ++k)
        for (const auto& [alpha, c] : chaos_projection(as_field(phi), 1, k, rule))
            CHECK(std::abs(c - phi.coeff(alpha)) <= 1e-8);

    ChaosExpansion phi2 = random_chaos(8, 2, 4);
    QuadratureRule rule2 = gauss_hermite_rule(32);
    for (int k = 0; k <= 4; ++k)
        for (const auto& [alpha, c] : chaos_projection(as_field(phi2), 2, k, rule2))
            CHECK(std::abs(c - phi2.coeff(alpha)) <= 1e-8);
}

TEST_CASE("gaussian p-norms") {
    QuadratureRule rule = gauss_hermite_rule(64);
    ChaosExpansion phi = random_chaos(9, 1, 6);

    // p = 2 agrees with the coefficient formula
    CHECK(lp_norm_gaussian(phi, 2.0, rule) == doctest::Approx(phi.norm_l2()).epsilon(1e-10));

    // constants have norm |c| for every p
    ChaosExpansion c = ChaosExpansion::constant(1, Complex(3.0, -4.0));
    for (double p : {1.0, 1.5, 2.0, 7.0, kInf})
        CHECK(lp_norm_gaussian(c, p, rule) == doctest::Approx(5.0).epsilon(1e-12));

    // monotone nondecreasing in p
    double prev = 0.0;
    for (double p : {1.0, 1.5, 2.0, 3.0, 4.0}) {
        double n = lp_norm_gaussian(phi, p, rule);
        CHECK(n >= prev - 1e-12);
        prev = n;
    }
    CHECK_THROWS_AS(lp_norm_gaussian(phi, 0.5, rule), std::invalid_argument);
}

TEST_CASE("second quantization contracts every L^p for real c in [0, 1]") {
    QuadratureRule rule = gauss_hermite_rule(64);
    for (std::uint64_t s : {11u, 12u, 13u}) {
        ChaosExpansion phi = random_chaos(s, 1, 6);
        for (double c : {0.0, 0.3, 0.8, 1.0})
            for (double p : {1.5, 2.0, 3.0}) {
                double lhs = lp_norm_gaussian(second_quantization(c, phi), p, rule);
                double rhs = lp_norm_gaussian(phi, p, rule);
                CHECK(lhs <= rhs * (1.0 + 1e-10));
            }
    }
}

TEST_CASE("closed-form exponential norms") {
    QuadratureRule rule = gauss_hermite_rule(64);
    ComplexVector xi = {Complex(0.5)};
    ChaosExpansion e = exponential_chaos(xi, 14);
    for (double k : {1.5, 2.0, 3.0, 4.0}) {
        double want = std::exp(0.5 * (k - 1.0) * 0.25);
        CHECK(lp_norm_gaussian(e, k, rule) == doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("d = 2 tensor rule") {
    QuadratureRule rule = gauss_hermite_rule(32);
    ChaosExpansion e(2, 3);
    e.set(MultiIndex{2, 1}, 1.0);
    Complex second = gaussian_expectation(
        [&](const std::vector<double>& x) {
            Complex v = chaos_eval(e, x);
            return v * v;
        },
        rule, 2);
    CHECK(second.real() == doctest::Approx(2.0).epsilon(1e-10)); // 2! * 1!
}
