#include <doctest.h>

#include "wicklab/chaos.hpp"

using namespace wicklab;

namespace {

double coeff_distance(const ChaosExpansion& a, const ChaosExpansion& b) {
    double res = 0.0;
    for (const auto& [alpha, c] : a.coeffs()) res = std::max(res, std::abs(c - b.coeff(alpha)));
    for (const auto& [alpha, c] : b.coeffs()) res = std::max(res, std::abs(c - a.coeff(alpha)));
    return res;
}

ChaosExpansion hermite(int n) {
    ChaosExpansion e(1, n);
    e.set(MultiIndex{n}, 1.0);
    return e;
}

} // namespace

TEST_CASE("hermite recurrence values") {
    for (double x : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
        CHECK(hermite_eval(0, x) == doctest::Approx(1.0));
        CHECK(hermite_eval(1, x) == doctest::Approx(x));
        CHECK(hermite_eval(2, x) == doctest::Approx(x * x - 1.0));
        CHECK(hermite_eval(3, x) == doctest::Approx(x * x * x - 3.0 * x));
        CHECK(hermite_eval(4, x) == doctest::Approx(x * x * x * x - 6.0 * x * x + 3.0));
    }
}

TEST_CASE("multi-index enumeration and factorial") {
    CHECK(MultiIndex::with_total_degree(2, 3).size() == 4);
    CHECK(MultiIndex::up_to_degree(2, 2).size() == 6);
    CHECK(MultiIndex::up_to_degree(1, 5).size() == 6);
    CHECK(MultiIndex({3, 2}).factorial() == doctest::Approx(12.0));
    CHECK(MultiIndex({3, 2}).total_degree() == 5);
    CHECK((MultiIndex{1, 2} + MultiIndex{3, 0}) == MultiIndex{4, 2});
}

TEST_CASE("wick product is the multi-index convolution") {
    // He_a <> He_b = He_{a+b}
    ChaosExpansion w = wick_product(hermite(2), hermite(3));
    CHECK(w.coeffs().size() == 1);
    CHECK(std::abs(w.coeff(MultiIndex{5}) - 1.0) == 0.0);

    // unit, commutativity, associativity on complex expansions
    ChaosExpansion a(1, 2), b(1, 2), c(1, 1);
    a.set(MultiIndex{0}, Complex(1.0, -0.5));
    a.set(MultiIndex{2}, 0.25);
    b.set(MultiIndex{1}, Complex(0.0, 2.0));
    b.set(MultiIndex{2}, -1.0);
    c.set(MultiIndex{0}, 0.5);
    c.set(MultiIndex{1}, Complex(1.0, 1.0));

    CHECK(coeff_distance(wick_product(a, ChaosExpansion::constant(1, 1.0)), a) == 0.0);
    CHECK(coeff_distance(wick_product(a, b), wick_product(b, a)) == 0.0);
    CHECK(coeff_distance(wick_product(wick_product(a, b), c),
                         wick_product(a, wick_product(b, c))) <= 1e-15);
}

TEST_CASE("second quantization is multiplicative and distributes over wick") {
    ChaosExpansion a(1, 3), b(1, 2);
    a.set(MultiIndex{1}, Complex(1.0, 0.5));
    a.set(MultiIndex{3}, -0.2);
    b.set(MultiIndex{0}, 2.0);
    b.set(MultiIndex{2}, Complex(0.0, 1.0));
    Complex c1(0.7, 0.1), c2(-0.3, 0.4);

    CHECK(coeff_distance(second_quantization(1.0, a), a) == 0.0);
    CHECK(coeff_distance(second_quantization(c1, second_quantization(c2, a)),
                         second_quantization(c1 * c2, a)) <= 1e-15);
    CHECK(coeff_distance(second_quantization(c1, wick_product(a, b)),
                         wick_product(second_quantization(c1, a), second_quantization(c1, b))) <=
          1e-15);

    // Gamma(0) projects onto the expectation
    ChaosExpansion z = second_quantization(0.0, a);
    CHECK(z.coeffs().size() <= 1);
    CHECK(std::abs(z.expectation() - a.expectation()) == 0.0);
}

TEST_CASE("l2 norm of Hermite basis") {
    CHECK(hermite(4).norm_l2() == doctest::Approx(std::sqrt(24.0)));
    ChaosExpansion e(2, 3);
    e.set(MultiIndex{2, 1}, 3.0);
    CHECK(e.norm_l2() == doctest::Approx(3.0 * std::sqrt(2.0)));
}

TEST_CASE("exponential vector coefficients, eval, tail") {
    ComplexVector xi = {Complex(0.6, -0.1)};
    ChaosExpansion e = exponential_chaos(xi, 12);
    CHECK(std::abs(e.coeff(MultiIndex{3}) - xi[0] * xi[0] * xi[0] / 6.0) <= 1e-15);

    // truncated evaluation agrees with the closed form
    std::vector<double> x = {0.8};
    CHECK(std::abs(chaos_eval(e, x) - exponential_eval(xi, x)) <= 1e-7);

    // tail bound matches the direct coefficient tail
    ChaosExpansion big = exponential_chaos(xi, 20);
    double direct2 = 0.0;
    for (const auto& [alpha, c] : big.coeffs())
        if (alpha.total_degree() > 8) direct2 += std::norm(c) * alpha.factorial();
    CHECK(std::sqrt(direct2) == doctest::Approx(exponential_tail_bound(xi, 8)).epsilon(1e-8));
}

TEST_CASE("wick product of exponentials adds generators") {
    ComplexVector xi = {Complex(0.4)}, eta = {Complex(-0.25, 0.3)};
    ChaosExpansion w = wick_product(exponential_chaos(xi, 10), exponential_chaos(eta, 10));
    ChaosExpansion sum = exponential_chaos({xi[0] + eta[0]}, 10);
    double res = 0.0;
    for (const auto& alpha : MultiIndex::up_to_degree(1, 10))
        res = std::max(res, std::abs(w.coeff(alpha) - sum.coeff(alpha)));
    CHECK(res <= 1e-14);
}

TEST_CASE("s-transform turns wick into pointwise product") {
    ChaosExpansion a(2, 2), b(2, 1);
    a.set(MultiIndex{1, 1}, Complex(1.0, 2.0));
    a.set(MultiIndex{0, 2}, 0.5);
    b.set(MultiIndex{1, 0}, -1.5);
    b.set(MultiIndex{0, 0}, Complex(0.0, 1.0));
    ComplexVector xi = {Complex(0.3, -0.2), Complex(1.1, 0.0)};
    Complex lhs = s_transform(wick_product(a, b), xi);
    Complex rhs = s_transform(a, xi) * s_transform(b, xi);
    CHECK(std::abs(lhs - rhs) <= 1e-13);

    // S(E_eta)(xi) = e^{<eta, xi>} up to truncation
    ComplexVector eta = {Complex(0.5), Complex(-0.2)};
    Complex got = s_transform(exponential_chaos(eta, 14), xi);
    CHECK(std::abs(got - std::exp(bilinear_pairing(eta, xi))) <= 1e-10);
}

TEST_CASE("tensor product evaluates as a pointwise product") {
    ChaosExpansion a(1, 3), b(1, 2);
    a.set(MultiIndex{3}, 1.0);
    a.set(MultiIndex{0}, Complex(0.0, 0.5));
    b.set(MultiIndex{2}, -2.0);
    b.set(MultiIndex{1}, 1.0);
    ChaosExpansion t = tensor_product(a, b);
    std::vector<double> x2 = {0.7, -1.3};
    Complex want = chaos_eval(a, std::vector<double>{0.7}) *
                   chaos_eval(b, std::vector<double>{-1.3});
    CHECK(std::abs(chaos_eval(t, x2) - want) <= 1e-13);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(hermite_eval(-1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ChaosExpansion(0, 3), std::invalid_argument);
    ChaosExpansion a(1, 2);
    CHECK_THROWS_AS(a.set(MultiIndex{3}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(a.set(MultiIndex{0, 0}, 1.0), std::invalid_argument);
    ChaosExpansion b(2, 2);
    CHECK_THROWS_AS(wick_product(a, b), std::invalid_argument);
    CHECK_THROWS_AS(chaos_eval(a, std::vector<double>{0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(bilinear_pairing({Complex(1.0)}, {Complex(1.0), Complex(2.0)}),
                    std::invalid_argument);
}
