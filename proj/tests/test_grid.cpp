#include <doctest.h>

#include "wicklab/grid.hpp"
#include "wicklab/harness.hpp"

using namespace wicklab;

namespace {

Field gaussian(double a) {
    return [a](const std::vector<double>& x) {
        double q = 0.0;
        for (double xi : x) q += xi * xi;
        return Complex(std::exp(-0.5 * a * q));
    };
}

} // namespace

TEST_CASE("grid spec validation") {
    CHECK_THROWS_AS(GridSpec(3, 8.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(1, 8.0, 0.3), std::invalid_argument); // L/h not integer
    CHECK_THROWS_AS(GridSpec(1, -1.0, 0.1), std::invalid_argument);
    GridSpec g(1, 12.0, 0.01);
    CHECK(g.nodes_per_axis() == 2401);
    CHECK(g.node(g.half_count()) == doctest::Approx(0.0));
    GridSpec g2(2, 8.0, 0.05);
    CHECK(g2.node_count() == 321u * 321u);
}

TEST_CASE("normalized lebesgue norm of a gaussian") {
    // || e^{-a x^2/2} ||_p = (p a)^{-1/(2p)} against (2 pi)^{-1/2} dx
    GridSpec spec(1, 12.0, 0.01);
    for (double a : {0.5, 1.0, 2.0}) {
        GridFunction f = GridFunction::sample(spec, gaussian(a));
        for (double p : {1.0, 1.5, 2.0, 4.0}) {
            double want = std::pow(p * a, -0.5 / p);
            CHECK(lp_norm_lebesgue(f, p) == doctest::Approx(want).epsilon(1e-10));
        }
    }
    // d = 2 norm is the product of the axis norms
    GridSpec spec2(2, 8.5, 0.05);
    GridFunction f2 = GridFunction::sample(spec2, gaussian(1.0));
    CHECK(lp_norm_lebesgue(f2, 2.0) == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-9));
}

TEST_CASE("boundary decay is enforced") {
    GridSpec spec(1, 4.0, 0.1);
    GridFunction flat = GridFunction::sample(spec, [](const std::vector<double>&) {
        return Complex(1.0);
    });
    CHECK_THROWS_AS(lp_norm_lebesgue(flat, 2.0), std::domain_error);
    CHECK_THROWS_AS(convolve_normalized(flat, flat), std::domain_error);
}

TEST_CASE("convolution of gaussians matches the closed form") {
    // e^{-a x^2/2} * e^{-b x^2/2} = (a+b)^{-1/2} e^{-(ab/(a+b)) x^2/2}
    GridSpec spec(1, 12.0, 0.02);
    double a = 1.0, b = 0.5;
    GridFunction conv =
        convolve_normalized(GridFunction::sample(spec, gaussian(a)),
                            GridFunction::sample(spec, gaussian(b)));
    double c = a * b / (a + b);
    double res = 0.0;
    for (int i = 0; i < spec.nodes_per_axis(); i += 7) {
        double x = spec.node(i);
        res = std::max(res,
                       std::abs(conv.at(i) - std::pow(a + b, -0.5) * std::exp(-0.5 * c * x * x)));
    }
    CHECK(res <= 1e-8);

    // d = 2 product structure
    GridSpec spec2(2, 8.0, 0.2);
    GridFunction conv2 =
        convolve_normalized(GridFunction::sample(spec2, gaussian(a)),
                            GridFunction::sample(spec2, gaussian(b)));
    int n0 = spec2.half_count();
    double at_origin = std::abs(conv2.at(n0, n0));
    CHECK(at_origin == doctest::Approx(1.0 / (a + b)).epsilon(1e-8));
}

TEST_CASE("grid refinement stability") {
    for (double h : {0.05, 0.025}) {
        GridSpec spec(1, 12.0, h);
        GridFunction f = GridFunction::sample(spec, gaussian(1.0));
        CHECK(lp_norm_lebesgue(f, 3.0) == doctest::Approx(std::pow(3.0, -1.0 / 6.0)).epsilon(1e-6));
    }
}

TEST_CASE("gaussian norm equals damped lebesgue norm") {
    // ||phi||_p (Gaussian) = || phi(x) e^{-x^2/(2p)} ||_p (normalized Lebesgue)
    QuadratureRule rule = gauss_hermite_rule(64);
    ChaosExpansion phi = random_chaos(21, 1, 5);
    GridSpec spec(1, 20.0, 0.02);
    for (double p : {1.5, 2.0, 3.0, 4.0}) {
        double gauss = lp_norm_gaussian(phi, p, rule);
        GridFunction f = GridFunction::sample(spec, [&](const std::vector<double>& x) {
            return chaos_eval(phi, x) * std::exp(-x[0] * x[0] / (2.0 * p));
        });
        CHECK(lp_norm_lebesgue(f, p) == doctest::Approx(gauss).epsilon(1e-6));
    }
}
