#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "ptinfo/quadrature.hpp"

using namespace ptinfo;

TEST_CASE("gauss_legendre_rule: closed forms") {
    const auto r1 = gauss_legendre_rule(1);
    REQUIRE(r1.order() == 1);
    CHECK(r1.nodes[0] == doctest::Approx(0.0));
    CHECK(r1.weights[0] == doctest::Approx(2.0));

    const auto r2 = gauss_legendre_rule(2);
    CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("gauss_legendre_rule: symmetry, positivity and weight sum") {
    for (int order : {1, 2, 3, 7, 16, 32, 64, 100, 255, 512}) {
        const auto r = gauss_legendre_rule(order);
        REQUIRE(r.order() == order);
        const double sum = std::accumulate(r.weights.begin(), r.weights.end(), 0.0);
        CHECK(std::abs(sum - 2.0) < 1e-13);
        for (int i = 0; i < order; ++i) {
            CHECK(r.weights[i] > 0.0);
            CHECK(r.nodes[i] == -r.nodes[order - 1 - i]);
            CHECK(r.weights[i] == r.weights[order - 1 - i]);
            if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
            CHECK(std::abs(r.nodes[i]) < 1.0);
        }
    }
}

TEST_CASE("gauss_legendre_rule: unsupported orders") {
    CHECK_THROWS_AS(gauss_legendre_rule(0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_legendre_rule(513), std::invalid_argument);
}

TEST_CASE("gauss_legendre_rule: exact on monomials up to degree 2k-1") {
    for (int k : {1, 2, 5, 12, 32}) {
        const auto r = gauss_legendre_rule(k);
        for (int deg = 0; deg <= 2 * k - 1; ++deg) {
            // on [0, 1]: x = (t + 1)/2, exact value 1/(deg+1)
            double sum = 0.0;
            for (int i = 0; i < k; ++i) sum += r.weights[i] * std::pow(0.5 * (r.nodes[i] + 1.0), deg);
            sum *= 0.5;
            CHECK(std::abs(sum * (deg + 1) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("integrate: elementary integrals") {
    const auto one = integrate([](double) { return 1.0; }, 0.0, 1.0);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(one.error_estimate >= 0.0);
    CHECK(one.evaluations >= 1);

    const auto sq = integrate([](double s) { return std::sqrt(s); }, 0.0, 1.0);
    CHECK(std::abs(sq.value - 2.0 / 3.0) < 1e-10 * 2.0 / 3.0);
    CHECK(sq.error_estimate <= 1e-10 * sq.value + 1e-14);
    CHECK(sq.panels > 1);

    // frozen from a 10^6-interval composite Simpson run of the same integrand
    const auto as = integrate(
        [](double s) {
            const double a = std::asinh(std::sqrt(s));
            return 0.5 * a * a;
        },
        0.0, 1.0);
    CHECK(as.value == doctest::Approx(0.20938930978154).epsilon(1e-12));
}

TEST_CASE("integrate: Simpson oracle for the arcsinh integrand") {
    auto f = [](double s) {
        const double a = std::asinh(std::sqrt(s));
        return 0.5 * a * a;
    };
    const double ref = oracle::simpson(f, 0.0, 1.0, 1000000);
    CHECK(integrate(f, 0.0, 1.0).value == doctest::Approx(ref).epsilon(1e-10));
}

TEST_CASE("integrate: halving the tolerance never moves away from the answer") {
    struct Case {
        double (*f)(double);
        double exact;
    };
    const Case cases[] = {
        {[](double s) { return std::sqrt(s); }, 2.0 / 3.0},
        {[](double s) { return std::pow(s, 0.25) * std::exp(-3.0 * s); }, 0.0},
        {[](double s) { return std::cos(7.0 * s) * std::sqrt(s); }, 0.0},
    };
    for (const auto& c : cases) {
        const double exact = c.exact != 0.0 ? c.exact : integrate(c.f, 0.0, 1.0, 1e-14).value;
        double prev = INFINITY;
        for (double tol = 1e-4; tol > 1e-11; tol *= 0.5) {
            const double err = std::abs(integrate(c.f, 0.0, 1.0, tol).value - exact);
            CHECK(err <= prev * (1.0 + 1e-12) + 1e-15);
            prev = err;
        }
    }
}

TEST_CASE("integrate: additivity over a split point") {
    auto f = [](double s) { return std::pow(s, 0.5) * std::pow(1.0 + s, -7.0) * (1.0 + 3.0 * s); };
    const auto whole = integrate(f, 0.0, 1.0);
    for (double c : {0.25, 0.5, 0.9}) {
        const auto left = integrate(f, 0.0, c);
        const auto right = integrate(f, c, 1.0);
        const double tol = whole.error_estimate + left.error_estimate + right.error_estimate +
                           1e-15 * std::abs(whole.value);
        CHECK(std::abs(whole.value - left.value - right.value) <= tol);
    }
}

TEST_CASE("integrate: open rule never touches the endpoints") {
    bool touched = false;
    integrate(
        [&](double s) {
            if (s <= 0.0 || s >= 1.0) touched = true;
            return std::pow(s, 0.5);
        },
        0.0, 1.0);
    CHECK_FALSE(touched);
}

TEST_CASE("integrate: failures are reported") {
    QuadratureOptions opts;
    opts.max_panels = 4;
    opts.rel_tol = 1e-15;
    CHECK_THROWS_AS(AdaptiveIntegrator(opts).integrate([](double s) { return 1.0 / std::sqrt(s); },
                                                       0.0, 1.0),
                    QuadratureError);
    CHECK_THROWS_AS(integrate([](double) { return NAN; }, 0.0, 1.0), QuadratureError);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0), std::invalid_argument);

    QuadratureOptions bad;
    bad.order = 0;
    CHECK_THROWS_AS(AdaptiveIntegrator{bad}, std::invalid_argument);
}

TEST_CASE("integrate: deterministic") {
    auto f = [](double s) { return std::sin(40.0 * s) * std::sqrt(s); };
    const auto a = integrate(f, 0.0, 1.0);
    const auto b = integrate(f, 0.0, 1.0);
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.evaluations == b.evaluations);
}
