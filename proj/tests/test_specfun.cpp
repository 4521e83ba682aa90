#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "ptinfo/specfun.hpp"

using namespace ptinfo;

namespace {

struct Sample {
    double a, b, x;
};

// Admissible region for the wavefunction: a = 2 zeta > 0, b = -2 gamma < 0, x in [1, 3].
Sample draw(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ua(0.5, 4.0), ub(-60.0, -0.5), ux(1.0, 3.0);
    return {ua(rng), ub(rng), ux(rng)};
}

double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

}  // namespace

TEST_CASE("jacobi: low degrees match explicit forms") {
    CHECK(jacobi({0, 0.5, -1.0, 3.0}) == 1.0);
    CHECK(jacobi({1, 0.5, -1.0, 3.0}) == doctest::Approx(3.0).epsilon(1e-15));

    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 200; ++i) {
        const auto s = draw(rng);
        CHECK(jacobi({0, s.a, s.b, s.x}) == oracle::jacobi0(s.a, s.b, s.x));
        CHECK(rel(jacobi({1, s.a, s.b, s.x}), oracle::jacobi1(s.a, s.b, s.x)) < 1e-12);
        CHECK(rel(jacobi({2, s.a, s.b, s.x}), oracle::jacobi2(s.a, s.b, s.x)) < 1e-12);
    }
}

TEST_CASE("jacobi: frozen high-precision values") {
    // 40-digit reference values
    CHECK(jacobi({5, 0.5, -20.5, 1.7}) == doctest::Approx(-1.5941887499999984883).epsilon(1e-12));
    CHECK(jacobi({8, 1.2, -100.5, 2.9}) == doctest::Approx(18470047846.524497003).epsilon(1e-12));
    CHECK(jacobi({4, 0.5, -4.0, 1.3}) == doctest::Approx(4.3041950683593753324).epsilon(1e-12));
    CHECK(jacobi({6, 2.0, -7.25, 3.0}) == doctest::Approx(600.3661041259765625).epsilon(1e-12));
}

TEST_CASE("jacobi: degenerate recurrence coefficients fall back to the finite sum") {
    // a + b = -4 makes 2q + a + b - 2 vanish at q = 3
    CHECK(jacobi({3, 0.5, -4.5, 2.0}) == doctest::Approx(2.1875).epsilon(1e-13));
    CHECK(std::isfinite(jacobi({5, 0.5, -4.5, 1.5})));
    CHECK(jacobi({5, 0.5, -4.5, 1.5}) ==
          doctest::Approx(jacobi_explicit_sum({5, 0.5, -4.5, 1.5})).epsilon(1e-12));
}

TEST_CASE("jacobi: recurrence and finite sum agree") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> un(0, 12);
    std::uniform_real_distribution<double> ua(0.5, 3.0), ub(-12.0, -0.5), ux(1.0, 3.0);
    for (int i = 0; i < 300; ++i) {
        const JacobiParams jp{un(rng), ua(rng), ub(rng), ux(rng)};
        const double r = jacobi(jp);
        const double s = jacobi_explicit_sum(jp);
        // scale by the largest term magnitude, the sum can cancel
        double scale = 0.0;
        for (int k = 0; k <= jp.n; ++k) {
            scale = std::max(scale, std::abs(jacobi_explicit_sum({k, jp.a, jp.b, jp.x})));
        }
        CHECK(std::abs(r - s) <= 1e-10 * std::max({scale, std::abs(s), 1.0}));
    }
}

TEST_CASE("jacobi: three-term recurrence residual") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> un(2, 15);
    for (int i = 0; i < 300; ++i) {
        const auto s = draw(rng);
        const int n = un(rng);
        const double a = s.a, b = s.b, x = s.x;
        const double pn = jacobi({n, a, b, x});
        const double p1 = jacobi({n - 1, a, b, x});
        const double p2 = jacobi({n - 2, a, b, x});
        const double c = 2.0 * n + a + b;
        const double lhs = 2.0 * n * (n + a + b) * (c - 2.0) * pn;
        const double t1 = (c - 1.0) * (c * (c - 2.0) * x + a * a - b * b) * p1;
        const double t2 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * c * p2;
        const double scale = std::abs(lhs) + std::abs(t1) + std::abs(t2);
        CHECK(std::abs(lhs - t1 + t2) <= 1e-10 * scale);
    }
}

TEST_CASE("jacobi: polynomial of exact degree n") {
    // n-th forward difference = n! h^n * leading coefficient, (n+1)-th vanishes
    for (int n = 1; n <= 6; ++n) {
        const double a = 0.7, b = -5.3, h = 0.25;
        std::vector<double> v;
        for (int k = 0; k <= n + 1; ++k) v.push_back(jacobi({n, a, b, 1.0 + k * h}));
        double scale = 0.0;
        for (double x : v) scale = std::max(scale, std::abs(x));
        for (int order = 1; order <= n + 1; ++order) {
            for (std::size_t k = 0; k + 1 < v.size(); ++k) v[k] = v[k + 1] - v[k];
            v.pop_back();
            if (order == n) {
                double lead = 1.0;  // (n+a+b+1)_n / (2^n n!)
                for (int j = 0; j < n; ++j) lead *= (n + a + b + 1.0 + j) / (2.0 * (j + 1));
                double fact = 1.0;
                for (int j = 2; j <= n; ++j) fact *= j;
                CHECK(v[0] == doctest::Approx(fact * std::pow(h, n) * lead).epsilon(1e-8));
            }
        }
        CHECK(std::abs(v[0]) <= 1e-9 * scale * std::pow(2.0, n + 1));
    }
}

TEST_CASE("jacobi: errors") {
    CHECK_THROWS_AS(jacobi({-1, 0.5, -1.0, 2.0}), std::domain_error);
    CHECK_THROWS_AS(jacobi({3, 0.5, -1.0, 1e120}), std::overflow_error);
}

TEST_CASE("jacobi_derivative matches finite differences") {
    const JacobiParams jp{5, 0.9, -7.1, 1.8};
    const double h = 1e-4;
    auto f = [&](double x) { return jacobi({jp.n, jp.a, jp.b, x}); };
    const double d1 = (f(jp.x + h) - f(jp.x - h)) / (2 * h);
    const double d2 = (f(jp.x + h) - 2 * f(jp.x) + f(jp.x - h)) / (h * h);
    CHECK(jacobi_derivative(jp, 1) == doctest::Approx(d1).epsilon(1e-7));
    CHECK(jacobi_derivative(jp, 2) == doctest::Approx(d2).epsilon(1e-5));
    CHECK(jacobi_derivative(jp, 0) == f(jp.x));
    CHECK(jacobi_derivative(jp, 6) == 0.0);
}

TEST_CASE("radial wavefunction shape") {
    const PotentialParams p{4.5, 1.0, 1.0, 0.5};
    const double rmax = std::asinh(1.0);

    SUBCASE("vanishes at the origin") {
        for (int l : {0, 1, 3}) {
            const QuantumNumbers q{1, l, 0};
            CHECK(radial_wavefunction(make_wavefunction(p, q, derive_params(p, q)), 0.0) == 0.0);
        }
    }
    SUBCASE("n = 0 has no interior node") {
        const QuantumNumbers q{0, 2, 0};
        const auto w = make_wavefunction(p, q, derive_params(p, q));
        for (int i = 1; i <= 500; ++i) CHECK(radial_wavefunction(w, rmax * i / 500.0) > 0.0);
    }
    SUBCASE("n = 1 changes sign exactly where the linear Jacobi factor does") {
        const QuantumNumbers q{1, 0, 0};
        const auto d = derive_params(p, q);
        const auto w = make_wavefunction(p, q, d);
        const double a = 2 * d.zeta, b = -2 * d.gamma;
        // P_1(x) = (a-b)/2 + (1+(a+b)/2) x = 0
        const double x0 = -0.5 * (a - b) / (1.0 + 0.5 * (a + b));
        const double s0 = 0.5 * (x0 - 1.0);
        REQUIRE(s0 > 0.0);
        REQUIRE(s0 < 1.0);
        int changes = 0;
        double prev = radial_wavefunction(w, 1e-6);
        for (int i = 1; i <= 2000; ++i) {
            const double cur = radial_wavefunction(w, rmax * i / 2000.0);
            if ((cur > 0) != (prev > 0)) ++changes;
            prev = cur;
        }
        CHECK(changes == 1);
        CHECK(radial_wavefunction(w, r_of_s(1.0, s0 * (1 - 1e-6))) *
                  radial_wavefunction(w, r_of_s(1.0, s0 * (1 + 1e-6))) <
              0.0);
    }
    SUBCASE("norm multiplies through") {
        const QuantumNumbers q{2, 1, 0};
        const auto d = derive_params(p, q);
        CHECK(radial_wavefunction(make_wavefunction(p, q, d, 3.0), 0.4) ==
              doctest::Approx(3.0 * radial_wavefunction(make_wavefunction(p, q, d), 0.4)));
        CHECK_THROWS_AS(make_wavefunction(p, q, d, 0.0), std::domain_error);
    }
}

TEST_CASE("radial_second_derivative matches finite differences of R") {
    for (auto [lam, n, l] : {std::tuple{4.5, 2, 0}, std::tuple{6.5, 3, 2}, std::tuple{2.5, 1, 1}}) {
        for (double alpha : {1.0, 0.3}) {
            const PotentialParams p{lam, alpha, 1.0, 0.5};
            const QuantumNumbers q{n, l, 0};
            const auto w = make_wavefunction(p, q, derive_params(p, q));
            for (double frac : {0.2, 0.5, 0.9}) {
                const double r = frac * std::asinh(1.0) / alpha;
                const double h = 1e-4 / alpha;
                const double fd = (radial_wavefunction(w, r + h) - 2 * radial_wavefunction(w, r) +
                                   radial_wavefunction(w, r - h)) /
                                  (h * h);
                const double an = radial_second_derivative(w, r);
                CHECK(std::abs(an - fd) <= 1e-5 * std::max(std::abs(an), 1e-3));
            }
        }
    }
}

TEST_CASE("density_weight_s") {
    const PotentialParams p{0.5, 1.0, 1.0, 0.5};
    const QuantumNumbers q{0, 0, 0};
    const auto w = make_wavefunction(p, q, derive_params(p, q));
    CHECK(density_weight_s(w, 0.0) == 0.0);
    const double as1 = std::asinh(1.0);
    CHECK(density_weight_s(w, 1.0) == doctest::Approx(as1 * as1 / 4.0).epsilon(1e-14));
    CHECK(density_weight_s(w, 1.0) == doctest::Approx(0.194205).epsilon(1e-5));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> us(0.0, 1.0);
    for (auto [lam, n, l] : {std::tuple{9.5, 4, 0}, std::tuple{10.5, 3, 2}, std::tuple{50.0, 8, 1}}) {
        const PotentialParams pp{lam, 1.0, 1.0, 0.5};
        const QuantumNumbers qq{n, l, 0};
        const auto ww = make_wavefunction(pp, qq, derive_params(pp, qq));
        for (int i = 0; i < 100; ++i) CHECK(density_weight_s(ww, us(rng)) >= 0.0);
    }
}

TEST_CASE("density_weight_s is r^2 R^2 dr rewritten in s") {
    for (auto [lam, n, l, alpha] :
         {std::tuple{0.5, 0, 0, 1.0}, std::tuple{5.5, 2, 1, 1.0}, std::tuple{7.5, 3, 2, 0.6}}) {
        const PotentialParams p{lam, alpha, 1.0, 0.5};
        const QuantumNumbers q{n, l, 0};
        const auto w = make_wavefunction(p, q, derive_params(p, q));
        const double in_s = oracle::simpson_open_left(
            [&](double s) { return density_weight_s(w, s); }, 0.0, 1.0, 400000);
        const double in_r = oracle::simpson_open_left(
            [&](double r) {
                const double R = radial_wavefunction(w, r);
                return r * r * R * R;
            },
            0.0, std::asinh(1.0) / alpha, 100000);
        CHECK(in_s == doctest::Approx(in_r).epsilon(1e-8));
    }
}
