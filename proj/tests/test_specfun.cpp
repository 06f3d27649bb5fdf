#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "fracsimp/quadrature.hpp"
#include "fracsimp/specfun.hpp"

using namespace fracsimp;

namespace {

double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("gamma_fn recurrence and special values") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(3.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    for (double x : {0.3, 1.7, 4.2}) {
        // gamma(x + 1) = x gamma(x)
        CHECK(gamma_fn(x + 1.0) == doctest::Approx(x * gamma_fn(x)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
}

TEST_CASE("beta_fn symmetry and gamma identity") {
    CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    // B(2, 1/2) = Gamma(2) Gamma(1/2) / Gamma(5/2) = 4/3
    CHECK(beta_fn(2.0, 0.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    for (double a : {0.5, 1.0, 2.5}) {
        for (double b : {0.25, 1.0, 3.0}) {
            CHECK(beta_fn(a, b) == doctest::Approx(beta_fn(b, a)).epsilon(1e-13));
            CHECK(beta_fn(a, b) ==
                  doctest::Approx(gamma_fn(a) * gamma_fn(b) / gamma_fn(a + b)).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(beta_fn(0.0, 1.0), std::domain_error);
}

TEST_CASE("incomplete_beta closed forms") {
    // a = 1: integral_0^w (1-t)^(b-1) dt = (1 - (1-w)^b) / b
    for (double b : {0.25, 0.5, 1.0}) {
        for (double w : {0.0, 0.3, 0.7, 1.0}) {
            const double expected = b == 1.0 ? w : (1.0 - std::pow(1.0 - w, b)) / b;
            CHECK(incomplete_beta(w, 1, b) == doctest::Approx(expected).epsilon(1e-13));
        }
    }
    // a = 2, b = 1: integral_0^w t dt = w^2 / 2
    CHECK(incomplete_beta(0.6, 2, 1.0) == doctest::Approx(0.18).epsilon(1e-13));
    // At w = 1 the incomplete integral completes to B(a, b).
    for (int a : {1, 2, 3}) {
        for (double b : {0.25, 0.5, 1.0}) {
            CHECK(incomplete_beta(1.0, a, b) == doctest::Approx(beta_fn(a, b)).epsilon(1e-12));
            CHECK(incomplete_beta(0.0, a, b) == 0.0);
        }
    }
    CHECK_THROWS_AS(incomplete_beta(-0.1, 1, 0.5), std::domain_error);
    CHECK_THROWS_AS(incomplete_beta(1.1, 1, 0.5), std::domain_error);
    CHECK_THROWS_AS(incomplete_beta(0.5, 0, 0.5), std::domain_error);
    CHECK_THROWS_AS(incomplete_beta(0.5, 1, 1.5), std::domain_error);
}

TEST_CASE("incomplete_beta matches quadrature of its integrand") {
    for (int a : {1, 2, 3}) {
        for (double b : {0.25, 0.5, 1.0}) {
            for (double w : {0.2, 0.5, 0.8, 0.95}) {
                const QuadResult direct = integrate(
                    [a, b](double t) {
                        return std::pow(t, a - 1) * std::pow(1.0 - t, b - 1.0);
                    },
                    0.0, w);
                CHECK(incomplete_beta(w, a, b) ==
                      doctest::Approx(direct.value).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("incomplete_beta is nondecreasing in w") {
    for (int a : {1, 2, 3}) {
        for (double b : {0.25, 0.5, 1.0}) {
            double prev = 0.0;
            for (int i = 0; i < 1000; ++i) {
                const double w = (i + 1) / 1000.0;
                const double cur = incomplete_beta(w, a, b);
                CHECK(cur >= prev - 1e-15);
                prev = cur;
            }
        }
    }
}

TEST_CASE("bessel_p closed forms at half-integer orders") {
    for (double x : {0.5, 1.0, 2.0}) {
        CHECK(bessel_p(-0.5, x) == doctest::Approx(std::cosh(x)).epsilon(1e-12));
        CHECK(bessel_p(0.5, x) == doctest::Approx(std::sinh(x) / x).epsilon(1e-12));
    }
    // The series starts at 1 for every order.
    for (double rho : {-0.5, 0.5, 1.0, 1.5}) CHECK(bessel_p(rho, 0.0) == 1.0);
    // Even in x: only x^2 enters the series.
    CHECK(bessel_p(1.0, -1.3) == doctest::Approx(bessel_p(1.0, 1.3)).epsilon(1e-14));
    CHECK_THROWS_AS(bessel_p(-1.0, 1.0), std::domain_error);
}

TEST_CASE("bessel_p derivative matches finite differences") {
    for (double rho : {-0.5, 0.5, 1.5}) {
        for (double x : {0.5, 1.0, 2.0}) {
            const double fd =
                central_diff([rho](double t) { return bessel_p(rho, t); }, x, 1e-5);
            CHECK(bessel_p(rho, x, true) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("q_digamma recurrence") {
    for (double q : {0.2, 0.5, 0.9, 2.0, 5.0}) {
        for (double eta : {0.5, 1.0, 3.0}) {
            const double step = q_digamma(q, eta + 1.0) - q_digamma(q, eta);
            const double expected =
                -std::log(q) * std::pow(q, eta) / (1.0 - std::pow(q, eta));
            CHECK(step == doctest::Approx(expected).epsilon(1e-10));
        }
    }
}

TEST_CASE("q_digamma derivative and second derivative match finite differences") {
    for (double q : {0.5, 2.0}) {
        for (double eta : {0.7, 1.5, 3.0}) {
            const double fd1 =
                central_diff([q](double t) { return q_digamma(q, t); }, eta, 1e-5);
            CHECK(q_digamma(q, eta, true) == doctest::Approx(fd1).epsilon(1e-6));
            const double fd2 = central_diff(
                [q](double t) { return q_digamma(q, t, true); }, eta, 1e-5);
            CHECK(detail::q_digamma_dd(q, eta) == doctest::Approx(fd2).epsilon(1e-6));
        }
    }
}

TEST_CASE("q_digamma shape: increasing, with decreasing positive slope") {
    for (double q : {0.5, 2.0, 5.0}) {
        double prev_slope = std::numeric_limits<double>::infinity();
        for (double eta : {0.5, 1.0, 2.0, 4.0}) {
            const double slope = q_digamma(q, eta, true);
            CHECK(slope > 0.0);
            CHECK(slope < prev_slope);
            CHECK(detail::q_digamma_dd(q, eta) < 0.0);
            prev_slope = slope;
        }
    }
    CHECK_THROWS_AS(q_digamma(1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(q_digamma(-0.5, 2.0), std::domain_error);
    CHECK_THROWS_AS(q_digamma(2.0, 0.0), std::domain_error);
}
