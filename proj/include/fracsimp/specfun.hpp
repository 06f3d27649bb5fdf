#pragma once

#include <cstddef>

// Scalar special functions: gamma, complete and incomplete beta, a normalized
// modified Bessel family, and the q-digamma function. All functions here are
// pure, reentrant, and safe to call from many threads at once.

namespace fracsimp {

// Truncation policy for the infinite series below.
struct SeriesControl {
    double rel_tol = 1e-15;          // stop once a term is this small relative to the sum
    std::size_t max_terms = 1000000; // hard cap; reaching it throws instead of returning a partial sum
};

// Gamma(x) for x > 0. Throws std::domain_error otherwise.
double gamma_fn(double x);

// Complete beta B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b) for a, b > 0.
double beta_fn(double a, double b);

// Lower incomplete beta beta_w(a,b) = integral_0^w t^(a-1) (1-t)^(b-1) dt for
// integer a >= 1, 0 < b <= 1, 0 <= w <= 1. Evaluated by the closed-form finite
// sum available for integer a, so the endpoints w = 0 and w = 1 are exact;
// that exactness matters because this is the kernel of every Z constant.
double incomplete_beta(double w, int a, double b);

// Normalized modified Bessel function
//   p_rho(x) = sum_{n>=0} (x^2/4)^n Gamma(rho+1) / (n! Gamma(rho+n+1)),
// defined for rho > -1 and all real x. Special values: p_{-1/2} = cosh,
// p_{1/2}(x) = sinh(x)/x. With derivative=true returns
//   d p_rho / dx = x * p_{rho+1}(x) / (2 (rho+1)),
// the factor that term-wise differentiation of the series produces.
double bessel_p(double rho, double x, bool derivative = false,
                const SeriesControl& ctrl = {});

// q-digamma Psi_q(eta) for q > 0, q != 1, eta > 0:
//   0 < q < 1:  Psi_q(eta) = -ln(1-q) + ln(q) * sum_{u>=0} q^(u+eta) / (1 - q^(u+eta))
//   q > 1:      Psi_q(eta) = -ln(q-1) + ln(q) * (eta - 1/2 - sum_{u>=0} q^-(u+eta) / (1 - q^-(u+eta)))
// With derivative=true returns the term-wise derivative Psi'_q(eta), which is
// positive on (0, inf) for every admissible q.
double q_digamma(double q, double eta, bool derivative = false,
                 const SeriesControl& ctrl = {});

namespace detail {
// Second derivative Psi''_q(eta), by term-wise differentiation of Psi'_q.
// Negative on (0, inf); its magnitude at the left endpoint is the Lipschitz
// constant of Psi'_q on a positive interval.
double q_digamma_dd(double q, double eta, const SeriesControl& ctrl = {});
}  // namespace detail

}  // namespace fracsimp
