#include "fracsimp/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracsimp {

namespace {

[[noreturn]] void domain_fail(const std::string& what) {
    throw std::domain_error("specfun: " + what);
}

[[noreturn]] void convergence_fail(const std::string& series, std::size_t cap) {
    throw std::runtime_error("specfun: " + series + " did not converge within " +
                             std::to_string(cap) + " terms");
}

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) domain_fail("gamma_fn requires x > 0, got " + std::to_string(x));
    return std::tgamma(x);
}

double beta_fn(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        domain_fail("beta_fn requires a, b > 0, got a=" + std::to_string(a) +
                    " b=" + std::to_string(b));
    // Via log-gamma to dodge overflow in the intermediate gamma values.
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double incomplete_beta(double w, int a, double b) {
    if (!(w >= 0.0 && w <= 1.0))
        domain_fail("incomplete_beta requires 0 <= w <= 1, got w=" + std::to_string(w));
    if (a < 1) domain_fail("incomplete_beta requires integer a >= 1, got a=" + std::to_string(a));
    if (!(b > 0.0 && b <= 1.0))
        domain_fail("incomplete_beta requires 0 < b <= 1, got b=" + std::to_string(b));

    // Expanding t^(a-1) = (1 - (1-t))^(a-1) binomially and integrating gives
    //   beta_w(a,b) = sum_{k=0}^{a-1} C(a-1,k) (-1)^k (1 - (1-w)^(b+k)) / (b+k).
    // 1 - (1-w)^(b+k) is computed as -expm1((b+k) log1p(-w)) to stay accurate
    // for small w; at w = 1 the log1p term is -inf and expm1 gives exactly -1.
    double sum = 0.0;
    double binom = 1.0;  // C(a-1, k), updated incrementally
    const double log1mw = std::log1p(-w);
    for (int k = 0; k <= a - 1; ++k) {
        const double frac = (w == 0.0) ? 0.0 : -std::expm1((b + k) * log1mw);
        const double term = binom * frac / (b + k);
        sum += (k % 2 == 0) ? term : -term;
        binom = binom * (a - 1 - k) / (k + 1);
    }
    return sum;
}

double bessel_p(double rho, double x, bool derivative, const SeriesControl& ctrl) {
    if (!(rho > -1.0))
        domain_fail("bessel_p requires rho > -1, got rho=" + std::to_string(rho));
    if (ctrl.rel_tol <= 0.0 || ctrl.max_terms < 1)
        domain_fail("bessel_p: invalid SeriesControl");

    if (derivative) {
        // Term-wise differentiation of the series in x.
        return x * bessel_p(rho + 1.0, x, false, ctrl) / (2.0 * (rho + 1.0));
    }

    // p_rho(x) = sum t_n with t_0 = 1 and
    // t_{n+1} = t_n * (x^2/4) / ((n+1)(rho+n+1)); all terms are nonnegative.
    const double z = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (std::size_t n = 0; n < ctrl.max_terms; ++n) {
        term *= z / ((static_cast<double>(n) + 1.0) * (rho + static_cast<double>(n) + 1.0));
        sum += term;
        if (term < ctrl.rel_tol * sum) return sum;
    }
    convergence_fail("bessel_p series", ctrl.max_terms);
}

namespace {

// Shared evaluator for the three q-digamma series. Each term is built from
// t = base^(u+eta) with 0 < base < 1, so the terms decay geometrically:
//   kind 0: t / (1-t)          (the Psi series)
//   kind 1: t / (1-t)^2        (first derivative)
//   kind 2: t (1+t) / (1-t)^3  (second derivative)
double q_digamma_tail(double base, double eta, int kind, const SeriesControl& ctrl) {
    double sum = 0.0;
    double power = std::pow(base, eta);  // base^(u+eta), updated by *= base
    for (std::size_t u = 0; u < ctrl.max_terms; ++u) {
        const double t = power;
        const double om = 1.0 - t;
        double term;
        switch (kind) {
            case 0: term = t / om; break;
            case 1: term = t / (om * om); break;
            default: term = t * (1.0 + t) / (om * om * om); break;
        }
        sum += term;
        if (term < ctrl.rel_tol * sum || term < 1e-320) return sum;
        power *= base;
    }
    convergence_fail("q_digamma series", ctrl.max_terms);
}

}  // namespace

double q_digamma(double q, double eta, bool derivative, const SeriesControl& ctrl) {
    if (!(q > 0.0) || q == 1.0)
        domain_fail("q_digamma requires q > 0 and q != 1, got q=" + std::to_string(q));
    if (!(eta > 0.0))
        domain_fail("q_digamma requires eta > 0, got eta=" + std::to_string(eta));

    const double lq = std::log(q);
    if (q < 1.0) {
        if (!derivative)
            return -std::log1p(-q) + lq * q_digamma_tail(q, eta, 0, ctrl);
        // Psi'_q = (ln q)^2 sum q^(u+eta) / (1 - q^(u+eta))^2.
        return lq * lq * q_digamma_tail(q, eta, 1, ctrl);
    }
    // q > 1: the series runs in powers of 1/q.
    const double base = 1.0 / q;
    if (!derivative)
        return -std::log(q - 1.0) + lq * (eta - 0.5 - q_digamma_tail(base, eta, 0, ctrl));
    // Psi'_q = ln q + (ln q)^2 sum q^-(u+eta) / (1 - q^-(u+eta))^2.
    return lq + lq * lq * q_digamma_tail(base, eta, 1, ctrl);
}

namespace detail {

double q_digamma_dd(double q, double eta, const SeriesControl& ctrl) {
    if (!(q > 0.0) || q == 1.0)
        domain_fail("q_digamma_dd requires q > 0 and q != 1, got q=" + std::to_string(q));
    if (!(eta > 0.0))
        domain_fail("q_digamma_dd requires eta > 0, got eta=" + std::to_string(eta));

    const double lq = std::log(q);
    const double base = q < 1.0 ? q : 1.0 / q;
    // d/deta of the derivative series; negative for q on either side of 1.
    const double tail = q_digamma_tail(base, eta, 2, ctrl);
    return q < 1.0 ? lq * lq * lq * tail : -lq * lq * lq * tail;
}

}  // namespace detail

}  // namespace fracsimp
