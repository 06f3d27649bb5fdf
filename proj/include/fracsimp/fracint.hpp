#pragma once

#include "fracsimp/quadrature.hpp"

// Left and right Riemann-Liouville and conformable fractional integrals.

namespace fracsimp {

// Order triple (tau, m, beta): tau in (m, m+1] with m = ceil(tau) - 1 and
// beta = tau - m in (0, 1]. m is always derived from tau, never supplied
// independently, so inconsistent pairs cannot be constructed.
struct FracOrder {
    double tau;
    int m;
    double beta;

    static FracOrder from_tau(double tau);  // throws std::domain_error for tau <= 0
};

enum class Side { left, right };

// Riemann-Liouville integral of order tau > 0:
//   left:   (1/Gamma(tau)) integral_anchor^eval_at (eval_at - w)^(tau-1) f(w) dw
//   right:  (1/Gamma(tau)) integral_eval_at^anchor (w - eval_at)^(tau-1) f(w) dw
// Left requires anchor < eval_at, right requires eval_at < anchor.
QuadResult rl_integral_ex(const ScalarFn& f, Side side, double anchor, double eval_at,
                          double tau, const QuadConfig& cfg = {});
double rl_integral(const ScalarFn& f, Side side, double anchor, double eval_at,
                   double tau, const QuadConfig& cfg = {});

// Conformable fractional integral for order (tau, m, beta):
//   left:   (1/m!) integral_anchor^eval_at (eval_at - w)^m (w - anchor)^(beta-1) f(w) dw
//   right:  (1/m!) integral_eval_at^anchor (w - eval_at)^m (anchor - w)^(beta-1) f(w) dw
// Coincides with rl_integral at beta = 1 (tau = m+1), where the singular
// factor degenerates to 1.
QuadResult conformable_integral_ex(const ScalarFn& f, Side side, double anchor,
                                   double eval_at, const FracOrder& order,
                                   const QuadConfig& cfg = {});
double conformable_integral(const ScalarFn& f, Side side, double anchor, double eval_at,
                            const FracOrder& order, const QuadConfig& cfg = {});

}  // namespace fracsimp
