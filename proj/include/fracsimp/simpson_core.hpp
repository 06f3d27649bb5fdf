#pragma once

#include <optional>
#include <string>

#include "fracsimp/corpus.hpp"
#include "fracsimp/fracint.hpp"
#include "fracsimp/interval.hpp"
#include "fracsimp/quadrature.hpp"

// The core machinery: the three-point Simpson functional, the fractional
// quadrature identity relating it to conformable integrals, the kernel h and
// its moment constants Z1..Z5, and the family of bound evaluators.

namespace fracsimp {

// Identifiers of the implemented bounds. "3.9-R" is the reference variant of
// 3.9 that replaces (1/2)^(1/q) [(A+M)^(1/q) + (M+B)^(1/q)] by
// (1/4)^(1/q) [(A+3M)^(1/q) + (3M+B)^(1/q)]; it is exposed for comparison
// output only. "1.1" is the classical fourth-derivative Simpson bound.
enum class TheoremId { t3_3, t3_6, t3_7, t3_9, t3_9r, t4_1, t4_3, t1_1 };

std::string theorem_name(TheoremId id);                  // "3.3", "3.9-R", ...
TheoremId theorem_from_name(const std::string& name);    // throws std::invalid_argument

// Conjugate exponents with 1/p + 1/q = 1 (checked within 1e-12). q = 1 is
// admitted with p = infinity, which the Z2^(1/p) factor treats as exponent 0.
struct HolderPair {
    double p;
    double q;

    HolderPair(double p_, double q_);
    static HolderPair from_q(double q);  // p = q/(q-1)
};

// The kernel moments for a given order, together with the complete beta
// value, the kernel's sign-change point, and integral of h itself.
struct SimpsonConstants {
    double tau = 1.0;
    int m = 0;
    double b_complete = 0.0;          // B(m+1, beta)
    double w_star = 0.0;              // unique root of h in (0,1)
    double z1 = 0.0;                  // integral_0^1 |h|
    std::optional<double> z2;         // integral_0^1 |h|^p, present when p was supplied
    std::optional<double> p;          // the exponent used for z2
    double z3 = 0.0;                  // integral_0^1 |h| (1+w)/2
    double z4 = 0.0;                  // integral_0^1 |h| (1-w)/2
    double z5 = 0.0;                  // integral_0^1 |h| w
    double h_integral = 0.0;          // integral_0^1 h (signed)
    double quad_error = 0.0;          // summed error estimates of the above
};

// One verification outcome. Serialization lives in report.hpp; the JSON and
// CSV field set is: theorem, tau, m, gamma, delta, p, q, k_lo, k_hi,
// lipschitz, lhs, rhs, slack, pass, quad_error.
struct BoundReport {
    std::string theorem;
    double tau = 1.0;
    int m = 0;
    double gamma = 0.0;
    double delta = 0.0;
    std::optional<double> p;
    std::optional<double> q;
    std::optional<double> k_lo;
    std::optional<double> k_hi;
    std::optional<double> lipschitz;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    bool pass = false;   // slack >= -tol
    double quad_error = 0.0;

    // JSON-only extra used by proposition 5.9: the value of its right side
    // under the alternate printed coefficient convention (first-power weights
    // gamma, delta and prefactor 1/(2(rho+1))). Absent everywhere else.
    std::optional<double> paper_form;
};

// Thrown by evaluate_bound when a hypothesis fails; the message names the
// failed hypothesis and, for convexity, a witness pair.
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Optional inputs of evaluate_bound. k_lo/k_hi (bounds of f' for 4.1) and
// lipschitz (Lipschitz constant of f' for 4.3) fall back to the catalog
// metadata of f when not supplied.
struct BoundParams {
    std::optional<HolderPair> holder;
    std::optional<double> k_lo;
    std::optional<double> k_hi;
    std::optional<double> lipschitz;
    double tol = 1e-8;
};

// (1/6) [f(gamma) + 4 f(mid) + f(delta)].
double simpson_value(const FunctionSpec& f, const Interval& iv);

// h(w) = (1/3) B(m+1, beta) - (1/2) beta_w(m+1, beta). Strictly decreasing
// on [0,1] from B/3 to -B/6, so it has exactly one root w* in (0,1).
double kernel_h(double w, const FracOrder& order);

// Z1..Z5, B(m+1,beta), w*, and integral of h. w* is located by bisection to
// |h(w*)| < 1e-14 and each |h| moment is integrated piecewise on [0,w*] and
// [w*,1] so the integrands handed to the quadrature are smooth. z2 is filled
// only when p is supplied.
SimpsonConstants constants(const FracOrder& order, std::optional<double> p = {},
                           const QuadConfig& cfg = {});

// Left side of the quadrature identity:
//   simpson_value(f)
//   - 2^(tau-1)/(delta-gamma)^tau * Gamma(tau+1)/Gamma(tau-m)
//     * [ conformable left integral at mid + conformable right integral at mid ].
QuadResult identity_lhs_ex(const FunctionSpec& f, const Interval& iv,
                           const FracOrder& order, const QuadConfig& cfg = {});
double identity_lhs(const FunctionSpec& f, const Interval& iv, const FracOrder& order,
                    const QuadConfig& cfg = {});

// Right side of the same identity:
//   (delta-gamma)/(2 m!) * Gamma(tau+1)/Gamma(tau-m)
//   * integral_0^1 h(w) [ f'(((1+w)/2) gamma + ((1-w)/2) delta)
//                        - f'(((1-w)/2) gamma + ((1+w)/2) delta) ] dw.
QuadResult identity_rhs_ex(const FunctionSpec& f, const Interval& iv,
                           const FracOrder& order, const QuadConfig& cfg = {});
double identity_rhs(const FunctionSpec& f, const Interval& iv, const FracOrder& order,
                    const QuadConfig& cfg = {});

// Evaluates one bound. lhs is |identity_lhs| for every id except 1.1 (which
// delegates to classical_bound). With P = (delta-gamma)/(2 m!) *
// Gamma(tau+1)/Gamma(tau-m), A = |f'(gamma)|^q, B = |f'(delta)|^q,
// M = |f'(mid)|^q, the right sides are:
//   3.3:   P * Z1 * (|f'(gamma)| + |f'(delta)|)
//   3.6:   P * Z2^(1/p) * (1/4)^(1/q) * [ (3A+B)^(1/q) + (A+3B)^(1/q) ]
//   3.7:   P * Z1^(1-1/q) * [ (Z3 A + Z4 B)^(1/q) + (Z4 A + Z3 B)^(1/q) ]
//   3.9:   P * (1/2)^(1/q) * Z2^(1/p) * [ (A+M)^(1/q) + (M+B)^(1/q) ]
//   3.9-R: P * (1/4)^(1/q) * Z2^(1/p) * [ (A+3M)^(1/q) + (3M+B)^(1/q) ]
//   4.1:   (k_hi-k_lo)/(2 m!) * Gamma(tau+1)/Gamma(tau-m) * (delta-gamma) * Z1
//   4.3:   lipschitz * (delta-gamma)^2 / (2 m!) * Gamma(tau+1)/Gamma(tau-m) * Z5
// Hypotheses are verified before evaluation: |f'| convex for 3.3, |f'|^q
// convex for 3.6/3.7/3.9/3.9-R, k_lo <= f' <= k_hi on the interval for 4.1,
// and |f''| <= lipschitz (by divided differences of f') for 4.3.
BoundReport evaluate_bound(TheoremId id, const FunctionSpec& f, const Interval& iv,
                           const FracOrder& order, const BoundParams& bp = {},
                           const QuadConfig& cfg = {});

// Classical fourth-derivative Simpson bound on the integral scale:
//   lhs = | integral_gamma^delta f - (delta-gamma) * simpson_value(f) |
//   rhs = d4_sup * (delta-gamma)^5 / 2880.
// Requires f.d4_sup_on; reported with theorem id "1.1".
BoundReport classical_bound(const FunctionSpec& f, const Interval& iv,
                            double tol = 1e-8, const QuadConfig& cfg = {});

}  // namespace fracsimp
