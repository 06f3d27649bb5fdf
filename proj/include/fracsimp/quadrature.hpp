#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

// Adaptive numerical integration on finite intervals, including integrands
// with an algebraic endpoint singularity (x-a)^(beta-1) or (b-x)^(beta-1),
// 0 < beta <= 1. Pure and reentrant; no shared state.

namespace fracsimp {

using ScalarFn = std::function<double(double)>;

struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 60;  // bisection generations allowed per panel
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

enum class SingularEnd { left, right };

// Thrown when subdivision exhausts max_depth before meeting the tolerance;
// carries the best estimate reached so the caller can still inspect it.
class QuadDepthError : public std::runtime_error {
public:
    QuadDepthError(const std::string& msg, QuadResult best)
        : std::runtime_error(msg), best_(best) {}
    const QuadResult& best() const { return best_; }

private:
    QuadResult best_;
};

// Thrown when the integrand returns a NaN or infinity.
class QuadEvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Globally adaptive Gauss-Kronrod 7-15: repeatedly bisect the panel with the
// largest error estimate until the summed estimate meets
// max(abs_tol, rel_tol * |value|). Requires a <= b and f finite on [a,b].
QuadResult integrate(const ScalarFn& f, double a, double b, const QuadConfig& cfg = {});

// integral_a^b f(w) (w-a)^(beta-1) dw   (end == left), or
// integral_a^b f(w) (b-w)^(beta-1) dw   (end == right),
// with f continuous on [a,b]. The substitution u = ((w-a)/(b-a))^beta (or its
// mirror) removes the singularity, turning the problem into a smooth integral
// on [0,1] which is delegated to integrate.
QuadResult integrate_singular(const ScalarFn& f, double a, double b, double beta,
                              SingularEnd end, const QuadConfig& cfg = {});

}  // namespace fracsimp
