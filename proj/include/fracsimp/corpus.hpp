#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fracsimp/interval.hpp"
#include "fracsimp/quadrature.hpp"

// Built-in catalog of test functions with exact derivatives and per-interval
// hypothesis metadata, plus convexity verification utilities.

namespace fracsimp {

// A named scalar function with exact first derivative and the metadata the
// bound evaluators need to check their hypotheses. Metadata is computed per
// interval, not globally: e.g. the derivative range of x^2 on [g, d] is
// (2g, 2d). Any of the optional callables may be empty when the quantity is
// not available for that function.
struct FunctionSpec {
    std::string name;
    ScalarFn eval;
    ScalarFn deriv;

    // Exclusive lower domain bound; -infinity when the function is entire.
    double domain_min;

    // Supremum of |f''''| over the interval; empty when unknown.
    std::function<double(const Interval&)> d4_sup_on;

    // (min, max) of f' over the interval; empty when unknown.
    std::function<std::pair<double, double>(const Interval&)> deriv_range_on;

    // Lipschitz constant of f' (i.e. sup |f''|) over the interval; empty when unknown.
    std::function<double(const Interval&)> deriv_lipschitz_on;

    // Verified structural tags: |f'| convex, and |f'|^q convex for every
    // q >= 1, on intervals contained in the positive axis.
    bool abs_deriv_convex = false;
    bool abs_deriv_pow_convex = false;
};

// The immutable catalog: power:1 .. power:5, exp, cosh, bessel_p:-0.5,
// bessel_p:0.5, bessel_p:1, qdigamma:0.5, qdigamma:2.
const std::vector<FunctionSpec>& catalog();

// Look up a catalog entry by name; throws std::invalid_argument for unknown
// names, listing the valid vocabulary.
const FunctionSpec& lookup(const std::string& name);

// Throws std::domain_error if the interval leaves the function's domain.
void require_in_domain(const FunctionSpec& f, const Interval& iv);

struct ConvexityReport {
    bool convex = true;
    // Witness pair and values when convex == false.
    double x = 0.0;
    double y = 0.0;
    double midpoint_value = 0.0;
    double chord_value = 0.0;
};

// Midpoint convexity test over all pairs of an n-point uniform grid:
// g((x+y)/2) <= (g(x)+g(y))/2 + 1e-12. Returns the first violating pair as a
// witness on failure. Requires n >= 3.
ConvexityReport check_convex(const ScalarFn& g, const Interval& iv, int n);

// For convex f: verifies f(mid) <= (1/(d-g)) integral f <= (f(g)+f(d))/2.
// Convexity itself is checked first and a violation throws std::domain_error.
bool hermite_hadamard_check(const FunctionSpec& f, const Interval& iv,
                            const QuadConfig& cfg = {});

}  // namespace fracsimp
