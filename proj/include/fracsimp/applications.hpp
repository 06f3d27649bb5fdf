#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracsimp/quadrature.hpp"
#include "fracsimp/simpson_core.hpp"

// Special means and the ready-made verification cases built on them.

namespace fracsimp {

// Arithmetic, geometric, logarithmic, and generalized logarithmic means of a
// pair 0 < gamma < delta. ls is present only when an order s was supplied.
struct MeansBundle {
    double a = 0.0;   // (gamma + delta) / 2
    double g = 0.0;   // sqrt(gamma * delta)
    double l = 0.0;   // (delta - gamma) / (ln delta - ln gamma)
    std::optional<double> ls;  // ((delta^(s+1) - gamma^(s+1)) / ((s+1)(delta-gamma)))^(1/s)
    std::optional<int> s;
};

// Computes the bundle. Requires 0 < gamma < delta; the generalized mean
// requires s not in {0, -1}. s = 1 gives ls == a and s = -2 gives ls == g.
MeansBundle special_means(double gamma, double delta, std::optional<int> s = {});

// Parameters of proposition_check; which fields are read depends on the id:
//   5.1: gamma, delta, s            5.3, 5.4, 5.6: gamma, delta, s, q
//   5.8: gamma, delta               5.9: gamma, delta, rho, q
//   5.11: gamma, delta, q (the q-digamma base, doubling as Holder exponent)
struct PropParams {
    double gamma = 1.0;
    double delta = 2.0;
    int s = 1;
    double q = 2.0;
    double rho = -0.5;
};

// Verifies one of the ready-made inequalities 5.1, 5.3, 5.4, 5.6, 5.8, 5.9,
// 5.11 at tau = 1, m = 0. The left side is formed from the means bundle (or
// the special-function Simpson deviation for 5.9/5.11) and cross-checked
// against the bound machinery; the right side follows each display. Usually
// returns a single report; for 5.9 with rho = -1/2 a second report (theorem
// id "5.9-cosh") recomputes both sides through cosh/sinh instead of the
// series, and for 5.9 every report carries the paper_form extra.
std::vector<BoundReport> proposition_check(const std::string& prop_id,
                                           const PropParams& pp,
                                           const QuadConfig& cfg = {},
                                           double tol = 1e-8);

}  // namespace fracsimp
