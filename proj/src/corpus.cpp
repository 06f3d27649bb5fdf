#include "fracsimp/corpus.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fracsimp/specfun.hpp"

namespace fracsimp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double abs_max(const Interval& iv) { return std::max(std::fabs(iv.gamma), std::fabs(iv.delta)); }

// Second derivative of the normalized Bessel entry: with f' = x p_{rho+1}/(2(rho+1))
// and p'_{rho+1} = x p_{rho+2}/(2(rho+2)), the product rule gives
//   f'' = [ p_{rho+1}(x) + x^2 p_{rho+2}(x) / (2(rho+2)) ] / (2(rho+1)).
// Even in x, increasing in |x|, so its interval maximum sits at the endpoint
// of largest magnitude.
double bessel_d2(double rho, double x) {
    return (bessel_p(rho + 1.0, x) + x * x * bessel_p(rho + 2.0, x) / (2.0 * (rho + 2.0))) /
           (2.0 * (rho + 1.0));
}

FunctionSpec make_power(int s) {
    FunctionSpec f;
    f.name = "power:" + std::to_string(s);
    f.eval = [s](double x) { return std::pow(x, s); };
    f.deriv = [s](double x) { return s * std::pow(x, s - 1); };
    f.domain_min = kNegInf;
    f.d4_sup_on = [s](const Interval& iv) {
        if (s <= 3) return 0.0;
        if (s == 4) return 24.0;
        return 120.0 * abs_max(iv);  // s == 5
    };
    f.deriv_range_on = [s](const Interval& iv) -> std::pair<double, double> {
        const double dg = s * std::pow(iv.gamma, s - 1);
        const double dd = s * std::pow(iv.delta, s - 1);
        if (s == 1) return {1.0, 1.0};
        if (s % 2 == 0)  // f' has an odd power: monotone increasing everywhere
            return {dg, dd};
        // f' has an even power: decreasing left of 0, increasing right of it.
        if (iv.gamma >= 0.0) return {dg, dd};
        if (iv.delta <= 0.0) return {dd, dg};
        return {0.0, std::max(dg, dd)};
    };
    f.deriv_lipschitz_on = [s](const Interval& iv) {
        if (s <= 1) return 0.0;
        return s * (s - 1.0) * std::pow(abs_max(iv), s - 2);
    };
    f.abs_deriv_convex = true;
    f.abs_deriv_pow_convex = true;
    return f;
}

FunctionSpec make_exp() {
    FunctionSpec f;
    f.name = "exp";
    f.eval = [](double x) { return std::exp(x); };
    f.deriv = [](double x) { return std::exp(x); };
    f.domain_min = kNegInf;
    f.d4_sup_on = [](const Interval& iv) { return std::exp(iv.delta); };
    f.deriv_range_on = [](const Interval& iv) -> std::pair<double, double> {
        return {std::exp(iv.gamma), std::exp(iv.delta)};
    };
    f.deriv_lipschitz_on = [](const Interval& iv) { return std::exp(iv.delta); };
    f.abs_deriv_convex = true;
    f.abs_deriv_pow_convex = true;
    return f;
}

FunctionSpec make_cosh() {
    FunctionSpec f;
    f.name = "cosh";
    f.eval = [](double x) { return std::cosh(x); };
    f.deriv = [](double x) { return std::sinh(x); };
    f.domain_min = kNegInf;
    f.d4_sup_on = [](const Interval& iv) {
        return std::max(std::cosh(iv.gamma), std::cosh(iv.delta));
    };
    f.deriv_range_on = [](const Interval& iv) -> std::pair<double, double> {
        return {std::sinh(iv.gamma), std::sinh(iv.delta)};  // sinh is increasing
    };
    f.deriv_lipschitz_on = [](const Interval& iv) {
        return std::max(std::cosh(iv.gamma), std::cosh(iv.delta));
    };
    f.abs_deriv_convex = true;
    f.abs_deriv_pow_convex = true;
    return f;
}

FunctionSpec make_bessel(double rho, const std::string& suffix) {
    FunctionSpec f;
    f.name = "bessel_p:" + suffix;
    f.eval = [rho](double x) { return bessel_p(rho, x); };
    f.deriv = [rho](double x) { return bessel_p(rho, x, true); };
    f.domain_min = kNegInf;
    // No closed fourth-derivative bound is provided for this family.
    f.deriv_range_on = [rho](const Interval& iv) -> std::pair<double, double> {
        if (iv.gamma < 0.0)
            throw std::domain_error("bessel_p derivative range metadata needs gamma >= 0");
        // f' = x p_{rho+1}(x)/(2(rho+1)) is increasing on the positive axis.
        return {bessel_p(rho, iv.gamma, true), bessel_p(rho, iv.delta, true)};
    };
    f.deriv_lipschitz_on = [rho](const Interval& iv) { return bessel_d2(rho, abs_max(iv)); };
    f.abs_deriv_convex = true;
    f.abs_deriv_pow_convex = true;
    return f;
}

FunctionSpec make_qdigamma(double q, const std::string& suffix) {
    FunctionSpec f;
    f.name = "qdigamma:" + suffix;
    f.eval = [q](double x) { return q_digamma(q, x); };
    f.deriv = [q](double x) { return q_digamma(q, x, true); };
    f.domain_min = 0.0;  // eta > 0
    f.deriv_range_on = [q](const Interval& iv) -> std::pair<double, double> {
        // Psi'_q is positive and decreasing (Psi''_q < 0).
        return {q_digamma(q, iv.delta, true), q_digamma(q, iv.gamma, true)};
    };
    f.deriv_lipschitz_on = [q](const Interval& iv) {
        // |Psi''_q| decreases (Psi'''_q > 0), so the maximum is at the left end.
        return std::fabs(detail::q_digamma_dd(q, iv.gamma));
    };
    f.abs_deriv_convex = true;
    f.abs_deriv_pow_convex = true;
    return f;
}

std::vector<FunctionSpec> build_catalog() {
    std::vector<FunctionSpec> cat;
    for (int s = 1; s <= 5; ++s) cat.push_back(make_power(s));
    cat.push_back(make_exp());
    cat.push_back(make_cosh());
    cat.push_back(make_bessel(-0.5, "-0.5"));
    cat.push_back(make_bessel(0.5, "0.5"));
    cat.push_back(make_bessel(1.0, "1"));
    cat.push_back(make_qdigamma(0.5, "0.5"));
    cat.push_back(make_qdigamma(2.0, "2"));
    return cat;
}

}  // namespace

const std::vector<FunctionSpec>& catalog() {
    static const std::vector<FunctionSpec> cat = build_catalog();
    return cat;
}

const FunctionSpec& lookup(const std::string& name) {
    for (const FunctionSpec& f : catalog())
        if (f.name == name) return f;
    std::string vocab;
    for (const FunctionSpec& f : catalog()) {
        if (!vocab.empty()) vocab += ", ";
        vocab += f.name;
    }
    throw std::invalid_argument("unknown function '" + name + "'; known: " + vocab);
}

void require_in_domain(const FunctionSpec& f, const Interval& iv) {
    if (!(iv.gamma > f.domain_min))
        throw std::domain_error("function '" + f.name + "' needs arguments > " +
                                std::to_string(f.domain_min) + "; interval starts at " +
                                std::to_string(iv.gamma));
}

ConvexityReport check_convex(const ScalarFn& g, const Interval& iv, int n) {
    if (n < 3) throw std::invalid_argument("check_convex: require n >= 3");

    std::vector<double> xs(n), gs(n);
    const double h = iv.width() / (n - 1);
    for (int i = 0; i < n; ++i) {
        xs[i] = iv.gamma + i * h;
        gs[i] = g(xs[i]);
    }
    xs[n - 1] = iv.delta;  // avoid drifting past the endpoint

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double mid = 0.5 * (xs[i] + xs[j]);
            const double gm = g(mid);
            const double chord = 0.5 * (gs[i] + gs[j]);
            if (gm > chord + 1e-12) {
                ConvexityReport r;
                r.convex = false;
                r.x = xs[i];
                r.y = xs[j];
                r.midpoint_value = gm;
                r.chord_value = chord;
                return r;
            }
        }
    }
    return ConvexityReport{};
}

bool hermite_hadamard_check(const FunctionSpec& f, const Interval& iv,
                            const QuadConfig& cfg) {
    require_in_domain(f, iv);
    const ConvexityReport cr = check_convex(f.eval, iv, 101);
    if (!cr.convex)
        throw std::domain_error("hermite_hadamard_check: '" + f.name +
                                "' is not convex on the interval; witness pair (" +
                                std::to_string(cr.x) + ", " + std::to_string(cr.y) + ")");

    const QuadResult integral = integrate(f.eval, iv.gamma, iv.delta, cfg);
    const double mean = integral.value / iv.width();
    const double slop = integral.error_estimate / iv.width() + 1e-10;
    const double lo = f.eval(iv.midpoint());
    const double hi = 0.5 * (f.eval(iv.gamma) + f.eval(iv.delta));
    return lo <= mean + slop && mean <= hi + slop;
}

}  // namespace fracsimp
