#include "fracsimp/fracint.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracsimp/specfun.hpp"

namespace fracsimp {

FracOrder FracOrder::from_tau(double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw std::domain_error("FracOrder: require tau > 0, got " + std::to_string(tau));
    const int m = static_cast<int>(std::ceil(tau)) - 1;
    return FracOrder{tau, m, tau - m};
}

namespace {

void check_ordering(Side side, double anchor, double eval_at) {
    if (side == Side::left && !(anchor < eval_at))
        throw std::domain_error("left integral requires anchor < eval_at");
    if (side == Side::right && !(eval_at < anchor))
        throw std::domain_error("right integral requires eval_at < anchor");
}

}  // namespace

QuadResult rl_integral_ex(const ScalarFn& f, Side side, double anchor, double eval_at,
                          double tau, const QuadConfig& cfg) {
    check_ordering(side, anchor, eval_at);
    const FracOrder split = FracOrder::from_tau(tau);  // tau-1 = m + (beta-1)

    // The kernel power tau-1 is split into an integer part m (kept with the
    // smooth factor) and beta-1 in (-1, 0] (handed to integrate_singular).
    QuadResult r;
    if (side == Side::left) {
        const double e = eval_at;
        r = integrate_singular(
            [&f, e, &split](double w) { return std::pow(e - w, split.m) * f(w); },
            anchor, eval_at, split.beta, SingularEnd::right, cfg);
    } else {
        const double e = eval_at;
        r = integrate_singular(
            [&f, e, &split](double w) { return std::pow(w - e, split.m) * f(w); },
            eval_at, anchor, split.beta, SingularEnd::left, cfg);
    }
    const double norm = 1.0 / gamma_fn(tau);
    r.value *= norm;
    r.error_estimate *= norm;
    return r;
}

double rl_integral(const ScalarFn& f, Side side, double anchor, double eval_at,
                   double tau, const QuadConfig& cfg) {
    return rl_integral_ex(f, side, anchor, eval_at, tau, cfg).value;
}

QuadResult conformable_integral_ex(const ScalarFn& f, Side side, double anchor,
                                   double eval_at, const FracOrder& order,
                                   const QuadConfig& cfg) {
    check_ordering(side, anchor, eval_at);

    QuadResult r;
    if (side == Side::left) {
        // (1/m!) integral_anchor^eval_at (eval_at - w)^m (w - anchor)^(beta-1) f(w) dw
        const double e = eval_at;
        const int m = order.m;
        r = integrate_singular(
            [&f, e, m](double w) { return std::pow(e - w, m) * f(w); },
            anchor, eval_at, order.beta, SingularEnd::left, cfg);
    } else {
        // (1/m!) integral_eval_at^anchor (w - eval_at)^m (anchor - w)^(beta-1) f(w) dw
        const double e = eval_at;
        const int m = order.m;
        r = integrate_singular(
            [&f, e, m](double w) { return std::pow(w - e, m) * f(w); },
            eval_at, anchor, order.beta, SingularEnd::right, cfg);
    }
    const double norm = 1.0 / gamma_fn(order.m + 1.0);  // 1/m!
    r.value *= norm;
    r.error_estimate *= norm;
    return r;
}

double conformable_integral(const ScalarFn& f, Side side, double anchor, double eval_at,
                            const FracOrder& order, const QuadConfig& cfg) {
    return conformable_integral_ex(f, side, anchor, eval_at, order, cfg).value;
}

}  // namespace fracsimp
