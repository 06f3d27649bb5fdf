#include "fracsimp/simpson_core.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "fracsimp/specfun.hpp"

namespace fracsimp {

namespace {

double factorial_m(int m) { return gamma_fn(m + 1.0); }

// Gamma(tau+1) / Gamma(tau - m); the denominator argument is beta in (0,1].
double gamma_ratio(const FracOrder& order) {
    return gamma_fn(order.tau + 1.0) / gamma_fn(order.beta);
}

void verify_abs_deriv_convex(const FunctionSpec& f, const Interval& iv,
                             std::optional<double> power) {
    const bool tagged = power ? f.abs_deriv_pow_convex : f.abs_deriv_convex;
    if (tagged && iv.gamma >= 0.0) return;

    const double q = power.value_or(1.0);
    const ScalarFn g = [&f, q](double x) { return std::pow(std::fabs(f.deriv(x)), q); };
    const ConvexityReport cr = check_convex(g, iv, 101);
    if (!cr.convex) {
        std::ostringstream os;
        os << "|f'|";
        if (power) os << "^" << *power;
        os << " of '" << f.name << "' is not convex on [" << iv.gamma << ", " << iv.delta
           << "]: midpoint of (" << cr.x << ", " << cr.y << ") gives " << cr.midpoint_value
           << " above chord " << cr.chord_value;
        throw HypothesisError(os.str());
    }
}

std::pair<double, double> resolve_deriv_bounds(const FunctionSpec& f, const Interval& iv,
                                               const BoundParams& bp) {
    double k_lo = 0.0, k_hi = 0.0;
    if (bp.k_lo && bp.k_hi) {
        k_lo = *bp.k_lo;
        k_hi = *bp.k_hi;
    } else if (!bp.k_lo && !bp.k_hi) {
        if (!f.deriv_range_on)
            throw std::invalid_argument("bound 4.1 needs k_lo and k_hi: no derivative range "
                                        "metadata for '" + f.name + "'");
        std::tie(k_lo, k_hi) = f.deriv_range_on(iv);
    } else {
        throw std::invalid_argument("bound 4.1 needs both k_lo and k_hi, or neither");
    }
    if (!(k_lo <= k_hi)) throw HypothesisError("bound 4.1 needs k_lo <= k_hi");

    const int n = 201;
    const double slop = 1e-9 * (1.0 + std::fabs(k_lo) + std::fabs(k_hi));
    for (int i = 0; i < n; ++i) {
        const double x = iv.gamma + iv.width() * i / (n - 1);
        const double d = f.deriv(x);
        if (d < k_lo - slop || d > k_hi + slop) {
            std::ostringstream os;
            os << "f' of '" << f.name << "' leaves [" << k_lo << ", " << k_hi << "] at x = "
               << x << " (f'(x) = " << d << ")";
            throw HypothesisError(os.str());
        }
    }
    return {k_lo, k_hi};
}

double resolve_lipschitz(const FunctionSpec& f, const Interval& iv, const BoundParams& bp) {
    double lip = 0.0;
    if (bp.lipschitz) {
        lip = *bp.lipschitz;
    } else if (f.deriv_lipschitz_on) {
        lip = f.deriv_lipschitz_on(iv);
    } else {
        throw std::invalid_argument("bound 4.3 needs a Lipschitz constant: no metadata for '"
                                    + f.name + "'");
    }
    if (!(lip >= 0.0)) throw HypothesisError("bound 4.3 needs a nonnegative Lipschitz constant");

    const int n = 201;
    double prev_x = iv.gamma;
    double prev_d = f.deriv(prev_x);
    for (int i = 1; i < n; ++i) {
        const double x = iv.gamma + iv.width() * i / (n - 1);
        const double d = f.deriv(x);
        const double rate = std::fabs(d - prev_d) / (x - prev_x);
        if (rate > lip + 1e-6 * (1.0 + lip)) {
            std::ostringstream os;
            os << "f' of '" << f.name << "' changes faster than " << lip << " near x = " << x
               << " (difference quotient " << rate << ")";
            throw HypothesisError(os.str());
        }
        prev_x = x;
        prev_d = d;
    }
    return lip;
}

}  // namespace

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::t3_3: return "3.3";
        case TheoremId::t3_6: return "3.6";
        case TheoremId::t3_7: return "3.7";
        case TheoremId::t3_9: return "3.9";
        case TheoremId::t3_9r: return "3.9-R";
        case TheoremId::t4_1: return "4.1";
        case TheoremId::t4_3: return "4.3";
        case TheoremId::t1_1: return "1.1";
    }
    throw std::logic_error("unhandled theorem id");
}

TheoremId theorem_from_name(const std::string& name) {
    if (name == "3.3") return TheoremId::t3_3;
    if (name == "3.6") return TheoremId::t3_6;
    if (name == "3.7") return TheoremId::t3_7;
    if (name == "3.9") return TheoremId::t3_9;
    if (name == "3.9-R") return TheoremId::t3_9r;
    if (name == "4.1") return TheoremId::t4_1;
    if (name == "4.3") return TheoremId::t4_3;
    if (name == "1.1") return TheoremId::t1_1;
    throw std::invalid_argument("unknown bound id '" + name +
                                "'; known: 1.1, 3.3, 3.6, 3.7, 3.9, 3.9-R, 4.1, 4.3");
}

HolderPair::HolderPair(double p_, double q_) : p(p_), q(q_) {
    if (!std::isfinite(q) || !(q >= 1.0))
        throw std::domain_error("exponent q must be finite and >= 1");
    if (q == 1.0) {
        if (std::isfinite(p)) throw std::domain_error("q = 1 pairs with p = infinity");
        return;
    }
    if (!std::isfinite(p) || std::fabs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
        throw std::domain_error("exponents must satisfy 1/p + 1/q = 1");
}

HolderPair HolderPair::from_q(double q) {
    if (!std::isfinite(q) || !(q >= 1.0))
        throw std::domain_error("exponent q must be finite and >= 1");
    if (q == 1.0) return HolderPair(std::numeric_limits<double>::infinity(), 1.0);
    return HolderPair(q / (q - 1.0), q);
}

double simpson_value(const FunctionSpec& f, const Interval& iv) {
    return (f.eval(iv.gamma) + 4.0 * f.eval(iv.midpoint()) + f.eval(iv.delta)) / 6.0;
}

double kernel_h(double w, const FracOrder& order) {
    return beta_fn(order.m + 1.0, order.beta) / 3.0 -
           0.5 * incomplete_beta(w, order.m + 1, order.beta);
}

SimpsonConstants constants(const FracOrder& order, std::optional<double> p,
                           const QuadConfig& cfg) {
    if (p && (!std::isfinite(*p) || !(*p >= 1.0)))
        throw std::domain_error("constants: exponent p must be finite and >= 1");

    SimpsonConstants c;
    c.tau = order.tau;
    c.m = order.m;
    c.b_complete = beta_fn(order.m + 1.0, order.beta);

    // h decreases from B/3 at w=0 to -B/6 at w=1; bisect for its sign change.
    double lo = 0.0, hi = 1.0, mid = 0.5;
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double hm = kernel_h(mid, order);
        if (std::fabs(hm) < 1e-15) break;
        (hm > 0.0 ? lo : hi) = mid;
    }
    c.w_star = mid;

    // Each |h| moment is split at w*, where |h| has its kink, so both pieces
    // handed to the quadrature are smooth.
    const auto moment = [&](const ScalarFn& weight) {
        const auto piece = [&](double a, double b) {
            return integrate(
                [&](double w) { return std::fabs(kernel_h(w, order)) * weight(w); }, a, b, cfg);
        };
        const QuadResult head = piece(0.0, c.w_star);
        const QuadResult tail = piece(c.w_star, 1.0);
        c.quad_error += head.error_estimate + tail.error_estimate;
        return head.value + tail.value;
    };

    c.z1 = moment([](double) { return 1.0; });
    c.z3 = moment([](double w) { return 0.5 * (1.0 + w); });
    c.z4 = moment([](double w) { return 0.5 * (1.0 - w); });
    c.z5 = moment([](double w) { return w; });
    if (p) {
        c.p = *p;
        const double pe = *p;
        c.z2 = moment([&order, pe](double w) {
            const double a = std::fabs(kernel_h(w, order));
            return a == 0.0 ? 0.0 : std::pow(a, pe - 1.0);
        });
    }

    // integral_0^1 h has the closed form B(m+2,beta)/2 - B(m+1,beta)/6, from
    // integrating the incomplete beta term by parts.
    c.h_integral = 0.5 * beta_fn(order.m + 2.0, order.beta) - c.b_complete / 6.0;
    return c;
}

QuadResult identity_lhs_ex(const FunctionSpec& f, const Interval& iv, const FracOrder& order,
                           const QuadConfig& cfg) {
    require_in_domain(f, iv);
    const double mid = iv.midpoint();
    const double coef =
        std::pow(2.0, order.tau - 1.0) / std::pow(iv.width(), order.tau) * gamma_ratio(order);
    const QuadResult left = conformable_integral_ex(f.eval, Side::left, iv.gamma, mid, order, cfg);
    const QuadResult right =
        conformable_integral_ex(f.eval, Side::right, iv.delta, mid, order, cfg);

    QuadResult out;
    out.value = simpson_value(f, iv) - coef * (left.value + right.value);
    out.error_estimate = coef * (left.error_estimate + right.error_estimate);
    out.evaluations = left.evaluations + right.evaluations + 3;
    return out;
}

double identity_lhs(const FunctionSpec& f, const Interval& iv, const FracOrder& order,
                    const QuadConfig& cfg) {
    return identity_lhs_ex(f, iv, order, cfg).value;
}

QuadResult identity_rhs_ex(const FunctionSpec& f, const Interval& iv, const FracOrder& order,
                           const QuadConfig& cfg) {
    require_in_domain(f, iv);
    const double pref = iv.width() / (2.0 * factorial_m(order.m)) * gamma_ratio(order);
    const auto integrand = [&](double w) {
        const double x_lo = 0.5 * (1.0 + w) * iv.gamma + 0.5 * (1.0 - w) * iv.delta;
        const double x_hi = 0.5 * (1.0 - w) * iv.gamma + 0.5 * (1.0 + w) * iv.delta;
        return kernel_h(w, order) * (f.deriv(x_lo) - f.deriv(x_hi));
    };
    QuadResult r = integrate(integrand, 0.0, 1.0, cfg);
    r.value *= pref;
    r.error_estimate *= pref;
    return r;
}

double identity_rhs(const FunctionSpec& f, const Interval& iv, const FracOrder& order,
                    const QuadConfig& cfg) {
    return identity_rhs_ex(f, iv, order, cfg).value;
}

BoundReport evaluate_bound(TheoremId id, const FunctionSpec& f, const Interval& iv,
                           const FracOrder& order, const BoundParams& bp,
                           const QuadConfig& cfg) {
    if (id == TheoremId::t1_1) return classical_bound(f, iv, bp.tol, cfg);

    require_in_domain(f, iv);

    BoundReport rep;
    rep.theorem = theorem_name(id);
    rep.tau = order.tau;
    rep.m = order.m;
    rep.gamma = iv.gamma;
    rep.delta = iv.delta;

    const bool uses_z2 =
        id == TheoremId::t3_6 || id == TheoremId::t3_9 || id == TheoremId::t3_9r;
    const bool uses_q = uses_z2 || id == TheoremId::t3_7;

    const std::optional<HolderPair>& hp = bp.holder;
    if (uses_q && !hp)
        throw std::invalid_argument("bound " + rep.theorem + " needs an exponent q >= 1");
    std::optional<double> z2_exponent;
    if (uses_z2 && std::isfinite(hp->p)) z2_exponent = hp->p;

    std::pair<double, double> k_bounds{0.0, 0.0};
    double lip = 0.0;
    switch (id) {
        case TheoremId::t3_3:
            verify_abs_deriv_convex(f, iv, {});
            break;
        case TheoremId::t3_6:
        case TheoremId::t3_7:
        case TheoremId::t3_9:
        case TheoremId::t3_9r:
            verify_abs_deriv_convex(f, iv, hp->q);
            break;
        case TheoremId::t4_1:
            k_bounds = resolve_deriv_bounds(f, iv, bp);
            break;
        case TheoremId::t4_3:
            lip = resolve_lipschitz(f, iv, bp);
            break;
        default:
            break;
    }

    const SimpsonConstants cs = constants(order, z2_exponent, cfg);
    const QuadResult lhs_r = identity_lhs_ex(f, iv, order, cfg);
    rep.lhs = std::fabs(lhs_r.value);
    rep.quad_error = lhs_r.error_estimate + cs.quad_error;

    const double gr = gamma_ratio(order);
    const double pref = iv.width() / (2.0 * factorial_m(order.m)) * gr;
    // z2^(1/p) with the q = 1 (p = infinity) convention: the factor is 1,
    // which dominates (integral_0^1 |h|^p)^(1/p) because |h| <= B/3 < 1.
    const double z2_factor = z2_exponent ? std::pow(*cs.z2, 1.0 / *z2_exponent) : 1.0;

    switch (id) {
        case TheoremId::t3_3: {
            const double da = std::fabs(f.deriv(iv.gamma));
            const double db = std::fabs(f.deriv(iv.delta));
            rep.rhs = pref * cs.z1 * (da + db);
            break;
        }
        case TheoremId::t3_6: {
            const double q = hp->q;
            const double a = std::pow(std::fabs(f.deriv(iv.gamma)), q);
            const double b = std::pow(std::fabs(f.deriv(iv.delta)), q);
            rep.rhs = pref * z2_factor * std::pow(0.25, 1.0 / q) *
                      (std::pow(3.0 * a + b, 1.0 / q) + std::pow(a + 3.0 * b, 1.0 / q));
            rep.p = z2_exponent;
            rep.q = q;
            break;
        }
        case TheoremId::t3_7: {
            const double q = hp->q;
            const double a = std::pow(std::fabs(f.deriv(iv.gamma)), q);
            const double b = std::pow(std::fabs(f.deriv(iv.delta)), q);
            rep.rhs = pref * std::pow(cs.z1, 1.0 - 1.0 / q) *
                      (std::pow(cs.z3 * a + cs.z4 * b, 1.0 / q) +
                       std::pow(cs.z4 * a + cs.z3 * b, 1.0 / q));
            rep.q = q;
            break;
        }
        case TheoremId::t3_9:
        case TheoremId::t3_9r: {
            const double q = hp->q;
            const double a = std::pow(std::fabs(f.deriv(iv.gamma)), q);
            const double b = std::pow(std::fabs(f.deriv(iv.delta)), q);
            const double mq = std::pow(std::fabs(f.deriv(iv.midpoint())), q);
            if (id == TheoremId::t3_9)
                rep.rhs = pref * std::pow(0.5, 1.0 / q) * z2_factor *
                          (std::pow(a + mq, 1.0 / q) + std::pow(mq + b, 1.0 / q));
            else
                rep.rhs = pref * std::pow(0.25, 1.0 / q) * z2_factor *
                          (std::pow(a + 3.0 * mq, 1.0 / q) + std::pow(3.0 * mq + b, 1.0 / q));
            rep.p = z2_exponent;
            rep.q = q;
            break;
        }
        case TheoremId::t4_1: {
            rep.k_lo = k_bounds.first;
            rep.k_hi = k_bounds.second;
            rep.rhs = (k_bounds.second - k_bounds.first) / (2.0 * factorial_m(order.m)) * gr *
                      iv.width() * cs.z1;
            break;
        }
        case TheoremId::t4_3: {
            rep.lipschitz = lip;
            rep.rhs = lip * iv.width() * iv.width() / (2.0 * factorial_m(order.m)) * gr * cs.z5;
            break;
        }
        default:
            break;
    }

    rep.slack = rep.rhs - rep.lhs;
    rep.pass = rep.slack >= -bp.tol;
    return rep;
}

BoundReport classical_bound(const FunctionSpec& f, const Interval& iv, double tol,
                            const QuadConfig& cfg) {
    require_in_domain(f, iv);
    if (!f.d4_sup_on)
        throw HypothesisError("bound 1.1 needs a fourth-derivative bound, and none is "
                              "available for '" + f.name + "'");

    const QuadResult integral = integrate(f.eval, iv.gamma, iv.delta, cfg);

    BoundReport rep;
    rep.theorem = "1.1";
    rep.tau = 1.0;
    rep.m = 0;
    rep.gamma = iv.gamma;
    rep.delta = iv.delta;
    rep.lhs = std::fabs(integral.value - iv.width() * simpson_value(f, iv));
    rep.rhs = f.d4_sup_on(iv) * std::pow(iv.width(), 5) / 2880.0;
    rep.slack = rep.rhs - rep.lhs;
    rep.pass = rep.slack >= -tol;
    rep.quad_error = integral.error_estimate;
    return rep;
}

}  // namespace fracsimp
