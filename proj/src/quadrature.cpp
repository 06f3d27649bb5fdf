#include "fracsimp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fracsimp {

namespace {

// 15-point Kronrod abscissae (positive half, descending; last entry is the
// center) and weights, with the embedded 7-point Gauss weights. The Gauss
// nodes are the abscissae at odd indices plus the center.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double err;
    int depth;
};

// Heap ordering: the panel with the largest error estimate on top.
struct ByError {
    bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

double eval_checked(const ScalarFn& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v))
        throw QuadEvalError("integrand returned a non-finite value at x=" +
                            std::to_string(x));
    return v;
}

Panel gk15(const ScalarFn& f, double a, double b, int depth, std::size_t& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = eval_checked(f, c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = eval_checked(f, c - dx);
        const double f2 = eval_checked(f, c + dx);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[(j - 1) / 2] * (f1 + f2);
    }
    evals += 15;

    // |K15 - G7| estimates the error of the lower-order rule; for the
    // returned Kronrod value it is a deliberate overestimate, which only
    // costs a few extra bisections on smooth panels.
    return Panel{a, b, resk * h, std::fabs((resk - resg) * h), depth};
}

void validate(const QuadConfig& cfg) {
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0) || cfg.max_depth < 1)
        throw std::invalid_argument(
            "QuadConfig: require abs_tol > 0, rel_tol > 0, max_depth >= 1");
}

}  // namespace

QuadResult integrate(const ScalarFn& f, double a, double b, const QuadConfig& cfg) {
    validate(cfg);
    if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("integrate: require finite a <= b");
    if (a == b) return QuadResult{0.0, 0.0, 0};

    std::size_t evals = 0;
    std::vector<Panel> heap;
    heap.push_back(gk15(f, a, b, 0, evals));

    const auto totals = [&heap]() {
        double v = 0.0, e = 0.0;
        for (const Panel& p : heap) {
            v += p.value;
            e += p.err;
        }
        return std::pair<double, double>(v, e);
    };

    for (;;) {
        const auto [value, err] = totals();
        if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value)))
            return QuadResult{value, err, evals};

        // Split the worst panel; if it is already at max_depth no further
        // refinement is possible anywhere that matters.
        std::pop_heap(heap.begin(), heap.end(), ByError{});
        const Panel worst = heap.back();
        heap.pop_back();
        if (worst.depth >= cfg.max_depth)
            throw QuadDepthError("integrate: max_depth exhausted before tolerance",
                                 QuadResult{value, err, evals});

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw QuadDepthError("integrate: panel width at rounding limit",
                                 QuadResult{value, err, evals});

        heap.push_back(gk15(f, worst.a, mid, worst.depth + 1, evals));
        std::push_heap(heap.begin(), heap.end(), ByError{});
        heap.push_back(gk15(f, mid, worst.b, worst.depth + 1, evals));
        std::push_heap(heap.begin(), heap.end(), ByError{});
    }
}

QuadResult integrate_singular(const ScalarFn& f, double a, double b, double beta,
                              SingularEnd end, const QuadConfig& cfg) {
    validate(cfg);
    if (!(beta > 0.0 && beta <= 1.0))
        throw std::invalid_argument("integrate_singular: require 0 < beta <= 1");
    if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("integrate_singular: require finite a <= b");
    if (a == b) return QuadResult{0.0, 0.0, 0};

    const double len = b - a;
    if (beta == 1.0) return integrate(f, a, b, cfg);

    // Substituting u = ((w-a)/(b-a))^beta turns
    //   integral_a^b f(w) (w-a)^(beta-1) dw
    // into (len^beta / beta) integral_0^1 f(a + len u^(1/beta)) du, which is
    // free of the endpoint singularity; mirrored for the right end.
    const double scale = std::pow(len, beta) / beta;
    const double inv_beta = 1.0 / beta;
    ScalarFn g;
    if (end == SingularEnd::left)
        g = [&f, a, len, inv_beta](double u) { return f(a + len * std::pow(u, inv_beta)); };
    else
        g = [&f, b, len, inv_beta](double u) { return f(b - len * std::pow(u, inv_beta)); };

    // Tolerances are stated for the original integral; undo the scale for the
    // transformed one so the absolute contract survives the multiplication.
    QuadConfig inner = cfg;
    inner.abs_tol = cfg.abs_tol / scale;

    QuadResult r = integrate(g, 0.0, 1.0, inner);
    r.value *= scale;
    r.error_estimate *= scale;
    return r;
}

}  // namespace fracsimp
