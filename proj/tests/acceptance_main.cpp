// Acceptance gate: nine numbered checks with pinned tolerances, one printed
// line each. Exits nonzero if any check fails. The first argument is the path
// to the command-line binary, used by the determinism check; everything else
// runs in-process against the library.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fracsimp/applications.hpp"
#include "fracsimp/corpus.hpp"
#include "fracsimp/fracint.hpp"
#include "fracsimp/report.hpp"
#include "fracsimp/simpson_core.hpp"
#include "fracsimp/specfun.hpp"

using namespace fracsimp;

namespace {

int failures = 0;

void line(int idx, bool ok, const std::string& what) {
    std::printf("acceptance %d: %s  %s\n", idx, ok ? "pass" : "FAIL", what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::optional<std::string> run_command(const std::string& cmd, int& exit_code) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

// 1. Kernel moments at tau = 1, absolute tolerance 1e-12.
void check_1() {
    const SimpsonConstants c = constants(FracOrder::from_tau(1.0));
    const bool ok = std::fabs(c.z1 - 5.0 / 36.0) < 1e-12 &&
                    std::fabs(c.z3 - 61.0 / 648.0) < 1e-12 &&
                    std::fabs(c.z4 - 29.0 / 648.0) < 1e-12 &&
                    std::fabs(c.z5 - 4.0 / 81.0) < 1e-12;
    line(1, ok, "kernel moments z1, z3, z4, z5 at tau=1 within 1e-12");
}

// 2. The p-th moment at tau = 1 against its closed form, relative 1e-10.
void check_2() {
    bool ok = true;
    for (double p : {1.5, 2.0, 3.0, 7.0}) {
        const SimpsonConstants c = constants(FracOrder::from_tau(1.0), p);
        const double expected =
            (std::pow(2.0, p + 2.0) + 2.0) / ((p + 1.0) * std::pow(6.0, p + 1.0));
        if (!c.z2 || std::fabs(*c.z2 - expected) > 1e-10 * expected) ok = false;
    }
    line(2, ok, "z2(p) closed form at tau=1 for p in {1.5, 2, 3, 7} within 1e-10");
}

// 3. The identity itself across the full catalog, two intervals, six orders.
void check_3() {
    const std::vector<Interval> ivs{Interval(1.0, 2.0), Interval(0.5, 3.0)};
    int cases = 0, bad = 0;
    for (const FunctionSpec& f : catalog()) {
        for (const Interval& iv : ivs) {
            for (double tau : {0.3, 0.5, 1.0, 1.5, 2.0, 2.7}) {
                const FracOrder order = FracOrder::from_tau(tau);
                const double lhs = identity_lhs(f, iv, order);
                const double rhs = identity_rhs(f, iv, order);
                ++cases;
                if (!(std::fabs(lhs - rhs) < 1e-7)) {
                    ++bad;
                    std::printf("  identity gap %.3e: %s tau=%g [%g, %g]\n",
                                std::fabs(lhs - rhs), f.name.c_str(), tau, iv.gamma,
                                iv.delta);
                }
            }
        }
    }
    std::ostringstream os;
    os << "identity residual < 1e-7 on " << cases << " cases (" << bad << " failures)";
    line(3, cases >= 60 && bad == 0, os.str());
}

// 4. Integer-edge orders: conformable equals Riemann-Liouville, and at tau=1
// the identity left side is the classical Simpson deviation.
void check_4() {
    bool ok = true;
    const Interval iv(1.0, 2.0);
    for (const FunctionSpec& f : catalog()) {
        for (int m : {0, 1, 2}) {
            const double tau = m + 1.0;
            const FracOrder order = FracOrder::from_tau(tau);
            const double cl = conformable_integral(f.eval, Side::left, iv.gamma, iv.delta,
                                                   order);
            const double rl = rl_integral(f.eval, Side::left, iv.gamma, iv.delta, tau);
            const double cr = conformable_integral(f.eval, Side::right, iv.delta,
                                                   iv.gamma, order);
            const double rr = rl_integral(f.eval, Side::right, iv.delta, iv.gamma, tau);
            if (!(std::fabs(cl - rl) < 1e-9 && std::fabs(cr - rr) < 1e-9)) {
                ok = false;
                std::printf("  reduction gap: %s m=%d\n", f.name.c_str(), m);
            }
        }
        const double lhs = identity_lhs(f, iv, FracOrder::from_tau(1.0));
        const double mean =
            integrate(f.eval, iv.gamma, iv.delta).value / iv.width();
        const double classical = simpson_value(f, iv) - mean;
        if (!(std::fabs(lhs - classical) < 1e-9)) {
            ok = false;
            std::printf("  tau=1 deviation gap: %s\n", f.name.c_str());
        }
    }
    line(4, ok, "conformable = Riemann-Liouville at tau=m+1 (1e-9); tau=1 left side "
                "matches the classical Simpson deviation (1e-9)");
}

// 5. Every applicable bound holds with slack >= -1e-8 across the grid.
void check_5() {
    const std::vector<Interval> ivs{Interval(1.0, 2.0), Interval(0.5, 3.0)};
    const std::vector<TheoremId> with_q{TheoremId::t3_6, TheoremId::t3_7, TheoremId::t3_9};
    const std::vector<TheoremId> without_q{TheoremId::t3_3, TheoremId::t4_1,
                                           TheoremId::t4_3};
    int reports = 0, bad = 0, skipped = 0;
    const auto consume = [&](const BoundReport& r) {
        ++reports;
        if (r.slack < -1e-8) {
            ++bad;
            std::printf("  negative slack %.3e: %s %s tau=%g [%g, %g] q=%s\n", r.slack,
                        r.theorem.c_str(), "", r.tau, r.gamma, r.delta,
                        r.q ? format_double(*r.q).c_str() : "-");
        }
    };
    for (const FunctionSpec& f : catalog()) {
        for (const Interval& iv : ivs) {
            for (double tau : {0.3, 0.5, 1.0, 1.5, 2.0, 2.7}) {
                const FracOrder order = FracOrder::from_tau(tau);
                for (TheoremId id : without_q) {
                    try {
                        consume(evaluate_bound(id, f, iv, order));
                    } catch (const std::exception&) {
                        ++skipped;
                    }
                }
                for (TheoremId id : with_q) {
                    for (double q : {1.25, 2.0, 4.0}) {
                        BoundParams bp;
                        bp.holder = HolderPair::from_q(q);
                        try {
                            consume(evaluate_bound(id, f, iv, order, bp));
                        } catch (const std::exception&) {
                            ++skipped;
                        }
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << "bounds 3.3/3.6/3.7/3.9/4.1/4.3: slack >= -1e-8 on " << reports
       << " reports (" << bad << " failures, " << skipped << " inapplicable)";
    line(5, reports >= 300 && bad == 0, os.str());
}

// 6. The classical fourth-derivative bound is tight for x^4 on [0,1].
void check_6() {
    const BoundReport r = classical_bound(lookup("power:4"), Interval(0.0, 1.0));
    const bool ok =
        std::fabs(r.lhs - 1.0 / 120.0) < 1e-12 && std::fabs(r.rhs - 1.0 / 120.0) < 1e-12;
    line(6, ok, "classical bound on x^4 over [0,1]: lhs = rhs = 1/120 within 1e-12");
}

// 7. All ready-made inequalities hold over a positive parameter grid, and the
// s = 1 special case reproduces its exact right side.
void check_7() {
    int reports = 0, bad = 0;
    bool exact_rhs = true;
    const double grid[] = {0.5, 1.5, 2.5, 3.5, 4.5};
    for (double gamma : grid) {
        for (double delta : grid) {
            if (!(gamma < delta)) continue;
            PropParams pp;
            pp.gamma = gamma;
            pp.delta = delta;
            const auto run = [&](const char* id) {
                for (const BoundReport& r : proposition_check(id, pp)) {
                    ++reports;
                    if (!r.pass) {
                        ++bad;
                        std::printf("  proposition %s fails at [%g, %g] (s=%d q=%g "
                                    "rho=%g): slack %.3e\n",
                                    r.theorem.c_str(), gamma, delta, pp.s, pp.q, pp.rho,
                                    r.slack);
                    }
                }
            };
            for (int s : {1, 2, 3}) {
                pp.s = s;
                run("5.1");
                run("5.3");
                run("5.4");
                run("5.6");
                if (s == 1) {
                    const BoundReport r = proposition_check("5.1", pp)[0];
                    if (r.rhs != 5.0 * (delta - gamma) / 36.0) exact_rhs = false;
                }
            }
            pp.s = 1;
            run("5.8");
            for (double rho : {-0.5, 0.5}) {
                pp.rho = rho;
                run("5.9");
            }
            pp.rho = -0.5;
            for (double q : {2.0, 5.0}) {
                pp.q = q;
                run("5.11");
            }
            pp.q = 2.0;
        }
    }
    std::ostringstream os;
    os << "propositions 5.1-5.11 over the (0,5] grid: " << reports << " reports (" << bad
       << " failures); s=1 right side exact: " << (exact_rhs ? "yes" : "no");
    line(7, bad == 0 && exact_rhs && reports > 0, os.str());
}

// 8. Special-function cross-checks: hyperbolic reductions, the q-digamma
// recurrence, and series derivatives against finite differences.
void check_8() {
    bool ok = true;
    for (double x : {0.5, 1.0, 2.0}) {
        if (std::fabs(bessel_p(-0.5, x) - std::cosh(x)) > 1e-12 * std::cosh(x)) ok = false;
        if (std::fabs(bessel_p(0.5, x) - std::sinh(x) / x) > 1e-12 * (std::sinh(x) / x))
            ok = false;
    }
    for (double q : {0.2, 0.5, 0.9, 2.0, 5.0}) {
        for (double eta : {0.5, 1.0, 3.0}) {
            const double step = q_digamma(q, eta + 1.0) - q_digamma(q, eta);
            const double expected =
                -std::log(q) * std::pow(q, eta) / (1.0 - std::pow(q, eta));
            if (std::fabs(step - expected) > 1e-10 * std::max(1.0, std::fabs(expected)))
                ok = false;
        }
    }
    const double h = 1e-5;
    for (double rho : {-0.5, 0.5, 1.5}) {
        for (double x : {0.5, 1.0, 2.0}) {
            const double fd = (bessel_p(rho, x + h) - bessel_p(rho, x - h)) / (2.0 * h);
            if (std::fabs(bessel_p(rho, x, true) - fd) > 1e-6 * std::fabs(fd)) ok = false;
        }
    }
    for (double q : {0.5, 2.0}) {
        for (double eta : {0.7, 1.5, 3.0}) {
            const double fd = (q_digamma(q, eta + h) - q_digamma(q, eta - h)) / (2.0 * h);
            if (std::fabs(q_digamma(q, eta, true) - fd) > 1e-6 * std::fabs(fd)) ok = false;
        }
    }
    line(8, ok, "series functions: hyperbolic reductions (1e-12), q-digamma recurrence "
                "(1e-10), derivatives vs finite differences (1e-6)");
}

// 9. Scan output is byte-identical no matter the worker count.
void check_9(const char* cli_path) {
    if (!cli_path) {
        line(9, false, "scan determinism: command-line binary path not supplied");
        return;
    }
    const std::string base = std::string("\"") + cli_path +
                             "\" scan --gamma 1 --delta 2"
                             " --func-list power:3,exp,qdigamma:2"
                             " --tau-list 0.5,1,2 --q-list 1.25,2 --format json"
                             " 2>/dev/null";
    int code1 = -1, code8 = -1;
    const auto out1 = run_command(base + " --parallelism 1", code1);
    const auto out8 = run_command(base + " --parallelism 8", code8);
    const bool ok = out1 && out8 && !out1->empty() && *out1 == *out8 && code1 == 0 &&
                    code8 == 0 && out1->find("\"theorem\"") != std::string::npos;
    std::ostringstream os;
    os << "scan output byte-identical for 1 and 8 workers ("
       << (out1 ? out1->size() : 0) << " bytes, exit " << code1 << "/" << code8 << ")";
    line(9, ok, os.str());
}

}  // namespace

int main(int argc, char** argv) {
    check_1();
    check_2();
    check_3();
    check_4();
    check_5();
    check_6();
    check_7();
    check_8();
    check_9(argc > 1 ? argv[1] : nullptr);
    if (failures == 0) {
        std::printf("all 9 acceptance checks passed\n");
        return 0;
    }
    std::printf("%d acceptance check(s) failed\n", failures);
    return 1;
}
