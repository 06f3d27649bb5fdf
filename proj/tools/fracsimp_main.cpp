// fracsimp: verify conformable fractional Simpson identities and bounds,
// compute kernel constants, scan parameter grids, and evaluate the built-in
// special functions. Reports go to stdout as JSON, CSV, or pretty text; exit
// code 0 means every requested check passed, 1 means at least one check
// failed, and 2 means the request itself was unusable (bad flags, domain
// violations, unmet hypotheses).

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "fracsimp/applications.hpp"
#include "fracsimp/corpus.hpp"
#include "fracsimp/fracint.hpp"
#include "fracsimp/report.hpp"
#include "fracsimp/simpson_core.hpp"
#include "fracsimp/specfun.hpp"

using namespace fracsimp;

namespace {

// Minimal JSON object builder; every number goes through format_double so
// output is byte-stable across runs and thread counts.
class JsonObject {
public:
    JsonObject& raw(const std::string& key, const std::string& value) {
        if (!body_.empty()) body_ += ',';
        body_ += '"';
        body_ += key;
        body_ += "\":";
        body_ += value;
        return *this;
    }
    JsonObject& str(const std::string& key, const std::string& value) {
        return raw(key, "\"" + value + "\"");
    }
    JsonObject& num(const std::string& key, double value) {
        return raw(key, format_double(value));
    }
    JsonObject& num(const std::string& key, const std::optional<double>& value) {
        return raw(key, value ? format_double(*value) : "null");
    }
    JsonObject& integer(const std::string& key, long long value) {
        return raw(key, std::to_string(value));
    }
    JsonObject& boolean(const std::string& key, bool value) {
        return raw(key, value ? "true" : "false");
    }
    std::string done() const { return "{" + body_ + "}"; }

private:
    std::string body_;
};

void emit(const std::string& out_path, std::string text) {
    if (text.empty() || text.back() != '\n') text += '\n';
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    out << text;
}

FracOrder order_from(double tau, const std::optional<int>& m_flag) {
    const FracOrder order = FracOrder::from_tau(tau);
    if (m_flag && *m_flag != order.m)
        throw std::domain_error("--m " + std::to_string(*m_flag) +
                                " is inconsistent with --tau (expected m = " +
                                std::to_string(order.m) + ")");
    return order;
}

std::optional<double> env_tolerance() {
    const char* s = std::getenv("FRAC_SIMPSON_TOL");
    if (!s || !*s) return {};
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || !(v > 0.0))
        throw std::domain_error("FRAC_SIMPSON_TOL must be a positive number");
    return v;
}

// Flags beat the environment, the environment beats the built-in default.
double resolve_tol(bool flag_given, double flag_value, double fallback) {
    if (flag_given) return flag_value;
    if (const std::optional<double> env = env_tolerance()) return *env;
    return fallback;
}

std::optional<HolderPair> make_holder(const std::optional<double>& p,
                                      const std::optional<double>& q) {
    if (!q) {
        if (p) throw std::invalid_argument("--p is meaningful only together with --q");
        return {};
    }
    if (p) return HolderPair(*p, *q);
    return HolderPair::from_q(*q);
}

bool theorem_uses_q(TheoremId id) {
    return id == TheoremId::t3_6 || id == TheoremId::t3_7 || id == TheoremId::t3_9 ||
           id == TheoremId::t3_9r;
}

std::string render_reports(const std::vector<BoundReport>& reports, const std::string& format) {
    if (format == "json") return to_json(reports);
    if (format == "csv") return to_csv(reports);
    return to_pretty(reports);
}

struct ScanCombo {
    TheoremId theorem;
    const FunctionSpec* func;
    double tau;
    std::optional<double> q;
};

int run_scan(const std::vector<std::string>& theorem_names,
             const std::vector<std::string>& func_names, const std::vector<double>& taus,
             const std::vector<double>& qs, double gamma, double delta, double tol,
             const QuadConfig& cfg, int parallelism, const std::string& format,
             const std::string& out_path) {
    const Interval iv(gamma, delta);

    std::vector<ScanCombo> combos;
    for (const std::string& tn : theorem_names) {
        const TheoremId id = theorem_from_name(tn);
        for (const std::string& fn : func_names) {
            const FunctionSpec& f = lookup(fn);
            for (const double tau : taus) {
                if (theorem_uses_q(id)) {
                    for (const double q : qs) combos.push_back({id, &f, tau, q});
                } else {
                    combos.push_back({id, &f, tau, {}});
                }
            }
        }
    }

    // Workers claim combo indices from a shared counter; each result lands in
    // its combo's slot, so the merged order is the enumeration order above no
    // matter how many threads run or how they interleave.
    std::vector<std::optional<BoundReport>> slots(combos.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr fatal;
    std::mutex fatal_mutex;

    const auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= combos.size()) return;
            const ScanCombo& c = combos[i];
            try {
                BoundParams bp;
                if (c.q) bp.holder = HolderPair::from_q(*c.q);
                bp.tol = tol;
                slots[i] = evaluate_bound(c.theorem, *c.func, iv,
                                          FracOrder::from_tau(c.tau), bp, cfg);
            } catch (const std::domain_error&) {
                // hypothesis or domain not met for this combo: skip it
            } catch (const std::invalid_argument&) {
                // combo not applicable (e.g. missing exponent)
            } catch (...) {
                std::lock_guard<std::mutex> lock(fatal_mutex);
                if (!fatal) fatal = std::current_exception();
                return;
            }
        }
    };

    const int threads = std::max(1, std::min<int>(parallelism, (int)combos.size()));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (fatal) std::rethrow_exception(fatal);

    std::vector<BoundReport> reports;
    reports.reserve(slots.size());
    for (const std::optional<BoundReport>& s : slots)
        if (s) reports.push_back(*s);

    emit(out_path, render_reports(reports, format));
    for (const BoundReport& r : reports)
        if (!r.pass) return 1;
    return 0;
}

std::string constants_json(const SimpsonConstants& c, double beta) {
    JsonObject j;
    j.num("tau", c.tau)
        .integer("m", c.m)
        .num("beta", beta)
        .num("b_complete", c.b_complete)
        .num("w_star", c.w_star)
        .num("z1", c.z1)
        .num("z2", c.z2)
        .num("p", c.p)
        .num("z3", c.z3)
        .num("z4", c.z4)
        .num("z5", c.z5)
        .num("h_integral", c.h_integral)
        .num("quad_error", c.quad_error);
    return j.done();
}

std::string constants_pretty(const SimpsonConstants& c, double beta) {
    std::string out;
    const auto line = [&out](const std::string& k, const std::string& v) {
        out += k;
        out.append(k.size() < 12 ? 12 - k.size() : 1, ' ');
        out += v;
        out += '\n';
    };
    line("tau", format_double(c.tau));
    line("m", std::to_string(c.m));
    line("beta", format_double(beta));
    line("b_complete", format_double(c.b_complete));
    line("w_star", format_double(c.w_star));
    line("z1", format_double(c.z1));
    if (c.z2) {
        line("z2", format_double(*c.z2));
        line("p", format_double(*c.p));
    }
    line("z3", format_double(c.z3));
    line("z4", format_double(c.z4));
    line("z5", format_double(c.z5));
    line("h_integral", format_double(c.h_integral));
    line("quad_error", format_double(c.quad_error));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conformable fractional Simpson identity and bound verifier"};
    app.require_subcommand(1);

    // ---- shared option storage ----
    double tau = 1.0;
    std::optional<int> m_flag;
    std::optional<double> p_flag, q_flag;
    double gamma = 0.0, delta = 1.0;
    std::string func_name, theorem_name_flag, format, out_path;
    double tol_flag = 0.0;
    QuadConfig cfg;

    // constants
    CLI::App* cmd_constants = app.add_subcommand("constants", "kernel constants for one order");
    cmd_constants->add_option("--tau", tau, "order, in (m, m+1]")->required();
    cmd_constants->add_option("--m", m_flag, "integer part check (must equal ceil(tau)-1)");
    cmd_constants->add_option("--p", p_flag, "also compute z2 with this exponent");
    cmd_constants->add_option("--abs-tol", cfg.abs_tol, "quadrature absolute tolerance");
    cmd_constants->add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance");
    cmd_constants->add_option("--format", format, "json or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    cmd_constants->add_option("--out", out_path, "write the report to this file");

    // verify {identity, bound}
    CLI::App* cmd_verify = app.add_subcommand("verify", "check one identity or bound");
    cmd_verify->require_subcommand(1);

    CLI::App* cmd_identity = cmd_verify->add_subcommand(
        "identity", "both sides of the fractional Simpson identity");
    cmd_identity->add_option("--func", func_name, "catalog function")->required();
    cmd_identity->add_option("--gamma", gamma, "left endpoint")->required();
    cmd_identity->add_option("--delta", delta, "right endpoint")->required();
    cmd_identity->add_option("--tau", tau, "order")->required();
    cmd_identity->add_option("--m", m_flag, "integer part check");
    CLI::Option* id_tol = cmd_identity->add_option("--tol", tol_flag, "residual tolerance");
    cmd_identity->add_option("--abs-tol", cfg.abs_tol, "quadrature absolute tolerance");
    cmd_identity->add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance");
    cmd_identity->add_option("--format", format, "pretty or json")
        ->check(CLI::IsMember({"pretty", "json"}));
    cmd_identity->add_option("--out", out_path, "write the report to this file");

    CLI::App* cmd_bound =
        cmd_verify->add_subcommand("bound", "one inequality: lhs, rhs, slack, pass");
    cmd_bound->add_option("--theorem", theorem_name_flag,
                          "bound id: 1.1, 3.3, 3.6, 3.7, 3.9, 3.9-R, 4.1, 4.3")
        ->required();
    cmd_bound->add_option("--func", func_name, "catalog function")->required();
    cmd_bound->add_option("--gamma", gamma, "left endpoint")->required();
    cmd_bound->add_option("--delta", delta, "right endpoint")->required();
    cmd_bound->add_option("--tau", tau, "order (default 1)");
    cmd_bound->add_option("--m", m_flag, "integer part check");
    cmd_bound->add_option("--q", q_flag, "exponent for 3.6/3.7/3.9/3.9-R");
    cmd_bound->add_option("--p", p_flag, "conjugate exponent (default q/(q-1))");
    std::optional<double> k_lo_flag, k_hi_flag, lipschitz_flag;
    cmd_bound->add_option("--k-lo", k_lo_flag, "lower bound of f' (4.1)");
    cmd_bound->add_option("--k-hi", k_hi_flag, "upper bound of f' (4.1)");
    cmd_bound->add_option("--lipschitz", lipschitz_flag, "Lipschitz constant of f' (4.3)");
    CLI::Option* bd_tol = cmd_bound->add_option("--tol", tol_flag, "pass/fail tolerance");
    cmd_bound->add_option("--abs-tol", cfg.abs_tol, "quadrature absolute tolerance");
    cmd_bound->add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance");
    cmd_bound->add_option("--format", format, "pretty, json, or csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    cmd_bound->add_option("--out", out_path, "write the report to this file");

    // scan
    CLI::App* cmd_scan = app.add_subcommand("scan", "cartesian grid of bound checks");
    std::vector<std::string> theorem_list{"3.3", "3.6", "3.7", "3.9", "4.1", "4.3"};
    std::vector<std::string> func_list;
    std::vector<double> tau_list{0.3, 0.5, 1.0, 1.5, 2.0, 2.7};
    std::vector<double> q_list{1.25, 2.0, 4.0};
    int parallelism = 1;
    cmd_scan->add_option("--theorem-list", theorem_list, "bound ids")->delimiter(',');
    cmd_scan->add_option("--func-list", func_list, "catalog functions (default: all)")
        ->delimiter(',');
    cmd_scan->add_option("--tau-list", tau_list, "orders")->delimiter(',');
    cmd_scan->add_option("--q-list", q_list, "exponents for the Holder-type bounds")
        ->delimiter(',');
    cmd_scan->add_option("--gamma", gamma, "left endpoint")->required();
    cmd_scan->add_option("--delta", delta, "right endpoint")->required();
    CLI::Option* sc_tol = cmd_scan->add_option("--tol", tol_flag, "pass/fail tolerance");
    cmd_scan->add_option("--abs-tol", cfg.abs_tol, "quadrature absolute tolerance");
    cmd_scan->add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance");
    cmd_scan->add_option("--parallelism", parallelism, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    cmd_scan->add_option("--format", format, "json, csv, or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd_scan->add_option("--out", out_path, "write the report to this file");

    // means
    CLI::App* cmd_means = app.add_subcommand("means", "special means of an interval");
    std::optional<int> s_flag;
    cmd_means->add_option("--gamma", gamma, "left endpoint")->required();
    cmd_means->add_option("--delta", delta, "right endpoint")->required();
    cmd_means->add_option("--s", s_flag, "order of the generalized logarithmic mean");
    cmd_means->add_option("--format", format, "json or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    cmd_means->add_option("--out", out_path, "write the report to this file");

    // prop
    CLI::App* cmd_prop = app.add_subcommand("prop", "one ready-made inequality");
    std::string prop_id;
    PropParams pp;
    cmd_prop->add_option("--id", prop_id, "5.1, 5.3, 5.4, 5.6, 5.8, 5.9, or 5.11")->required();
    cmd_prop->add_option("--gamma", pp.gamma, "left endpoint (default 1)");
    cmd_prop->add_option("--delta", pp.delta, "right endpoint (default 2)");
    cmd_prop->add_option("--s", pp.s, "power exponent for 5.1/5.3/5.4/5.6 (default 1)");
    cmd_prop->add_option("--q", pp.q, "exponent (and q-digamma base for 5.11; default 2)");
    cmd_prop->add_option("--rho", pp.rho, "order for 5.9 (default -0.5)");
    CLI::Option* pr_tol = cmd_prop->add_option("--tol", tol_flag, "pass/fail tolerance");
    cmd_prop->add_option("--abs-tol", cfg.abs_tol, "quadrature absolute tolerance");
    cmd_prop->add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance");
    cmd_prop->add_option("--format", format, "pretty, json, or csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    cmd_prop->add_option("--out", out_path, "write the report to this file");

    // specfun
    CLI::App* cmd_specfun = app.add_subcommand("specfun", "evaluate one special function");
    std::string fn_name;
    std::optional<double> x_flag, a_flag, b_flag, w_flag, rho_flag, base_flag, eta_flag;
    bool derivative = false;
    cmd_specfun
        ->add_option("--fn", fn_name, "gamma, beta, incomplete-beta, bessel-p, or q-digamma")
        ->required();
    cmd_specfun->add_option("--x", x_flag, "argument (gamma, bessel-p)");
    cmd_specfun->add_option("--a", a_flag, "first beta parameter");
    cmd_specfun->add_option("--b", b_flag, "second beta parameter");
    cmd_specfun->add_option("--w", w_flag, "incomplete-beta upper limit in [0,1]");
    cmd_specfun->add_option("--rho", rho_flag, "bessel-p order");
    cmd_specfun->add_option("--q", base_flag, "q-digamma base");
    cmd_specfun->add_option("--eta", eta_flag, "q-digamma argument");
    cmd_specfun->add_flag("--derivative", derivative, "evaluate the derivative instead");
    cmd_specfun->add_option("--format", format, "json or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    cmd_specfun->add_option("--out", out_path, "write the report to this file");

    // fracint
    CLI::App* cmd_fracint = app.add_subcommand("fracint", "one fractional integral");
    std::string side_name = "left", kind = "conformable";
    double anchor = 0.0, eval_at = 1.0;
    cmd_fracint->add_option("--func", func_name, "catalog function")->required();
    cmd_fracint->add_option("--side", side_name, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
    cmd_fracint->add_option("--anchor", anchor, "fixed endpoint")->required();
    cmd_fracint->add_option("--eval-at", eval_at, "evaluation point")->required();
    cmd_fracint->add_option("--tau", tau, "order")->required();
    cmd_fracint->add_option("--m", m_flag, "integer part check (conformable only)");
    cmd_fracint->add_option("--kind", kind, "conformable or rl")
        ->check(CLI::IsMember({"conformable", "rl"}));
    cmd_fracint->add_option("--abs-tol", cfg.abs_tol, "quadrature absolute tolerance");
    cmd_fracint->add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance");
    cmd_fracint->add_option("--format", format, "json or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    cmd_fracint->add_option("--out", out_path, "write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_constants)) {
            if (format.empty()) format = "json";
            const FracOrder order = order_from(tau, m_flag);
            const SimpsonConstants c = constants(order, p_flag, cfg);
            emit(out_path, format == "json" ? constants_json(c, order.beta)
                                            : constants_pretty(c, order.beta));
            return 0;
        }

        if (cmd_verify->got_subcommand(cmd_identity)) {
            if (format.empty()) format = "pretty";
            const double tol = resolve_tol(id_tol->count() > 0, tol_flag, 1e-7);
            const FunctionSpec& f = lookup(func_name);
            const Interval iv(gamma, delta);
            const FracOrder order = order_from(tau, m_flag);
            const QuadResult lhs = identity_lhs_ex(f, iv, order, cfg);
            const QuadResult rhs = identity_rhs_ex(f, iv, order, cfg);
            const double residual = std::fabs(lhs.value - rhs.value);
            const bool pass = residual <= tol;
            if (format == "json") {
                JsonObject j;
                j.str("check", "identity")
                    .str("func", f.name)
                    .num("tau", order.tau)
                    .integer("m", order.m)
                    .num("gamma", gamma)
                    .num("delta", delta)
                    .num("lhs", lhs.value)
                    .num("rhs", rhs.value)
                    .num("residual", residual)
                    .num("tol", tol)
                    .boolean("pass", pass)
                    .num("quad_error", lhs.error_estimate + rhs.error_estimate);
                emit(out_path, j.done());
            } else {
                std::string line = pass ? "pass identity " : "FAIL identity ";
                line += f.name + " tau=" + format_double(order.tau) + " [" +
                        format_double(gamma) + ", " + format_double(delta) +
                        "]  lhs=" + format_double(lhs.value) + " rhs=" +
                        format_double(rhs.value) + " residual=" + format_double(residual) +
                        " tol=" + format_double(tol);
                emit(out_path, line);
            }
            return pass ? 0 : 1;
        }

        if (cmd_verify->got_subcommand(cmd_bound)) {
            if (format.empty()) format = "pretty";
            const TheoremId id = theorem_from_name(theorem_name_flag);
            const FunctionSpec& f = lookup(func_name);
            const Interval iv(gamma, delta);
            const FracOrder order = order_from(tau, m_flag);
            BoundParams bp;
            bp.holder = make_holder(p_flag, q_flag);
            bp.k_lo = k_lo_flag;
            bp.k_hi = k_hi_flag;
            bp.lipschitz = lipschitz_flag;
            bp.tol = resolve_tol(bd_tol->count() > 0, tol_flag, 1e-8);
            const BoundReport rep = evaluate_bound(id, f, iv, order, bp, cfg);
            emit(out_path, render_reports({rep}, format));
            return rep.pass ? 0 : 1;
        }

        if (app.got_subcommand(cmd_scan)) {
            if (format.empty()) format = "json";
            if (func_list.empty())
                for (const FunctionSpec& f : catalog()) func_list.push_back(f.name);
            const double tol = resolve_tol(sc_tol->count() > 0, tol_flag, 1e-8);
            return run_scan(theorem_list, func_list, tau_list, q_list, gamma, delta, tol, cfg,
                            parallelism, format, out_path);
        }

        if (app.got_subcommand(cmd_means)) {
            if (format.empty()) format = "json";
            const MeansBundle mb = special_means(gamma, delta, s_flag);
            if (format == "json") {
                JsonObject j;
                j.num("gamma", gamma).num("delta", delta).num("a", mb.a).num("g", mb.g).num(
                    "l", mb.l);
                j.raw("s", mb.s ? std::to_string(*mb.s) : "null").num("ls", mb.ls);
                emit(out_path, j.done());
            } else {
                std::string out = "a   " + format_double(mb.a) + "\ng   " +
                                  format_double(mb.g) + "\nl   " + format_double(mb.l);
                if (mb.ls)
                    out += "\nls  " + format_double(*mb.ls) + "  (s = " +
                           std::to_string(*mb.s) + ")";
                emit(out_path, out);
            }
            return 0;
        }

        if (app.got_subcommand(cmd_prop)) {
            if (format.empty()) format = "pretty";
            const double tol = resolve_tol(pr_tol->count() > 0, tol_flag, 1e-8);
            const std::vector<BoundReport> reports = proposition_check(prop_id, pp, cfg, tol);
            emit(out_path, render_reports(reports, format));
            for (const BoundReport& r : reports)
                if (!r.pass) return 1;
            return 0;
        }

        if (app.got_subcommand(cmd_specfun)) {
            if (format.empty()) format = "json";
            const auto need = [&](const std::optional<double>& v,
                                  const char* flag) -> double {
                if (!v)
                    throw std::invalid_argument("specfun --fn " + fn_name + " needs " + flag);
                return *v;
            };
            double value = 0.0;
            if (fn_name == "gamma") {
                value = gamma_fn(need(x_flag, "--x"));
            } else if (fn_name == "beta") {
                value = beta_fn(need(a_flag, "--a"), need(b_flag, "--b"));
            } else if (fn_name == "incomplete-beta") {
                const double a = need(a_flag, "--a");
                if (a < 1.0 || a != std::floor(a))
                    throw std::domain_error("incomplete-beta needs an integer --a >= 1");
                value = incomplete_beta(need(w_flag, "--w"), (int)a, need(b_flag, "--b"));
            } else if (fn_name == "bessel-p") {
                value = bessel_p(need(rho_flag, "--rho"), need(x_flag, "--x"), derivative);
            } else if (fn_name == "q-digamma") {
                value = q_digamma(need(base_flag, "--q"), need(eta_flag, "--eta"), derivative);
            } else {
                throw std::invalid_argument(
                    "unknown --fn '" + fn_name +
                    "'; known: gamma, beta, incomplete-beta, bessel-p, q-digamma");
            }
            if (format == "json") {
                JsonObject j;
                j.str("fn", fn_name).boolean("derivative", derivative).num("value", value);
                emit(out_path, j.done());
            } else {
                emit(out_path, format_double(value));
            }
            return 0;
        }

        if (app.got_subcommand(cmd_fracint)) {
            if (format.empty()) format = "json";
            const FunctionSpec& f = lookup(func_name);
            const Side side = side_name == "left" ? Side::left : Side::right;
            QuadResult r;
            if (kind == "rl") {
                if (m_flag) order_from(tau, m_flag);  // still validate the pair
                r = rl_integral_ex(f.eval, side, anchor, eval_at, tau, cfg);
            } else {
                r = conformable_integral_ex(f.eval, side, anchor, eval_at,
                                            order_from(tau, m_flag), cfg);
            }
            if (format == "json") {
                JsonObject j;
                j.str("kind", kind)
                    .str("func", f.name)
                    .str("side", side_name)
                    .num("anchor", anchor)
                    .num("eval_at", eval_at)
                    .num("tau", tau)
                    .num("value", r.value)
                    .num("error_estimate", r.error_estimate)
                    .integer("evaluations", (long long)r.evaluations);
                emit(out_path, j.done());
            } else {
                emit(out_path, format_double(r.value) + "  (error estimate " +
                                   format_double(r.error_estimate) + ")");
            }
            return 0;
        }

        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis not met: " << e.what() << "\n";
        return 2;
    } catch (const QuadDepthError& e) {
        std::cerr << "quadrature did not converge: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
