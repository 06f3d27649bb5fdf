#include "fracsimp/report.hpp"

#include <cstdio>
#include <sstream>

namespace fracsimp {

namespace {

// The serialized field set, in order. CSV and JSON must stay byte-stable
// across runs and thread counts, so everything funnels through the same
// %.17g rendering and the same field sequence.
constexpr const char* kFields =
    "theorem,tau,m,gamma,delta,p,q,k_lo,k_hi,lipschitz,lhs,rhs,slack,pass,quad_error";

std::string opt_json(const std::optional<double>& v) {
    return v ? format_double(*v) : "null";
}

std::string opt_csv(const std::optional<double>& v) {
    return v ? format_double(*v) : "";
}

std::string short_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

std::string format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_json(const BoundReport& r) {
    std::ostringstream os;
    os << "{\"theorem\":\"" << r.theorem << "\""
       << ",\"tau\":" << format_double(r.tau)
       << ",\"m\":" << r.m
       << ",\"gamma\":" << format_double(r.gamma)
       << ",\"delta\":" << format_double(r.delta)
       << ",\"p\":" << opt_json(r.p)
       << ",\"q\":" << opt_json(r.q)
       << ",\"k_lo\":" << opt_json(r.k_lo)
       << ",\"k_hi\":" << opt_json(r.k_hi)
       << ",\"lipschitz\":" << opt_json(r.lipschitz)
       << ",\"lhs\":" << format_double(r.lhs)
       << ",\"rhs\":" << format_double(r.rhs)
       << ",\"slack\":" << format_double(r.slack)
       << ",\"pass\":" << (r.pass ? "true" : "false")
       << ",\"quad_error\":" << format_double(r.quad_error);
    if (r.paper_form) os << ",\"paper_form\":" << format_double(*r.paper_form);
    os << "}";
    return os.str();
}

std::string to_json(const std::vector<BoundReport>& rs) {
    if (rs.empty()) return "[]";
    std::string out = "[\n";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        out += to_json(rs[i]);
        out += (i + 1 < rs.size()) ? ",\n" : "\n";
    }
    out += "]";
    return out;
}

std::string csv_header() { return kFields; }

std::string to_csv_row(const BoundReport& r) {
    std::ostringstream os;
    os << r.theorem << ','
       << format_double(r.tau) << ','
       << r.m << ','
       << format_double(r.gamma) << ','
       << format_double(r.delta) << ','
       << opt_csv(r.p) << ','
       << opt_csv(r.q) << ','
       << opt_csv(r.k_lo) << ','
       << opt_csv(r.k_hi) << ','
       << opt_csv(r.lipschitz) << ','
       << format_double(r.lhs) << ','
       << format_double(r.rhs) << ','
       << format_double(r.slack) << ','
       << (r.pass ? "true" : "false") << ','
       << format_double(r.quad_error);
    return os.str();
}

std::string to_csv(const std::vector<BoundReport>& rs) {
    std::string out = csv_header();
    out += '\n';
    for (const BoundReport& r : rs) {
        out += to_csv_row(r);
        out += '\n';
    }
    return out;
}

std::string to_pretty(const BoundReport& r) {
    std::ostringstream os;
    os << (r.pass ? "pass " : "FAIL ") << r.theorem
       << "  tau=" << short_double(r.tau) << " m=" << r.m
       << " [" << short_double(r.gamma) << ", " << short_double(r.delta) << "]";
    if (r.q) os << "  q=" << short_double(*r.q);
    if (r.p) os << " p=" << short_double(*r.p);
    if (r.k_lo) os << "  k=[" << short_double(*r.k_lo) << ", " << short_double(*r.k_hi) << "]";
    if (r.lipschitz) os << "  lipschitz=" << short_double(*r.lipschitz);
    os << "  lhs=" << short_double(r.lhs) << " rhs=" << short_double(r.rhs)
       << " slack=" << short_double(r.slack)
       << "  quad_err=" << short_double(r.quad_error);
    if (r.paper_form) os << "  paper_form=" << short_double(*r.paper_form);
    return os.str();
}

std::string to_pretty(const std::vector<BoundReport>& rs) {
    std::string out;
    for (const BoundReport& r : rs) {
        out += to_pretty(r);
        out += '\n';
    }
    return out;
}

}  // namespace fracsimp
