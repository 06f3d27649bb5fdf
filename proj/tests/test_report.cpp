#include <cstdlib>
#include <numbers>
#include <string>

#include "doctest.h"
#include "fracsimp/report.hpp"

using namespace fracsimp;

namespace {

BoundReport sample_report() {
    BoundReport r;
    r.theorem = "3.3";
    r.tau = 1.0;
    r.m = 0;
    r.gamma = 1.0;
    r.delta = 2.0;
    r.lhs = 0.0;
    r.rhs = 5.0 / 12.0;
    r.slack = r.rhs - r.lhs;
    r.pass = true;
    r.quad_error = 1e-12;
    return r;
}

int count_char(const std::string& s, char c) {
    int n = 0;
    for (char x : s)
        if (x == c) ++n;
    return n;
}

}  // namespace

TEST_CASE("format_double survives a parse round-trip") {
    for (double v : {1.0, 0.5, 5.0 / 36.0, std::numbers::pi, 1e-300, 0.1, -7.25,
                     61.0 / 648.0}) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("JSON rendering has fixed field order and null optionals") {
    const BoundReport r = sample_report();
    const std::string j = to_json(r);
    CHECK(j.substr(0, 17) == "{\"theorem\":\"3.3\",");
    CHECK(j.find("\"tau\":1,") != std::string::npos);
    CHECK(j.find("\"m\":0,") != std::string::npos);
    CHECK(j.find("\"p\":null") != std::string::npos);
    CHECK(j.find("\"q\":null") != std::string::npos);
    CHECK(j.find("\"k_lo\":null") != std::string::npos);
    CHECK(j.find("\"k_hi\":null") != std::string::npos);
    CHECK(j.find("\"lipschitz\":null") != std::string::npos);
    CHECK(j.find("\"pass\":true") != std::string::npos);
    CHECK(j.find("\"paper_form\"") == std::string::npos);
    // Field order is fixed: p precedes q precedes lhs.
    CHECK(j.find("\"p\":") < j.find("\"q\":"));
    CHECK(j.find("\"q\":") < j.find("\"lhs\":"));

    BoundReport with_q = r;
    with_q.q = 2.0;
    with_q.p = 2.0;
    with_q.paper_form = 0.25;
    const std::string j2 = to_json(with_q);
    CHECK(j2.find("\"q\":2") != std::string::npos);
    CHECK(j2.find("\"paper_form\":0.25") != std::string::npos);
}

TEST_CASE("JSON array rendering") {
    CHECK(to_json(std::vector<BoundReport>{}) == "[]");
    const std::vector<BoundReport> rs{sample_report(), sample_report()};
    const std::string j = to_json(rs);
    CHECK(j.substr(0, 2) == "[\n");
    CHECK(j.substr(j.size() - 2) == "\n]");
    CHECK(j.find(",\n") != std::string::npos);
    CHECK(count_char(j, '{') == 2);
}

TEST_CASE("CSV rendering matches the JSON field set") {
    CHECK(csv_header() ==
          "theorem,tau,m,gamma,delta,p,q,k_lo,k_hi,lipschitz,lhs,rhs,slack,pass,"
          "quad_error");
    const BoundReport r = sample_report();
    const std::string row = to_csv_row(r);
    // 15 columns means 14 commas; empty optionals leave empty cells.
    CHECK(count_char(row, ',') == 14);
    CHECK(row.substr(0, 4) == "3.3,");
    CHECK(row.find(",,") != std::string::npos);
    CHECK(row.find("true") != std::string::npos);

    BoundReport failing = r;
    failing.pass = false;
    CHECK(to_csv_row(failing).find("false") != std::string::npos);

    const std::string full = to_csv({r, failing});
    CHECK(full.substr(0, 7) == "theorem");
    CHECK(count_char(full, '\n') == 3);  // header + two rows
}

TEST_CASE("pretty rendering flags failures loudly") {
    const BoundReport r = sample_report();
    CHECK(to_pretty(r).substr(0, 4) == "pass");
    BoundReport bad = r;
    bad.pass = false;
    CHECK(to_pretty(bad).substr(0, 4) == "FAIL");
    CHECK(to_pretty(std::vector<BoundReport>{r, bad}).find("FAIL") != std::string::npos);
}
