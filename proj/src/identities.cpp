#include "brachy/identities.hpp"

#include <fstream>
#include <sstream>

#include "brachy/errors.hpp"
#include "brachy/weyl.hpp"

namespace brachy {

IdentityReport verify_identity(const IdentityCase& c) {
    std::map<std::string, NCPoly> bind;
    for (const auto& [var, text] : c.substitutions)
        bind[var] = parse_ncpoly(text);
    NCPoly lhs = parse_ncpoly(c.lhs).substitute(bind);
    NCPoly rhs = parse_ncpoly(c.rhs).substitute(bind);
    IdentityReport r;
    r.name = c.name;
    r.citation = c.citation;
    r.difference = lhs - rhs;
    r.holds = r.difference.is_zero();
    return r;
}

const std::vector<IdentityCase>& builtin_identities() {
    static const std::vector<IdentityCase> cases = [] {
        std::vector<IdentityCase> v;
        v.push_back({"p1-q1-commutator",
                     "free-ring relation between (1+xz)(1+yz) and 1+(1+xy)z^2",
                     "(1+x*z)*(1+y*z)",
                     "1+(1+x*y)*z^2 + (x+y-z)*z + x*(z*y-y*z)*z",
                     {}});
        v.push_back({"p2-q2-commutator",
                     "free-ring relation between (1+zx)(1+yz) and 1+z(1+xy)z",
                     "(1+z*x)*(1+y*z) + (x*z-z*x)",
                     "1+z*(1+x*y)*z + (x+y-z)*z",
                     {}});
        v.push_back({"continuant",
                     "continuant-polynomial identity 1+(x+y+xzy)z=(1+xz)(1+yz)",
                     "1+(x+y+x*z*y)*z",
                     "(1+x*z)*(1+y*z)",
                     {}});
        v.push_back({"continuant-diagonal",
                     "the continuant identity specialized along z = x+y",
                     "1+(z+x*z*y)*z",
                     "(1+x*z)*(1+y*z)",
                     {{"z", "x+y"}}});
        v.push_back({"orthogonal-pair-core",
                     "successor-product core of the zero-product pair formula",
                     "(1+x)*(1+y) - 1 - x - y - x*y",
                     "0",
                     {}});
        for (int n : {2, 3, 5}) {
            std::ostringstream name, lhs, rhs;
            name << "integer-multiple-" << n;
            lhs << n << "*x";
            for (int i = 0; i < n; ++i) rhs << (i ? " + x" : "x");
            v.push_back({name.str(),
                         "integer multiples of the unit act by repeated sums",
                         lhs.str(), rhs.str(), {}});
        }
        // Binomial expansions used by the integral-transfer argument.
        const char* expansions[] = {
            "1 + 2*x + x^2",
            "1 + 3*x + 3*x^2 + x^3",
            "1 + 4*x + 6*x^2 + 4*x^3 + x^4",
        };
        for (int n = 2; n <= 4; ++n) {
            std::ostringstream name, lhs;
            name << "binomial-" << n;
            lhs << "(1+x)^" << n;
            v.push_back({name.str(),
                         "binomial expansion keeping 1+x integral of the same degree",
                         lhs.str(), expansions[n - 2], {}});
        }
        return v;
    }();
    return cases;
}

std::vector<IdentityReport> run_builtin_suite() {
    std::vector<IdentityReport> reports;
    for (const auto& c : builtin_identities()) reports.push_back(verify_identity(c));
    return reports;
}

WeylReport weyl_check(int m) {
    if (m < 2) throw UsageError("weyl_check: m must be >= 2");
    WeylReport r;
    r.m = m;
    NCPoly x = NCPoly::variable("x");
    NCPoly y = NCPoly::variable("y");
    NCPoly lhs = x.pow(m) * y - y * x.pow(m);
    r.normal_form = weyl_normal_form(lhs, 0);
    NCPoly expected = NCPoly::constant(m) * x.pow(m - 1);
    r.char0_ok = r.normal_form == expected;
    r.modm_ok = weyl_normal_form(lhs, m).is_zero();
    return r;
}

std::vector<IdentityCase> load_identity_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open identity file: " + path);
    std::vector<IdentityCase> cases;
    IdentityCase cur;
    bool open = false;
    std::string line;
    int lineno = 0;
    auto need_open = [&](const std::string& kw) {
        if (!open)
            throw UsageError("identity file line " + std::to_string(lineno) +
                             ": '" + kw + "' outside a case");
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        std::string rest;
        std::getline(ls, rest);
        size_t start = rest.find_first_not_of(" \t");
        rest = start == std::string::npos ? "" : rest.substr(start);
        if (kw == "case") {
            if (open) throw UsageError("identity file: unterminated case");
            cur = IdentityCase{};
            cur.name = rest;
            open = true;
        } else if (kw == "cite") {
            need_open(kw);
            cur.citation = rest;
        } else if (kw == "lhs") {
            need_open(kw);
            cur.lhs = rest;
        } else if (kw == "rhs") {
            need_open(kw);
            cur.rhs = rest;
        } else if (kw == "let") {
            need_open(kw);
            size_t eq = rest.find('=');
            if (eq == std::string::npos)
                throw UsageError("identity file: 'let' needs VAR = POLY");
            std::string var = rest.substr(0, eq);
            var.erase(var.find_last_not_of(" \t") + 1);
            cur.substitutions.emplace_back(var, rest.substr(eq + 1));
        } else if (kw == "end") {
            need_open(kw);
            if (cur.name.empty() || cur.lhs.empty() || cur.rhs.empty())
                throw UsageError("identity file: case needs name, lhs, rhs");
            cases.push_back(cur);
            open = false;
        } else {
            throw UsageError("identity file line " + std::to_string(lineno) +
                             ": unknown keyword '" + kw + "'");
        }
    }
    if (open) throw UsageError("identity file: unterminated case");
    return cases;
}

} // namespace brachy
