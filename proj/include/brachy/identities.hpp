#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brachy/ncpoly.hpp"

namespace brachy {

/// Identity cases are data: two polynomial texts, optional substitutions
/// applied to both sides first, and a citation tag for the report.
struct IdentityCase {
    std::string name;
    std::string citation;
    std::string lhs;
    std::string rhs;
    std::vector<std::pair<std::string, std::string>> substitutions;
};

struct IdentityReport {
    std::string name;
    std::string citation;
    bool holds = false;
    NCPoly difference; // lhs - rhs after substitution and expansion
};

IdentityReport verify_identity(const IdentityCase& c);

const std::vector<IdentityCase>& builtin_identities();
std::vector<IdentityReport> run_builtin_suite();

struct WeylReport {
    int m = 0;
    bool char0_ok = false;  // x^m y - y x^m normalizes to m x^(m-1)
    bool modm_ok = false;   // and to 0 mod m
    NCPoly normal_form;
};

WeylReport weyl_check(int m); // m >= 2

// Case file: `case NAME / cite TEXT / lhs POLY / rhs POLY / let VAR = POLY
// ... / end`, one directive per line. See docs/formats.md.
std::vector<IdentityCase> load_identity_file(const std::string& path);

} // namespace brachy
