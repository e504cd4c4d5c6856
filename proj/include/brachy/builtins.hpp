#pragma once

#include <string>
#include <vector>

#include "brachy/sterm.hpp"

namespace brachy {

/// Formula together with its designated argument order: the last variable
/// stands for the sum of the preceding ones in summability checks.
struct NamedFormula {
    std::string name;
    SFormula formula;
    std::vector<std::string> vars;
};

// Catalogue keys: p1, q1, p2, q2 (terms); S_perp, S_comm, S_div (formulas).
// Unknown names throw std::out_of_range.
const STerm& builtin_term(const std::string& name);
const NamedFormula& builtin_formula(const std::string& name);
std::vector<std::string> builtin_term_names();
std::vector<std::string> builtin_formula_names();

} // namespace brachy
