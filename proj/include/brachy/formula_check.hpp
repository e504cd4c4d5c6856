#pragma once

#include <string>
#include <vector>

#include "brachy/builtins.hpp"
#include "brachy/finstruct.hpp"

namespace brachy {

struct FormulaCheckReport {
    std::string formula_name;
    bool cond_ii = false; // the structure satisfies the formula at the tuple
    bool cond_i = false;  // implication holds on every battery structure
    // First implication failure found, if any: battery name + assignment.
    std::string battery_failure;
    std::string note; // records the battery-only limitation, or inapplicability
};

// Checks a candidate summability formula at `tuple` in R: condition (ii)
// exactly on R, condition (i) exhaustively over the battery structures.
// The battery check is necessary only (the real condition quantifies over
// all rings); the report says so.
FormulaCheckReport check_summability_formula(
    const NamedFormula& phi, const FiniteStruct& R,
    const std::vector<int>& tuple,
    const std::vector<std::pair<std::string, FiniteStruct>>& battery);

struct ZxzyReport {
    bool conditions_hold = false;
    bool is_homomorphism = false;
    bool equivalent = false; // conditions_hold == is_homomorphism
};

// The successor + f(z+xzy) characterization of ring homomorphisms, checked
// exhaustively in both directions for a total map between rings.
ZxzyReport check_zxzy_characterization(const FiniteStruct& R,
                                       const FiniteStruct& S,
                                       const std::vector<int>& map);

} // namespace brachy
