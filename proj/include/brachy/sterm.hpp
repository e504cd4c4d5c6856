#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "brachy/ncpoly.hpp"

namespace brachy {

class FiniteStruct;

/// Term over the vocabulary (successor, product, zero). The successor of
/// zero is the term 1; decimal literals abbreviate iterated successors.
struct STerm {
    enum class Kind { Zero, Var, Succ, Prod };

    Kind kind = Kind::Zero;
    std::string var;          // Kind::Var
    std::vector<STerm> kids;  // Succ: 1, Prod: 2

    bool operator==(const STerm& o) const;
    bool operator<(const STerm& o) const;

    size_t size() const;
    STerm substitute(const std::map<std::string, STerm>& bindings) const;
};

STerm s_zero();
STerm s_var(const std::string& name);
STerm s_succ(STerm t);
STerm s_prod(STerm a, STerm b);
STerm s_int(unsigned n); // n-fold successor of zero

/// Positive formula over term equations: no negation, existentials only.
struct SFormula {
    enum class Kind { Atom, And, Or, Exists };

    Kind kind = Kind::Atom;
    STerm lhs, rhs;                // Atom
    std::vector<SFormula> parts;   // And / Or
    std::vector<std::string> bound;// Exists
    // Exists body lives in parts[0].
};

SFormula f_atom(STerm lhs, STerm rhs);
SFormula f_and(std::vector<SFormula> parts);
SFormula f_or(std::vector<SFormula> parts);
SFormula f_exists(std::vector<std::string> vars, SFormula body);

// The polynomial translation: zero -> 0, successor -> 1 + _, product -> product.
NCPoly expand_tilde(const STerm& t);

// Grammar (see docs/formats.md):
//   term    := '0' | number | ident | term "'" | term term | '(' term ')'
//   formula := atom | formula '&' formula | formula '|' formula
//            | 'exists' ident+ '.' formula
//   atom    := term '=' term
STerm parse_sterm(std::string_view text);
SFormula parse_sformula(std::string_view text);

std::string to_string(const STerm& t);
std::string to_string(const SFormula& f);

// Interpretation in a finite structure: successor is 1 + x (in that order),
// product the mul table. Unbound variables throw UsageError.
int eval_sterm(const STerm& t, const FiniteStruct& S,
               const std::map<std::string, int>& env);

// Exists is decided by exhaustive search over the carrier.
bool eval_sformula(const SFormula& f, const FiniteStruct& S,
                   const std::map<std::string, int>& env);

} // namespace brachy
