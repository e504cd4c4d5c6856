#include "brachy/builtins.hpp"

#include <map>
#include <stdexcept>

namespace brachy {

namespace {

std::map<std::string, STerm> make_terms() {
    std::map<std::string, STerm> t;
    t["p1"] = parse_sterm("(x z)'(y z)'");
    t["q1"] = parse_sterm("((x y)' z z)'");
    t["p2"] = parse_sterm("(z x)'(y z)'");
    t["q2"] = parse_sterm("(z (x y)' z)'");
    return t;
}

std::map<std::string, NamedFormula> make_formulas() {
    std::map<std::string, NamedFormula> f;

    f["S_perp"] = NamedFormula{
        "S_perp", parse_sformula("x y = 0 & z' = x' y'"), {"x", "y", "z"}};

    // Weak-commutation formula: x z y = x y z, p1 = q1, and the same with
    // y, z replaced by their successors.
    const STerm& p1 = builtin_term("p1");
    const STerm& q1 = builtin_term("q1");
    std::map<std::string, STerm> shift{{"y", s_succ(s_var("y"))},
                                       {"z", s_succ(s_var("z"))}};
    SFormula comm = f_and({
        f_atom(parse_sterm("x z y"), parse_sterm("x y z")),
        f_atom(p1, q1),
        f_atom(p1.substitute(shift), q1.substitute(shift)),
    });
    f["S_comm"] = NamedFormula{"S_comm", std::move(comm), {"x", "y", "z"}};

    f["S_div"] = NamedFormula{
        "S_div",
        parse_sformula("(x = 0 & z = y) | exists u . (u x = 1 & z u = (y u)')"),
        {"x", "y", "z"}};

    return f;
}

const std::map<std::string, STerm>& terms() {
    static const std::map<std::string, STerm> t = make_terms();
    return t;
}

const std::map<std::string, NamedFormula>& formulas() {
    static const std::map<std::string, NamedFormula> f = make_formulas();
    return f;
}

} // namespace

const STerm& builtin_term(const std::string& name) {
    auto it = terms().find(name);
    if (it == terms().end())
        throw std::out_of_range("unknown builtin term: " + name);
    return it->second;
}

const NamedFormula& builtin_formula(const std::string& name) {
    auto it = formulas().find(name);
    if (it == formulas().end())
        throw std::out_of_range("unknown builtin formula: " + name);
    return it->second;
}

std::vector<std::string> builtin_term_names() {
    std::vector<std::string> v;
    for (const auto& [k, t] : terms()) v.push_back(k);
    return v;
}

std::vector<std::string> builtin_formula_names() {
    std::vector<std::string> v;
    for (const auto& [k, t] : formulas()) v.push_back(k);
    return v;
}

} // namespace brachy
