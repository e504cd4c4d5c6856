#include "brachy/formula_check.hpp"

#include <sstream>

#include "brachy/errors.hpp"

namespace brachy {

FormulaCheckReport check_summability_formula(
    const NamedFormula& phi, const FiniteStruct& R,
    const std::vector<int>& tuple,
    const std::vector<std::pair<std::string, FiniteStruct>>& battery) {
    const size_t arity = phi.vars.size();
    if (arity < 2) throw UsageError("formula needs at least two variables");
    const size_t n = arity - 1;
    if (tuple.size() != n)
        throw UsageError("tuple size does not match formula arity");

    FormulaCheckReport rep;
    rep.formula_name = phi.name;
    rep.note = "condition (i) checked over the supplied battery only; "
               "the full condition quantifies over all rings";

    std::map<std::string, int> env;
    int sum = R.zero();
    for (size_t i = 0; i < n; ++i) {
        env[phi.vars[i]] = tuple[i];
        sum = R.add(sum, tuple[i]);
    }
    env[phi.vars[n]] = sum;
    rep.cond_ii = eval_sformula(phi.formula, R, env);
    if (!rep.cond_ii) rep.note += "; formula inapplicable to this tuple";

    rep.cond_i = true;
    for (const auto& [bname, B] : battery) {
        const int m = B.order();
        std::vector<int> vals(arity, 0);
        for (;;) {
            std::map<std::string, int> benv;
            int bsum = B.zero();
            for (size_t i = 0; i < arity; ++i) benv[phi.vars[i]] = vals[i];
            for (size_t i = 0; i < n; ++i) bsum = B.add(bsum, vals[i]);
            if (eval_sformula(phi.formula, B, benv) && vals[n] != bsum) {
                rep.cond_i = false;
                std::ostringstream os;
                os << bname << " at (";
                for (size_t i = 0; i < arity; ++i)
                    os << (i ? "," : "") << vals[i];
                os << ")";
                rep.battery_failure = os.str();
                break;
            }
            size_t i = 0;
            while (i < arity && ++vals[i] == m) vals[i++] = 0;
            if (i == arity) break;
        }
        if (!rep.cond_i) break;
    }
    return rep;
}

ZxzyReport check_zxzy_characterization(const FiniteStruct& R,
                                       const FiniteStruct& S,
                                       const std::vector<int>& map) {
    if (!R.cls().is_ring || !S.cls().is_ring)
        throw UsageError("check_zxzy_characterization: stated for rings only");
    if (map.size() != size_t(R.order()))
        throw UsageError("map size does not match source order");

    ZxzyReport rep;
    bool cond = true;
    for (int x = 0; x < R.order() && cond; ++x)
        if (map[R.succ(x)] != S.succ(map[x])) cond = false;
    for (int x = 0; x < R.order() && cond; ++x)
        for (int y = 0; y < R.order() && cond; ++y) {
            for (int z : {R.zero(), R.one(), R.add(x, y)}) {
                int lhs = map[R.add(z, R.mul(R.mul(x, z), y))];
                int rhs = S.add(map[z],
                                S.mul(S.mul(map[x], map[z]), map[y]));
                if (lhs != rhs) { cond = false; break; }
            }
        }
    rep.conditions_hold = cond;

    bool hom = map[R.one()] == S.one() && map[R.zero()] == S.zero();
    for (int x = 0; x < R.order() && hom; ++x)
        for (int y = 0; y < R.order() && hom; ++y) {
            if (map[R.add(x, y)] != S.add(map[x], map[y])) hom = false;
            if (map[R.mul(x, y)] != S.mul(map[x], map[y])) hom = false;
        }
    rep.is_homomorphism = hom;
    rep.equivalent = rep.conditions_hold == rep.is_homomorphism;
    return rep;
}

} // namespace brachy
