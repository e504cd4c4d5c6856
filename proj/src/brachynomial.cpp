#include "brachy/brachynomial.hpp"

#include <deque>
#include <map>

#include "brachy/errors.hpp"

namespace brachy {

namespace {

Int eval_at_ones(const NCPoly& p) {
    Int s = 0;
    for (const auto& [w, c] : p.terms()) s += c;
    return s;
}

// The dominated candidate set. In a witness tree pruned of zero subterms,
// every subterm expansion q satisfies, walking up to the root p:
//   - nonnegative coefficients (the generating rules preserve them),
//   - deg(q) <= deg(p) and maxcoeff(q) <= max(1, maxcoeff(p)),
//   - every monomial of q is a contiguous factor of a monomial of p
//     (successor keeps monomials, a product makes them prefixes/suffixes),
//   - q evaluated at all variables = 1 is at most p evaluated there
//     (successor adds one, a nonzero cofactor multiplies by >= 1).
struct Dominator {
    int degree;
    Int coeff_cap;
    Int ones_cap;
    std::set<Word, LenLexLess> factors;

    explicit Dominator(const NCPoly& p)
        : degree(p.degree()),
          coeff_cap(std::max(Int(1), p.max_abs_coeff())),
          ones_cap(eval_at_ones(p)) {
        for (const auto& [w, c] : p.terms())
            for (size_t i = 0; i <= w.size(); ++i)
                for (size_t j = i; j <= w.size(); ++j)
                    factors.emplace(w.begin() + i, w.begin() + j);
        factors.emplace(); // the empty word is always allowed
    }

    bool admits(const NCPoly& q) const {
        if (q.degree() > degree) return false;
        Int ones = 0;
        for (const auto& [w, c] : q.terms()) {
            if (c < 0 || c > coeff_cap) return false;
            ones += c;
            if (ones > ones_cap) return false;
            if (!factors.count(w)) return false;
        }
        return true;
    }
};

} // namespace

std::optional<BrachyWitness> decide_brachynomial(const NCPoly& p,
                                                 DecideConfig cfg) {
    if (!p.all_nonnegative()) return std::nullopt;

    Dominator dom(p);

    std::map<NCPoly, STerm> seen;
    std::deque<NCPoly> work;
    auto push = [&](const NCPoly& q, STerm witness) {
        if (!dom.admits(q) || seen.count(q)) return;
        if (seen.size() >= cfg.max_closure)
            throw ResourceError("brachynomial closure exceeded cap of " +
                                    std::to_string(cfg.max_closure),
                                static_cast<long long>(cfg.max_closure));
        seen.emplace(q, std::move(witness));
        work.push_back(q);
    };

    push(NCPoly(), s_zero());
    for (const auto& v : p.variables()) push(NCPoly::variable(v), s_var(v));

    const NCPoly unit = NCPoly::constant(1);
    while (!work.empty()) {
        NCPoly q = work.front();
        work.pop_front();
        const STerm qw = seen.at(q);
        const Int q_ones = eval_at_ones(q);

        push(unit + q, s_succ(qw));
        // Pair q with everything discovered so far; later members pair with
        // q when they are processed, so all pairs get covered.
        std::vector<std::pair<NCPoly, STerm>> snapshot(seen.begin(), seen.end());
        for (const auto& [r, rw] : snapshot) {
            if (q.degree() + r.degree() > dom.degree) continue;
            if (q_ones * eval_at_ones(r) > dom.ones_cap) continue;
            push(q * r, s_prod(qw, rw));
            push(r * q, s_prod(rw, qw));
        }
    }

    auto it = seen.find(p);
    if (it == seen.end()) return std::nullopt;
    return BrachyWitness{it->second, p};
}

} // namespace brachy
