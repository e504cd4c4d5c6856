#include "brachy/morphism.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "brachy/errors.hpp"
#include "brachy/parallel.hpp"

namespace brachy {

bool check_brachymorphism(const FiniteStruct& R, const FiniteStruct& S,
                          const std::vector<int>& map) {
    if (map.size() != size_t(R.order())) return false;
    if (map[R.zero()] != S.zero()) return false;
    for (int x = 0; x < R.order(); ++x)
        if (map[R.succ(x)] != S.succ(map[x])) return false;
    for (int x = 0; x < R.order(); ++x)
        for (int y = 0; y < R.order(); ++y)
            if (map[R.mul(x, y)] != S.mul(map[x], map[y])) return false;
    return true;
}

std::vector<std::pair<int, int>> additivity_violations(const Morphism& f) {
    if (!f.is_brachymorphism)
        throw UsageError("additivity_violations: not a brachymorphism");
    const FiniteStruct& R = *f.src;
    const FiniteStruct& S = *f.dst;
    std::vector<std::pair<int, int>> v;
    for (int a = 0; a < R.order(); ++a)
        for (int b = 0; b < R.order(); ++b)
            if (f.map[R.add(a, b)] != S.add(f.map[a], f.map[b]))
                v.emplace_back(a, b);
    return v;
}

namespace {

struct Searcher {
    const FiniteStruct& R;
    const FiniteStruct& S;
    long long budget;
    std::vector<int> order; // static assignment order

    std::vector<int> map;       // -1 = unassigned
    std::vector<int> trail;     // assigned elements, for undo
    long long nodes = 0;
    bool exhausted = false;
    std::vector<std::vector<int>> found;

    Searcher(const FiniteStruct& r, const FiniteStruct& s, long long b)
        : R(r), S(s), budget(b), map(r.order(), -1) {
        // Successor orbit of zero first, then descending mul-table occurrence.
        std::vector<bool> seen(R.order(), false);
        for (int x = R.zero(); !seen[x]; x = R.succ(x)) {
            seen[x] = true;
            order.push_back(x);
        }
        std::vector<int> count(R.order(), 0);
        for (int i = 0; i < R.order(); ++i)
            for (int j = 0; j < R.order(); ++j) ++count[R.mul(i, j)];
        std::vector<int> rest;
        for (int x = 0; x < R.order(); ++x)
            if (!seen[x]) rest.push_back(x);
        std::stable_sort(rest.begin(), rest.end(),
                         [&](int a, int b) { return count[a] > count[b]; });
        order.insert(order.end(), rest.begin(), rest.end());
    }

    // Assign f(a) = v and propagate; false on conflict. Appends to trail.
    bool assign(int a, int v) {
        size_t qhead = trail.size();
        if (!set_value(a, v)) return false;
        while (qhead < trail.size()) {
            int x = trail[qhead++];
            int fx = map[x];
            if (!set_value(R.succ(x), S.succ(fx))) return false;
            for (int y = 0; y < R.order(); ++y) {
                int fy = map[y];
                if (fy < 0) continue;
                if (!set_value(R.mul(x, y), S.mul(fx, fy))) return false;
                if (!set_value(R.mul(y, x), S.mul(fy, fx))) return false;
            }
        }
        return true;
    }

    bool set_value(int a, int v) {
        if (map[a] >= 0) return map[a] == v;
        map[a] = v;
        trail.push_back(a);
        return true;
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            map[trail.back()] = -1;
            trail.pop_back();
        }
    }

    void search() {
        int next = -1;
        for (int x : order)
            if (map[x] < 0) { next = x; break; }
        if (next < 0) {
            found.push_back(map);
            return;
        }
        for (int v = 0; v < S.order(); ++v) {
            if (++nodes > budget) {
                exhausted = true;
                return;
            }
            size_t mark = trail.size();
            if (assign(next, v)) search();
            undo_to(mark);
            if (exhausted) return;
        }
    }
};

} // namespace

EnumResult enumerate_brachymorphisms(const FiniteStruct& R,
                                     const FiniteStruct& S, EnumConfig cfg) {
    if (!R.cls().zero_identity_ok || !S.cls().zero_identity_ok ||
        !R.cls().one_identity_ok || !S.cls().one_identity_ok)
        throw UsageError("enumerate_brachymorphisms: structures lack identities");

    EnumResult result;
    Searcher root(R, S, cfg.node_budget);
    if (!root.assign(R.zero(), S.zero()) ||
        !root.assign(R.one(), S.one())) {
        return result; // forced values already conflict: no morphisms
    }

    int branch_var = -1;
    for (int x : root.order)
        if (root.map[x] < 0) { branch_var = x; break; }

    if (branch_var < 0) {
        root.search(); // everything forced
        result.nodes = root.nodes;
        result.budget_exhausted = root.exhausted;
        for (auto& m : root.found) result.morphisms.push_back(
            Morphism{&R, &S, std::move(m), false, false, {}});
    } else {
        const int nb = S.order();
        std::vector<Searcher> branches(nb, root);
        std::vector<bool> ok(nb, false);
        const int jobs = cfg.jobs > 0 ? cfg.jobs : effective_jobs();
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
        for (int v = 0; v < nb; ++v) {
            Searcher& b = branches[v];
            size_t mark = b.trail.size();
            ++b.nodes;
            if (b.assign(branch_var, v)) {
                b.search();
                ok[v] = true;
            }
            b.undo_to(mark);
        }
        for (int v = 0; v < nb; ++v) {
            result.nodes += branches[v].nodes;
            result.budget_exhausted |= branches[v].exhausted;
            for (auto& m : branches[v].found)
                result.morphisms.push_back(
                    Morphism{&R, &S, std::move(m), false, false, {}});
        }
    }

    std::sort(result.morphisms.begin(), result.morphisms.end(),
              [](const Morphism& a, const Morphism& b) { return a.map < b.map; });

    // Post-hoc audit, independent of the propagation logic above.
    for (auto& m : result.morphisms) {
        m.is_brachymorphism = check_brachymorphism(R, S, m.map);
        if (!m.is_brachymorphism)
            throw std::logic_error("enumerator produced a non-brachymorphism");
        m.violations = additivity_violations(m);
        m.is_additive = m.violations.empty();
    }
    return result;
}

std::vector<std::vector<int>> enumerate_brachymorphisms_naive(
    const FiniteStruct& R, const FiniteStruct& S) {
    const int n = R.order(), m = S.order();
    std::vector<std::vector<int>> out;
    std::vector<int> map(n, 0);
    for (;;) {
        if (check_brachymorphism(R, S, map)) out.push_back(map);
        int i = 0;
        while (i < n && ++map[i] == m) map[i++] = 0;
        if (i == n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace brachy
