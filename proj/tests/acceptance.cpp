// Acceptance suite: runs every criterion end to end and prints one
// pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include <omp.h>

#include "brachy/brachynomial.hpp"
#include "brachy/builtins.hpp"
#include "brachy/certify.hpp"
#include "brachy/formula_check.hpp"
#include "brachy/identities.hpp"
#include "brachy/matrixlab.hpp"
#include "brachy/modelsearch.hpp"
#include "brachy/morphism.hpp"
#include "brachy/ringzoo.hpp"
#include "brachy/sterm.hpp"

using namespace brachy;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = "") {
    printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
           what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    fflush(stdout);
    if (!ok) ++failures;
}

STerm random_term(std::mt19937& rng, size_t size) {
    static const char* vars[] = {"x", "y", "z"};
    if (size <= 1) {
        std::uniform_int_distribution<int> leaf(0, 3);
        int k = leaf(rng);
        return k == 3 ? s_zero() : s_var(vars[k]);
    }
    std::uniform_int_distribution<int> kind(0, 1);
    if (kind(rng) == 0) return s_succ(random_term(rng, size - 1));
    std::uniform_int_distribution<size_t> split(1, size - 2 > 0 ? size - 2 : 1);
    size_t l = split(rng);
    return s_prod(random_term(rng, l), random_term(rng, size - 1 - l));
}

void criterion_1_identities() {
    bool ok = true;
    std::string detail;
    auto reports = run_builtin_suite();
    for (const auto& r : reports)
        if (!r.holds) {
            ok = false;
            detail = r.name + " failed";
        }
    int mutations = 0;
    for (const auto& c : builtin_identities()) {
        NCPoly lhs = parse_ncpoly(c.lhs);
        for (const auto& [w, coeff] : lhs.terms()) {
            IdentityCase mutated = c;
            mutated.lhs = c.lhs + " + " + to_string(NCPoly::monomial(w, 1));
            if (verify_identity(mutated).holds) {
                ok = false;
                detail = "mutation of " + c.name + " still verifies";
            }
            ++mutations;
        }
    }
    std::ostringstream os;
    os << reports.size() << " cases, " << mutations << " mutations all fail";
    report(1, "identity battery verifies exactly", ok, ok ? os.str() : detail);
}

void criterion_2_brachynomial() {
    bool ok = true;
    std::string detail;
    auto w = decide_brachynomial(parse_ncpoly("x + x*y"));
    if (!w || to_string(w->term) != "x y'" ||
        expand_tilde(w->term) != parse_ncpoly("x + x*y")) {
        ok = false;
        detail = "x + x*y witness";
    }
    for (const char* t : {"x + y", "-1", "2*x - 1"})
        if (decide_brachynomial(parse_ncpoly(t))) {
            ok = false;
            detail = std::string(t) + " wrongly accepted";
        }
    std::mt19937 rng(101);
    for (int i = 0; i < 200 && ok; ++i) {
        STerm t = random_term(rng, 1 + i % 8);
        NCPoly p = expand_tilde(t);
        auto witness = decide_brachynomial(p);
        if (!witness || expand_tilde(witness->term) != p) {
            ok = false;
            detail = "round-trip failed for " + to_string(t);
        }
    }
    report(2, "brachynomial decision with domination bound", ok,
           ok ? "witness x y'; x+y, -1, 2x-1 rejected; 200 round-trips" : detail);
}

void criterion_3_table1() {
    FixtureReport r = verify_fixture("table1", FIXTURE_DIR);
    std::string detail;
    for (const auto& l : r.lines)
        if (l.rfind("FAIL", 0) == 0) detail = l;
    report(3, "fixture table1 (semiring, brachy-automorphism, violation)",
           r.pass, r.pass ? std::to_string(r.lines.size()) + " checks" : detail);
}

void criterion_4_table2() {
    FixtureReport r = verify_fixture("table2", FIXTURE_DIR);
    std::string detail;
    for (const auto& l : r.lines)
        if (l.rfind("FAIL", 0) == 0) detail = l;
    report(4, "fixture table2 (near-ring, (Z/2)^4 addition, violation)",
           r.pass, r.pass ? std::to_string(r.lines.size()) + " checks" : detail);
}

struct BatteryRun {
    std::vector<std::pair<std::string, FiniteStruct>> battery;
    // morphism maps per ordered pair (i,j)
    std::vector<std::vector<std::vector<int>>> maps;
    long long total_morphisms = 0;
    long long total_violations = 0;
};

BatteryRun run_battery_slice() {
    BatteryRun out;
    out.battery = default_battery();
    const int n = int(out.battery.size());
    out.maps.resize(size_t(n) * n);
    long long morphs = 0, viols = 0;
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(+ : morphs, viols)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            EnumResult r = enumerate_brachymorphisms(out.battery[i].second,
                                                     out.battery[j].second);
            std::vector<std::vector<int>> ms;
            for (auto& m : r.morphisms) {
                viols += (long long)m.violations.size();
                ms.push_back(m.map);
            }
            morphs += (long long)ms.size();
            out.maps[size_t(i) * n + j] = std::move(ms);
        }
    out.total_morphisms = morphs;
    out.total_violations = viols;
    return out;
}

void criterion_5_battery_slice(const BatteryRun& run) {
    bool ok = run.total_violations == 0 && run.total_morphisms > 0;
    std::ostringstream os;
    os << run.total_morphisms << " morphisms over "
       << run.battery.size() * run.battery.size()
       << " ordered pairs, 0 violations";
    report(5, "no additivity violation across the battery", ok,
           ok ? os.str() : std::to_string(run.total_violations) + " violations");
}

void criterion_6_certifier(const BatteryRun& run) {
    bool ok = true;
    std::string detail;
    std::ostringstream rules;
    for (const auto& [name, R] : run.battery) {
        AddCertification full = certify_addable(R);
        for (int i = 0; i < R.order(); ++i)
            if (!full.certified[i]) {
                ok = false;
                detail = name + " misses element " + std::to_string(i);
            }
        if (!replay_all(R, full)) {
            ok = false;
            detail = name + " certificates do not replay";
        }
        CertifyConfig pi_only;
        pi_only.enabled_rules = rule_bit(AddRule::PiRegular);
        AddCertification pi = certify_addable(R, pi_only);
        for (int i = 0; i < R.order(); ++i)
            if (!pi.certified[i]) {
                ok = false;
                detail = name + ": pi-regular rule alone insufficient";
            }
        for (const auto& [rule, count] : full.fired)
            if (count > 0) rules << name << ":" << rule << "=" << count << " ";
    }
    report(6, "certifier covers every battery ring (pi-regular suffices)", ok,
           ok ? "rules fired: " + rules.str().substr(0, 140) + "..." : detail);
}

void criterion_7_consistency(const BatteryRun& run) {
    // Independent code path: raw table arithmetic against the stored maps.
    bool ok = true;
    std::string detail;
    const int n = int(run.battery.size());
    for (int i = 0; i < n && ok; ++i) {
        const FiniteStruct& R = run.battery[i].second;
        AddCertification cert = certify_addable(R);
        PairCertification pairs = certify_summable_pairs(R);
        for (int j = 0; j < n && ok; ++j) {
            const FiniteStruct& S = run.battery[j].second;
            for (const auto& f : run.maps[size_t(i) * n + j]) {
                for (int a = 0; a < R.order(); ++a) {
                    if (!cert.certified[a]) continue;
                    for (int x = 0; x < R.order(); ++x)
                        if (f[R.add(a, x)] != S.add(f[a], f[x])) {
                            ok = false;
                            detail = "addable element implicated in a violation";
                        }
                }
                for (int x = 0; x < R.order(); ++x)
                    for (int y = 0; y < R.order(); ++y)
                        if (pairs.pair(x, y) &&
                            f[R.add(x, y)] != S.add(f[x], f[y])) {
                            ok = false;
                            detail = "summable pair implicated in a violation";
                        }
            }
        }
    }
    report(7, "certified sets never implicated in violations", ok,
           ok ? "checked against every enumerated morphism" : detail);
}

void criterion_8_rigidity() {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 12; ++n) {
        FiniteStruct z = zoo_zmod(n);
        EnumResult r = enumerate_brachymorphisms(z, z);
        bool identity_only = r.morphisms.size() == 1;
        if (identity_only)
            for (int i = 0; i < n; ++i)
                if (r.morphisms[0].map[i] != i) identity_only = false;
        if (!identity_only) {
            ok = false;
            detail = "Z/" + std::to_string(n) + " not rigid";
        }
    }
    if (!enumerate_brachymorphisms(zoo_zmod(2), zoo_zmod(3)).morphisms.empty()) {
        ok = false;
        detail = "Z/2 -> Z/3 should be empty";
    }
    report(8, "brachymorphism rigidity of Z/n and emptiness of Z/2 -> Z/3", ok,
           ok ? "n <= 12" : detail);
}

void criterion_9_matrix() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        auto reports = verify_matrix_suite(4); // cross-checks n <= 4 inside
        for (const auto& r : reports)
            if (!r.holds) {
                ok = false;
                detail = r.name;
            }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (ms > 5000) {
        ok = false;
        detail = "took " + std::to_string(ms) + " ms (budget 5 s)";
    }
    report(9, "matrix suite and char-poly cross-check", ok,
           ok ? std::to_string(ms) + " ms" : detail);
}

void criterion_10_weyl() {
    bool ok = true;
    std::string detail;
    for (int m : {2, 3, 5}) {
        WeylReport r = weyl_check(m);
        if (!r.char0_ok || !r.modm_ok) {
            ok = false;
            detail = "m = " + std::to_string(m);
        }
    }
    report(10, "weyl central powers: m x^(m-1) and 0 mod m", ok,
           ok ? "m in {2,3,5}" : detail);
}

void criterion_11_search() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    std::ostringstream os;
    for (int order : {2, 3}) {
        SearchTask task;
        task.cls = StructClass::CommutativeSemiring;
        task.order = order;
        SearchResult res = search_counterexample(task);
        if (!res.exhaustive) {
            ok = false;
            detail = "order " + std::to_string(order) + " not exhausted";
        }
        os << "order " << order << ": " << res.found.size()
           << " counterexamples (exhaustive); ";
    }
    SearchTask task;
    task.cls = StructClass::CommutativeSemiring;
    task.order = 4;
    task.time_budget_s = 300;
    SearchResult res = search_counterexample(task);
    auto pinned = canonical_form(fixture_table1());
    bool found_table1 = false;
    for (const auto& f : res.found) {
        if (canonical_form(f.structure) == pinned && !f.violations.empty())
            found_table1 = true;
        // independent re-validation
        if (!f.structure.cls().is_commutative_semiring ||
            !check_brachymorphism(f.structure, f.structure, f.witness)) {
            ok = false;
            detail = "a result fails re-validation";
        }
    }
    if (!found_table1) {
        ok = false;
        detail = "table1-isomorphic counterexample not found";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (ms > 300000) {
        ok = false;
        detail = "exceeded 5-minute budget";
    }
    os << "order 4: " << res.found.size() << " counterexamples incl table1, "
       << ms << " ms";
    report(11, "model search rediscovers the pinned semiring", ok,
           ok ? os.str() : detail);
}

void criterion_12_formulas(const BatteryRun& run) {
    bool ok = true;
    std::string detail;
    FiniteStruct z6 = zoo_zmod(6);
    FormulaCheckReport perp = check_summability_formula(
        builtin_formula("S_perp"), z6, {2, 3}, run.battery);
    if (!perp.cond_ii || !perp.cond_i) {
        ok = false;
        detail = "S_perp at (2,3) in Z/6";
    }
    const NamedFormula& comm = builtin_formula("S_comm");
    for (const auto& [name, R] : run.battery) {
        for (int x = 0; x < R.order() && ok; ++x)
            for (int y = 0; y < R.order() && ok; ++y) {
                if (R.mul(x, y) != R.mul(y, x)) continue;
                std::map<std::string, int> env{
                    {"x", x}, {"y", y}, {"z", R.add(x, y)}};
                if (!eval_sformula(comm.formula, R, env)) {
                    ok = false;
                    detail = "S_comm (ii) at commuting pair in " + name;
                }
            }
    }
    const NamedFormula& div = builtin_formula("S_div");
    for (const auto& [name, R] : run.battery) {
        bool field = R.cls().is_commutative_ring;
        for (int x = 0; x < R.order() && field; ++x) {
            if (x == R.zero()) continue;
            bool unit = false;
            for (int y = 0; y < R.order(); ++y)
                if (R.mul(x, y) == R.one()) unit = true;
            field = unit;
        }
        if (!field) continue;
        for (int x = 0; x < R.order() && ok; ++x)
            for (int y = 0; y < R.order() && ok; ++y) {
                std::map<std::string, int> env{
                    {"x", x}, {"y", y}, {"z", R.add(x, y)}};
                if (!eval_sformula(div.formula, R, env)) {
                    ok = false;
                    detail = "S_div (ii) in field " + name;
                }
            }
    }
    report(12, "summability formulas S_perp, S_comm, S_div", ok,
           ok ? "condition (i) on battery; (ii) pointwise" : detail);
}

void criterion_13_zxzy() {
    bool ok = true;
    std::string detail;
    long long maps = 0;
    std::vector<FiniteStruct> rings;
    for (int n : {1, 2, 3}) rings.push_back(zoo_zmod(n));
    for (const auto& R : rings)
        for (const auto& S : rings) {
            std::vector<int> map(R.order(), 0);
            for (;;) {
                ZxzyReport r = check_zxzy_characterization(R, S, map);
                ++maps;
                if (!r.equivalent) {
                    ok = false;
                    detail = "conditions and homomorphism disagree";
                }
                int i = 0;
                while (i < R.order() && ++map[i] == S.order()) map[i++] = 0;
                if (i == R.order()) break;
            }
        }
    report(13, "successor + f(z+xzy) conditions equal homomorphism", ok,
           ok ? std::to_string(maps) + " maps checked exhaustively" : detail);
}

} // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion_1_identities();
    criterion_2_brachynomial();
    criterion_3_table1();
    criterion_4_table2();
    BatteryRun run = run_battery_slice();
    criterion_5_battery_slice(run);
    criterion_6_certifier(run);
    criterion_7_consistency(run);
    criterion_8_rigidity();
    criterion_9_matrix();
    criterion_10_weyl();
    criterion_11_search();
    criterion_12_formulas(run);
    criterion_13_zxzy();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    printf("%d of 13 criteria passed in %lld ms\n", 13 - failures,
           (long long)ms);
    return failures == 0 ? 0 : 1;
}
