#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "brachy/errors.hpp"
#include "brachy/modelsearch.hpp"
#include "brachy/morphism.hpp"
#include "brachy/ringzoo.hpp"

using namespace brachy;

namespace {

// Brute-force isomorphism check through all carrier permutations that
// respect the designated zero and one.
bool isomorphic_brute(const FiniteStruct& A, const FiniteStruct& B) {
    if (A.order() != B.order() || (A.zero() == A.one()) != (B.zero() == B.one()))
        return false;
    const int n = A.order();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end());
    do {
        if (perm[A.zero()] != B.zero() || perm[A.one()] != B.one()) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (perm[A.add(i, j)] != B.add(perm[i], perm[j])) ok = false;
                if (perm[A.mul(i, j)] != B.mul(perm[i], perm[j])) ok = false;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST_CASE("canonical form equality matches brute-force isomorphism") {
    // small pool: fixtures and zoo structures of order <= 4
    std::vector<FiniteStruct> pool;
    pool.push_back(fixture_table1());
    pool.push_back(zoo_zmod(4));
    pool.push_back(build_zoo("product(zmod(2),zmod(2))"));
    pool.push_back(build_zoo("quotientpoly(zmod(2),1,1,1)"));
    pool.push_back(build_zoo("quotientpoly(zmod(2),0,0,1)"));
    // a relabeled copy of table 1: swap the two middle elements
    {
        FiniteStruct t1 = fixture_table1();
        const int n = 4;
        std::vector<int> p{0, 2, 1, 3};
        std::vector<uint16_t> add(16), mul(16);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                add[p[i] * n + p[j]] = uint16_t(p[t1.add(i, j)]);
                mul[p[i] * n + p[j]] = uint16_t(p[t1.mul(i, j)]);
            }
        pool.push_back(FiniteStruct::make(n, add, mul, 0, 3));
    }
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = 0; j < pool.size(); ++j) {
            bool brute = isomorphic_brute(pool[i], pool[j]);
            bool canon = canonical_form(pool[i]) == canonical_form(pool[j]) &&
                         (pool[i].zero() == pool[i].one()) ==
                             (pool[j].zero() == pool[j].one());
            INFO(i << " vs " << j);
            CHECK(brute == canon);
        }
}

TEST_CASE("order-4 semiring search rediscovers the pinned counterexample") {
    SearchTask task;
    task.cls = StructClass::CommutativeSemiring;
    task.order = 4;
    SearchResult res = search_counterexample(task);
    CHECK(res.exhaustive);
    CHECK(!res.found.empty());
    auto pinned = canonical_form(fixture_table1());
    bool found_table1 = false;
    for (const auto& f : res.found) {
        CHECK(f.structure.cls().is_commutative_semiring);
        CHECK(!f.violations.empty());
        // every result re-validates through the independent audit
        REQUIRE(check_brachymorphism(f.structure, f.structure, f.witness));
        Morphism m{&f.structure, &f.structure, f.witness, true, false, {}};
        CHECK(additivity_violations(m) == f.violations);
        if (canonical_form(f.structure) == pinned) found_table1 = true;
    }
    CHECK(found_table1);
}

TEST_CASE("orders 2 and 3 are exhausted with no counterexample") {
    for (int order : {2, 3}) {
        SearchTask task;
        task.cls = StructClass::CommutativeSemiring;
        task.order = order;
        SearchResult res = search_counterexample(task);
        INFO("order " << order);
        CHECK(res.exhaustive);
        CHECK(res.found.empty());
        CHECK(res.stats.structures > 0);
    }
}

TEST_CASE("isomorph rejection: same canonical set as the unrestricted run") {
    for (int order : {2, 3}) {
        SearchTask task;
        task.cls = StructClass::CommutativeSemiring;
        task.order = order;
        SearchResult with = search_counterexample(task);
        SearchResult without = search_counterexample_all(task);
        auto canon_set = [](const SearchResult& r) {
            return std::set<std::vector<uint16_t>>(
                r.canonical_structures.begin(), r.canonical_structures.end());
        };
        INFO("order " << order);
        CHECK(!with.canonical_structures.empty());
        CHECK(canon_set(with) == canon_set(without));
        // with rejection, each class appears exactly once
        CHECK(with.canonical_structures.size() == canon_set(with).size());
        CHECK(without.canonical_structures.size() >=
              with.canonical_structures.size());
    }
}

TEST_CASE("worker count does not change the result") {
    SearchTask task;
    task.cls = StructClass::CommutativeSemiring;
    task.order = 4;
    task.jobs = 1;
    SearchResult a = search_counterexample(task);
    task.jobs = 8;
    SearchResult b = search_counterexample(task);
    REQUIRE(a.found.size() == b.found.size());
    for (size_t i = 0; i < a.found.size(); ++i) {
        CHECK(a.found[i].structure.add_table() == b.found[i].structure.add_table());
        CHECK(a.found[i].structure.mul_table() == b.found[i].structure.mul_table());
        CHECK(a.found[i].witness == b.found[i].witness);
    }
    CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("near-ring search respects budgets") {
    SearchTask task;
    task.cls = StructClass::RightNearring;
    task.order = 16;
    task.node_budget = 20000;
    SearchResult res = search_counterexample(task);
    CHECK(res.budget_exhausted);
    CHECK(!res.exhaustive);
    CHECK(res.stats.nodes > 0);
}

TEST_CASE("fixture verification") {
    FixtureReport t1 = verify_fixture("table1", FIXTURE_DIR);
    for (const auto& l : t1.lines) INFO(l);
    CHECK(t1.pass);

    FixtureReport t2 = verify_fixture("table2", FIXTURE_DIR);
    for (const auto& l : t2.lines) INFO(l);
    CHECK(t2.pass);

    CHECK_THROWS_AS(verify_fixture("table9", FIXTURE_DIR), UsageError);
}

TEST_CASE("fixture verification flags a corrupted cell") {
    // copy table1 with one mul cell corrupted
    FiniteStruct t1 = fixture_table1();
    auto mul = t1.mul_table();
    mul[5] = uint16_t((mul[5] + 1) % 4);
    FiniteStruct bad = FiniteStruct::make(4, t1.add_table(), mul, 0, 3,
                                          {"0", "a", "b", "1"});
    std::string dir = "corrupt_fixture_dir";
    std::filesystem::create_directory(dir);
    write_struct_file(dir + "/table1.struct", bad);
    FixtureReport rep = verify_fixture("table1", dir);
    CHECK(!rep.pass);
    bool names_cell = false;
    for (const auto& l : rep.lines)
        if (l.find("FAIL") != std::string::npos &&
            l.find("(1,1)") != std::string::npos)
            names_cell = true;
    CHECK(names_cell);
    std::filesystem::remove_all(dir);
}
