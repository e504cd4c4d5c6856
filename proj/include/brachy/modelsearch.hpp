#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brachy/finstruct.hpp"

namespace brachy {

enum class StructClass {
    CommutativeSemiring,
    // right near-ring restricted as in the fixture: commutative addition
    // and the extra law x*0 = 0
    RightNearring,
};

struct SearchTask {
    StructClass cls = StructClass::CommutativeSemiring;
    int order = 4;
    long long node_budget = 200'000'000; // per top-level branch
    double time_budget_s = 600.0;
    int jobs = 0;
};

struct FoundStruct {
    FiniteStruct structure;            // canonical representative
    std::vector<int> witness;          // violating brachy-automorphism
    std::vector<std::pair<int, int>> violations;
};

struct SearchStats {
    long long nodes = 0;
    long long prunes = 0;
    long long structures = 0; // completed tables examined
    long long wall_ms = 0;
};

struct SearchResult {
    std::vector<FoundStruct> found;
    // Canonical forms of every class-valid completion that survived
    // (with rejection: one per isomorphism class).
    std::vector<std::vector<uint16_t>> canonical_structures;
    bool budget_exhausted = false;
    bool exhaustive = false;
    SearchStats stats;
};

// Backtracking over Cayley-table cells with incremental axiom checking and
// isomorph rejection by minimal-table canonical form; for each surviving
// structure the inner loop searches violating bijective brachy-endomorphisms.
SearchResult search_counterexample(const SearchTask& task);

// Same search without isomorph rejection: every completed structure is
// kept (canonicalized, deduplicated by the caller). Reference for testing.
SearchResult search_counterexample_all(const SearchTask& task);

// Lexicographically minimal concatenated (add, mul) tables over carrier
// permutations fixing zero and one.
std::vector<uint16_t> canonical_form(int n, const std::vector<uint16_t>& add,
                                     const std::vector<uint16_t>& mul,
                                     int zero, int one);
std::vector<uint16_t> canonical_form(const FiniteStruct& S);

struct FixtureReport {
    std::string name;
    bool pass = false;
    std::vector<std::string> lines; // one check per line
};

// Verifies the byte-pinned fixture against the expected tables embedded
// here, the class axioms, the named automorphism, and the exact violation.
FixtureReport verify_fixture(const std::string& name, const std::string& dir);

// The pinned tables themselves (also used to write the fixture files).
FiniteStruct fixture_table1();
FiniteStruct fixture_table2();

} // namespace brachy
