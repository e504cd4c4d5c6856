#include "brachy/modelsearch.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include <omp.h>

#include "brachy/errors.hpp"
#include "brachy/morphism.hpp"
#include "brachy/parallel.hpp"

namespace brachy {

std::vector<uint16_t> canonical_form(int n, const std::vector<uint16_t>& add,
                                     const std::vector<uint16_t>& mul,
                                     int zero, int one) {
    if (n > 10)
        throw UsageError("canonical_form: exact minimization capped at order 10");
    // Normalize the designation first: zero lands on index 0 and one on
    // index 1 (index 0 when they coincide); the remaining indices range
    // over all placements. Equal canonical forms then mean isomorphic
    // regardless of how the inputs designated their identities.
    std::vector<int> free_idx;
    for (int i = 0; i < n; ++i)
        if (i != zero && i != one) free_idx.push_back(i);
    std::vector<int> slots;
    for (int i = (one == zero ? 1 : 2); i < n; ++i) slots.push_back(i);

    std::vector<uint16_t> best;
    std::vector<int> perm(n);
    do {
        perm[zero] = 0;
        perm[one] = one == zero ? 0 : 1;
        for (size_t i = 0; i < free_idx.size(); ++i)
            perm[free_idx[i]] = slots[i];
        std::vector<uint16_t> cat(size_t(n) * n * 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                cat[size_t(perm[i]) * n + perm[j]] =
                    uint16_t(perm[add[size_t(i) * n + j]]);
                cat[size_t(n) * n + size_t(perm[i]) * n + perm[j]] =
                    uint16_t(perm[mul[size_t(i) * n + j]]);
            }
        if (best.empty() || cat < best) best = std::move(cat);
    } while (std::next_permutation(slots.begin(), slots.end()));
    return best;
}

std::vector<uint16_t> canonical_form(const FiniteStruct& S) {
    return canonical_form(S.order(), S.add_table(), S.mul_table(), S.zero(),
                          S.one());
}

namespace {

constexpr int UNSET = -1;

using Clock = std::chrono::steady_clock;

struct CellRef {
    bool is_add;
    int i, j;
};

// Backtracking searcher over partial Cayley tables. Addition is stored
// mirrored (commutative for both task classes); consistency rescans the
// fully-defined axiom instances after each assignment.
struct TableSearcher {
    int n;
    StructClass cls;
    int zero, one;
    long long node_budget;
    Clock::time_point deadline;
    bool reject_isomorphs;

    std::vector<int> add, mul;
    std::vector<CellRef> cells; // static assignment order
    SearchStats stats;
    bool exhausted = false;
    std::vector<FiniteStruct> completions; // class-valid canonical survivors

    TableSearcher(int n_, StructClass c, int zero_, int one_, long long budget,
                  Clock::time_point dl, bool reject)
        : n(n_), cls(c), zero(zero_), one(one_), node_budget(budget),
          deadline(dl), reject_isomorphs(reject),
          add(size_t(n_) * n_, UNSET), mul(size_t(n_) * n_, UNSET) {
        // Forced cells: zero row/col of add, one row/col of mul.
        for (int x = 0; x < n; ++x) {
            set_add(zero, x, x);
            set_add(x, zero, x);
            set_mul(one, x, x);
            set_mul(x, one, x);
        }
        if (cls == StructClass::RightNearring) {
            // x*0 = 0 is part of the task class; 0*x = 0 follows from right
            // distributivity over the additive group.
            for (int x = 0; x < n; ++x) {
                set_mul(x, zero, zero);
                set_mul(zero, x, zero);
            }
        }
        // Additive cells first, then multiplication, most-forced rows done.
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (at(add, i, j) == UNSET) cells.push_back({true, i, j});
        const bool mul_comm = cls == StructClass::CommutativeSemiring;
        for (int i = 0; i < n; ++i)
            for (int j = mul_comm ? i : 0; j < n; ++j)
                if (at(mul, i, j) == UNSET) cells.push_back({false, i, j});
    }

    int at(const std::vector<int>& t, int i, int j) const {
        return t[size_t(i) * n + j];
    }
    void set_add(int i, int j, int v) { add[size_t(i) * n + j] = v; }
    void set_mul(int i, int j, int v) { mul[size_t(i) * n + j] = v; }

    bool mul_comm() const { return cls == StructClass::CommutativeSemiring; }

    // Assign a cell (mirroring commutative tables); false when the value
    // immediately clashes with group constraints (near-ring addition).
    void assign(const CellRef& c, int v) {
        if (c.is_add) {
            set_add(c.i, c.j, v);
            set_add(c.j, c.i, v);
        } else {
            set_mul(c.i, c.j, v);
            if (mul_comm()) set_mul(c.j, c.i, v);
        }
    }

    void unassign(const CellRef& c) {
        if (c.is_add) {
            set_add(c.i, c.j, UNSET);
            set_add(c.j, c.i, UNSET);
        } else {
            set_mul(c.i, c.j, UNSET);
            if (mul_comm()) set_mul(c.j, c.i, UNSET);
        }
    }

    bool consistent() const {
        // Near-ring addition forms a group: rows and columns stay injective.
        if (cls == StructClass::RightNearring) {
            for (int i = 0; i < n; ++i) {
                unsigned row = 0, col = 0;
                for (int j = 0; j < n; ++j) {
                    int r = at(add, i, j);
                    if (r != UNSET) {
                        if (row & (1u << r)) return false;
                        row |= 1u << r;
                    }
                    int cv = at(add, j, i);
                    if (cv != UNSET) {
                        if (col & (1u << cv)) return false;
                        col |= 1u << cv;
                    }
                }
            }
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                for (int z = 0; z < n; ++z) {
                    // (x+y)+z = x+(y+z)
                    int xy = at(add, x, y), yz = at(add, y, z);
                    if (xy != UNSET && yz != UNSET) {
                        int l = at(add, xy, z), r = at(add, x, yz);
                        if (l != UNSET && r != UNSET && l != r) return false;
                    }
                    // (xy)z = x(yz)
                    int mxy = at(mul, x, y), myz = at(mul, y, z);
                    if (mxy != UNSET && myz != UNSET) {
                        int l = at(mul, mxy, z), r = at(mul, x, myz);
                        if (l != UNSET && r != UNSET && l != r) return false;
                    }
                    // (x+y)z = xz+yz
                    if (xy != UNSET) {
                        int l = at(mul, xy, z);
                        int xz = at(mul, x, z), yzm = at(mul, y, z);
                        if (l != UNSET && xz != UNSET && yzm != UNSET) {
                            int r = at(add, xz, yzm);
                            if (r != UNSET && l != r) return false;
                        }
                    }
                    // x(y+z) = xy+xz, for the semiring class
                    if (cls == StructClass::CommutativeSemiring && yz != UNSET) {
                        int l = at(mul, x, yz);
                        int xym = at(mul, x, y), xzm = at(mul, x, z);
                        if (l != UNSET && xym != UNSET && xzm != UNSET) {
                            int r = at(add, xym, xzm);
                            if (r != UNSET && l != r) return false;
                        }
                    }
                }
            }
        return true;
    }

    bool class_matches(const Classification& c) const {
        switch (cls) {
        case StructClass::CommutativeSemiring:
            return c.is_commutative_semiring;
        case StructClass::RightNearring:
            return c.is_right_nearring && c.add_commutative && c.mul_zero_absorbs;
        }
        return false;
    }

    void complete() {
        ++stats.structures;
        std::vector<uint16_t> a(add.begin(), add.end());
        std::vector<uint16_t> m(mul.begin(), mul.end());
        FiniteStruct s = FiniteStruct::make(n, a, m, zero, one);
        if (!class_matches(s.cls())) {
            ++stats.prunes;
            return;
        }
        if (reject_isomorphs) {
            std::vector<uint16_t> cat = a;
            cat.insert(cat.end(), m.begin(), m.end());
            if (canonical_form(n, a, m, zero, one) != cat) {
                ++stats.prunes;
                return;
            }
        }
        completions.push_back(std::move(s));
    }

    // Bounded check of the axiom instances that read the assigned cell as
    // a direct argument pair. Instances that read it through a computed
    // value are caught by the class validation at completion; this pays
    // off on the budgeted order-16 runs where the full rescan is too slow.
    bool consistent_local(const CellRef& c) const {
        auto def = [](int v) { return v != UNSET; };
        if (c.is_add) {
            if (cls == StructClass::RightNearring) {
                for (int i : {c.i, c.j}) {
                    unsigned row = 0, col = 0;
                    for (int j = 0; j < n; ++j) {
                        int r = at(add, i, j);
                        if (r != UNSET) {
                            if (row & (1u << r)) return false;
                            row |= 1u << r;
                        }
                        int cv = at(add, j, i);
                        if (cv != UNSET) {
                            if (col & (1u << cv)) return false;
                            col |= 1u << cv;
                        }
                    }
                }
            }
            for (auto [x, y] : {std::pair{c.i, c.j}, std::pair{c.j, c.i}}) {
                int xy = at(add, x, y);
                for (int z = 0; z < n; ++z) {
                    int yz = at(add, y, z);
                    if (def(xy) && def(yz)) {
                        int l = at(add, xy, z), r = at(add, x, yz);
                        if (def(l) && def(r) && l != r) return false;
                    }
                    int zx = at(add, z, x);
                    if (def(zx) && def(xy)) {
                        int l = at(add, zx, y), r = at(add, z, xy);
                        if (def(l) && def(r) && l != r) return false;
                    }
                    if (def(xy)) {
                        int l = at(mul, xy, z);
                        int xz = at(mul, x, z), yzm = at(mul, y, z);
                        if (def(l) && def(xz) && def(yzm)) {
                            int r = at(add, xz, yzm);
                            if (def(r) && l != r) return false;
                        }
                    }
                }
            }
        } else {
            for (auto [x, y] : {std::pair{c.i, c.j}, std::pair{c.j, c.i}}) {
                int xy = at(mul, x, y);
                for (int z = 0; z < n; ++z) {
                    int yz = at(mul, y, z);
                    if (def(xy) && def(yz)) {
                        int l = at(mul, xy, z), r = at(mul, x, yz);
                        if (def(l) && def(r) && l != r) return false;
                    }
                    int zx = at(mul, z, x);
                    if (def(zx) && def(xy)) {
                        int l = at(mul, zx, y), r = at(mul, z, xy);
                        if (def(l) && def(r) && l != r) return false;
                    }
                    // (x+z)y = xy + zy reading the new cell as xy
                    int xz = at(add, x, z);
                    if (def(xz) && def(xy)) {
                        int l = at(mul, xz, y);
                        int zy = at(mul, z, y);
                        if (def(l) && def(zy)) {
                            int r = at(add, xy, zy);
                            if (def(r) && l != r) return false;
                        }
                    }
                }
            }
        }
        return true;
    }

    void search(size_t cell_idx) {
        if (exhausted) return;
        while (cell_idx < cells.size()) {
            const CellRef& c = cells[cell_idx];
            if (at(c.is_add ? add : mul, c.i, c.j) == UNSET) break;
            ++cell_idx;
        }
        if (cell_idx >= cells.size()) {
            complete();
            return;
        }
        const bool full_scan = n <= 8;
        for (int v = 0; v < n; ++v) {
            if (++stats.nodes > node_budget) {
                exhausted = true;
                return;
            }
            if ((stats.nodes & 0x1fff) == 0 && Clock::now() > deadline) {
                exhausted = true;
                return;
            }
            const CellRef& c = cells[cell_idx];
            assign(c, v);
            if (full_scan ? consistent() : consistent_local(c))
                search(cell_idx + 1);
            unassign(c);
            if (exhausted) return;
        }
    }
};

// Violating bijective brachy-endomorphism, if any: enumerate with the
// propagation-based engine and keep the first bijection (in map order)
// with an additivity violation.
bool find_witness(const FiniteStruct& S, std::vector<int>& witness,
                  std::vector<std::pair<int, int>>& violations,
                  long long budget, bool& budget_hit) {
    EnumConfig cfg;
    cfg.node_budget = budget;
    cfg.jobs = 1;
    EnumResult r = enumerate_brachymorphisms(S, S, cfg);
    budget_hit |= r.budget_exhausted;
    for (const auto& m : r.morphisms) {
        if (m.violations.empty()) continue;
        std::vector<bool> hit(S.order(), false);
        bool bij = true;
        for (int v : m.map) {
            if (hit[v]) { bij = false; break; }
            hit[v] = true;
        }
        if (!bij) continue;
        witness = m.map;
        violations = m.violations;
        return true;
    }
    return false;
}

SearchResult run_search(const SearchTask& task, bool reject_isomorphs) {
    if (task.order < 1) throw UsageError("search: order must be positive");
    if (task.order > 16) throw UsageError("search: order cap is 16");
    if (task.cls == StructClass::CommutativeSemiring && task.order > 6)
        throw UsageError("search: semiring full search capped at order 6");

    const auto t0 = Clock::now();
    const auto deadline =
        t0 + std::chrono::milliseconds(
                 static_cast<long long>(task.time_budget_s * 1000));
    SearchResult result;

    // Identity designations to try: distinct zero/one, and the degenerate
    // zero = one semiring case the axioms do not exclude.
    std::vector<std::pair<int, int>> designations;
    if (task.order >= 2) designations.emplace_back(0, 1);
    if (task.cls == StructClass::CommutativeSemiring || task.order == 1)
        designations.emplace_back(0, 0);

    for (auto [zero, one] : designations) {
        if (task.order == 1 && one != zero) continue;
        TableSearcher root(task.order, task.cls, zero, one, task.node_budget,
                           deadline, reject_isomorphs && task.order <= 8);
        if (!root.consistent()) continue;

        // Top-level branches on the first free cell run in parallel;
        // results merge in branch order, so output is thread-independent.
        auto harvest = [&](std::vector<FiniteStruct>& completions) {
            for (auto& s : completions) {
                if (task.order <= 10)
                    result.canonical_structures.push_back(canonical_form(s));
                std::vector<int> w;
                std::vector<std::pair<int, int>> viol;
                bool wbudget = false;
                if (find_witness(s, w, viol, task.node_budget, wbudget))
                    result.found.push_back({std::move(s), w, viol});
                result.budget_exhausted |= wbudget;
            }
        };
        if (root.cells.empty()) {
            root.search(0);
            result.stats.nodes += root.stats.nodes;
            result.stats.prunes += root.stats.prunes;
            result.stats.structures += root.stats.structures;
            result.budget_exhausted |= root.exhausted;
            harvest(root.completions);
            continue;
        }

        const int nb = task.order;
        std::vector<TableSearcher> branches(nb, root);
        const int jobs = task.jobs > 0 ? task.jobs : effective_jobs();
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
        for (int v = 0; v < nb; ++v) {
            TableSearcher& b = branches[v];
            ++b.stats.nodes;
            b.assign(b.cells[0], v);
            if (b.consistent()) b.search(1);
            b.unassign(b.cells[0]);
        }
        for (int v = 0; v < nb; ++v) {
            result.stats.nodes += branches[v].stats.nodes;
            result.stats.prunes += branches[v].stats.prunes;
            result.stats.structures += branches[v].stats.structures;
            result.budget_exhausted |= branches[v].exhausted;
            harvest(branches[v].completions);
        }
    }

    result.exhaustive = !result.budget_exhausted;
    result.stats.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               Clock::now() - t0)
                               .count();
    return result;
}

} // namespace

SearchResult search_counterexample(const SearchTask& task) {
    return run_search(task, true);
}

SearchResult search_counterexample_all(const SearchTask& task) {
    return run_search(task, false);
}

namespace {

const uint16_t kTable1Add[16] = {
    0, 1, 2, 3,
    1, 1, 2, 3,
    2, 2, 2, 3,
    3, 3, 3, 3,
};
const uint16_t kTable1Mul[16] = {
    0, 0, 0, 0,
    0, 0, 0, 1,
    0, 0, 0, 2,
    0, 1, 2, 3,
};

const uint16_t kTable2Add[256] = {
    0,  1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 15,
    1,  0,  3,  2,  5,  4,  7,  6,  9,  8,  11, 10, 13, 12, 15, 14,
    2,  3,  0,  1,  6,  7,  4,  5,  10, 11, 8,  9,  14, 15, 12, 13,
    3,  2,  1,  0,  7,  6,  5,  4,  11, 10, 9,  8,  15, 14, 13, 12,
    4,  5,  6,  7,  0,  1,  2,  3,  12, 13, 14, 15, 8,  9,  10, 11,
    5,  4,  7,  6,  1,  0,  3,  2,  13, 12, 15, 14, 9,  8,  11, 10,
    6,  7,  4,  5,  2,  3,  0,  1,  14, 15, 12, 13, 10, 11, 8,  9,
    7,  6,  5,  4,  3,  2,  1,  0,  15, 14, 13, 12, 11, 10, 9,  8,
    8,  9,  10, 11, 12, 13, 14, 15, 0,  1,  2,  3,  4,  5,  6,  7,
    9,  8,  11, 10, 13, 12, 15, 14, 1,  0,  3,  2,  5,  4,  7,  6,
    10, 11, 8,  9,  14, 15, 12, 13, 2,  3,  0,  1,  6,  7,  4,  5,
    11, 10, 9,  8,  15, 14, 13, 12, 3,  2,  1,  0,  7,  6,  5,  4,
    12, 13, 14, 15, 8,  9,  10, 11, 4,  5,  6,  7,  0,  1,  2,  3,
    13, 12, 15, 14, 9,  8,  11, 10, 5,  4,  7,  6,  1,  0,  3,  2,
    14, 15, 12, 13, 10, 11, 8,  9,  6,  7,  4,  5,  2,  3,  0,  1,
    15, 14, 13, 12, 11, 10, 9,  8,  7,  6,  5,  4,  3,  2,  1,  0,
};
const uint16_t kTable2Mul[256] = {
    0, 0,  0, 0, 0, 0, 0, 0, 0, 0, 0,  0,  0,  0,  0,  0,
    0, 1,  2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15,
    0, 2,  0, 0, 0, 0, 0, 0, 0, 0, 0,  0,  0,  0,  0,  12,
    0, 3,  2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 3,
    0, 4,  0, 0, 0, 0, 0, 0, 0, 0, 0,  0,  0,  0,  0,  4,
    0, 5,  2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 11,
    0, 6,  0, 0, 0, 0, 0, 0, 0, 0, 0,  0,  0,  0,  0,  8,
    0, 7,  2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 7,
    0, 8,  0, 0, 0, 0, 0, 0, 0, 0, 0,  0,  0,  0,  0,  6,
    0, 9,  2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 9,
    0, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0,  0,  0,  0,  0,  10,
    0, 11, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 5,
    0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 0,  0,  0,  0,  0,  2,
    0, 13, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 13,
    0, 14, 0, 0, 0, 0, 0, 0, 0, 0, 0,  0,  0,  0,  0,  14,
    0, 15, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 1,
};

FiniteStruct pinned(int n, const uint16_t* add, const uint16_t* mul, int zero,
                    int one, std::vector<std::string> labels) {
    return FiniteStruct::make(
        n, std::vector<uint16_t>(add, add + size_t(n) * n),
        std::vector<uint16_t>(mul, mul + size_t(n) * n), zero, one,
        std::move(labels));
}

struct Check {
    FixtureReport& rep;
    void operator()(const std::string& what, bool ok) {
        rep.lines.push_back((ok ? "pass " : "FAIL ") + what);
        rep.pass = rep.pass && ok;
    }
};

bool is_brachy_auto(const FiniteStruct& S, const std::vector<int>& f,
                    std::string& why) {
    std::vector<bool> hit(S.order(), false);
    for (int v : f) {
        if (hit[v]) { why = "not bijective"; return false; }
        hit[v] = true;
    }
    if (f[S.zero()] != S.zero()) { why = "f(0) != 0"; return false; }
    for (int x = 0; x < S.order(); ++x)
        if (f[S.succ(x)] != S.succ(f[x])) {
            why = "successor equation fails at " + std::to_string(x);
            return false;
        }
    for (int x = 0; x < S.order(); ++x)
        for (int y = 0; y < S.order(); ++y)
            if (f[S.mul(x, y)] != S.mul(f[x], f[y])) {
                why = "product equation fails at (" + std::to_string(x) + "," +
                      std::to_string(y) + ")";
                return false;
            }
    return true;
}

} // namespace

FiniteStruct fixture_table1() {
    return pinned(4, kTable1Add, kTable1Mul, 0, 3, {"0", "a", "b", "1"});
}

FiniteStruct fixture_table2() {
    std::vector<std::string> labels;
    for (int i = 0; i < 16; ++i) labels.push_back(std::to_string(i));
    return pinned(16, kTable2Add, kTable2Mul, 0, 1, std::move(labels));
}

FixtureReport verify_fixture(const std::string& name, const std::string& dir) {
    FixtureReport rep;
    rep.name = name;
    rep.pass = true;
    Check check{rep};

    if (name != "table1" && name != "table2")
        throw UsageError("unknown fixture '" + name + "'");
    const FiniteStruct expected = name == "table1" ? fixture_table1()
                                                   : fixture_table2();

    FiniteStruct S;
    try {
        S = read_struct_file(dir + "/" + name + ".struct");
    } catch (const UsageError& e) {
        rep.pass = false;
        rep.lines.push_back(std::string("FAIL load: ") + e.what());
        return rep;
    }

    bool tables_ok = S.order() == expected.order() &&
                     S.zero() == expected.zero() && S.one() == expected.one();
    check("order/zero/one match the pinned fixture", tables_ok);
    if (tables_ok) {
        for (int i = 0; i < S.order() && tables_ok; ++i)
            for (int j = 0; j < S.order() && tables_ok; ++j) {
                if (S.add(i, j) != expected.add(i, j)) {
                    check("add cell (" + std::to_string(i) + "," +
                              std::to_string(j) + ") matches",
                          false);
                    tables_ok = false;
                }
                if (tables_ok && S.mul(i, j) != expected.mul(i, j)) {
                    check("mul cell (" + std::to_string(i) + "," +
                              std::to_string(j) + ") matches",
                          false);
                    tables_ok = false;
                }
            }
        if (tables_ok) check("all table cells match bit-exactly", true);
    }
    if (!rep.pass) return rep;

    const Classification& c = S.cls();
    std::vector<int> f(S.order());
    std::iota(f.begin(), f.end(), 0);
    std::string why;

    if (name == "table1") {
        check("commutative semiring axioms", c.is_commutative_semiring);
        check("ring axioms fail (no additive inverses)",
              !c.is_ring && !c.add_inverses);
        check("additive cancellation fails", !c.add_cancellative);
        std::swap(f[1], f[2]); // transposition (a b)
        bool auto_ok = is_brachy_auto(S, f, why);
        check("transposition (a b) is a brachy-automorphism" +
                  (auto_ok ? std::string() : ": " + why),
              auto_ok);
        int a = 1, b = 2;
        int lhs = f[S.add(a, b)], rhs = S.add(f[a], f[b]);
        check("violation at (a,b): f(a+b) = a while f(a)+f(b) = b",
              lhs != rhs && lhs == a && rhs == b);
    } else {
        check("right near-ring axioms", c.is_right_nearring);
        check("addition commutative", c.add_commutative);
        check("x*0 = 0 holds", c.mul_zero_absorbs);
        check("left distributivity fails", !c.left_distributive);
        bool elem2 = true;
        for (int x = 0; x < S.order(); ++x)
            if (S.additive_order(x) > 2) elem2 = false;
        check("additive group is elementary abelian of order 16",
              elem2 && S.order() == 16);
        std::swap(f[6], f[8]);
        std::swap(f[7], f[9]);
        bool auto_ok = is_brachy_auto(S, f, why);
        check("(6 8)(7 9) is a brachy-automorphism" +
                  (auto_ok ? std::string() : ": " + why),
              auto_ok);
        check("f fixes 2 and 4", f[2] == 2 && f[4] == 4);
        check("violation at (2,4): 2+4 = 6 and f(6) = 8",
              S.add(2, 4) == 6 && f[6] == 8 &&
                  f[S.add(2, 4)] != S.add(f[2], f[4]));
    }
    return rep;
}

} // namespace brachy
