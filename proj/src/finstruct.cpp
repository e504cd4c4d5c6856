#include "brachy/finstruct.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "brachy/errors.hpp"

namespace brachy {

namespace {

// Helper shared by both kernels: all per-axiom predicates evaluated on one
// (i,j) or (i,j,k) instance, written so serial and parallel loops agree.
struct AxiomCounts {
    long long zero_id = 0, one_id = 0, add_assoc = 0, add_comm = 0,
              add_inv = 0, add_canc = 0, mul_assoc = 0, mul_comm = 0,
              ldist = 0, rdist = 0, absorb = 0;
};

Classification finish(const TableView& t, const AxiomCounts& c) {
    Classification r;
    r.zero_identity_ok = c.zero_id == 0;
    r.one_identity_ok = c.one_id == 0;
    r.add_associative = c.add_assoc == 0;
    r.add_commutative = c.add_comm == 0;
    r.add_inverses = c.add_inv == 0;
    r.add_cancellative = c.add_canc == 0;
    r.mul_associative = c.mul_assoc == 0;
    r.mul_commutative = c.mul_comm == 0;
    r.left_distributive = c.ldist == 0;
    r.right_distributive = c.rdist == 0;
    r.mul_zero_absorbs = c.absorb == 0;

    r.is_ring = r.add_group() && r.add_commutative && r.mul_monoid() &&
                r.left_distributive && r.right_distributive;
    r.is_commutative_ring = r.is_ring && r.mul_commutative;
    r.is_commutative_semiring = r.semiring() && r.mul_commutative;
    r.is_cancellative_semiring = r.semiring() && r.add_cancellative;
    r.is_right_nearring = r.add_group() && r.mul_monoid() && r.right_distributive;
    (void)t;
    return r;
}

} // namespace

Classification classify_tables_serial(const TableView& t) {
    const int n = t.n;
    auto A = [&](int a, int b) { return t.add[size_t(a) * n + b]; };
    auto M = [&](int a, int b) { return t.mul[size_t(a) * n + b]; };
    AxiomCounts c;
    for (int x = 0; x < n; ++x) {
        if (A(t.zero, x) != x || A(x, t.zero) != x) ++c.zero_id;
        if (M(t.one, x) != x || M(x, t.one) != x) ++c.one_id;
        if (M(x, t.zero) != t.zero || M(t.zero, x) != t.zero) ++c.absorb;
        bool inv = false;
        for (int y = 0; y < n; ++y)
            if (A(x, y) == t.zero && A(y, x) == t.zero) { inv = true; break; }
        if (!inv) ++c.add_inv;
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (A(x, y) != A(y, x)) ++c.add_comm;
            if (M(x, y) != M(y, x)) ++c.mul_comm;
            for (int z = 0; z < n; ++z) {
                if (A(A(x, y), z) != A(x, A(y, z))) ++c.add_assoc;
                if (M(M(x, y), z) != M(x, M(y, z))) ++c.mul_assoc;
                if (M(x, A(y, z)) != A(M(x, y), M(x, z))) ++c.ldist;
                if (M(A(x, y), z) != A(M(x, z), M(y, z))) ++c.rdist;
                if (A(x, z) == A(y, z) && x != y) ++c.add_canc;
            }
        }
    }
    return finish(t, c);
}

Classification classify_tables_parallel(const TableView& t) {
    const int n = t.n;
    auto A = [&](int a, int b) { return t.add[size_t(a) * n + b]; };
    auto M = [&](int a, int b) { return t.mul[size_t(a) * n + b]; };
    AxiomCounts c;
    long long zero_id = 0, one_id = 0, absorb = 0, add_inv = 0;
    long long add_comm = 0, mul_comm = 0, add_assoc = 0, mul_assoc = 0,
              ldist = 0, rdist = 0, add_canc = 0;
#pragma omp parallel for reduction(+ : zero_id, one_id, absorb, add_inv) schedule(static)
    for (int x = 0; x < n; ++x) {
        if (A(t.zero, x) != x || A(x, t.zero) != x) ++zero_id;
        if (M(t.one, x) != x || M(x, t.one) != x) ++one_id;
        if (M(x, t.zero) != t.zero || M(t.zero, x) != t.zero) ++absorb;
        bool inv = false;
        for (int y = 0; y < n; ++y)
            if (A(x, y) == t.zero && A(y, x) == t.zero) { inv = true; break; }
        if (!inv) ++add_inv;
    }
#pragma omp parallel for reduction(+ : add_comm, mul_comm, add_assoc, mul_assoc, ldist, rdist, add_canc) schedule(static)
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (A(x, y) != A(y, x)) ++add_comm;
            if (M(x, y) != M(y, x)) ++mul_comm;
            for (int z = 0; z < n; ++z) {
                if (A(A(x, y), z) != A(x, A(y, z))) ++add_assoc;
                if (M(M(x, y), z) != M(x, M(y, z))) ++mul_assoc;
                if (M(x, A(y, z)) != A(M(x, y), M(x, z))) ++ldist;
                if (M(A(x, y), z) != A(M(x, z), M(y, z))) ++rdist;
                if (A(x, z) == A(y, z) && x != y) ++add_canc;
            }
        }
    }
    c.zero_id = zero_id; c.one_id = one_id; c.absorb = absorb;
    c.add_inv = add_inv; c.add_comm = add_comm; c.mul_comm = mul_comm;
    c.add_assoc = add_assoc; c.mul_assoc = mul_assoc; c.ldist = ldist;
    c.rdist = rdist; c.add_canc = add_canc;
    return finish(t, c);
}

Classification classify_tables(const TableView& t) {
    return t.n >= 24 ? classify_tables_parallel(t) : classify_tables_serial(t);
}

FiniteStruct FiniteStruct::make(int n, std::vector<uint16_t> add,
                                std::vector<uint16_t> mul, int zero, int one,
                                std::vector<std::string> labels) {
    if (n <= 0) throw UsageError("structure order must be positive");
    if (add.size() != size_t(n) * n || mul.size() != size_t(n) * n)
        throw UsageError("table size does not match order");
    for (uint16_t v : add)
        if (v >= n) throw UsageError("add table entry out of range");
    for (uint16_t v : mul)
        if (v >= n) throw UsageError("mul table entry out of range");
    if (zero < 0 || zero >= n || one < 0 || one >= n)
        throw UsageError("zero/one index out of range");
    if (!labels.empty() && labels.size() != size_t(n))
        throw UsageError("label count does not match order");

    FiniteStruct s;
    s.n_ = n;
    s.add_ = std::move(add);
    s.mul_ = std::move(mul);
    s.zero_ = zero;
    s.one_ = one;
    if (labels.empty()) {
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    s.labels_ = std::move(labels);
    s.neg_.assign(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (s.add(x, y) == zero && s.add(y, x) == zero) {
                s.neg_[x] = y;
                break;
            }
    s.cls_ = classify_tables(
        TableView{n, s.add_.data(), s.mul_.data(), zero, one});
    return s;
}

int FiniteStruct::sub(int a, int b) const {
    int nb = neg_[b];
    if (nb < 0) throw UsageError("element has no additive inverse");
    return add(a, nb);
}

int FiniteStruct::pow(int x, unsigned k) const {
    int r = x;
    for (unsigned i = 1; i < k; ++i) r = mul(r, x);
    return r;
}

int FiniteStruct::additive_order(int x) const {
    int acc = x;
    for (int k = 1; k <= n_; ++k) {
        if (acc == zero_) return k;
        acc = add(acc, x);
    }
    return 0;
}

namespace {

std::string next_token(std::istream& in) {
    std::string tok;
    in >> tok;
    return tok;
}

int next_int(std::istream& in, const std::string& what) {
    long long v;
    if (!(in >> v)) throw UsageError("struct file: expected integer for " + what);
    return static_cast<int>(v);
}

} // namespace

FiniteStruct read_struct(std::istream& in) {
    int n = -1, zero = -1, one = -1;
    std::vector<uint16_t> add, mul;
    std::vector<std::string> labels;
    std::string tok;
    while (in >> tok) {
        if (tok == "order") {
            n = next_int(in, "order");
        } else if (tok == "zero") {
            zero = next_int(in, "zero");
        } else if (tok == "one") {
            one = next_int(in, "one");
        } else if (tok == "labels") {
            if (n < 0) throw UsageError("struct file: labels before order");
            labels.resize(n);
            for (auto& l : labels) {
                if (!(in >> l)) throw UsageError("struct file: truncated labels");
            }
        } else if (tok == "add" || tok == "mul") {
            if (n < 0) throw UsageError("struct file: table before order");
            auto& tab = tok == "add" ? add : mul;
            tab.resize(size_t(n) * n);
            for (auto& cell : tab) {
                int v = next_int(in, tok + " cell");
                if (v < 0 || v > 0xffff) throw UsageError("struct file: bad cell");
                cell = static_cast<uint16_t>(v);
            }
        } else if (tok[0] == '#') {
            std::string line;
            std::getline(in, line);
        } else {
            throw UsageError("struct file: unknown keyword '" + tok + "'");
        }
    }
    if (n < 0 || zero < 0 || one < 0 || add.empty() || mul.empty())
        throw UsageError("struct file: missing order/zero/one/add/mul");
    return FiniteStruct::make(n, std::move(add), std::move(mul), zero, one,
                              std::move(labels));
}

FiniteStruct read_struct_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open struct file: " + path);
    return read_struct(in);
}

void write_struct(std::ostream& out, const FiniteStruct& S) {
    const int n = S.order();
    out << "order " << n << "\n";
    out << "zero " << S.zero() << "\n";
    out << "one " << S.one() << "\n";
    out << "labels";
    for (int i = 0; i < n; ++i) out << " " << S.label(i);
    out << "\n";
    for (const char* name : {"add", "mul"}) {
        out << name << "\n";
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (j) out << " ";
                out << (std::string(name) == "add" ? S.add(i, j) : S.mul(i, j));
            }
            out << "\n";
        }
    }
}

void write_struct_file(const std::string& path, const FiniteStruct& S) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write struct file: " + path);
    write_struct(out, S);
}

std::vector<ElementProfile> element_profile(const FiniteStruct& S) {
    const int n = S.order();
    std::vector<ElementProfile> ps(n);
    auto regular_witness = [&](int x) {
        for (int t = 0; t < n; ++t)
            if (S.mul(S.mul(x, t), x) == x) return t;
        return -1;
    };
    for (int x = 0; x < n; ++x) {
        ElementProfile& p = ps[x];
        p.element = x;
        for (int y = 0; y < n; ++y)
            if (S.mul(x, y) == S.one() && S.mul(y, x) == S.one()) {
                p.is_unit = true;
                p.inverse = y;
                break;
            }
        p.quasi_inverse = regular_witness(x);
        p.is_regular = p.quasi_inverse >= 0;
        p.is_idempotent = S.mul(x, x) == x;
        int acc = x;
        for (int k = 1; k <= n; ++k) {
            if (acc == S.zero()) { p.nilpotency_index = k; break; }
            acc = S.mul(acc, x);
        }
        acc = x;
        for (int k = 1; k <= n; ++k) {
            if (regular_witness(acc) >= 0) { p.pi_regular_k = k; break; }
            acc = S.mul(acc, x);
        }
        p.is_central = true;
        for (int y = 0; y < n; ++y)
            if (S.mul(x, y) != S.mul(y, x)) { p.is_central = false; break; }
    }
    return ps;
}

namespace {

// Left ideal generated by the bits of `gens` (order <= 64 masks).
uint64_t left_ideal_closure(const FiniteStruct& S, uint64_t gens) {
    const int n = S.order();
    uint64_t set = gens | (uint64_t(1) << S.zero());
    std::vector<int> work;
    for (int i = 0; i < n; ++i)
        if (set >> i & 1) work.push_back(i);
    while (!work.empty()) {
        int e = work.back();
        work.pop_back();
        auto visit = [&](int v) {
            if (!(set >> v & 1)) {
                set |= uint64_t(1) << v;
                work.push_back(v);
            }
        };
        for (int i = 0; i < n; ++i) {
            if (set >> i & 1) {
                visit(S.add(e, i));
                visit(S.add(i, e));
            }
            visit(S.mul(i, e));
        }
    }
    return set;
}

std::vector<int> radical_by_quasi_regularity(const FiniteStruct& S) {
    const int n = S.order();
    std::vector<int> rad;
    for (int x = 0; x < n; ++x) {
        bool in_rad = true;
        for (int r = 0; r < n && in_rad; ++r) {
            int u = S.sub(S.one(), S.mul(r, x)); // 1 - r*x
            bool left_inv = false;
            for (int s = 0; s < n; ++s)
                if (S.mul(s, u) == S.one()) { left_inv = true; break; }
            if (!left_inv) in_rad = false;
        }
        if (in_rad) rad.push_back(x);
    }
    return rad;
}

std::vector<int> radical_by_maximal_left_ideals(const FiniteStruct& S) {
    const int n = S.order();
    const uint64_t full = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    std::vector<uint64_t> ideals;
    auto add_ideal = [&](uint64_t m) {
        if (std::find(ideals.begin(), ideals.end(), m) == ideals.end()) {
            ideals.push_back(m);
            return true;
        }
        return false;
    };
    for (int a = 0; a < n; ++a)
        add_ideal(left_ideal_closure(S, uint64_t(1) << a));
    bool changed = true;
    while (changed) {
        changed = false;
        const size_t sz = ideals.size();
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = i + 1; j < sz; ++j)
                if (add_ideal(left_ideal_closure(S, ideals[i] | ideals[j])))
                    changed = true;
    }
    uint64_t inter = full;
    for (uint64_t m : ideals) {
        if (m == full) continue;
        bool maximal = true;
        for (uint64_t other : ideals)
            if (other != full && other != m && (other & m) == m) {
                maximal = false;
                break;
            }
        if (maximal) inter &= m;
    }
    std::vector<int> rad;
    for (int i = 0; i < n; ++i)
        if (inter >> i & 1) rad.push_back(i);
    return rad;
}

} // namespace

std::vector<int> jacobson_radical(const FiniteStruct& S) {
    if (!S.cls().is_ring) throw UsageError("jacobson_radical: not a ring");
    std::vector<int> rad = radical_by_quasi_regularity(S);
    if (S.order() <= 64) {
        std::vector<int> dual = radical_by_maximal_left_ideals(S);
        if (rad != dual)
            throw std::logic_error("jacobson radical cross-check failed");
    }
    return rad;
}

AlphaChain alpha_hierarchy(int n, const std::vector<uint16_t>& mul, int one) {
    auto M = [&](int a, int b) { return mul[size_t(a) * n + b]; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (M(M(x, y), z) != M(x, M(y, z)))
                    throw UsageError("alpha_hierarchy: table not associative");
    for (int x = 0; x < n; ++x)
        if (M(one, x) != x || M(x, one) != x)
            throw UsageError("alpha_hierarchy: designated unit is not a unit");

    std::vector<bool> regular(n, false);
    for (int x = 0; x < n; ++x)
        for (int t = 0; t < n; ++t)
            if (M(M(x, t), x) == x) { regular[x] = true; break; }

    std::vector<bool> level(n, false);
    for (int x = 0; x < n; ++x) {
        bool central = true;
        for (int y = 0; y < n; ++y)
            if (M(x, y) != M(y, x)) { central = false; break; }
        level[x] = central;
    }

    AlphaChain chain;
    auto snapshot = [&]() {
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if (level[i]) v.push_back(i);
        return v;
    };
    chain.levels.push_back(snapshot());

    for (int step = 0; step < n; ++step) {
        // Products (regulars) * u * (regulars): closure of the current level
        // under one-sided multiplication by regular elements.
        std::vector<bool> reach = level;
        std::vector<int> work;
        for (int i = 0; i < n; ++i)
            if (reach[i]) work.push_back(i);
        while (!work.empty()) {
            int e = work.back();
            work.pop_back();
            for (int r = 0; r < n; ++r) {
                if (!regular[r]) continue;
                for (int v : {M(r, e), M(e, r)})
                    if (!reach[v]) {
                        reach[v] = true;
                        work.push_back(v);
                    }
            }
        }
        std::vector<bool> next = level;
        for (int v = 0; v < n; ++v) {
            if (next[v]) continue;
            int acc = v;
            for (int m = 1; m <= n; ++m) {
                if (reach[acc]) { next[v] = true; break; }
                acc = M(acc, v);
            }
        }
        if (next == level) break;
        level = next;
        chain.levels.push_back(snapshot());
    }
    chain.exhausts = std::all_of(level.begin(), level.end(), [](bool b) { return b; });
    return chain;
}

AlphaChain alpha_hierarchy(const FiniteStruct& S) {
    return alpha_hierarchy(S.order(), S.mul_table(), S.one());
}

std::vector<int> sums_of_units(const FiniteStruct& S) {
    if (!S.cls().is_ring) throw UsageError("sums_of_units: not a ring");
    const int n = S.order();
    auto profiles = element_profile(S);
    std::vector<int> units;
    for (const auto& p : profiles)
        if (p.is_unit) units.push_back(p.element);
    std::vector<int> dist(n, -1);
    std::vector<int> frontier;
    for (int u : units) {
        if (dist[u] < 0) {
            dist[u] = 1;
            frontier.push_back(u);
        }
    }
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int u : units) {
                int b = S.add(a, u);
                if (dist[b] < 0) {
                    dist[b] = dist[a] + 1;
                    next.push_back(b);
                }
            }
        frontier = std::move(next);
    }
    dist[S.zero()] = 0; // empty sum
    return dist;
}

int eval_ncpoly(const NCPoly& p, const FiniteStruct& S,
                const std::map<std::string, int>& env) {
    if (!S.cls().add_group())
        throw UsageError("eval_ncpoly: additive structure is not a group");
    int acc = S.zero();
    for (const auto& [w, c] : p.terms()) {
        int v = S.one();
        for (const auto& name : w) {
            auto it = env.find(name);
            if (it == env.end()) throw UsageError("unbound variable " + name);
            v = S.mul(v, it->second);
        }
        int ord = S.additive_order(v);
        Int rem = c % ord;
        if (rem < 0) rem += ord;
        long long k = rem.convert_to<long long>();
        for (long long i = 0; i < k; ++i) acc = S.add(acc, v);
    }
    return acc;
}

} // namespace brachy
