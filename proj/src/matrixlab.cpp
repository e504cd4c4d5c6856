#include "brachy/matrixlab.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "brachy/errors.hpp"

namespace brachy {

SymMatrix generic_matrix(int n, const std::string& prefix) {
    SymMatrix m(n, std::vector<CPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = CPoly::variable(prefix + std::to_string(i + 1) +
                                      std::to_string(j + 1));
    return m;
}

SymMatrix sym_identity(int n) {
    SymMatrix m(n, std::vector<CPoly>(n));
    for (int i = 0; i < n; ++i) m[i][i] = CPoly::constant(1);
    return m;
}

SymMatrix sym_add(const SymMatrix& a, const SymMatrix& b) {
    const int n = int(a.size());
    SymMatrix r(n, std::vector<CPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

SymMatrix sym_mul(const SymMatrix& a, const SymMatrix& b) {
    const int n = int(a.size());
    SymMatrix r(n, std::vector<CPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

CPoly sym_det(const SymMatrix& a) {
    const int n = int(a.size());
    if (n > 4) throw UsageError("sym_det: order cap is 4");
    if (n == 1) return a[0][0];
    CPoly det;
    for (int j = 0; j < n; ++j) {
        SymMatrix minor(n - 1, std::vector<CPoly>(n - 1));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = a[r][c];
            }
        }
        CPoly term = a[0][j] * sym_det(minor);
        if (j % 2) det -= term; else det += term;
    }
    return det;
}

namespace {

std::vector<CPoly> char_poly_direct(int n) {
    SymMatrix a = generic_matrix(n, "a");
    CPoly t = CPoly::variable("t");
    SymMatrix tm(n, std::vector<CPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            tm[i][j] = -a[i][j];
            if (i == j) tm[i][j] += t;
        }
    CPoly p = sym_det(tm);
    // p = t^n + sum (-1)^k tau_k t^(n-k) + (-1)^n det
    std::vector<CPoly> tau(n);
    for (int k = 1; k <= n; ++k) {
        CPoly coeff = p.coeff_of("t", n - k);
        tau[k - 1] = k % 2 ? -coeff : coeff;
    }
    if (!(p.coeff_of("t", n) == CPoly::constant(1)))
        throw std::logic_error("char poly is not monic");
    return tau;
}

std::vector<CPoly> char_poly_traces(int n) {
    SymMatrix a = generic_matrix(n, "a");
    auto trace = [&](const SymMatrix& m) {
        CPoly t;
        for (int i = 0; i < n; ++i) t += m[i][i];
        return t;
    };
    // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k, c_n = 1.
    std::vector<CPoly> c(n + 1);
    c[n] = CPoly::constant(1);
    SymMatrix m(n, std::vector<CPoly>(n)); // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        m = sym_mul(a, m);
        for (int i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
        c[n - k] = -trace(sym_mul(a, m)).divexact(k);
    }
    std::vector<CPoly> tau(n);
    for (int k = 1; k <= n; ++k) tau[k - 1] = k % 2 ? -c[n - k] : c[n - k];
    return tau;
}

} // namespace

CharPoly symbolic_char_poly(int n) {
    if (n < 1 || n > 4) throw UsageError("symbolic_char_poly: 1 <= n <= 4");
    CharPoly cp;
    cp.tau = char_poly_direct(n);
    std::vector<CPoly> alt = char_poly_traces(n);
    for (int k = 0; k < n; ++k)
        if (!(cp.tau[k] == alt[k]))
            throw std::logic_error("characteristic polynomial methods disagree");
    return cp;
}

CPoly sym_tau(const SymMatrix& a, int k) {
    const int n = int(a.size());
    static std::map<int, CharPoly> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, symbolic_char_poly(n)).first;
    std::map<std::string, CPoly> bind;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            bind["a" + std::to_string(i + 1) + std::to_string(j + 1)] = a[i][j];
    return it->second.tau[k - 1].substitute(bind);
}

CPoly sym_pairing(const SymMatrix& a, const SymMatrix& b) {
    return sym_tau(sym_add(a, b), 2) - sym_tau(a, 2) - sym_tau(b, 2);
}

int matk_det(const FiniteStruct& K, const MatK& a, int n) {
    auto at = [&](int i, int j) { return a[size_t(i) * n + j]; };
    if (n == 1) return at(0, 0);
    if (n == 2)
        return K.sub(K.mul(at(0, 0), at(1, 1)), K.mul(at(0, 1), at(1, 0)));
    if (n == 3) {
        int pos = K.add(K.add(K.mul(K.mul(at(0, 0), at(1, 1)), at(2, 2)),
                              K.mul(K.mul(at(0, 1), at(1, 2)), at(2, 0))),
                        K.mul(K.mul(at(0, 2), at(1, 0)), at(2, 1)));
        int neg = K.add(K.add(K.mul(K.mul(at(0, 2), at(1, 1)), at(2, 0)),
                              K.mul(K.mul(at(0, 0), at(1, 2)), at(2, 1))),
                        K.mul(K.mul(at(0, 1), at(1, 0)), at(2, 2)));
        return K.sub(pos, neg);
    }
    throw UsageError("matk_det: order cap is 3");
}

int matk_tau(const FiniteStruct& K, const MatK& a, int n, int k) {
    auto at = [&](int i, int j) { return a[size_t(i) * n + j]; };
    if (k == 1) {
        int t = K.zero();
        for (int i = 0; i < n; ++i) t = K.add(t, at(i, i));
        return t;
    }
    if (k == 2) {
        // sum of principal 2x2 minors
        int t = K.zero();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                t = K.add(t, K.sub(K.mul(at(i, i), at(j, j)),
                                   K.mul(at(i, j), at(j, i))));
        return t;
    }
    if (k == n) return matk_det(K, a, n);
    throw UsageError("matk_tau: only k in {1,2,n} supported");
}

namespace {

MatK matk_add(const FiniteStruct& K, const MatK& a, const MatK& b) {
    MatK r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = K.add(a[i], b[i]);
    return r;
}

MatK matk_mul(const FiniteStruct& K, const MatK& a, const MatK& b, int n) {
    MatK r(size_t(n) * n, K.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int acc = K.zero();
            for (int t = 0; t < n; ++t)
                acc = K.add(acc, K.mul(a[size_t(i) * n + t], b[size_t(t) * n + j]));
            r[size_t(i) * n + j] = acc;
        }
    return r;
}

MatK matk_identity(const FiniteStruct& K, int n) {
    MatK r(size_t(n) * n, K.zero());
    for (int i = 0; i < n; ++i) r[size_t(i) * n + i] = K.one();
    return r;
}

// Closure of the generators under + and *.
std::set<MatK> matk_closure(const FiniteStruct& K, int n,
                            const std::vector<MatK>& gens, int cap) {
    std::set<MatK> set(gens.begin(), gens.end());
    std::vector<MatK> work(gens.begin(), gens.end());
    while (!work.empty()) {
        MatK e = work.back();
        work.pop_back();
        std::vector<MatK> snapshot(set.begin(), set.end());
        for (const MatK& f : snapshot) {
            for (const MatK& g :
                 {matk_add(K, e, f), matk_mul(K, e, f, n), matk_mul(K, f, e, n)}) {
                if (set.insert(g).second) {
                    if (int(set.size()) > cap)
                        throw ResourceError("det audit closure exceeds cap", cap);
                    work.push_back(g);
                }
            }
        }
    }
    return set;
}

// Built-in instances for the finite implication chain: subrings of 3x3
// matrices over small commutative rings.
std::vector<std::pair<std::string, DetAuditSpec>> m6_battery() {
    std::vector<std::pair<std::string, DetAuditSpec>> b;
    {
        // identity multiples plus strictly upper triangular over Z/2
        DetAuditSpec s;
        s.ring_expr = "zmod(2)";
        s.n = 3;
        s.generators.push_back({1, 0, 0, 0, 1, 0, 0, 0, 1});
        s.generators.push_back({0, 1, 0, 0, 0, 0, 0, 0, 0});
        s.generators.push_back({0, 0, 1, 0, 0, 0, 0, 0, 0});
        s.generators.push_back({0, 0, 0, 0, 0, 1, 0, 0, 0});
        b.emplace_back("unitriangular-zmod2", std::move(s));
    }
    {
        // scalar matrices over Z/5
        DetAuditSpec s;
        s.ring_expr = "zmod(5)";
        s.n = 3;
        s.generators.push_back({1, 0, 0, 0, 1, 0, 0, 0, 1});
        s.generators.push_back({2, 0, 0, 0, 2, 0, 0, 0, 2});
        b.emplace_back("scalars-zmod5", std::move(s));
    }
    {
        // all of M3(F2), generated by the matrix units
        DetAuditSpec s;
        s.ring_expr = "zmod(2)";
        s.n = 3;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                MatK e(9, 0);
                e[size_t(i) * 3 + j] = 1;
                s.generators.push_back(e);
            }
        s.closure_cap = 600;
        b.emplace_back("full-m3-zmod2", std::move(s));
    }
    return b;
}

} // namespace

std::vector<MatrixReport> verify_matrix_suite(int nmax) {
    if (nmax < 1 || nmax > 4) throw UsageError("matrix suite: 1 <= nmax <= 4");
    std::vector<MatrixReport> out;
    auto report = [&](const std::string& name, bool ok,
                      const std::string& detail = "") {
        out.push_back({name, ok, detail});
    };

    for (int n = 2; n <= std::min(nmax, 3); ++n) {
        SymMatrix a = generic_matrix(n, "a"), b = generic_matrix(n, "b");
        CPoly lhs = sym_tau(a, 1) * sym_tau(b, 1);
        CPoly rhs = sym_tau(sym_mul(a, b), 1) + sym_pairing(a, b);
        report("trace-product-pairing-n" + std::to_string(n), lhs == rhs);
    }

    if (nmax >= 3) {
        const int n = 3;
        SymMatrix a = generic_matrix(n, "a"), b = generic_matrix(n, "b");
        SymMatrix ab = sym_mul(a, b);
        CPoly lhs = sym_tau(sym_add(a, b), 3);
        CPoly rhs = sym_tau(a, 3) + sym_tau(b, 3) -
                    sym_tau(ab, 1) * sym_tau(sym_add(a, b), 1) +
                    sym_tau(a, 1) * sym_tau(b, 2) +
                    sym_tau(a, 2) * sym_tau(b, 1) +
                    sym_tau(sym_mul(a, ab), 1) + sym_tau(sym_mul(ab, b), 1);
        report("determinant-sum-expansion-n3", lhs == rhs);
    }

    if (nmax >= 2) {
        const int n = 2;
        SymMatrix a = generic_matrix(n, "a"), b = generic_matrix(n, "b");
        SymMatrix comm = sym_add(sym_mul(a, b), [&] {
            SymMatrix ba = sym_mul(b, a);
            for (auto& row : ba)
                for (auto& e : row) e = -e;
            return ba;
        }());
        SymMatrix sq = sym_mul(comm, comm);
        bool scalar = sq[0][1].is_zero() && sq[1][0].is_zero() &&
                      sq[0][0] == sq[1][1];
        SymMatrix c = generic_matrix(n, "c");
        bool commutes = true;
        SymMatrix l = sym_mul(sq, c), r = sym_mul(c, sq);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!(l[i][j] == r[i][j])) commutes = false;
        report("hall-identity-n2", scalar && commutes);
    }

    for (int n = 2; n <= std::min(nmax, 3); ++n) {
        SymMatrix a = generic_matrix(n, "a");
        CharPoly cp = symbolic_char_poly(n);
        SymMatrix acc = sym_identity(n); // a^0
        std::vector<SymMatrix> powers{acc};
        for (int k = 1; k <= n; ++k) {
            acc = sym_mul(acc, a);
            powers.push_back(acc);
        }
        SymMatrix sum = powers[n]; // a^n
        for (int k = 1; k <= n; ++k) {
            CPoly coeff = cp.tau[k - 1];
            if (k % 2) coeff = -coeff;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    sum[i][j] += coeff * powers[n - k][i][j];
        }
        bool zero = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!sum[i][j].is_zero()) zero = false;
        report("cayley-hamilton-n" + std::to_string(n), zero);
    }

    for (int n = 2; n <= nmax; ++n) {
        SymMatrix v(n, std::vector<CPoly>(n));
        std::vector<CPoly> lambda;
        for (int i = 0; i < n; ++i)
            lambda.push_back(CPoly::variable("l" + std::to_string(i + 1)));
        for (int i = 0; i < n; ++i) {
            CPoly p = CPoly::constant(1);
            for (int j = 0; j < n; ++j) {
                v[i][j] = p;
                p = p * lambda[i];
            }
        }
        CPoly det = sym_det(v);
        CPoly prod = CPoly::constant(1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) prod = prod * (lambda[j] - lambda[i]);
        report("vandermonde-product-n" + std::to_string(n), det == prod);
    }

    // Finite-instance implication chain: where tau2 = tau1 on a subring of
    // 3x3 matrices, derive 2*tau1 = 0, the pairing vanishes, and the
    // cross-term delta vanishes.
    for (const auto& [bname, spec] : m6_battery()) {
        FiniteStruct K = build_zoo(spec.ring_expr);
        auto closure = matk_closure(K, spec.n, spec.generators, spec.closure_cap);
        bool premise = true;
        for (const auto& x : closure)
            if (matk_tau(K, x, spec.n, 2) != matk_tau(K, x, spec.n, 1)) {
                premise = false;
                break;
            }
        if (!premise) {
            report("tau-chain-" + bname, true, "premise fails; chain vacuous");
            continue;
        }
        bool ok = true;
        std::string detail;
        for (const auto& x : closure) {
            int t1 = matk_tau(K, x, spec.n, 1);
            if (K.add(t1, t1) != K.zero()) {
                ok = false;
                detail = "2*tau1 != 0";
                break;
            }
        }
        for (auto ix = closure.begin(); ok && ix != closure.end(); ++ix)
            for (auto iy = closure.begin(); ok && iy != closure.end(); ++iy) {
                const MatK &x = *ix, &y = *iy;
                int pair = K.sub(K.sub(matk_tau(K, matk_add(K, x, y), spec.n, 2),
                                       matk_tau(K, x, spec.n, 2)),
                                 matk_tau(K, y, spec.n, 2));
                if (pair != K.zero()) {
                    ok = false;
                    detail = "pairing nonzero";
                }
                MatK ab = matk_mul(K, x, y, spec.n);
                MatK apb = matk_add(K, x, y);
                int delta = K.sub(
                    K.sub(K.sub(K.mul(matk_tau(K, ab, spec.n, 1),
                                      matk_tau(K, apb, spec.n, 1)),
                                K.mul(matk_tau(K, x, spec.n, 1),
                                      matk_tau(K, y, spec.n, 2))),
                          K.mul(matk_tau(K, x, spec.n, 2),
                                matk_tau(K, y, spec.n, 1))),
                    matk_tau(K, matk_mul(K, ab, apb, spec.n), spec.n, 1));
                if (delta != K.zero()) {
                    ok = false;
                    detail = "delta nonzero";
                }
            }
        report("tau-chain-" + bname, ok, ok ? "premise holds; chain verified" : detail);
    }

    return out;
}

DetAuditSpec load_detaudit_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open det audit spec: " + path);
    DetAuditSpec spec;
    spec.n = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        if (kw == "ring") {
            ls >> spec.ring_expr;
        } else if (kw == "n") {
            ls >> spec.n;
        } else if (kw == "cap") {
            ls >> spec.closure_cap;
        } else if (kw == "gen") {
            MatK g;
            int v;
            while (ls >> v) g.push_back(v);
            spec.generators.push_back(std::move(g));
        } else {
            throw UsageError("det audit spec: unknown keyword '" + kw + "'");
        }
    }
    if (spec.ring_expr.empty() || spec.n < 2 || spec.n > 3 ||
        spec.generators.empty())
        throw UsageError("det audit spec: need ring, n in {2,3}, generators");
    for (const auto& g : spec.generators)
        if (g.size() != size_t(spec.n) * spec.n)
            throw UsageError("det audit spec: generator entry count mismatch");
    return spec;
}

DetAuditReport det_brachy_audit(const DetAuditSpec& spec) {
    FiniteStruct K = build_zoo(spec.ring_expr);
    if (!K.cls().is_commutative_ring)
        throw UsageError("det audit: coefficient ring must be commutative");
    const int n = spec.n;
    for (const auto& g : spec.generators)
        for (int e : g)
            if (e < 0 || e >= K.order())
                throw UsageError("det audit: generator entry out of range");

    DetAuditReport rep;
    auto closure = matk_closure(K, n, spec.generators, spec.closure_cap);
    rep.subring_order = int(closure.size());
    const MatK id = matk_identity(K, n);
    rep.contains_identity = closure.count(id) > 0;

    rep.premise_holds = true;
    for (const auto& a : closure) {
        int lhs = matk_det(K, matk_add(K, a, id), n);
        int rhs = K.add(K.one(), matk_det(K, a, n));
        if (lhs != rhs) {
            rep.premise_holds = false;
            std::ostringstream os;
            os << "det(1+a) != 1+det(a) at a = [";
            for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
            os << "]";
            rep.premise_counterexample = os.str();
            break;
        }
    }

    if (rep.premise_holds) {
        rep.conclusion_checked = true;
        rep.conclusion_holds = true;
        for (const auto& a : closure)
            for (const auto& b : closure) {
                int lhs = matk_det(K, matk_add(K, a, b), n);
                int rhs = K.add(matk_det(K, a, n), matk_det(K, b, n));
                if (lhs != rhs) {
                    rep.conclusion_holds = false;
                    break;
                }
            }
    }

    // Scalars in the subring whose pairwise differences are not zero
    // divisors; n of them allow the central-powers conclusion.
    std::vector<int> scalars;
    for (const auto& a : closure) {
        bool is_scalar = true;
        int lam = a[0];
        for (int i = 0; i < n && is_scalar; ++i)
            for (int j = 0; j < n && is_scalar; ++j) {
                int want = i == j ? lam : K.zero();
                if (a[size_t(i) * n + j] != want) is_scalar = false;
            }
        if (is_scalar) scalars.push_back(lam);
    }
    auto nzd = [&](int d) {
        if (d == K.zero()) return false;
        for (int k = 0; k < K.order(); ++k)
            if (k != K.zero() && K.mul(d, k) == K.zero()) return false;
        return true;
    };
    std::vector<int> chosen;
    std::vector<int> stack;
    std::function<bool(size_t)> pick = [&](size_t start) {
        if (int(stack.size()) == n) {
            chosen = stack;
            return true;
        }
        for (size_t i = start; i < scalars.size(); ++i) {
            bool ok = true;
            for (int s : stack)
                if (!nzd(K.sub(scalars[i], s))) ok = false;
            if (!ok) continue;
            stack.push_back(scalars[i]);
            if (pick(i + 1)) return true;
            stack.pop_back();
        }
        return false;
    };
    rep.scalar_condition = pick(0);
    rep.scalars_used = chosen;

    if (rep.premise_holds && rep.scalar_condition) {
        rep.powers_central = true;
        for (const auto& a : closure) {
            MatK p = a;
            for (int k = 1; k < n; ++k) p = matk_mul(K, p, a, n);
            for (const auto& b : closure)
                if (matk_mul(K, p, b, n) != matk_mul(K, b, p, n)) {
                    rep.powers_central = false;
                    break;
                }
            if (!rep.powers_central) break;
        }
    }
    return rep;
}

} // namespace brachy
