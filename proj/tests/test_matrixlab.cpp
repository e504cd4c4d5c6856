#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "brachy/errors.hpp"
#include "brachy/matrixlab.hpp"

using namespace brachy;

namespace {

CPoly V(const char* name) { return CPoly::variable(name); }

} // namespace

TEST_CASE("characteristic coefficients at small orders") {
    CharPoly c1 = symbolic_char_poly(1);
    CHECK(c1.tau[0] == V("a11"));

    CharPoly c2 = symbolic_char_poly(2);
    CHECK(c2.tau[0] == V("a11") + V("a22"));
    CHECK(c2.tau[1] == V("a11") * V("a22") - V("a12") * V("a21"));

    CharPoly c3 = symbolic_char_poly(3);
    CHECK(c3.tau[0] == V("a11") + V("a22") + V("a33"));
    // tau2 = sum of the three principal 2x2 minors
    CPoly want = V("a11") * V("a22") - V("a12") * V("a21") +
                 (V("a11") * V("a33") - V("a13") * V("a31")) +
                 (V("a22") * V("a33") - V("a23") * V("a32"));
    CHECK(c3.tau[1] == want);

    // the two computation routes cross-check internally; n = 4 included
    CHECK(symbolic_char_poly(4).tau.size() == 4);
    CHECK_THROWS_AS(symbolic_char_poly(5), UsageError);
}

TEST_CASE("matrix identity suite") {
    auto reports = verify_matrix_suite(4);
    CHECK(reports.size() >= 9);
    for (const auto& r : reports) {
        INFO(r.name << " " << r.detail);
        CHECK(r.holds);
    }
}

TEST_CASE("pairing is symmetric and biadditive") {
    for (int n : {2, 3}) {
        SymMatrix a = generic_matrix(n, "a");
        SymMatrix b = generic_matrix(n, "b");
        SymMatrix c = generic_matrix(n, "c");
        CHECK(sym_pairing(a, b) == sym_pairing(b, a));
        CHECK(sym_pairing(sym_add(a, c), b) ==
              sym_pairing(a, b) + sym_pairing(c, b));
        CHECK(sym_pairing(a, sym_add(b, c)) ==
              sym_pairing(a, b) + sym_pairing(a, c));
    }
}

TEST_CASE("numeric instantiation over Z/101 matches the symbolic identities") {
    std::mt19937 rng(29);
    const long long p = 101;
    for (int iter = 0; iter < 20; ++iter) {
        std::map<std::string, long long> env;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                env["a" + std::to_string(i) + std::to_string(j)] = rng() % p;
                env["b" + std::to_string(i) + std::to_string(j)] = rng() % p;
            }
        SymMatrix a = generic_matrix(3, "a"), b = generic_matrix(3, "b");
        CPoly lhs = sym_tau(a, 1) * sym_tau(b, 1);
        CPoly rhs = sym_tau(sym_mul(a, b), 1) + sym_pairing(a, b);
        CHECK(lhs.eval_mod(env, p) == rhs.eval_mod(env, p));
    }
}

TEST_CASE("tau1 is additive and similarity-invariant over Z/7") {
    FiniteStruct z7 = build_zoo("zmod(7)");
    std::mt19937 rng(37);
    const int n = 3;
    auto rnd = [&] {
        MatK m(n * n);
        for (auto& v : m) v = int(rng() % 7);
        return m;
    };
    auto add = [&](const MatK& a, const MatK& b) {
        MatK r(n * n);
        for (int i = 0; i < n * n; ++i) r[i] = z7.add(a[i], b[i]);
        return r;
    };
    auto mul = [&](const MatK& a, const MatK& b) {
        MatK r(n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int t = 0; t < n; ++t)
                    r[i * n + j] =
                        z7.add(r[i * n + j], z7.mul(a[i * n + t], b[t * n + j]));
        return r;
    };
    auto det = [&](const MatK& a) { return matk_det(z7, a, n); };
    for (int iter = 0; iter < 50; ++iter) {
        MatK a = rnd(), b = rnd();
        CHECK(matk_tau(z7, add(a, b), n, 1) ==
              z7.add(matk_tau(z7, a, n, 1), matk_tau(z7, b, n, 1)));
        MatK s = rnd();
        // invert s if possible: check det nonzero, then scan for inverse
        if (det(s) == 0) continue;
        MatK inv(n * n, 0);
        // Gauss-free: search s^-1 among powers is unreliable; use adjugate
        // via linear scan over candidate matrices is too slow, so verify
        // similarity invariance with s ranging over elementary matrices.
        (void)inv;
    }
    // similarity by an explicit unit: permutation + shear matrices
    std::vector<std::pair<MatK, MatK>> units;
    MatK p213 = {0, 1, 0, 1, 0, 0, 0, 0, 1}; // its own inverse
    units.push_back({p213, p213});
    MatK shear = {1, 1, 0, 0, 1, 0, 0, 0, 1};
    MatK shear_inv = {1, 6, 0, 0, 1, 0, 0, 0, 1}; // -1 = 6 mod 7
    units.push_back({shear, shear_inv});
    for (auto& [u, uinv] : units) {
        REQUIRE(mul(u, uinv) == MatK({1, 0, 0, 0, 1, 0, 0, 0, 1}));
        for (int iter = 0; iter < 20; ++iter) {
            MatK a = rnd();
            MatK conj = mul(mul(u, a), uinv);
            CHECK(matk_tau(z7, conj, n, 1) == matk_tau(z7, a, n, 1));
        }
    }
}

TEST_CASE("det audit: scalars over Z/5") {
    DetAuditSpec spec;
    spec.ring_expr = "zmod(5)";
    spec.n = 3;
    spec.generators.push_back({1, 0, 0, 0, 1, 0, 0, 0, 1});
    spec.generators.push_back({2, 0, 0, 0, 2, 0, 0, 0, 2});
    DetAuditReport rep = det_brachy_audit(spec);
    CHECK(rep.subring_order == 5);
    CHECK(rep.contains_identity);
    // det(1 + c*I) = (1+c)^3 vs 1 + c^3: in Z/5 these differ at c = 1
    CHECK(!rep.premise_holds);
    CHECK(rep.scalar_condition); // Z/5 is a field: all gaps invertible
}

TEST_CASE("det audit: unitriangular subring satisfies the premise") {
    DetAuditSpec spec;
    spec.ring_expr = "zmod(2)";
    spec.n = 3;
    spec.generators.push_back({1, 0, 0, 0, 1, 0, 0, 0, 1});
    spec.generators.push_back({0, 1, 0, 0, 0, 0, 0, 0, 0});
    spec.generators.push_back({0, 0, 1, 0, 0, 0, 0, 0, 0});
    spec.generators.push_back({0, 0, 0, 0, 0, 1, 0, 0, 0});
    DetAuditReport rep = det_brachy_audit(spec);
    CHECK(rep.premise_holds);
    CHECK(rep.conclusion_checked);
    CHECK(rep.conclusion_holds);
}

TEST_CASE("det audit: full matrix ring fails the premise") {
    DetAuditSpec spec;
    spec.ring_expr = "zmod(2)";
    spec.n = 3;
    spec.closure_cap = 600;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            MatK e(9, 0);
            e[i * 3 + j] = 1;
            spec.generators.push_back(e);
        }
    DetAuditReport rep = det_brachy_audit(spec);
    CHECK(rep.subring_order == 512);
    CHECK(!rep.premise_holds);
    CHECK(!rep.premise_counterexample.empty());
    CHECK(!rep.conclusion_checked);
}

TEST_CASE("det audit spec file") {
    const char* path = "detaudit_test.txt";
    {
        std::ofstream out(path);
        out << "# scalar battery\n";
        out << "ring zmod(5)\n";
        out << "n 3\n";
        out << "gen 1 0 0 0 1 0 0 0 1\n";
        out << "gen 2 0 0 0 2 0 0 0 2\n";
    }
    DetAuditSpec spec = load_detaudit_spec(path);
    CHECK(spec.ring_expr == "zmod(5)");
    CHECK(spec.n == 3);
    CHECK(spec.generators.size() == 2);
    std::remove(path);

    {
        std::ofstream out(path);
        out << "ring zmod(5)\nn 3\ngen 1 0 0\n";
    }
    CHECK_THROWS_AS(load_detaudit_spec(path), UsageError);
    std::remove(path);
}

TEST_CASE("closure cap is enforced") {
    DetAuditSpec spec;
    spec.ring_expr = "zmod(2)";
    spec.n = 3;
    spec.closure_cap = 100;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            MatK e(9, 0);
            e[i * 3 + j] = 1;
            spec.generators.push_back(e);
        }
    CHECK_THROWS_AS(det_brachy_audit(spec), ResourceError);
}
