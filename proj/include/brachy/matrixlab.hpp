#pragma once

#include <string>
#include <vector>

#include "brachy/cpoly.hpp"
#include "brachy/finstruct.hpp"
#include "brachy/ringzoo.hpp"

namespace brachy {

using SymMatrix = std::vector<std::vector<CPoly>>;

SymMatrix generic_matrix(int n, const std::string& prefix);
SymMatrix sym_identity(int n);
SymMatrix sym_add(const SymMatrix& a, const SymMatrix& b);
SymMatrix sym_mul(const SymMatrix& a, const SymMatrix& b);

// Determinant by cofactor expansion (n <= 4 cost guard).
CPoly sym_det(const SymMatrix& a);

struct CharPoly {
    // tau[k-1] is the k-th signed characteristic coefficient; tau[n-1] is
    // the determinant. Computed by direct expansion of det(t*1 - a) and by
    // the trace recursion with exact integer division; the two must agree.
    std::vector<CPoly> tau;
};

CharPoly symbolic_char_poly(int n);

// tau_k and det of an arbitrary symbolic matrix, via the generic formulas.
CPoly sym_tau(const SymMatrix& a, int k);

// The trace pairing tau2(a+b) - tau2(a) - tau2(b).
CPoly sym_pairing(const SymMatrix& a, const SymMatrix& b);

struct MatrixReport {
    std::string name;
    bool holds = false;
    std::string detail;
};

// The identity battery: the trace-product relation (n = 2, 3), the order-3
// sum-of-determinants expansion, Hall's identity at n = 2, Cayley-Hamilton
// (n = 2, 3), the Vandermonde product (n <= nmax), and the finite-instance
// implication chain for determinant-successor subrings of 3x3 matrices.
std::vector<MatrixReport> verify_matrix_suite(int nmax);

// Numeric matrices over a finite commutative coefficient ring.
using MatK = std::vector<int>; // row-major n*n carrier indices

int matk_tau(const FiniteStruct& K, const MatK& a, int n, int k);
int matk_det(const FiniteStruct& K, const MatK& a, int n);

struct DetAuditSpec {
    std::string ring_expr;
    int n = 3;
    std::vector<MatK> generators;
    int closure_cap = 4096;
};

DetAuditSpec load_detaudit_spec(const std::string& path);

struct DetAuditReport {
    int subring_order = 0;
    bool contains_identity = false;
    bool premise_holds = false;        // det(1+a) = 1+det(a) on the subring
    std::string premise_counterexample;
    bool conclusion_checked = false;   // only when the premise holds
    bool conclusion_holds = false;     // det(a+b) = det(a)+det(b)
    bool scalar_condition = false;     // n scalars with non-zero-divisor gaps
    std::vector<int> scalars_used;
    bool powers_central = false;       // a^n central, when scalars available
};

// Generates the subring spanned by the generators under + and *, then
// audits the determinant map on it.
DetAuditReport det_brachy_audit(const DetAuditSpec& spec);

} // namespace brachy
