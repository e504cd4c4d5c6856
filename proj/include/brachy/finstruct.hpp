#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "brachy/ncpoly.hpp"

namespace brachy {

/// Axiom flags, each the outcome of exhaustive checking over the tables.
struct Classification {
    bool zero_identity_ok = false;
    bool one_identity_ok = false;
    bool add_associative = false;
    bool add_commutative = false;
    bool add_inverses = false;
    bool add_cancellative = false;
    bool mul_associative = false;
    bool mul_commutative = false;
    bool left_distributive = false;
    bool right_distributive = false;
    bool mul_zero_absorbs = false; // x*0 = 0 and 0*x = 0

    bool is_ring = false;
    bool is_commutative_ring = false;
    bool is_commutative_semiring = false;
    bool is_cancellative_semiring = false;
    bool is_right_nearring = false;

    bool add_monoid() const { return add_associative && zero_identity_ok; }
    bool add_group() const { return add_monoid() && add_inverses; }
    bool mul_monoid() const { return mul_associative && one_identity_ok; }
    bool semiring() const {
        return add_monoid() && add_commutative && mul_monoid() &&
               left_distributive && right_distributive;
    }
};

struct TableView {
    int n;
    const uint16_t* add;
    const uint16_t* mul;
    int zero;
    int one;
};

// Serial reference kernel and the OpenMP one; both compute identical flags.
Classification classify_tables_serial(const TableView& t);
Classification classify_tables_parallel(const TableView& t);
Classification classify_tables(const TableView& t); // dispatches on size

/// A finite double Cayley table with designated zero and one. Immutable
/// after construction; classification is computed, never asserted.
class FiniteStruct {
public:
    // Validates well-formedness (throws UsageError) and classifies.
    static FiniteStruct make(int n, std::vector<uint16_t> add,
                             std::vector<uint16_t> mul, int zero, int one,
                             std::vector<std::string> labels = {});

    int order() const { return n_; }
    int add(int a, int b) const { return add_[size_t(a) * n_ + b]; }
    int mul(int a, int b) const { return mul_[size_t(a) * n_ + b]; }
    int zero() const { return zero_; }
    int one() const { return one_; }
    int succ(int x) const { return add(one_, x); } // 1 + x

    // Additive inverse, or -1 when none exists.
    int neg(int x) const { return neg_[x]; }
    int sub(int a, int b) const; // a + (-b); throws when b has no inverse

    const Classification& cls() const { return cls_; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<uint16_t>& add_table() const { return add_; }
    const std::vector<uint16_t>& mul_table() const { return mul_; }

    int pow(int x, unsigned k) const; // x^k, k >= 1 (left-assoc powers)

    // Smallest k >= 1 with k*x = 0, or 0 if the orbit misses zero.
    int additive_order(int x) const;

private:
    int n_ = 0;
    std::vector<uint16_t> add_, mul_;
    int zero_ = 0, one_ = 0;
    std::vector<std::string> labels_;
    std::vector<int> neg_;
    Classification cls_;
};

// Text format: order/zero/one/labels keywords, then `add` and `mul` each
// followed by n rows of n entries. See docs/formats.md.
FiniteStruct read_struct(std::istream& in);
FiniteStruct read_struct_file(const std::string& path);
void write_struct(std::ostream& out, const FiniteStruct& S);
void write_struct_file(const std::string& path, const FiniteStruct& S);

struct ElementProfile {
    int element = 0;
    bool is_unit = false;
    int inverse = -1;
    bool is_regular = false;
    int quasi_inverse = -1; // t with x t x = x
    bool is_idempotent = false;
    int nilpotency_index = 0; // least k with x^k = 0, 0 if none
    int pi_regular_k = 0;     // least k with x^k regular, 0 if none
    bool is_central = false;
};

std::vector<ElementProfile> element_profile(const FiniteStruct& S);

// Computed two independent ways and cross-checked: (a) x in J iff 1 - r*x
// has a left inverse for every r; (b) intersection of all maximal left
// ideals, enumerated by closure (cross-check requires order <= 64).
std::vector<int> jacobson_radical(const FiniteStruct& S);

struct AlphaChain {
    std::vector<std::vector<int>> levels; // ascending until stable
    bool exhausts = false;
};

// Ascending chain: level 0 is the center; level n+1 collects v with some
// power v^m equal to a product (regulars) * u * (regulars), u in level n.
AlphaChain alpha_hierarchy(int n, const std::vector<uint16_t>& mul, int one);
AlphaChain alpha_hierarchy(const FiniteStruct& S);

// Per element, the minimal number of units summing to it (0 for the zero
// element, -1 when no sum of units reaches it).
std::vector<int> sums_of_units(const FiniteStruct& S);

// Interpret a polynomial in a ring: words evaluate through the mul table,
// integer coefficients as iterated sums (reduced mod additive orders).
int eval_ncpoly(const NCPoly& p, const FiniteStruct& S,
                const std::map<std::string, int>& env);

} // namespace brachy
