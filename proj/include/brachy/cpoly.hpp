#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "brachy/bigint.hpp"

namespace brachy {

// Exponent vector: variable name -> positive exponent.
using Multidegree = std::map<std::string, unsigned>;

/// Commutative polynomial over the integers. Commutativity is structural:
/// terms are exponent vectors, canonically ordered by the map comparison.
class CPoly {
public:
    using TermMap = std::map<Multidegree, Int>;

    CPoly() = default;

    static CPoly constant(Int c);
    static CPoly variable(const std::string& name);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::set<std::string> variables() const;

    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    CPoly operator-() const;
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(const CPoly& a, const CPoly& b);

    CPoly pow(unsigned k) const;
    CPoly substitute(const std::map<std::string, CPoly>& bindings) const;

    // Divide every coefficient by k exactly; throws on non-divisibility
    // (internal error: the callers' recurrences guarantee divisibility).
    CPoly divexact(const Int& k) const;

    // Evaluate with the given integer assignment, reducing mod m > 0.
    // Unbound variables are an error.
    long long eval_mod(const std::map<std::string, long long>& env, long long m) const;

    // Coefficient of t^k when the polynomial is read as a polynomial in the
    // single variable `t` with CPoly coefficients in the other variables.
    CPoly coeff_of(const std::string& var, unsigned k) const;

    bool operator==(const CPoly& o) const { return terms_ == o.terms_; }

    void add_term(const Multidegree& d, const Int& c);

private:
    TermMap terms_;
};

std::string to_string(const CPoly& p);

} // namespace brachy
