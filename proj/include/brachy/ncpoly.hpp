#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "brachy/bigint.hpp"

namespace brachy {

// A word in the free monoid over variable names; empty word = unit monomial.
using Word = std::vector<std::string>;

// Length-lexicographic order on words (alphabet ordered by variable name).
struct LenLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Noncommutative polynomial over the integers: finite map word -> nonzero
/// coefficient, kept in canonical length-lex order so equality is structural.
class NCPoly {
public:
    using TermMap = std::map<Word, Int, LenLexLess>;

    NCPoly() = default;

    static NCPoly constant(Int c);
    static NCPoly variable(const std::string& name);
    static NCPoly monomial(Word w, Int c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Word& w) const;
    Int constant_term() const { return coeff(Word{}); }

    // Degree: longest word; 0 for the zero polynomial.
    int degree() const;
    Int max_abs_coeff() const;
    bool all_nonnegative() const;
    std::set<std::string> variables() const;

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly operator-() const;
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

    NCPoly pow(unsigned k) const;

    // Simultaneous substitution; variables absent from the map stay themselves.
    NCPoly substitute(const std::map<std::string, NCPoly>& bindings) const;

    // Reduce all coefficients mod m > 0 (representatives in [0, m)).
    NCPoly reduce_mod(unsigned m) const;

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
    bool operator<(const NCPoly& o) const;

    // Inserts c*w, dropping the term if the sum cancels.
    void add_term(const Word& w, const Int& c);

private:
    TermMap terms_;
};

// [p, q] = pq - qp.
NCPoly commutator(const NCPoly& p, const NCPoly& q);

// Canonical text form; parse(to_string(p)) == p.
std::string to_string(const NCPoly& p);

// Grammar: integers, identifiers, + - *, juxtaposition products, parentheses,
// ^ for positive integer powers. Throws UsageError with position on bad input.
NCPoly parse_ncpoly(std::string_view text);

} // namespace brachy
