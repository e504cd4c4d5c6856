#include "brachy/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "brachy/errors.hpp"

namespace brachy {

NCPoly NCPoly::constant(Int c) {
    NCPoly p;
    p.add_term(Word{}, c);
    return p;
}

NCPoly NCPoly::variable(const std::string& name) {
    NCPoly p;
    p.add_term(Word{name}, 1);
    return p;
}

NCPoly NCPoly::monomial(Word w, Int c) {
    NCPoly p;
    p.add_term(w, c);
    return p;
}

Int NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
}

int NCPoly::degree() const {
    if (terms_.empty()) return 0;
    return static_cast<int>(terms_.rbegin()->first.size());
}

Int NCPoly::max_abs_coeff() const {
    Int m = 0;
    for (const auto& [w, c] : terms_) {
        Int a = c < 0 ? Int(-c) : c;
        if (a > m) m = a;
    }
    return m;
}

bool NCPoly::all_nonnegative() const {
    for (const auto& [w, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::set<std::string> NCPoly::variables() const {
    std::set<std::string> vs;
    for (const auto& [w, c] : terms_)
        for (const auto& v : w) vs.insert(v);
    return vs;
}

void NCPoly::add_term(const Word& w, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

NCPoly NCPoly::pow(unsigned k) const {
    NCPoly r = constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

NCPoly NCPoly::substitute(const std::map<std::string, NCPoly>& bindings) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
        NCPoly term = constant(c);
        for (const auto& v : w) {
            auto it = bindings.find(v);
            term = it == bindings.end() ? term * variable(v) : term * it->second;
        }
        r += term;
    }
    return r;
}

NCPoly NCPoly::reduce_mod(unsigned m) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
        Int red = c % int(m);
        if (red < 0) red += int(m);
        r.add_term(w, red);
    }
    return r;
}

bool NCPoly::operator<(const NCPoly& o) const {
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
        [](const auto& a, const auto& b) {
            LenLexLess less;
            if (less(a.first, b.first)) return true;
            if (less(b.first, a.first)) return false;
            return a.second < b.second;
        });
}

NCPoly commutator(const NCPoly& p, const NCPoly& q) { return p * q - q * p; }

namespace {

void print_word(std::ostringstream& out, const Word& w) {
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) out << "*";
        out << w[i];
        if (j - i > 1) out << "^" << (j - i);
        first = false;
        i = j;
    }
}

} // namespace

std::string to_string(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (w.empty()) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            print_word(out, w);
        }
        first = false;
    }
    return out.str();
}

namespace {

// Recursive-descent parser for the polynomial grammar.
class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    NCPoly parse() {
        NCPoly p = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw UsageError("polynomial syntax error at position " +
                         std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NCPoly parse_sum() {
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        NCPoly p = parse_product();
        if (neg) p = -p;
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                NCPoly q = parse_product();
                if (c == '+') p += q; else p -= q;
            } else {
                return p;
            }
        }
    }

    // Factors juxtaposed or joined by '*'.
    NCPoly parse_product() {
        NCPoly p = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                p = p * parse_factor();
            } else if (c == '(' || std::isdigit((unsigned char)c) || is_ident_start(c)) {
                p = p * parse_factor();
            } else {
                return p;
            }
        }
    }

    NCPoly parse_factor() {
        NCPoly base = parse_base();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
                fail("expected positive integer exponent after '^'");
            unsigned long e = 0;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
                e = e * 10 + (text_[pos_] - '0');
                if (e > 64) fail("exponent too large");
                ++pos_;
            }
            if (e == 0) fail("exponent must be positive");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    static bool is_ident_start(char c) {
        return std::isalpha((unsigned char)c) || c == '_';
    }
    static bool is_ident_char(char c) {
        return std::isalnum((unsigned char)c) || c == '_';
    }

    NCPoly parse_base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            NCPoly p = parse_sum();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit((unsigned char)c)) {
            Int v = 0;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return NCPoly::constant(v);
        }
        if (is_ident_start(c)) {
            std::string name;
            while (pos_ < text_.size() && is_ident_char(text_[pos_]))
                name.push_back(text_[pos_++]);
            return NCPoly::variable(name);
        }
        fail("expected integer, variable, or '('");
    }
};

} // namespace

NCPoly parse_ncpoly(std::string_view text) { return PolyParser(text).parse(); }

} // namespace brachy
