#include "brachy/sterm.hpp"

#include <cctype>
#include <sstream>

#include "brachy/errors.hpp"
#include "brachy/finstruct.hpp"

namespace brachy {

bool STerm::operator==(const STerm& o) const {
    return kind == o.kind && var == o.var && kids == o.kids;
}

bool STerm::operator<(const STerm& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (var != o.var) return var < o.var;
    return kids < o.kids;
}

size_t STerm::size() const {
    size_t s = 1;
    for (const auto& k : kids) s += k.size();
    return s;
}

STerm STerm::substitute(const std::map<std::string, STerm>& bindings) const {
    if (kind == Kind::Var) {
        auto it = bindings.find(var);
        return it == bindings.end() ? *this : it->second;
    }
    STerm r = *this;
    for (auto& k : r.kids) k = k.substitute(bindings);
    return r;
}

STerm s_zero() { return STerm{}; }

STerm s_var(const std::string& name) {
    STerm t;
    t.kind = STerm::Kind::Var;
    t.var = name;
    return t;
}

STerm s_succ(STerm t) {
    STerm s;
    s.kind = STerm::Kind::Succ;
    s.kids.push_back(std::move(t));
    return s;
}

STerm s_prod(STerm a, STerm b) {
    STerm p;
    p.kind = STerm::Kind::Prod;
    p.kids.push_back(std::move(a));
    p.kids.push_back(std::move(b));
    return p;
}

STerm s_int(unsigned n) {
    STerm t = s_zero();
    for (unsigned i = 0; i < n; ++i) t = s_succ(std::move(t));
    return t;
}

SFormula f_atom(STerm lhs, STerm rhs) {
    SFormula f;
    f.kind = SFormula::Kind::Atom;
    f.lhs = std::move(lhs);
    f.rhs = std::move(rhs);
    return f;
}

SFormula f_and(std::vector<SFormula> parts) {
    SFormula f;
    f.kind = SFormula::Kind::And;
    f.parts = std::move(parts);
    return f;
}

SFormula f_or(std::vector<SFormula> parts) {
    SFormula f;
    f.kind = SFormula::Kind::Or;
    f.parts = std::move(parts);
    return f;
}

SFormula f_exists(std::vector<std::string> vars, SFormula body) {
    SFormula f;
    f.kind = SFormula::Kind::Exists;
    f.bound = std::move(vars);
    f.parts.push_back(std::move(body));
    return f;
}

NCPoly expand_tilde(const STerm& t) {
    switch (t.kind) {
    case STerm::Kind::Zero: return NCPoly();
    case STerm::Kind::Var: return NCPoly::variable(t.var);
    case STerm::Kind::Succ: return NCPoly::constant(1) + expand_tilde(t.kids[0]);
    case STerm::Kind::Prod: return expand_tilde(t.kids[0]) * expand_tilde(t.kids[1]);
    }
    throw std::logic_error("expand_tilde: bad kind");
}

namespace {

class STermParser {
public:
    explicit STermParser(std::string_view text) : text_(text) {}

    STerm parse_term_all() {
        STerm t = parse_term();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return t;
    }

    SFormula parse_formula_all() {
        SFormula f = parse_or();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw UsageError("syntax error at position " + std::to_string(pos_) +
                         ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static bool is_ident_start(char c) { return std::isalpha((unsigned char)c) || c == '_'; }
    static bool is_ident_char(char c) { return std::isalnum((unsigned char)c) || c == '_'; }

    std::string parse_ident() {
        skip_ws();
        std::string name;
        while (pos_ < text_.size() && is_ident_char(text_[pos_]))
            name.push_back(text_[pos_++]);
        return name;
    }

    // primary := '0' | number | ident | '(' term ')', then postfix "'"*
    STerm parse_postfix() {
        char c = peek();
        STerm t;
        if (c == '(') {
            ++pos_;
            t = parse_term();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        } else if (std::isdigit((unsigned char)c)) {
            unsigned long n = 0;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
                n = n * 10 + (text_[pos_] - '0');
                if (n > 1000000) fail("numeral too large");
                ++pos_;
            }
            t = s_int(static_cast<unsigned>(n));
        } else if (is_ident_start(c)) {
            std::string name = parse_ident();
            if (name == "exists") fail("'exists' is a reserved word");
            t = s_var(name);
        } else {
            fail("expected term");
        }
        while (peek() == '\'') {
            ++pos_;
            t = s_succ(std::move(t));
        }
        return t;
    }

    STerm parse_term() {
        STerm t = parse_postfix();
        for (;;) {
            char c = peek();
            if (c == '(' || std::isdigit((unsigned char)c) || is_ident_start(c)) {
                size_t save = pos_;
                if (is_ident_start(c)) {
                    // Stop before a quantifier keyword.
                    std::string name = parse_ident();
                    pos_ = save;
                    if (name == "exists") return t;
                }
                t = s_prod(std::move(t), parse_postfix());
            } else {
                return t;
            }
        }
    }

    SFormula parse_atom() {
        STerm lhs = parse_term();
        if (peek() != '=') fail("expected '='");
        ++pos_;
        STerm rhs = parse_term();
        return f_atom(std::move(lhs), std::move(rhs));
    }

    SFormula parse_unit() {
        skip_ws();
        size_t save = pos_;
        char c = peek();
        if (is_ident_start(c)) {
            std::string kw = parse_ident();
            if (kw == "exists") {
                std::vector<std::string> vars;
                while (is_ident_start(peek())) {
                    size_t mark = pos_;
                    std::string v = parse_ident();
                    if (v == "exists") { pos_ = mark; break; }
                    vars.push_back(v);
                }
                if (vars.empty()) fail("expected bound variables after 'exists'");
                if (peek() != '.') fail("expected '.' after bound variables");
                ++pos_;
                return f_exists(std::move(vars), parse_or());
            }
            pos_ = save;
        }
        if (c == '(') {
            // Either a parenthesized formula or an atom whose left term
            // starts with '(': try the atom first, backtrack on failure.
            try {
                return parse_atom();
            } catch (const UsageError&) {
                pos_ = save;
            }
            ++pos_; // consume '('
            SFormula f = parse_or();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return f;
        }
        return parse_atom();
    }

    SFormula parse_and() {
        std::vector<SFormula> parts;
        parts.push_back(parse_unit());
        while (peek() == '&') {
            ++pos_;
            parts.push_back(parse_unit());
        }
        return parts.size() == 1 ? std::move(parts.front()) : f_and(std::move(parts));
    }

    SFormula parse_or() {
        std::vector<SFormula> parts;
        parts.push_back(parse_and());
        while (peek() == '|') {
            ++pos_;
            parts.push_back(parse_and());
        }
        return parts.size() == 1 ? std::move(parts.front()) : f_or(std::move(parts));
    }
};

// Number of leading successors over zero, or -1 when not a pure numeral.
int numeral_value(const STerm& t) {
    const STerm* cur = &t;
    int n = 0;
    while (cur->kind == STerm::Kind::Succ) {
        ++n;
        cur = &cur->kids[0];
    }
    return cur->kind == STerm::Kind::Zero ? n : -1;
}

void print_term(std::ostringstream& out, const STerm& t) {
    int n = numeral_value(t);
    if (n >= 0) {
        out << n;
        return;
    }
    switch (t.kind) {
    case STerm::Kind::Zero:
        out << "0";
        return;
    case STerm::Kind::Var:
        out << t.var;
        return;
    case STerm::Kind::Succ: {
        const STerm& c = t.kids[0];
        bool paren = c.kind == STerm::Kind::Prod || numeral_value(c) > 9;
        if (paren) out << "(";
        print_term(out, c);
        if (paren) out << ")";
        out << "'";
        return;
    }
    case STerm::Kind::Prod: {
        print_term(out, t.kids[0]);
        out << " ";
        const STerm& r = t.kids[1];
        bool paren = r.kind == STerm::Kind::Prod;
        if (paren) out << "(";
        print_term(out, r);
        if (paren) out << ")";
        return;
    }
    }
}

void print_formula(std::ostringstream& out, const SFormula& f, int parent_prec) {
    // precedence: atom/exists-body grouping 0, & = 2, | = 1
    switch (f.kind) {
    case SFormula::Kind::Atom: {
        print_term(out, f.lhs);
        out << " = ";
        print_term(out, f.rhs);
        return;
    }
    case SFormula::Kind::And: {
        bool paren = parent_prec > 2;
        if (paren) out << "(";
        for (size_t i = 0; i < f.parts.size(); ++i) {
            if (i) out << " & ";
            print_formula(out, f.parts[i], 2);
        }
        if (paren) out << ")";
        return;
    }
    case SFormula::Kind::Or: {
        bool paren = parent_prec > 1;
        if (paren) out << "(";
        for (size_t i = 0; i < f.parts.size(); ++i) {
            if (i) out << " | ";
            print_formula(out, f.parts[i], 1);
        }
        if (paren) out << ")";
        return;
    }
    case SFormula::Kind::Exists: {
        bool paren = parent_prec > 0;
        if (paren) out << "(";
        out << "exists";
        for (const auto& v : f.bound) out << " " << v;
        out << " . ";
        print_formula(out, f.parts[0], 0);
        if (paren) out << ")";
        return;
    }
    }
}

} // namespace

STerm parse_sterm(std::string_view text) {
    return STermParser(text).parse_term_all();
}

SFormula parse_sformula(std::string_view text) {
    return STermParser(text).parse_formula_all();
}

std::string to_string(const STerm& t) {
    std::ostringstream out;
    print_term(out, t);
    return out.str();
}

std::string to_string(const SFormula& f) {
    std::ostringstream out;
    print_formula(out, f, 0);
    return out.str();
}

int eval_sterm(const STerm& t, const FiniteStruct& S,
               const std::map<std::string, int>& env) {
    switch (t.kind) {
    case STerm::Kind::Zero:
        return S.zero();
    case STerm::Kind::Var: {
        auto it = env.find(t.var);
        if (it == env.end()) throw UsageError("unbound variable " + t.var);
        return it->second;
    }
    case STerm::Kind::Succ:
        return S.succ(eval_sterm(t.kids[0], S, env));
    case STerm::Kind::Prod:
        return S.mul(eval_sterm(t.kids[0], S, env),
                     eval_sterm(t.kids[1], S, env));
    }
    throw std::logic_error("eval_sterm: bad kind");
}

namespace {

bool eval_rec(const SFormula& f, const FiniteStruct& S,
              std::map<std::string, int>& env) {
    switch (f.kind) {
    case SFormula::Kind::Atom:
        return eval_sterm(f.lhs, S, env) == eval_sterm(f.rhs, S, env);
    case SFormula::Kind::And:
        for (const auto& p : f.parts)
            if (!eval_rec(p, S, env)) return false;
        return true;
    case SFormula::Kind::Or:
        for (const auto& p : f.parts)
            if (eval_rec(p, S, env)) return true;
        return false;
    case SFormula::Kind::Exists: {
        // Odometer over the bound variables.
        const int n = S.order();
        std::vector<int> vals(f.bound.size(), 0);
        std::vector<int> saved(f.bound.size(), -1);
        std::vector<bool> had(f.bound.size(), false);
        for (size_t i = 0; i < f.bound.size(); ++i) {
            auto it = env.find(f.bound[i]);
            if (it != env.end()) { had[i] = true; saved[i] = it->second; }
        }
        bool found = false;
        for (;;) {
            for (size_t i = 0; i < f.bound.size(); ++i) env[f.bound[i]] = vals[i];
            if (eval_rec(f.parts[0], S, env)) { found = true; break; }
            size_t i = 0;
            while (i < vals.size() && ++vals[i] == n) vals[i++] = 0;
            if (i == vals.size()) break;
        }
        for (size_t i = 0; i < f.bound.size(); ++i) {
            if (had[i]) env[f.bound[i]] = saved[i];
            else env.erase(f.bound[i]);
        }
        return found;
    }
    }
    throw std::logic_error("eval_rec: bad kind");
}

} // namespace

bool eval_sformula(const SFormula& f, const FiniteStruct& S,
                   const std::map<std::string, int>& env) {
    std::map<std::string, int> e = env;
    return eval_rec(f, S, e);
}

} // namespace brachy
