#include "brachy/cpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "brachy/errors.hpp"

namespace brachy {

CPoly CPoly::constant(Int c) {
    CPoly p;
    p.add_term(Multidegree{}, c);
    return p;
}

CPoly CPoly::variable(const std::string& name) {
    CPoly p;
    p.add_term(Multidegree{{name, 1}}, 1);
    return p;
}

std::set<std::string> CPoly::variables() const {
    std::set<std::string> vs;
    for (const auto& [d, c] : terms_)
        for (const auto& [v, e] : d) vs.insert(v);
    return vs;
}

void CPoly::add_term(const Multidegree& d, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CPoly& CPoly::operator+=(const CPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

CPoly CPoly::operator-() const {
    CPoly r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    CPoly r;
    for (const auto& [da, ca] : a.terms_) {
        for (const auto& [db, cb] : b.terms_) {
            Multidegree d = da;
            for (const auto& [v, e] : db) d[v] += e;
            r.add_term(d, ca * cb);
        }
    }
    return r;
}

CPoly CPoly::pow(unsigned k) const {
    CPoly r = constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

CPoly CPoly::substitute(const std::map<std::string, CPoly>& bindings) const {
    CPoly r;
    for (const auto& [d, c] : terms_) {
        CPoly term = constant(c);
        for (const auto& [v, e] : d) {
            auto it = bindings.find(v);
            CPoly base = it == bindings.end() ? variable(v) : it->second;
            term = term * base.pow(e);
        }
        r += term;
    }
    return r;
}

CPoly CPoly::divexact(const Int& k) const {
    CPoly r;
    for (const auto& [d, c] : terms_) {
        if (c % k != 0)
            throw std::logic_error("divexact: coefficient not divisible");
        r.terms_.emplace(d, c / k);
    }
    return r;
}

long long CPoly::eval_mod(const std::map<std::string, long long>& env,
                          long long m) const {
    long long acc = 0;
    for (const auto& [d, c] : terms_) {
        long long t = static_cast<long long>(c % m);
        if (t < 0) t += m;
        for (const auto& [v, e] : d) {
            auto it = env.find(v);
            if (it == env.end()) throw UsageError("eval_mod: unbound variable " + v);
            long long base = ((it->second % m) + m) % m;
            for (unsigned i = 0; i < e; ++i) t = (t * base) % m;
        }
        acc = (acc + t) % m;
    }
    return acc;
}

CPoly CPoly::coeff_of(const std::string& var, unsigned k) const {
    CPoly r;
    for (const auto& [d, c] : terms_) {
        auto it = d.find(var);
        unsigned e = it == d.end() ? 0 : it->second;
        if (e != k) continue;
        Multidegree rest = d;
        rest.erase(var);
        r.add_term(rest, c);
    }
    return r;
}

std::string to_string(const CPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, c] : p.terms()) {
        Int a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (d.empty()) {
            out << a;
        } else {
            bool lead = true;
            if (a != 1) { out << a; lead = false; }
            for (const auto& [v, e] : d) {
                if (!lead) out << "*";
                out << v;
                if (e > 1) out << "^" << e;
                lead = false;
            }
        }
        first = false;
    }
    return out.str();
}

} // namespace brachy
