#include "brachy/ringzoo.hpp"

#include <cctype>
#include <sstream>

#include "brachy/errors.hpp"

namespace brachy {

namespace {

void check_cap(long long order, const ZooConfig& cfg) {
    if (order > cfg.order_cap)
        throw ResourceError("zoo construction order " + std::to_string(order) +
                                " exceeds cap " + std::to_string(cfg.order_cap),
                            cfg.order_cap);
}

void require_commutative_ring(const FiniteStruct& K, const char* who) {
    if (!K.cls().is_commutative_ring)
        throw UsageError(std::string(who) + ": base must be a commutative ring");
}

// Tuple coding: element = sum of digit[i] * |K|^i.
struct TupleCodec {
    int base;
    int len;
    std::vector<int> decode(long long idx) const {
        std::vector<int> d(len);
        for (int i = 0; i < len; ++i) {
            d[i] = int(idx % base);
            idx /= base;
        }
        return d;
    }
    long long encode(const std::vector<int>& d) const {
        long long idx = 0;
        for (int i = len - 1; i >= 0; --i) idx = idx * base + d[i];
        return idx;
    }
};

int int_into(const FiniteStruct& K, int v) {
    int acc = K.zero();
    int step = v >= 0 ? K.one() : K.neg(K.one());
    for (int i = 0; i < (v >= 0 ? v : -v); ++i) acc = K.add(acc, step);
    return acc;
}

} // namespace

FiniteStruct zoo_zmod(int n, ZooConfig cfg) {
    if (n <= 0) throw UsageError("zmod: modulus must be positive");
    check_cap(n, cfg);
    std::vector<uint16_t> add(size_t(n) * n), mul(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            add[size_t(i) * n + j] = uint16_t((i + j) % n);
            mul[size_t(i) * n + j] = uint16_t((i * j) % n);
        }
    return FiniteStruct::make(n, std::move(add), std::move(mul), 0, 1 % n);
}

FiniteStruct zoo_product(const FiniteStruct& A, const FiniteStruct& B,
                         ZooConfig cfg) {
    const long long n = (long long)A.order() * B.order();
    check_cap(n, cfg);
    const int nb = B.order();
    std::vector<uint16_t> add(size_t(n) * n), mul(size_t(n) * n);
    std::vector<std::string> labels(n);
    for (int a1 = 0; a1 < A.order(); ++a1)
        for (int b1 = 0; b1 < nb; ++b1) {
            int i = a1 * nb + b1;
            labels[i] = "(" + A.label(a1) + "," + B.label(b1) + ")";
            for (int a2 = 0; a2 < A.order(); ++a2)
                for (int b2 = 0; b2 < nb; ++b2) {
                    int j = a2 * nb + b2;
                    add[size_t(i) * n + j] =
                        uint16_t(A.add(a1, a2) * nb + B.add(b1, b2));
                    mul[size_t(i) * n + j] =
                        uint16_t(A.mul(a1, a2) * nb + B.mul(b1, b2));
                }
        }
    return FiniteStruct::make(int(n), std::move(add), std::move(mul),
                              A.zero() * nb + B.zero(), A.one() * nb + B.one(),
                              std::move(labels));
}

namespace {

FiniteStruct matrix_like(const FiniteStruct& K, int n,
                         const std::vector<std::pair<int, int>>& positions,
                         ZooConfig cfg, const char* who) {
    require_commutative_ring(K, who);
    const int k = K.order();
    const int len = int(positions.size());
    long long order = 1;
    for (int i = 0; i < len; ++i) {
        order *= k;
        check_cap(order, cfg);
    }
    TupleCodec codec{k, len};

    // position index of (r,c), or -1 when the entry is identically zero
    std::vector<int> pos_of(size_t(n) * n, -1);
    for (int p = 0; p < len; ++p)
        pos_of[size_t(positions[p].first) * n + positions[p].second] = p;

    auto entry = [&](const std::vector<int>& d, int r, int c) {
        int p = pos_of[size_t(r) * n + c];
        return p < 0 ? K.zero() : d[p];
    };

    const int N = int(order);
    std::vector<uint16_t> add(size_t(N) * N), mul(size_t(N) * N);
    std::vector<std::string> labels(N);
    std::vector<std::vector<int>> digits(N);
    for (int i = 0; i < N; ++i) digits[i] = codec.decode(i);

    for (int i = 0; i < N; ++i) {
        std::ostringstream lab;
        lab << "[";
        for (int r = 0; r < n; ++r) {
            if (r) lab << ";";
            for (int c = 0; c < n; ++c) {
                if (c) lab << ",";
                lab << K.label(entry(digits[i], r, c));
            }
        }
        lab << "]";
        labels[i] = lab.str();
        for (int j = 0; j < N; ++j) {
            std::vector<int> sum(len), prod(len);
            for (int p = 0; p < len; ++p) {
                auto [r, c] = positions[p];
                sum[p] = K.add(digits[i][p], digits[j][p]);
                int acc = K.zero();
                for (int t = 0; t < n; ++t)
                    acc = K.add(acc, K.mul(entry(digits[i], r, t),
                                           entry(digits[j], t, c)));
                prod[p] = acc;
            }
            add[size_t(i) * N + j] = uint16_t(codec.encode(sum));
            mul[size_t(i) * N + j] = uint16_t(codec.encode(prod));
        }
    }

    std::vector<int> zero_d(len, K.zero()), one_d(len, K.zero());
    for (int p = 0; p < len; ++p)
        if (positions[p].first == positions[p].second) one_d[p] = K.one();
    return FiniteStruct::make(N, std::move(add), std::move(mul),
                              int(codec.encode(zero_d)),
                              int(codec.encode(one_d)), std::move(labels));
}

} // namespace

FiniteStruct zoo_matring(const FiniteStruct& K, int n, ZooConfig cfg) {
    if (n <= 0) throw UsageError("matring: order must be positive");
    std::vector<std::pair<int, int>> pos;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) pos.emplace_back(r, c);
    return matrix_like(K, n, pos, cfg, "matring");
}

FiniteStruct zoo_triangular(const FiniteStruct& K, int n, bool upper,
                            ZooConfig cfg) {
    if (n <= 0) throw UsageError("triangular: order must be positive");
    std::vector<std::pair<int, int>> pos;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (upper ? r <= c : r >= c) pos.emplace_back(r, c);
    return matrix_like(K, n, pos, cfg, "triangular");
}

FiniteStruct zoo_quotientpoly(const FiniteStruct& K, std::vector<int> coeffs,
                              ZooConfig cfg) {
    require_commutative_ring(K, "quotientpoly");
    if (coeffs.size() < 2)
        throw UsageError("quotientpoly: modulus must have degree >= 1");
    const int d = int(coeffs.size()) - 1;
    std::vector<int> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = int_into(K, coeffs[i]);
    if (c.back() != K.one())
        throw UsageError("quotientpoly: modulus must be monic");

    const int k = K.order();
    long long order = 1;
    for (int i = 0; i < d; ++i) {
        order *= k;
        check_cap(order, cfg);
    }
    TupleCodec codec{k, d};
    const int N = int(order);

    // Reduce a degree <= 2d-2 coefficient vector modulo the monic modulus.
    auto reduce = [&](std::vector<int> v) {
        for (int deg = int(v.size()) - 1; deg >= d; --deg) {
            int lead = v[deg];
            if (lead == K.zero()) continue;
            v[deg] = K.zero();
            for (int i = 0; i < d; ++i)
                v[deg - d + i] = K.sub(v[deg - d + i], K.mul(lead, c[i]));
        }
        v.resize(d);
        return v;
    };

    auto poly_label = [&](const std::vector<int>& digits) {
        std::ostringstream os;
        bool any = false;
        for (int i = d - 1; i >= 0; --i) {
            if (digits[i] == K.zero()) continue;
            if (any) os << "+";
            if (i == 0 || digits[i] != K.one()) os << K.label(digits[i]);
            if (i >= 1 && digits[i] != K.one()) os << "*";
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
            any = true;
        }
        if (!any) os << K.label(K.zero());
        return os.str();
    };

    std::vector<uint16_t> add(size_t(N) * N), mul(size_t(N) * N);
    std::vector<std::string> labels(N);
    for (int i = 0; i < N; ++i) {
        auto di = codec.decode(i);
        labels[i] = poly_label(di);
        for (int j = 0; j < N; ++j) {
            auto dj = codec.decode(j);
            std::vector<int> s(d);
            for (int p = 0; p < d; ++p) s[p] = K.add(di[p], dj[p]);
            std::vector<int> prod(2 * d - 1, K.zero());
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q)
                    prod[p + q] = K.add(prod[p + q], K.mul(di[p], dj[q]));
            add[size_t(i) * N + j] = uint16_t(codec.encode(s));
            mul[size_t(i) * N + j] = uint16_t(codec.encode(reduce(prod)));
        }
    }
    std::vector<int> zero_d(d, K.zero()), one_d(d, K.zero());
    one_d[0] = K.one();
    return FiniteStruct::make(N, std::move(add), std::move(mul),
                              int(codec.encode(zero_d)),
                              int(codec.encode(one_d)), std::move(labels));
}

FiniteStruct zoo_monoidring(const FiniteStruct& K, int m,
                            const std::vector<uint16_t>& montable, int monunit,
                            ZooConfig cfg) {
    require_commutative_ring(K, "monoidring");
    if (m <= 0 || montable.size() != size_t(m) * m)
        throw UsageError("monoidring: bad monoid table");
    auto mo = [&](int a, int b) { return montable[size_t(a) * m + b]; };
    for (int a = 0; a < m; ++a) {
        if (mo(monunit, a) != a || mo(a, monunit) != a)
            throw UsageError("monoidring: designated unit is not a unit");
        for (int b = 0; b < m; ++b) {
            if (mo(a, b) >= m) throw UsageError("monoidring: entry out of range");
            for (int c2 = 0; c2 < m; ++c2)
                if (mo(mo(a, b), c2) != mo(a, mo(b, c2)))
                    throw UsageError("monoidring: table not associative");
        }
    }

    const int k = K.order();
    long long order = 1;
    for (int i = 0; i < m; ++i) {
        order *= k;
        check_cap(order, cfg);
    }
    TupleCodec codec{k, m};
    const int N = int(order);

    std::vector<uint16_t> add(size_t(N) * N), mul(size_t(N) * N);
    std::vector<std::string> labels(N);
    for (int i = 0; i < N; ++i) {
        auto di = codec.decode(i);
        std::ostringstream lab;
        bool any = false;
        for (int p = 0; p < m; ++p) {
            if (di[p] == K.zero()) continue;
            if (any) lab << "+";
            if (di[p] != K.one() || p == monunit) lab << K.label(di[p]);
            if (di[p] != K.one() && p != monunit) lab << "*";
            if (p != monunit) lab << "m" << p;
            any = true;
        }
        if (!any) lab << K.label(K.zero());
        labels[i] = lab.str();
        for (int j = 0; j < N; ++j) {
            auto dj = codec.decode(j);
            std::vector<int> s(m), prod(m, K.zero());
            for (int p = 0; p < m; ++p) s[p] = K.add(di[p], dj[p]);
            for (int p = 0; p < m; ++p)
                for (int q = 0; q < m; ++q) {
                    int t = mo(p, q);
                    prod[t] = K.add(prod[t], K.mul(di[p], dj[q]));
                }
            add[size_t(i) * N + j] = uint16_t(codec.encode(s));
            mul[size_t(i) * N + j] = uint16_t(codec.encode(prod));
        }
    }
    std::vector<int> zero_d(m, K.zero()), one_d(m, K.zero());
    one_d[monunit] = K.one();
    return FiniteStruct::make(N, std::move(add), std::move(mul),
                              int(codec.encode(zero_d)),
                              int(codec.encode(one_d)), std::move(labels));
}

namespace {

class ZooParser {
public:
    ZooParser(std::string_view text, ZooConfig cfg) : text_(text), cfg_(cfg) {}

    FiniteStruct parse() {
        FiniteStruct s = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return s;
    }

private:
    std::string_view text_;
    ZooConfig cfg_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw UsageError("zoo expression error at position " +
                         std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string ident() {
        skip_ws();
        std::string s;
        while (pos_ < text_.size() &&
               (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
            s.push_back(text_[pos_++]);
        if (s.empty()) fail("expected identifier");
        return s;
    }

    int integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
            fail("expected integer");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) fail("integer too large");
            ++pos_;
        }
        return int(neg ? -v : v);
    }

    FiniteStruct parse_expr() {
        std::string name = ident();
        expect('(');
        FiniteStruct result = [&]() -> FiniteStruct {
            if (name == "zmod") return zoo_zmod(integer(), cfg_);
            if (name == "product") {
                FiniteStruct a = parse_expr();
                expect(',');
                FiniteStruct b = parse_expr();
                return zoo_product(a, b, cfg_);
            }
            if (name == "matring") {
                FiniteStruct k = parse_expr();
                expect(',');
                return zoo_matring(k, integer(), cfg_);
            }
            if (name == "triangular") {
                FiniteStruct k = parse_expr();
                expect(',');
                int n = integer();
                expect(',');
                std::string side = ident();
                if (side != "upper" && side != "lower")
                    fail("expected 'upper' or 'lower'");
                return zoo_triangular(k, n, side == "upper", cfg_);
            }
            if (name == "quotientpoly") {
                FiniteStruct k = parse_expr();
                std::vector<int> coeffs;
                while (peek() == ',') {
                    ++pos_;
                    coeffs.push_back(integer());
                }
                return zoo_quotientpoly(k, std::move(coeffs), cfg_);
            }
            if (name == "monoidring") {
                FiniteStruct k = parse_expr();
                expect(',');
                std::string mon = ident();
                if (mon == "idem2") {
                    // {1, e} with e*e = e
                    return zoo_monoidring(k, 2, {0, 1, 1, 1}, 0, cfg_);
                }
                fail("unknown monoid name '" + mon + "' (available: idem2)");
            }
            fail("unknown constructor '" + name + "'");
        }();
        expect(')');
        return result;
    }
};

} // namespace

FiniteStruct build_zoo(const std::string& expr, ZooConfig cfg) {
    return ZooParser(expr, cfg).parse();
}

std::vector<std::pair<std::string, FiniteStruct>> default_battery() {
    const char* exprs[] = {
        "zmod(2)",
        "zmod(3)",
        "zmod(4)",
        "zmod(6)",
        "zmod(8)",
        "quotientpoly(zmod(2),1,1,1)",
        "quotientpoly(zmod(2),0,0,1)",
        "product(zmod(2),zmod(2))",
        "matring(zmod(2),2)",
        "triangular(zmod(2),2,upper)",
        "triangular(zmod(2),2,lower)",
        "monoidring(zmod(2),idem2)",
    };
    std::vector<std::pair<std::string, FiniteStruct>> battery;
    for (const char* e : exprs) battery.emplace_back(e, build_zoo(e));
    return battery;
}

} // namespace brachy
