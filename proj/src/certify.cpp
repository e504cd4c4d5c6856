#include "brachy/certify.hpp"

#include <algorithm>

#include "brachy/errors.hpp"

namespace brachy {

const char* rule_name(AddRule r) {
    switch (r) {
    case AddRule::IntMultiple: return "int-multiple";
    case AddRule::Center: return "center";
    case AddRule::JacobsonRadical: return "jacobson-radical";
    case AddRule::Subgroup: return "subgroup";
    case AddRule::TimesRegular: return "times-regular";
    case AddRule::Power: return "power";
    case AddRule::PiRegular: return "pi-regular";
    case AddRule::IntegralClosure: return "integral-closure";
    case AddRule::Commutators: return "commutators";
    case AddRule::Generated: return "generated";
    }
    return "?";
}

const char* rule_name(PairRule r) {
    switch (r) {
    case PairRule::FromAddable: return "from-addable";
    case PairRule::ZeroProduct: return "zero-product";
    case PairRule::WeakCommute: return "weak-commute";
    case PairRule::SumAddable: return "sum-addable";
    case PairRule::QuasiTransfer: return "quasi-transfer";
    case PairRule::CommutatorTriple: return "commutator-triple";
    }
    return "?";
}

namespace {

int commutator_elem(const FiniteStruct& R, int x, int y) {
    return R.sub(R.mul(x, y), R.mul(y, x));
}

// p2-shape evaluation (1 + z*x)(1 + y*z) in the structure.
int p2_value(const FiniteStruct& R, int x, int y, int z) {
    return R.mul(R.succ(R.mul(z, x)), R.succ(R.mul(y, z)));
}

struct SpanStep {
    // value -> (value at previous level, coefficient used)
    std::map<int, std::pair<int, int>> reach;
};

// Levels of A + A*y + A*y^2 + ...; level j covers powers up to y^j.
std::vector<SpanStep> build_span(const FiniteStruct& R,
                                 const std::vector<int>& coeffs, int y,
                                 int max_level) {
    std::vector<SpanStep> levels;
    SpanStep base;
    for (int a : coeffs) base.reach.emplace(a, std::make_pair(-1, a));
    levels.push_back(std::move(base));
    int ypow = R.one();
    for (int j = 1; j <= max_level; ++j) {
        ypow = R.mul(ypow, y);
        SpanStep next;
        for (const auto& [val, bp] : levels.back().reach)
            for (int a : coeffs) {
                int v = R.add(val, R.mul(a, ypow));
                next.reach.emplace(v, std::make_pair(val, a));
            }
        levels.push_back(std::move(next));
    }
    return levels;
}

// Coefficients a_0..a_j for value at level j, lowest power first.
std::vector<int> trace_span(const std::vector<SpanStep>& levels, int level,
                            int value) {
    std::vector<int> coeffs;
    int v = value;
    for (int j = level; j >= 0; --j) {
        const auto& [prev, a] = levels[j].reach.at(v);
        coeffs.push_back(a);
        v = prev;
    }
    std::reverse(coeffs.begin(), coeffs.end());
    return coeffs;
}

} // namespace

AddCertification certify_addable(const FiniteStruct& R, CertifyConfig cfg) {
    if (!R.cls().is_ring) throw UsageError("certify_addable: not a ring");
    const int n = R.order();
    AddCertification out;
    out.certified.assign(n, false);

    auto enabled = [&](AddRule r) { return (cfg.enabled_rules & rule_bit(r)) != 0; };
    auto certify = [&](int e, AddCertificate c) {
        if (out.certified[e]) return false;
        out.certified[e] = true;
        c.element = e;
        ++out.fired[rule_name(c.rule)];
        out.certs.push_back(std::move(c));
        return true;
    };
    auto certified_list = [&]() {
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if (out.certified[i]) v.push_back(i);
        return v;
    };

    std::vector<int> regulars, quasi(n, -1);
    for (int x = 0; x < n; ++x)
        for (int t = 0; t < n; ++t)
            if (R.mul(R.mul(x, t), x) == x) {
                regulars.push_back(x);
                quasi[x] = t;
                break;
            }

    std::vector<int> radical;
    if (enabled(AddRule::JacobsonRadical)) radical = jacobson_radical(R);

    bool changed = true;
    while (changed) {
        changed = false;

        if (enabled(AddRule::IntMultiple)) {
            int acc = R.zero();
            for (int k = 0; k <= n; ++k) {
                changed |= certify(acc, {-1, AddRule::IntMultiple, {}, {k}});
                acc = R.add(acc, R.one());
            }
        }
        if (enabled(AddRule::Center)) {
            for (int x = 0; x < n; ++x) {
                bool central = true;
                for (int y = 0; y < n && central; ++y)
                    if (R.mul(x, y) != R.mul(y, x)) central = false;
                if (central)
                    changed |= certify(x, {-1, AddRule::Center, {}, {}});
            }
        }
        if (enabled(AddRule::JacobsonRadical)) {
            for (int x : radical)
                changed |= certify(x, {-1, AddRule::JacobsonRadical, {}, {}});
        }
        if (enabled(AddRule::Subgroup)) {
            auto certed = certified_list();
            for (int a : certed) {
                changed |= certify(R.neg(a), {-1, AddRule::Subgroup, {a}, {1}});
                for (int b : certed)
                    changed |=
                        certify(R.add(a, b), {-1, AddRule::Subgroup, {a, b}, {0}});
            }
        }
        if (enabled(AddRule::TimesRegular)) {
            auto certed = certified_list();
            for (int a : certed)
                for (int u : regulars) {
                    changed |= certify(
                        R.mul(a, u),
                        {-1, AddRule::TimesRegular, {a}, {u, quasi[u], 0}});
                    changed |= certify(
                        R.mul(u, a),
                        {-1, AddRule::TimesRegular, {a}, {u, quasi[u], 1}});
                }
        }
        if (enabled(AddRule::Power)) {
            for (int x = 0; x < n; ++x) {
                if (out.certified[x]) continue;
                for (int k = 2; k <= n; ++k)
                    if (out.certified[R.pow(x, k)]) {
                        changed |= certify(
                            x, {-1, AddRule::Power, {R.pow(x, k)}, {k}});
                        break;
                    }
            }
        }
        if (enabled(AddRule::PiRegular)) {
            for (int x = 0; x < n; ++x) {
                if (out.certified[x]) continue;
                for (int k = 1; k <= n; ++k) {
                    int p = R.pow(x, k);
                    if (quasi[p] >= 0) {
                        changed |= certify(
                            x, {-1, AddRule::PiRegular, {}, {k, quasi[p]}});
                        break;
                    }
                }
            }
        }
        if (enabled(AddRule::IntegralClosure)) {
            auto certed = certified_list();
            if (!certed.empty()) {
                for (int x = 0; x < n; ++x) {
                    if (out.certified[x]) continue;
                    auto levels = build_span(R, certed, x, n - 1);
                    for (int deg = 1; deg <= n; ++deg) {
                        int target = R.pow(x, deg);
                        const auto& lvl = levels[deg - 1];
                        if (lvl.reach.count(target)) {
                            auto coeffs = trace_span(levels, deg - 1, target);
                            AddCertificate c{-1, AddRule::IntegralClosure,
                                             coeffs, {deg}};
                            changed |= certify(x, std::move(c));
                            break;
                        }
                    }
                }
            }
        }
        if (enabled(AddRule::Commutators)) {
            for (int x = 0; x < n; ++x) {
                if (out.certified[x]) continue;
                bool all = true;
                std::vector<int> comms;
                for (int y = 0; y < n && all; ++y) {
                    int c = commutator_elem(R, x, y);
                    if (!out.certified[c]) all = false;
                    else comms.push_back(c);
                }
                if (all) {
                    std::sort(comms.begin(), comms.end());
                    comms.erase(std::unique(comms.begin(), comms.end()),
                                comms.end());
                    changed |= certify(x, {-1, AddRule::Commutators, comms, {}});
                }
            }
        }
        if (enabled(AddRule::Generated)) {
            auto certed = certified_list();
            bool missing = std::any_of(out.certified.begin(), out.certified.end(),
                                       [](bool b) { return !b; });
            if (!certed.empty() && missing) {
                for (int y = 0; y < n; ++y) {
                    auto levels = build_span(R, certed, y, n - 1);
                    const auto& top = levels.back().reach;
                    bool spans = true;
                    for (int e = 0; e < n && spans; ++e)
                        if (!top.count(e)) spans = false;
                    if (!spans) continue;
                    for (int e = 0; e < n; ++e) {
                        if (out.certified[e]) continue;
                        auto coeffs = trace_span(levels, n - 1, e);
                        AddCertificate c{-1, AddRule::Generated, coeffs, {y}};
                        changed |= certify(e, std::move(c));
                    }
                    break;
                }
            }
        }
    }
    return out;
}

bool replay_add_certificate(const FiniteStruct& R, const AddCertificate& c,
                            const std::vector<bool>& before) {
    const int n = R.order();
    auto all_before = [&](const std::vector<int>& es) {
        return std::all_of(es.begin(), es.end(), [&](int e) { return before[e]; });
    };
    switch (c.rule) {
    case AddRule::IntMultiple: {
        int acc = R.zero();
        for (int i = 0; i < c.aux[0]; ++i) acc = R.add(acc, R.one());
        return acc == c.element;
    }
    case AddRule::Center: {
        for (int y = 0; y < n; ++y)
            if (R.mul(c.element, y) != R.mul(y, c.element)) return false;
        return true;
    }
    case AddRule::JacobsonRadical: {
        auto rad = jacobson_radical(R);
        return std::find(rad.begin(), rad.end(), c.element) != rad.end();
    }
    case AddRule::Subgroup: {
        if (!all_before(c.premises)) return false;
        if (c.aux[0] == 1) return R.neg(c.premises[0]) == c.element;
        return R.add(c.premises[0], c.premises[1]) == c.element;
    }
    case AddRule::TimesRegular: {
        if (!all_before(c.premises)) return false;
        int a = c.premises[0], u = c.aux[0], v = c.aux[1];
        if (R.mul(R.mul(u, v), u) != u) return false;
        return c.aux[2] == 0 ? R.mul(a, u) == c.element
                             : R.mul(u, a) == c.element;
    }
    case AddRule::Power: {
        if (!all_before(c.premises)) return false;
        return R.pow(c.element, c.aux[0]) == c.premises[0];
    }
    case AddRule::PiRegular: {
        int p = R.pow(c.element, c.aux[0]);
        return R.mul(R.mul(p, c.aux[1]), p) == p;
    }
    case AddRule::IntegralClosure: {
        if (!all_before(c.premises)) return false;
        int deg = c.aux[0];
        if (int(c.premises.size()) != deg) return false;
        int sum = R.zero(), xpow = R.one();
        for (int k = 0; k < deg; ++k) {
            sum = R.add(sum, R.mul(c.premises[k], xpow));
            xpow = R.mul(xpow, c.element);
        }
        return R.pow(c.element, deg) == sum;
    }
    case AddRule::Commutators: {
        if (!all_before(c.premises)) return false;
        for (int y = 0; y < n; ++y) {
            int cm = commutator_elem(R, c.element, y);
            if (!std::binary_search(c.premises.begin(), c.premises.end(), cm))
                return false;
        }
        return true;
    }
    case AddRule::Generated: {
        if (!all_before(c.premises)) return false;
        int y = c.aux[0];
        int sum = R.zero(), ypow = R.one();
        for (int a : c.premises) {
            sum = R.add(sum, R.mul(a, ypow));
            ypow = R.mul(ypow, y);
        }
        return sum == c.element;
    }
    }
    return false;
}

bool replay_all(const FiniteStruct& R, const AddCertification& cert) {
    std::vector<bool> before(R.order(), false);
    for (const auto& c : cert.certs) {
        if (!replay_add_certificate(R, c, before)) return false;
        before[c.element] = true;
    }
    return true;
}

PairCertification certify_summable_pairs(const FiniteStruct& R,
                                          CertifyConfig cfg) {
    if (!R.cls().is_ring)
        throw UsageError("certify_summable_pairs: not a ring");
    const int n = R.order();
    PairCertification out;
    out.order = n;
    out.certified.assign(size_t(n) * n, false);
    out.addable = certify_addable(R, cfg);

    auto idx = [&](int x, int y) { return size_t(x) * n + y; };
    auto certify = [&](int x, int y, PairCertificate c) {
        if (out.certified[idx(x, y)]) return false;
        out.certified[idx(x, y)] = true;
        c.pair = {x, y};
        ++out.fired[rule_name(c.rule)];
        out.certs.push_back(std::move(c));
        return true;
    };

    std::vector<std::pair<int, int>> quasi_pairs; // (u,v) with u = uvu
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (R.mul(R.mul(u, v), u) == u) quasi_pairs.emplace_back(u, v);

    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a) {
            if (!out.addable.certified[a]) continue;
            for (int x = 0; x < n; ++x) {
                changed |= certify(a, x, {{}, PairRule::FromAddable, {}, {a}, {}});
                changed |= certify(x, a, {{}, PairRule::FromAddable, {}, {a}, {}});
            }
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (out.certified[idx(x, y)]) continue;
                if (R.mul(x, y) == R.zero()) {
                    changed |= certify(x, y, {{}, PairRule::ZeroProduct, {}, {}, {}});
                } else if (R.mul(R.mul(x, y), x) == R.mul(R.mul(x, x), y)) {
                    changed |= certify(x, y, {{}, PairRule::WeakCommute, {}, {}, {}});
                } else if (out.addable.certified[R.add(x, y)]) {
                    changed |= certify(
                        x, y, {{}, PairRule::SumAddable, {}, {R.add(x, y)}, {}});
                }
            }
        // Transfer along quasi-inverses.
        {
            std::vector<std::pair<int, int>> known;
            for (int x = 0; x < n; ++x)
                for (int w = 0; w < n; ++w)
                    if (out.certified[idx(x, w)]) known.emplace_back(x, w);
            for (const auto& [u, v] : quasi_pairs)
                for (const auto& [x, w] : known)
                    for (int y = 0; y < n; ++y) {
                        if (R.mul(y, v) != w) continue;
                        changed |= certify(R.mul(x, u), y,
                                           {{},
                                            PairRule::QuasiTransfer,
                                            {{x, w}},
                                            {},
                                            {u, v, x, y}});
                    }
        }
        // Commutator rule, three-premise form.
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (out.certified[idx(x, y)]) continue;
                int c = commutator_elem(R, x, y);
                int z = R.add(x, y);
                int t1 = R.add(R.mul(x, x), R.mul(y, x));
                int t2 = p2_value(R, x, y, z);
                int t3 = p2_value(R, x, R.succ(y), R.succ(z));
                if (out.certified[idx(c, t1)] && out.certified[idx(c, t2)] &&
                    out.certified[idx(c, t3)]) {
                    changed |= certify(x, y,
                                       {{},
                                        PairRule::CommutatorTriple,
                                        {{c, t1}, {c, t2}, {c, t3}},
                                        {},
                                        {}});
                }
            }
    }
    return out;
}

bool replay_pair_certificate(const FiniteStruct& R, const PairCertificate& c,
                             const std::vector<bool>& pairs_before,
                             const std::vector<bool>& addable) {
    const int n = R.order();
    auto idx = [&](int x, int y) { return size_t(x) * n + y; };
    auto premise_ok = [&]() {
        for (const auto& [a, b] : c.pair_premises)
            if (!pairs_before[idx(a, b)]) return false;
        for (int e : c.elem_premises)
            if (!addable[e]) return false;
        return true;
    };
    const auto [x, y] = c.pair;
    switch (c.rule) {
    case PairRule::FromAddable:
        if (!premise_ok()) return false;
        return c.elem_premises.size() == 1 &&
               (x == c.elem_premises[0] || y == c.elem_premises[0]);
    case PairRule::ZeroProduct:
        return R.mul(x, y) == R.zero();
    case PairRule::WeakCommute:
        return R.mul(R.mul(x, y), x) == R.mul(R.mul(x, x), y);
    case PairRule::SumAddable:
        if (!premise_ok()) return false;
        return c.elem_premises.size() == 1 && R.add(x, y) == c.elem_premises[0];
    case PairRule::QuasiTransfer: {
        if (!premise_ok()) return false;
        int u = c.aux[0], v = c.aux[1], x0 = c.aux[2], y0 = c.aux[3];
        if (R.mul(R.mul(u, v), u) != u) return false;
        if (c.pair_premises.size() != 1) return false;
        auto [px, pw] = c.pair_premises[0];
        if (px != x0 || pw != R.mul(y0, v)) return false;
        return x == R.mul(x0, u) && y == y0;
    }
    case PairRule::CommutatorTriple: {
        if (!premise_ok()) return false;
        int cm = commutator_elem(R, x, y);
        int z = R.add(x, y);
        std::vector<std::pair<int, int>> expect = {
            {cm, R.add(R.mul(x, x), R.mul(y, x))},
            {cm, p2_value(R, x, y, z)},
            {cm, p2_value(R, x, R.succ(y), R.succ(z))}};
        return c.pair_premises == expect;
    }
    }
    return false;
}

bool replay_all(const FiniteStruct& R, const PairCertification& cert) {
    if (!replay_all(R, cert.addable)) return false;
    std::vector<bool> addable(R.order(), false);
    for (const auto& c : cert.addable.certs) addable[c.element] = true;
    std::vector<bool> before(size_t(R.order()) * R.order(), false);
    for (const auto& c : cert.certs) {
        if (!replay_pair_certificate(R, c, before, addable)) return false;
        before[size_t(c.pair.first) * R.order() + c.pair.second] = true;
    }
    return true;
}

} // namespace brachy
