#include "brachy/weyl.hpp"

#include <deque>
#include <utility>

#include "brachy/errors.hpp"

namespace brachy {

namespace {

// Index of the leftmost "y x" subword, or -1 when already x^i y^j.
int leftmost_inversion(const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == "y" && w[i + 1] == "x") return static_cast<int>(i);
    return -1;
}

} // namespace

NCPoly weyl_normal_form(const NCPoly& p, unsigned modulus) {
    for (const auto& v : p.variables())
        if (v != "x" && v != "y")
            throw UsageError("weyl_normal_form: variable '" + v +
                             "' outside {x, y}");

    NCPoly result;
    std::deque<std::pair<Word, Int>> work(p.terms().begin(), p.terms().end());
    while (!work.empty()) {
        auto [w, c] = work.front();
        work.pop_front();
        int i = leftmost_inversion(w);
        if (i < 0) {
            result.add_term(w, c);
            continue;
        }
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        Word erased = w;
        erased.erase(erased.begin() + i, erased.begin() + i + 2);
        work.emplace_front(std::move(erased), -c);
        work.emplace_front(std::move(swapped), c);
    }
    return modulus > 0 ? result.reduce_mod(modulus) : result;
}

} // namespace brachy
