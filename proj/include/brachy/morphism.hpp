#pragma once

#include <utility>
#include <vector>

#include "brachy/finstruct.hpp"

namespace brachy {

/// A total map between two finite structures with its audit results.
/// Flags are recomputed from the map by the enumerator, never trusted.
struct Morphism {
    const FiniteStruct* src = nullptr;
    const FiniteStruct* dst = nullptr;
    std::vector<int> map;
    bool is_brachymorphism = false;
    bool is_additive = false;
    std::vector<std::pair<int, int>> violations; // f(a+b) != f(a)+f(b)
};

struct EnumConfig {
    long long node_budget = 50'000'000; // per top-level branch
    int jobs = 0;                       // 0 = library default
};

struct EnumResult {
    std::vector<Morphism> morphisms; // sorted by map, complete unless exhausted
    long long nodes = 0;
    bool budget_exhausted = false;
};

// f(0)=0 and f(1)=1 are forced; successor values propagate forward along
// the 1+x orbit and every defined product forces the image of the product.
// Backtracks over the remaining elements, most-constrained first.
EnumResult enumerate_brachymorphisms(const FiniteStruct& R,
                                     const FiniteStruct& S,
                                     EnumConfig cfg = {});

// Reference enumerator: filter all |S|^|R| maps. Only for micro inputs.
std::vector<std::vector<int>> enumerate_brachymorphisms_naive(
    const FiniteStruct& R, const FiniteStruct& S);

// Pointwise check of f(0)=0, f(1+x)=1+f(x), f(xy)=f(x)f(y).
bool check_brachymorphism(const FiniteStruct& R, const FiniteStruct& S,
                          const std::vector<int>& map);

// All pairs (a,b) with f(a+b) != f(a)+f(b); requires a brachymorphism.
std::vector<std::pair<int, int>> additivity_violations(const Morphism& f);

} // namespace brachy
