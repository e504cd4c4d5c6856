#pragma once

#include <optional>

#include "brachy/sterm.hpp"

namespace brachy {

struct BrachyWitness {
    STerm term;
    NCPoly expansion; // expand_tilde(term), equal to the decided input
};

struct DecideConfig {
    size_t max_closure = 200000; // cap on the dominated candidate set
};

/// Decides whether p is the expansion of some term over (successor,
/// product, zero, variables). Complete by the domination bound: every
/// subterm of a zero-pruned witness expands inside the finite set of
/// nonnegative polynomials with vars(p), degree <= deg(p) and coefficients
/// <= max(1, maxcoeff(p)); the procedure closes {0} + vars(p) under
/// successor and product inside that set (see docs/brachynomial-decision.md).
/// Throws ResourceError when the closure exceeds the configured cap.
std::optional<BrachyWitness> decide_brachynomial(const NCPoly& p,
                                                 DecideConfig cfg = {});

} // namespace brachy
