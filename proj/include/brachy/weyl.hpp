#pragma once

#include "brachy/ncpoly.hpp"

namespace brachy {

/// Normal form in the algebra with relation x*y - y*x = 1: rewrites the
/// leftmost occurrence of the subword y x to x y - 1 until every word has
/// shape x^i y^j. Each step strictly reduces (inversions, length), so the
/// rewriting terminates. With modulus > 0 coefficients are reduced mod m.
/// Throws UsageError if the input mentions a variable other than x, y.
NCPoly weyl_normal_form(const NCPoly& p, unsigned modulus);

} // namespace brachy
