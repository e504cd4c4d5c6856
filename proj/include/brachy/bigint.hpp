#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace brachy {

// Exact integer coefficients. Vandermonde products and repeated expansion
// overflow machine words, so everything arithmetic goes through this type.
using Int = boost::multiprecision::cpp_int;

} // namespace brachy
