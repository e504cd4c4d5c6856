#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brachy/finstruct.hpp"

namespace brachy {

struct ZooConfig {
    int order_cap = 4096;
};

// Direct constructors. Commutativity prerequisites are validated and the
// resulting order is checked against the cap before tables materialize.
FiniteStruct zoo_zmod(int n, ZooConfig cfg = {});
FiniteStruct zoo_product(const FiniteStruct& A, const FiniteStruct& B,
                         ZooConfig cfg = {});
FiniteStruct zoo_matring(const FiniteStruct& K, int n, ZooConfig cfg = {});
FiniteStruct zoo_triangular(const FiniteStruct& K, int n, bool upper,
                            ZooConfig cfg = {});
// coeffs: ascending coefficients of a monic modulus, constant first,
// as integers mapped into K via repeated addition of the unit.
FiniteStruct zoo_quotientpoly(const FiniteStruct& K, std::vector<int> coeffs,
                              ZooConfig cfg = {});
FiniteStruct zoo_monoidring(const FiniteStruct& K, int m,
                            const std::vector<uint16_t>& montable, int monunit,
                            ZooConfig cfg = {});

// Expression syntax, e.g. `matring(zmod(2),2)`, `triangular(zmod(2),2,upper)`,
// `quotientpoly(zmod(2),1,1,1)`, `monoidring(zmod(2),idem2)`.
FiniteStruct build_zoo(const std::string& expr, ZooConfig cfg = {});

// The curated battery: small rings spanning commutative/noncommutative,
// semisimple/non-semisimple, with nontrivial radicals and idempotents.
std::vector<std::pair<std::string, FiniteStruct>> default_battery();

} // namespace brachy
