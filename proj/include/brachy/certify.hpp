#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "brachy/finstruct.hpp"

namespace brachy {

// Closure rules for certified-addable elements. The computed set is a
// certified lower bound: true addability quantifies over all target rings.
enum class AddRule {
    IntMultiple,     // integer multiples of the unit
    Center,          // central elements
    JacobsonRadical, // elements of J(R)
    Subgroup,        // sums and negatives of certified elements
    TimesRegular,    // certified times regular, both sides
    Power,           // x certified once some power of x is
    PiRegular,       // some power of x is regular
    IntegralClosure, // x^n = sum a_k x^k with certified coefficients
    Commutators,     // all commutators [x,y] certified
    Generated,       // every element is sum a_k y^k with certified a_k
};

const char* rule_name(AddRule r);
constexpr uint32_t rule_bit(AddRule r) { return uint32_t(1) << int(r); }
constexpr uint32_t kAllAddRules = (uint32_t(1) << 10) - 1;

struct AddCertificate {
    int element = -1;
    AddRule rule{};
    std::vector<int> premises; // previously certified elements
    std::vector<int> aux;      // rule-specific witnesses (see replay)
};

struct CertifyConfig {
    uint32_t enabled_rules = kAllAddRules;
};

struct AddCertification {
    std::vector<bool> certified;
    std::vector<AddCertificate> certs; // in derivation order
    std::map<std::string, int> fired;  // rule name -> conclusions drawn
};

// Round-robin fixpoint over the enabled rules; one certificate per element.
AddCertification certify_addable(const FiniteStruct& R, CertifyConfig cfg = {});

// Re-derives the certificate's conclusion from its premises and witnesses;
// `certified_before` holds the elements certified earlier in the sequence.
bool replay_add_certificate(const FiniteStruct& R, const AddCertificate& c,
                            const std::vector<bool>& certified_before);

bool replay_all(const FiniteStruct& R, const AddCertification& cert);

// Rules for certified-summable pairs.
enum class PairRule {
    FromAddable,      // (a,x) and (x,a) for certified addable a
    ZeroProduct,      // xy = 0
    WeakCommute,      // xyx = x^2 y
    SumAddable,       // x+y certified addable
    QuasiTransfer,    // (x,yv) summable and u = uvu gives (xu,y)
    CommutatorTriple, // three-premise commutator rule
};

const char* rule_name(PairRule r);

struct PairCertificate {
    std::pair<int, int> pair{-1, -1};
    PairRule rule{};
    std::vector<std::pair<int, int>> pair_premises;
    std::vector<int> elem_premises; // certified-addable elements relied on
    std::vector<int> aux;
};

struct PairCertification {
    int order = 0;
    std::vector<bool> certified; // index x*order + y
    std::vector<PairCertificate> certs;
    std::map<std::string, int> fired;
    AddCertification addable; // the element certification this builds on
    bool pair(int x, int y) const { return certified[size_t(x) * order + y]; }
};

PairCertification certify_summable_pairs(const FiniteStruct& R,
                                         CertifyConfig cfg = {});

bool replay_pair_certificate(const FiniteStruct& R, const PairCertificate& c,
                             const std::vector<bool>& pairs_before,
                             const std::vector<bool>& addable);

bool replay_all(const FiniteStruct& R, const PairCertification& cert);

} // namespace brachy
