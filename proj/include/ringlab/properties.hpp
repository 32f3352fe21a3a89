#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

struct PreconditionNotMet : Error {
  using Error::Error;
};

// Concrete evidence for a predicate verdict. Witness indices refer to the
// ring the witness was produced from; re-evaluating the defining condition
// on them reproduces the verdict.
struct Witness {
  enum class Kind {
    CommutatorPair,   // a,b with ab != ba
    BadSquare,        // a with a^2 not in 2R (or a^2 != 0)
    NonNilpotent,     // a whose power sequence repeats before reaching 0
    IdentityFail,     // a,b violating a universal identity
    SpecialElement,   // a distinguished element (identity, special element)
  };
  Kind kind;
  Elem a = 0;
  Elem b = 0;
  int power = 0;  // NonNilpotent: exponent e with a^e equal to an earlier power

  std::string describe() const;
};

struct PropertyResult {
  bool verdict = false;
  std::optional<Witness> witness;
  std::optional<long long> numeric;
};

// All witnesses are lexicographically minimal in (a) or (a,b) index order.
PropertyResult is_commutative(const FiniteRing& r);
PropertyResult is_even_square(const FiniteRing& r);
PropertyResult is_zero_square(const FiniteRing& r);
// numeric = nil index (largest minimal exponent) when nil.
PropertyResult is_nil(const FiniteRing& r);
// ab + ba = 0 for all a,b.
PropertyResult anticommutes(const FiniteRing& r);
// 2ab = 2ba for all a,b.
PropertyResult two_commutes(const FiniteRing& r);
// 2ab + 2ba = 0 for all a,b.
PropertyResult two_anticommutes(const FiniteRing& r);
// 2a^2 = 0 and 2ab + 2ba = 0; requires an even-square ring of
// characteristic 4, else throws PreconditionNotMet.
PropertyResult char4_identities(const FiniteRing& r);
// witness = SpecialElement(e) with the two-sided identity when it exists.
PropertyResult is_unital(const FiniteRing& r);

struct ZeroDivisorAnalysis {
  std::vector<Elem> zero_divisors;     // a != 0 with ab = 0 or ba = 0, b != 0
  std::vector<Elem> special_elements;  // a != 0 with a^2 = 0 and 2a = 0
  bool all_nonzero_are_zero_divisors = false;
  // Set when the ring is commutative, even-square and has exactly one
  // nonzero special element (the hypothesis of the cited zero-divisor fact).
  bool hypothesis_applies = false;
};

ZeroDivisorAnalysis zero_divisor_analysis(const FiniteRing& r);

// Ordered name -> result table; deterministic row order.
using PropertyReport = std::vector<std::pair<std::string, PropertyResult>>;

// Names understood by build_property_report (and the CLI `check --props`).
const std::vector<std::string>& property_names();

// `names` empty selects every applicable property. char4-identities is
// included only when its precondition holds.
PropertyReport build_property_report(const FiniteRing& r,
                                     const std::vector<std::string>& names = {});

}  // namespace ringlab
