#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// Additive bijection R -> R given as an index permutation, induced by
// order-preserving images of the canonical generators.
struct GroupAutomorphism {
  std::vector<Elem> map;      // map[a] = image of a
  std::vector<Elem> inverse;  // inverse permutation
};

// Complete automorphism group of (G,+), enumerated from generator images.
// Deterministic order. Throws OrderTooLarge when the group would exceed
// `cap` automorphisms (keeps canonicalization at desk scale).
std::vector<GroupAutomorphism> automorphisms(const AdditiveGroup& g,
                                             std::size_t cap = 2'000'000);

// Primary-decomposition basis of the abelian group given by an explicit
// n x n addition table (zero at index 0). Deterministic backtracking
// search; elements[i] has additive order moduli[i].
struct AdditiveBasis {
  std::vector<Elem> elements;
  std::vector<int> moduli;  // prime powers, sorted ascending by (prime, exponent)
};

AdditiveBasis find_additive_basis(const std::vector<Elem>& add_table, int n);

// Byte encoding of a ring up to isomorphism: the group moduli followed by
// the multiplication table relabeled by the automorphism that minimizes it.
// Equal byte sequences <=> isomorphic rings (same additive group type).
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct Coordinatized {
  FiniteRing ring;                // coordinate_addition = true
  std::vector<Elem> basis;        // original indices of the chosen basis
  std::vector<Elem> old_to_new;   // index map input -> output
};

// Finds a primary-decomposition basis of (R,+) and re-indexes the ring
// into mixed-radix order. The returned ring is isomorphic to the input;
// rings that already use coordinate addition pass through unchanged.
Coordinatized coordinatize(const FiniteRing& r);

// Relabels the multiplication table by sigma: result(a,b) =
// sigma^-1(mul(sigma a, sigma b)). Addition is preserved because sigma is
// an additive automorphism.
std::vector<Elem> relabel_mul(const FiniteRing& r, const GroupAutomorphism& sigma);

CanonicalForm canonical_form(const FiniteRing& r);

// Rebuilds the representative ring a canonical form encodes.
FiniteRing ring_of_canonical_form(const CanonicalForm& form);

struct IsoResult {
  bool isomorphic = false;
  std::vector<Elem> map;  // on true: bijection realizing the isomorphism
  std::string reason;     // on false: first invariant that separates them
};

// Fast rejection on order / group type / invariant fingerprints, then a
// direct search over additive automorphisms for a multiplicative match.
IsoResult are_isomorphic(const FiniteRing& r, const FiniteRing& s);

}  // namespace ringlab
