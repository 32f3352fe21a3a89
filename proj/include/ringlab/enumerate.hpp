#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/iso.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// One AdditiveGroup per isomorphism class of abelian groups of order n
// (partitions of each prime's exponent), deterministic order.
std::vector<AdditiveGroup> abelian_groups_of_order(int n);

struct EnumFilter {
  std::optional<bool> commutative;
  std::optional<bool> even_square;
  std::optional<bool> zero_square;
  std::optional<bool> nil;
  std::optional<bool> unital;
  std::optional<int> characteristic;

  bool admits(const FiniteRing& r) const;

  // Comma-separated tokens: commutative, noncommutative, even-square,
  // zero-square, nil, not-nil, unital, char=C. Throws Error on unknown
  // tokens.
  static EnumFilter parse(const std::string& csv);
};

struct GroupEnumStats {
  AdditiveGroup group;
  long long assignments_tried = 0;  // complete structure-constant tuples reached
  long long associative = 0;        // labeled rings (pre-dedup)
  int classes = 0;                  // isomorphism classes
};

struct EnumResult {
  std::vector<FiniteRing> rings;  // one per class, sorted by canonical form
  std::vector<GroupEnumStats> stats;
  int classes_unfiltered = 0;
};

// Exhaustive isomorphism-free generation of the rings of order n:
// depth-first search over generator products constrained by
// ord(g_i g_j) | gcd(d_i, d_j), incremental associativity rejection,
// bilinear extension, canonical-form deduplication. Emits the canonical
// representative of each class, sorted by canonical form bytes, so output
// is identical for every parallelism degree. jobs <= 0 uses all cores.
EnumResult enumerate_rings_detailed(int n, const EnumFilter& filter = {},
                                    int jobs = 0);

std::vector<FiniteRing> enumerate_rings(int n, const EnumFilter& filter = {},
                                        int jobs = 0);

}  // namespace ringlab
