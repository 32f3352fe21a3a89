#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/group.hpp"

namespace ringlab {

// k x k table of generator pair products g_i * g_j. Together with the
// additive group this determines a whole multiplication by bilinearity.
struct GeneratorProducts {
  int rank = 0;
  std::vector<Elem> table;  // rank*rank, row major

  GeneratorProducts() = default;
  explicit GeneratorProducts(int k) : rank(k), table(k * k, 0) {}
  Elem at(int i, int j) const { return table[i * rank + j]; }
  Elem& at(int i, int j) { return table[i * rank + j]; }
};

struct InvalidStructureConstants : Error {
  using Error::Error;
};

struct RingViolation {
  enum class Kind { Distributivity, Associativity };
  Kind kind;
  Elem a, b, c;
  std::string describe() const;
};

// Finite ring as dense addition and multiplication tables over indices
// 0..order-1, with 0 the additive zero. `group` is the isomorphism type of
// (R,+). When coordinate_addition is set, add(a,b) is exactly the
// mixed-radix coordinate addition of `group` (true for every ring built
// from structure constants or parsed from a file; matrix-closure rings may
// carry an addition table in closure element order instead).
struct FiniteRing {
  AdditiveGroup group;
  std::vector<Elem> add_table;  // n*n
  std::vector<Elem> neg_table;  // n
  std::vector<Elem> mul_table;  // n*n
  bool coordinate_addition = true;
  std::string name;
  std::string provenance;
  // Optional display labels, index-aligned (e.g. matrix literals).
  std::vector<std::string> element_labels;

  int order() const { return group.order(); }
  Elem add(Elem a, Elem b) const { return add_table[a * order() + b]; }
  Elem neg(Elem a) const { return neg_table[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return mul_table[a * order() + b]; }
  Elem scalar_mul(long long m, Elem a) const;
  int additive_order(Elem a) const;

  // Exponent of (R,+): smallest m > 0 with m*a = 0 for all a.
  int characteristic() const;
  // {a + a : a in R}, sorted ascending. Always an additive subgroup and a
  // two-sided ideal.
  std::vector<Elem> two_r() const;

  // Checks mul(0,.) = mul(.,0) = 0, both distributive laws and
  // associativity over all n^3 triples. Returns the lexicographically
  // first violating triple, or nullopt when the tables form a ring.
  std::optional<RingViolation> validate() const;
};

// Ring over a coordinate group: addition derived from mixed-radix coords.
FiniteRing coordinate_ring(AdditiveGroup group, std::vector<Elem> mul_table,
                           std::string name = "", std::string provenance = "");

// Bilinear extension mul(a,b) = sum_{i,j} (a_i b_j) * gp[i][j]. The result
// is distributive by construction; associativity is not guaranteed and
// must be checked with validate().
FiniteRing from_generator_products(const AdditiveGroup& group,
                                   const GeneratorProducts& gp,
                                   std::string name = "");

FiniteRing zero_multiplication_ring(AdditiveGroup group);

// Same addition, reversed multiplication.
FiniteRing opposite_ring(const FiniteRing& r);

// Componentwise operations on pairs; order is the product of the orders.
FiniteRing direct_product(const FiniteRing& r, const FiniteRing& s);

}  // namespace ringlab
