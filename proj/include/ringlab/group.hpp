#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

// Element of a ring/group, as an index into [0, order). Index 0 is always
// the additive zero.
using Elem = std::uint16_t;

// Hard cap on ring order; tables are stored dense (order^2 entries).
inline constexpr int kMaxRingOrder = 512;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrderTooLarge : Error {
  using Error::Error;
};

// Returns the prime p when n = p^e with e >= 1, otherwise 0.
int prime_power_base(int n);

// Finite abelian group in primary decomposition: moduli are prime powers
// >= 2, sorted ascending by (prime, exponent). Elements are mixed-radix
// coordinate vectors, most significant coordinate first:
//   index = sum_i c_i * prod_{j>i} d_j.
class AdditiveGroup {
public:
  AdditiveGroup() = default;  // trivial group of order 1
  explicit AdditiveGroup(std::vector<int> moduli);

  const std::vector<int>& moduli() const { return moduli_; }
  int rank() const { return static_cast<int>(moduli_.size()); }
  int order() const { return order_; }
  int exponent() const { return exponent_; }

  std::vector<int> coords_of(Elem a) const;
  Elem index_of(const std::vector<int>& coords) const;

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const;
  // m*a by binary doubling over add(); works for any m, including m < 0.
  Elem scalar_mul(long long m, Elem a) const;
  // Smallest m > 0 with m*a = 0; equals lcm_i(d_i / gcd(c_i, d_i)).
  int additive_order(Elem a) const;
  // i-th unit coordinate vector.
  Elem generator(int i) const;

  bool operator==(const AdditiveGroup&) const = default;

private:
  void check_index(Elem a) const;

  std::vector<int> moduli_;
  std::vector<int> strides_;
  int order_ = 1;
  int exponent_ = 1;
};

std::string to_string(const AdditiveGroup& g);

}  // namespace ringlab
