#include "ringlab/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ringlab {

int prime_power_base(int n) {
  if (n < 2) return 0;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1 ? p : 0;
    }
  }
  return n;  // n itself is prime
}

namespace {

// Sort key (prime, exponent) for a prime power.
std::pair<int, int> prime_exponent(int d) {
  int p = prime_power_base(d);
  int e = 0;
  for (int x = d; x > 1; x /= p) ++e;
  return {p, e};
}

}  // namespace

AdditiveGroup::AdditiveGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  for (int d : moduli_) {
    if (prime_power_base(d) == 0)
      throw Error("group modulus " + std::to_string(d) + " is not a prime power >= 2");
  }
  std::sort(moduli_.begin(), moduli_.end(), [](int a, int b) {
    return prime_exponent(a) < prime_exponent(b);
  });
  long long order = 1;
  for (int d : moduli_) {
    order *= d;
    if (order > kMaxRingOrder)
      throw OrderTooLarge("group order exceeds " + std::to_string(kMaxRingOrder));
    exponent_ = std::lcm(exponent_, d);
  }
  order_ = static_cast<int>(order);
  strides_.assign(moduli_.size(), 1);
  for (int i = static_cast<int>(moduli_.size()) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * moduli_[i + 1];
}

void AdditiveGroup::check_index(Elem a) const {
  if (a >= order_) throw std::out_of_range("element index " + std::to_string(a) +
                                           " out of range for order " + std::to_string(order_));
}

std::vector<int> AdditiveGroup::coords_of(Elem a) const {
  check_index(a);
  std::vector<int> c(moduli_.size());
  int x = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    c[i] = x / strides_[i];
    x %= strides_[i];
  }
  return c;
}

Elem AdditiveGroup::index_of(const std::vector<int>& coords) const {
  if (coords.size() != moduli_.size())
    throw std::out_of_range("coordinate vector has wrong rank");
  long long idx = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    int c = coords[i] % moduli_[i];
    if (c < 0) c += moduli_[i];
    idx += static_cast<long long>(c) * strides_[i];
  }
  return static_cast<Elem>(idx);
}

Elem AdditiveGroup::add(Elem a, Elem b) const {
  check_index(a);
  check_index(b);
  int x = a, y = b;
  long long idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    int ca = x / strides_[i], cb = y / strides_[i];
    x %= strides_[i];
    y %= strides_[i];
    int c = ca + cb;
    if (c >= moduli_[i]) c -= moduli_[i];
    idx += static_cast<long long>(c) * strides_[i];
  }
  return static_cast<Elem>(idx);
}

Elem AdditiveGroup::neg(Elem a) const {
  check_index(a);
  int x = a;
  long long idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    int c = x / strides_[i];
    x %= strides_[i];
    if (c != 0) c = moduli_[i] - c;
    idx += static_cast<long long>(c) * strides_[i];
  }
  return static_cast<Elem>(idx);
}

Elem AdditiveGroup::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem AdditiveGroup::scalar_mul(long long m, Elem a) const {
  check_index(a);
  m %= exponent_;
  if (m < 0) m += exponent_;
  Elem result = 0;
  Elem base = a;
  while (m > 0) {
    if (m & 1) result = add(result, base);
    base = add(base, base);
    m >>= 1;
  }
  return result;
}

int AdditiveGroup::additive_order(Elem a) const {
  auto c = coords_of(a);
  int ord = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    ord = std::lcm(ord, moduli_[i] / std::gcd(c[i], moduli_[i]));
  return ord;
}

Elem AdditiveGroup::generator(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("generator index");
  return static_cast<Elem>(strides_[i]);
}

std::string to_string(const AdditiveGroup& g) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < g.moduli().size(); ++i) {
    if (i) os << ',';
    os << g.moduli()[i];
  }
  os << ']';
  return os.str();
}

}  // namespace ringlab
