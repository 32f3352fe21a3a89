#include "ringlab/ring.hpp"

#include <algorithm>
#include <numeric>

namespace ringlab {

std::string RingViolation::describe() const {
  const char* what = kind == Kind::Distributivity ? "distributivity" : "associativity";
  return std::string(what) + " fails at (" + std::to_string(a) + "," +
         std::to_string(b) + "," + std::to_string(c) + ")";
}

Elem FiniteRing::scalar_mul(long long m, Elem a) const {
  int exp = characteristic();
  m %= exp;
  if (m < 0) m += exp;
  Elem result = 0;
  Elem base = a;
  while (m > 0) {
    if (m & 1) result = add(result, base);
    base = add(base, base);
    m >>= 1;
  }
  return result;
}

int FiniteRing::additive_order(Elem a) const {
  if (coordinate_addition) return group.additive_order(a);
  int ord = 1;
  Elem x = a;
  while (x != 0) {
    x = add(x, a);
    ++ord;
  }
  return ord;
}

int FiniteRing::characteristic() const {
  if (coordinate_addition) return group.exponent();
  int exp = 1;
  for (int a = 0; a < order(); ++a)
    exp = std::lcm(exp, additive_order(static_cast<Elem>(a)));
  return exp;
}

std::vector<Elem> FiniteRing::two_r() const {
  std::vector<Elem> out;
  out.reserve(order());
  for (int a = 0; a < order(); ++a) out.push_back(add(a, a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Serial scan in lexicographic (a,b,c) order; returns first violation.
std::optional<RingViolation> scan_triples(const FiniteRing& r, int lo, int hi) {
  const int n = r.order();
  for (int a = lo; a < hi; ++a) {
    for (int b = 0; b < n; ++b) {
      const Elem ab = r.mul(a, b);
      for (int c = 0; c < n; ++c) {
        // (a+b)c = ac + bc
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
          return RingViolation{RingViolation::Kind::Distributivity,
                               static_cast<Elem>(a), static_cast<Elem>(b),
                               static_cast<Elem>(c)};
        // a(b+c) = ab + ac
        if (r.mul(a, r.add(b, c)) != r.add(ab, r.mul(a, c)))
          return RingViolation{RingViolation::Kind::Distributivity,
                               static_cast<Elem>(a), static_cast<Elem>(b),
                               static_cast<Elem>(c)};
        // (ab)c = a(bc)
        if (r.mul(ab, c) != r.mul(a, r.mul(b, c)))
          return RingViolation{RingViolation::Kind::Associativity,
                               static_cast<Elem>(a), static_cast<Elem>(b),
                               static_cast<Elem>(c)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<RingViolation> FiniteRing::validate() const {
  const int n = order();
  // Parallel existence pass for large tables, then a serial scan to pin the
  // lexicographically first witness only when something is wrong.
  if (n >= 64) {
    bool bad = false;
#pragma omp parallel for schedule(static) reduction(|| : bad)
    for (int a = 0; a < n; ++a) {
      if (bad) continue;
      if (scan_triples(*this, a, a + 1)) bad = true;
    }
    if (!bad) return std::nullopt;
  }
  return scan_triples(*this, 0, n);
}

FiniteRing coordinate_ring(AdditiveGroup group, std::vector<Elem> mul_table,
                           std::string name, std::string provenance) {
  const int n = group.order();
  if (static_cast<int>(mul_table.size()) != n * n)
    throw Error("multiplication table must have order^2 entries");
  for (Elem e : mul_table)
    if (e >= n) throw std::out_of_range("multiplication table entry out of range");
  FiniteRing r;
  r.group = std::move(group);
  r.mul_table = std::move(mul_table);
  r.add_table.resize(n * n);
  r.neg_table.resize(n);
  for (int a = 0; a < n; ++a) {
    r.neg_table[a] = r.group.neg(static_cast<Elem>(a));
    for (int b = 0; b < n; ++b)
      r.add_table[a * n + b] = r.group.add(static_cast<Elem>(a), static_cast<Elem>(b));
  }
  r.coordinate_addition = true;
  r.name = std::move(name);
  r.provenance = std::move(provenance);
  return r;
}

FiniteRing from_generator_products(const AdditiveGroup& group,
                                   const GeneratorProducts& gp, std::string name) {
  const int k = group.rank();
  const int n = group.order();
  if (gp.rank != k) throw InvalidStructureConstants("generator product table rank mismatch");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int g = std::gcd(group.moduli()[i], group.moduli()[j]);
      if (g % group.additive_order(gp.at(i, j)) != 0)
        throw InvalidStructureConstants(
            "additive order of product g" + std::to_string(i) + "*g" +
            std::to_string(j) + " does not divide gcd of the generator moduli");
    }

  // Scalar multiples m*x for m in [0, exponent), filled by repeated addition.
  const int exp = group.exponent();
  std::vector<Elem> smul(static_cast<std::size_t>(exp) * n);
  for (int x = 0; x < n; ++x) smul[x] = 0;
  for (int m = 1; m < exp; ++m)
    for (int x = 0; x < n; ++x)
      smul[static_cast<std::size_t>(m) * n + x] =
          group.add(smul[static_cast<std::size_t>(m - 1) * n + x], static_cast<Elem>(x));

  std::vector<std::vector<int>> coords(n);
  for (int a = 0; a < n; ++a) coords[a] = group.coords_of(static_cast<Elem>(a));

  std::vector<Elem> mul(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Elem s = 0;
      for (int i = 0; i < k; ++i) {
        if (coords[a][i] == 0) continue;
        for (int j = 0; j < k; ++j) {
          if (coords[b][j] == 0) continue;
          int m = (coords[a][i] * coords[b][j]) % exp;
          s = group.add(s, smul[static_cast<std::size_t>(m) * n + gp.at(i, j)]);
        }
      }
      mul[static_cast<std::size_t>(a) * n + b] = s;
    }
  }
  return coordinate_ring(group, std::move(mul), std::move(name),
                         "generator-products over " + to_string(group));
}

FiniteRing zero_multiplication_ring(AdditiveGroup group) {
  const int n = group.order();
  return coordinate_ring(std::move(group), std::vector<Elem>(n * n, 0),
                         "zero-multiplication", "zero multiplication");
}

FiniteRing opposite_ring(const FiniteRing& r) {
  FiniteRing o = r;
  const int n = r.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) o.mul_table[a * n + b] = r.mul(b, a);
  o.name = r.name.empty() ? "opposite" : r.name + "-opposite";
  return o;
}

FiniteRing direct_product(const FiniteRing& r, const FiniteRing& s) {
  const long long n = static_cast<long long>(r.order()) * s.order();
  if (n > kMaxRingOrder)
    throw OrderTooLarge("direct product order " + std::to_string(n) + " exceeds cap");

  // Combined moduli, remembering where each factor's coordinates land.
  std::vector<int> mods;
  for (int d : r.group.moduli()) mods.push_back(d);
  for (int d : s.group.moduli()) mods.push_back(d);
  AdditiveGroup group(mods);  // sorts canonically

  const int nr = r.order(), ns = s.order();
  FiniteRing out;
  out.group = group;
  out.add_table.resize(n * n);
  out.neg_table.resize(n);
  out.mul_table.resize(n * n);
  out.coordinate_addition = false;

  // Pair (a,b) lives at index a*ns + b.
  auto idx = [ns](int a, int b) { return a * ns + b; };
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < ns; ++b) {
      int p = idx(a, b);
      out.neg_table[p] = static_cast<Elem>(idx(r.neg(a), s.neg(b)));
      for (int c = 0; c < nr; ++c)
        for (int d = 0; d < ns; ++d) {
          int q = idx(c, d);
          out.add_table[p * n + q] = static_cast<Elem>(idx(r.add(a, c), s.add(b, d)));
          out.mul_table[p * n + q] = static_cast<Elem>(idx(r.mul(a, c), s.mul(b, d)));
        }
    }
  out.name = r.name + "x" + s.name;
  out.provenance = "direct product";
  return out;
}

}  // namespace ringlab
