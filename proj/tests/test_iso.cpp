#include <doctest.h>

#include <random>
#include <set>

#include "ringlab/enumerate.hpp"
#include "ringlab/iso.hpp"
#include "ringlab/matrix_ring.hpp"
#include "ringlab/properties.hpp"

using namespace ringlab;

namespace {

ModularMatrix mm(int modulus, int a, int b, int c, int d) {
  ModularMatrix m = mat_zero(2, modulus);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

FiniteRing example1_matrix() {
  MatrixGenSpec s;
  s.modulus = 4;
  s.dim = 2;
  s.generators = {mm(4, 2, 0, 0, 0), mm(4, 0, 1, 0, 0)};
  return to_ring(closure(s), "ex1");
}

FiniteRing example2_matrix() {
  MatrixGenSpec s;
  s.modulus = 6;
  s.dim = 2;
  s.generators = {mm(6, 2, 0, 0, 0), mm(6, 0, 2, 0, 0)};
  return to_ring(closure(s), "ex2");
}

FiniteRing example1_coords() {
  AdditiveGroup g({2, 4});
  GeneratorProducts gp(2);
  gp.at(0, 1) = g.scalar_mul(2, g.generator(1));
  return from_generator_products(g, gp, "ex1-coords");
}

FiniteRing example2_coords() {
  AdditiveGroup g({3, 3});
  GeneratorProducts gp(2);
  gp.at(0, 0) = g.scalar_mul(2, g.generator(0));
  gp.at(0, 1) = g.scalar_mul(2, g.generator(1));
  return from_generator_products(g, gp, "ex2-coords");
}

// Brute-force count of invertible k x k matrices over the field Z_p, by
// computing the rank of each of the p^(k^2) candidate matrices mod p.
long long count_invertible(int k, int p) {
  long long total = 1;
  for (int i = 0; i < k * k; ++i) total *= p;
  long long count = 0;
  for (long long code = 0; code < total; ++code) {
    int m[4][4];
    long long x = code;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        m[i][j] = x % p;
        x /= p;
      }
    // Gaussian elimination mod p
    int rank = 0;
    for (int col = 0; col < k && rank < k; ++col) {
      int pivot = -1;
      for (int row = rank; row < k; ++row)
        if (m[row][col] % p != 0) {
          pivot = row;
          break;
        }
      if (pivot < 0) continue;
      std::swap(m[pivot], m[rank]);
      // scale pivot row to 1
      int inv = 1;
      while ((m[rank][col] * inv) % p != 1) ++inv;
      for (int j = 0; j < k; ++j) m[rank][j] = (m[rank][j] * inv) % p;
      for (int row = 0; row < k; ++row) {
        if (row == rank) continue;
        int f = m[row][col] % p;
        for (int j = 0; j < k; ++j)
          m[row][j] = ((m[row][j] - f * m[rank][j]) % p + p * p) % p;
      }
      ++rank;
    }
    if (rank == k) ++count;
  }
  return count;
}

int phi(int n) {
  int out = 0;
  for (int i = 1; i <= n; ++i)
    if (std::gcd(i, n) == 1) ++out;
  return out;
}

}  // namespace

TEST_CASE("automorphism group sizes") {
  CHECK(count_invertible(3, 2) == 168);  // oracle for the elementary abelian case
  CHECK(automorphisms(AdditiveGroup({2, 2, 2})).size() == 168);
  CHECK(count_invertible(2, 3) == 48);
  CHECK(automorphisms(AdditiveGroup({3, 3})).size() == 48);
  CHECK(automorphisms(AdditiveGroup({2, 4})).size() == 8);
  for (int n : {2, 3, 4, 5, 8, 9})
    CHECK(automorphisms(AdditiveGroup({n})).size() == static_cast<std::size_t>(phi(n)));
  CHECK(automorphisms(AdditiveGroup{}).size() == 1);
}

TEST_CASE("automorphisms are additive bijections") {
  AdditiveGroup g({2, 4});
  for (const auto& sigma : automorphisms(g)) {
    std::set<Elem> image(sigma.map.begin(), sigma.map.end());
    CHECK(image.size() == sigma.map.size());
    CHECK(sigma.map[0] == 0);
    for (int a = 0; a < g.order(); ++a) {
      CHECK(sigma.inverse[sigma.map[a]] == a);
      for (int b = 0; b < g.order(); ++b)
        CHECK(sigma.map[g.add(a, b)] == g.add(sigma.map[a], sigma.map[b]));
    }
  }
}

TEST_CASE("zero ring is a fixed point of every relabeling") {
  FiniteRing z = zero_multiplication_ring(AdditiveGroup({2, 4}));
  auto form = canonical_form(z);
  for (const auto& sigma : automorphisms(z.group)) {
    auto relabeled = relabel_mul(z, sigma);
    CHECK(relabeled == z.mul_table);
  }
  // bytes: moduli prefix + all-zero table
  CHECK(form.bytes.size() == 1 + 2 * 2 + 64);
  for (std::size_t i = 5; i < form.bytes.size(); ++i) CHECK(form.bytes[i] == 0);
}

TEST_CASE("both constructions of each example share a canonical form") {
  CHECK(canonical_form(example1_matrix()) == canonical_form(example1_coords()));
  CHECK(canonical_form(example2_matrix()) == canonical_form(example2_coords()));
  auto iso = are_isomorphic(example1_matrix(), example1_coords());
  CHECK(iso.isomorphic);
  auto iso2 = are_isomorphic(example2_matrix(), example2_coords());
  CHECK(iso2.isomorphic);
}

TEST_CASE("isomorphism maps preserve both operations") {
  for (auto [r, s] : {std::pair{example1_matrix(), example1_coords()},
                      std::pair{example2_matrix(), example2_coords()}}) {
    auto res = are_isomorphic(r, s);
    REQUIRE(res.isomorphic);
    REQUIRE(res.map.size() == static_cast<std::size_t>(r.order()));
    std::set<Elem> image(res.map.begin(), res.map.end());
    CHECK(image.size() == res.map.size());
    for (int a = 0; a < r.order(); ++a)
      for (int b = 0; b < r.order(); ++b) {
        CHECK(res.map[r.add(a, b)] == s.add(res.map[a], res.map[b]));
        CHECK(res.map[r.mul(a, b)] == s.mul(res.map[a], res.map[b]));
      }
  }
}

TEST_CASE("the first example ring is not isomorphic to its opposite") {
  FiniteRing ex1 = example1_coords();
  FiniteRing opp = opposite_ring(ex1);
  CHECK(canonical_form(ex1) != canonical_form(opp));
  auto res = are_isomorphic(ex1, opp);
  CHECK(!res.isomorphic);
  // ... though the opposite is of course still a valid ring of the same kind
  CHECK(!opp.validate().has_value());
  CHECK(is_even_square(opp).verdict);
  CHECK(!is_commutative(opp).verdict);
}

TEST_CASE("fast rejections") {
  auto r22 = zero_multiplication_ring(AdditiveGroup({2, 2}));
  auto r4 = zero_multiplication_ring(AdditiveGroup({4}));
  auto res = are_isomorphic(r22, r4);
  CHECK(!res.isomorphic);
  CHECK(res.reason == "additive group types differ");

  auto res2 = are_isomorphic(r4, zero_multiplication_ring(AdditiveGroup({8})));
  CHECK(!res2.isomorphic);
  CHECK(res2.reason == "orders differ");

  auto res3 = are_isomorphic(example1_coords(),
                             zero_multiplication_ring(AdditiveGroup({2, 4})));
  CHECK(!res3.isomorphic);  // one is noncommutative
}

TEST_CASE("isomorphism is reflexive") {
  for (const FiniteRing& r : {example1_matrix(), example2_matrix(),
                              zero_multiplication_ring(AdditiveGroup({2, 2, 2}))}) {
    auto res = are_isomorphic(r, r);
    CHECK(res.isomorphic);
  }
}

TEST_CASE("isomorphism is an equivalence on the order-4 classes") {
  auto rings = enumerate_rings(4);
  REQUIRE(rings.size() == 11);
  // distinct classes never compare isomorphic; relabelings always do
  for (std::size_t i = 0; i < rings.size(); ++i)
    for (std::size_t j = 0; j < rings.size(); ++j) {
      bool iso = are_isomorphic(rings[i], rings[j]).isomorphic;
      CHECK(iso == (i == j));
      bool sym = are_isomorphic(rings[j], rings[i]).isomorphic;
      CHECK(iso == sym);
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(321);
  for (const auto& r : enumerate_rings(8)) {
    auto auts = automorphisms(r.group);
    const auto& sigma = auts[rng() % auts.size()];
    FiniteRing relabeled = coordinate_ring(r.group, relabel_mul(r, sigma));
    CHECK(canonical_form(relabeled) == canonical_form(r));
    CHECK(are_isomorphic(relabeled, r).isomorphic);
  }
}

TEST_CASE("isomorphism is transitive across relabeled copies") {
  std::mt19937 rng(777);
  for (const auto& r : enumerate_rings(6)) {
    auto auts = automorphisms(r.group);
    FiniteRing a = coordinate_ring(r.group, relabel_mul(r, auts[rng() % auts.size()]));
    FiniteRing b = coordinate_ring(r.group, relabel_mul(r, auts[rng() % auts.size()]));
    CHECK(are_isomorphic(r, a).isomorphic);
    CHECK(are_isomorphic(a, b).isomorphic);
    CHECK(are_isomorphic(r, b).isomorphic);
  }
}

TEST_CASE("coordinatize recovers bases") {
  FiniteRing ex1 = example1_matrix();
  auto c = coordinatize(ex1);
  CHECK(c.ring.group.moduli() == std::vector<int>{2, 4});
  REQUIRE(c.basis.size() == 2);
  CHECK(ex1.additive_order(c.basis[0]) == 2);
  CHECK(ex1.additive_order(c.basis[1]) == 4);

  auto c2 = coordinatize(example2_matrix());
  CHECK(c2.ring.group.moduli() == std::vector<int>{3, 3});

  // cyclic ring: a single basis element of maximal order
  FiniteRing z8 = zero_multiplication_ring(AdditiveGroup({8}));
  auto c3 = coordinatize(z8);
  REQUIRE(c3.basis.size() == 1);
  CHECK(z8.additive_order(c3.basis[0]) == 8);
}

TEST_CASE("canonical form round-trips through its representative ring") {
  for (const auto& r : enumerate_rings(6)) {
    auto form = canonical_form(r);
    FiniteRing rep = ring_of_canonical_form(form);
    CHECK(canonical_form(rep) == form);
    CHECK(!rep.validate().has_value());
  }
}

TEST_CASE("hex digests") {
  CanonicalForm f{{0x00, 0x1f, 0xab}};
  CHECK(f.hex() == "001fab");
}
