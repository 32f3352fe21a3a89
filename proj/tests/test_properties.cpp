#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "ringlab/matrix_ring.hpp"
#include "ringlab/properties.hpp"

using namespace ringlab;

// ---------------------------------------------------------------------------
// Test-only oracle: plain 2x2 matrix arithmetic mod m over flat 4-tuples,
// used to recompute every expected witness independently of the library.
namespace oracle {

using Mat = std::array<int, 4>;

Mat add(const Mat& x, const Mat& y, int m) {
  return {(x[0] + y[0]) % m, (x[1] + y[1]) % m, (x[2] + y[2]) % m, (x[3] + y[3]) % m};
}

Mat mul(const Mat& x, const Mat& y, int m) {
  return {(x[0] * y[0] + x[1] * y[2]) % m, (x[0] * y[1] + x[1] * y[3]) % m,
          (x[2] * y[0] + x[3] * y[2]) % m, (x[2] * y[1] + x[3] * y[3]) % m};
}

struct Ring {
  std::vector<Mat> elems;  // sorted, zero first
  int m;
  int idx(const Mat& x) const {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin());
  }
  int add_i(int a, int b) const { return idx(add(elems[a], elems[b], m)); }
  int mul_i(int a, int b) const { return idx(mul(elems[a], elems[b], m)); }
};

Ring closure(std::vector<Mat> gens, int m) {
  std::set<Mat> s{Mat{0, 0, 0, 0}};
  for (auto& g : gens) s.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mat> snap(s.begin(), s.end());
    for (auto& x : snap)
      for (auto& y : snap)
        for (Mat z : {add(x, y, m), mul(x, y, m)})
          if (s.insert(z).second) grew = true;
  }
  return Ring{{s.begin(), s.end()}, m};
}

// first (a,b) in index order with ab != ba
std::pair<int, int> first_noncommuting(const Ring& r) {
  for (std::size_t a = 0; a < r.elems.size(); ++a)
    for (std::size_t b = 0; b < r.elems.size(); ++b)
      if (r.mul_i(a, b) != r.mul_i(b, a)) return {static_cast<int>(a), static_cast<int>(b)};
  return {-1, -1};
}

std::pair<int, int> first_anticommute_fail(const Ring& r) {
  for (std::size_t a = 0; a < r.elems.size(); ++a)
    for (std::size_t b = 0; b < r.elems.size(); ++b)
      if (r.add_i(r.mul_i(a, b), r.mul_i(b, a)) != 0)
        return {static_cast<int>(a), static_cast<int>(b)};
  return {-1, -1};
}

int first_nonzero_square(const Ring& r) {
  for (std::size_t a = 0; a < r.elems.size(); ++a)
    if (r.mul_i(a, a) != 0) return static_cast<int>(a);
  return -1;
}

}  // namespace oracle

namespace {

ModularMatrix mm(int modulus, int a, int b, int c, int d) {
  ModularMatrix m = mat_zero(2, modulus);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

FiniteRing example1() {
  MatrixGenSpec s;
  s.modulus = 4;
  s.dim = 2;
  s.generators = {mm(4, 2, 0, 0, 0), mm(4, 0, 1, 0, 0)};
  return to_ring(closure(s), "ex1");
}

FiniteRing example2() {
  MatrixGenSpec s;
  s.modulus = 6;
  s.dim = 2;
  s.generators = {mm(6, 2, 0, 0, 0), mm(6, 0, 2, 0, 0)};
  return to_ring(closure(s), "ex2");
}

// integers mod p^e with ordinary multiplication
FiniteRing z_ring(int n) {
  AdditiveGroup g({n});
  std::vector<Elem> mul(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a * n + b] = static_cast<Elem>((a * b) % n);
  return coordinate_ring(g, std::move(mul), "Z" + std::to_string(n));
}

// integers mod 6 in primary decomposition: componentwise products on [2,3]
FiniteRing z6_ring() {
  AdditiveGroup g({2, 3});
  std::vector<Elem> mul(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      auto ca = g.coords_of(static_cast<Elem>(a));
      auto cb = g.coords_of(static_cast<Elem>(b));
      mul[a * 6 + b] = g.index_of({(ca[0] * cb[0]) % 2, (ca[1] * cb[1]) % 3});
    }
  return coordinate_ring(g, std::move(mul), "Z6");
}

}  // namespace

TEST_CASE("commutativity witnesses are minimal and genuine") {
  FiniteRing ex1 = example1();
  auto res = is_commutative(ex1);
  CHECK(!res.verdict);
  REQUIRE(res.witness);
  auto ora = oracle::closure({{2, 0, 0, 0}, {0, 1, 0, 0}}, 4);
  auto [oa, ob] = oracle::first_noncommuting(ora);
  CHECK(res.witness->a == oa);
  CHECK(res.witness->b == ob);
  // frozen from the oracle: a = [[0,1],[0,0]] (index 1), b = [[2,0],[0,0]] (index 4)
  CHECK(res.witness->a == 1);
  CHECK(res.witness->b == 4);
  CHECK(ex1.mul(1, 4) == 0);
  CHECK(ex1.mul(4, 1) == 2);  // [[0,2],[0,0]]

  FiniteRing ex2 = example2();
  auto res2 = is_commutative(ex2);
  CHECK(!res2.verdict);
  REQUIRE(res2.witness);
  auto ora2 = oracle::closure({{2, 0, 0, 0}, {0, 2, 0, 0}}, 6);
  auto [oa2, ob2] = oracle::first_noncommuting(ora2);
  CHECK(res2.witness->a == oa2);
  CHECK(res2.witness->b == ob2);
  CHECK(res2.witness->a == 1);  // [[0,2],[0,0]]
  CHECK(res2.witness->b == 3);  // [[2,0],[0,0]]
  CHECK(ex2.mul(3, 1) == 2);    // [[0,4],[0,0]]

  CHECK(is_commutative(zero_multiplication_ring(AdditiveGroup({2, 4}))).verdict);
}

TEST_CASE("even-square predicate") {
  CHECK(is_even_square(example1()).verdict);
  CHECK(is_even_square(example2()).verdict);
  auto z4 = z_ring(4);
  auto res = is_even_square(z4);
  CHECK(!res.verdict);
  REQUIRE(res.witness);
  CHECK(res.witness->a == 1);  // 1*1 = 1 not in 2R = {0,2}
  CHECK(z4.two_r() == std::vector<Elem>{0, 2});
}

TEST_CASE("zero-square predicate and minimal witnesses") {
  CHECK(is_zero_square(zero_multiplication_ring(AdditiveGroup({2, 4}))).verdict);

  FiniteRing ex1 = example1();
  auto res = is_zero_square(ex1);
  CHECK(!res.verdict);
  REQUIRE(res.witness);
  auto ora = oracle::closure({{2, 0, 0, 0}, {0, 1, 0, 0}}, 4);
  CHECK(res.witness->a == oracle::first_nonzero_square(ora));
  CHECK(res.witness->a == 5);   // [[2,1],[0,0]]
  CHECK(ex1.mul(5, 5) == 2);    // square is [[0,2],[0,0]]

  FiniteRing ex2 = example2();
  auto res2 = is_zero_square(ex2);
  CHECK(!res2.verdict);
  REQUIRE(res2.witness);
  CHECK(res2.witness->a == 3);  // [[2,0],[0,0]]
  CHECK(ex2.mul(3, 3) == 6);    // [[4,0],[0,0]]
}

TEST_CASE("nil detection via power cycles") {
  FiniteRing ex1 = example1();
  auto res = is_nil(ex1);
  CHECK(res.verdict);
  CHECK(*res.numeric == 3);  // x^3 = 0 for all x, some squares nonzero

  FiniteRing ex2 = example2();
  auto res2 = is_nil(ex2);
  CHECK(!res2.verdict);
  REQUIRE(res2.witness);
  CHECK(res2.witness->a == 3);      // [[2,0],[0,0]]
  CHECK(res2.witness->power == 3);  // a^3 = a
  // re-evaluate: a^2 = 2a, a^3 = a
  CHECK(ex2.mul(ex2.mul(3, 3), 3) == 3);

  auto triv = is_nil(zero_multiplication_ring(AdditiveGroup{}));
  CHECK(triv.verdict);
  CHECK(*triv.numeric == 1);
  auto zm = is_nil(zero_multiplication_ring(AdditiveGroup({2, 2})));
  CHECK(zm.verdict);
  CHECK(*zm.numeric == 2);
}

TEST_CASE("anticommutation identity ab + ba = 0") {
  CHECK(anticommutes(zero_multiplication_ring(AdditiveGroup({3, 3}))).verdict);

  FiniteRing ex1 = example1();
  auto res = anticommutes(ex1);
  CHECK(!res.verdict);
  REQUIRE(res.witness);
  auto ora = oracle::closure({{2, 0, 0, 0}, {0, 1, 0, 0}}, 4);
  auto [oa, ob] = oracle::first_anticommute_fail(ora);
  CHECK(res.witness->a == oa);
  CHECK(res.witness->b == ob);
  CHECK(res.witness->a == 1);
  CHECK(res.witness->b == 4);

  FiniteRing ex2 = example2();
  auto res2 = anticommutes(ex2);
  CHECK(!res2.verdict);
  REQUIRE(res2.witness);
  CHECK(res2.witness->a == 1);
  CHECK(res2.witness->b == 3);
}

TEST_CASE("doubled identities 2ab = 2ba and 2ab + 2ba = 0") {
  FiniteRing ex1 = example1();
  CHECK(two_commutes(ex1).verdict);
  CHECK(two_anticommutes(ex1).verdict);

  // characteristic 3: doubling is invertible, so both identities fail here
  FiniteRing ex2 = example2();
  auto tc = two_commutes(ex2);
  CHECK(!tc.verdict);
  REQUIRE(tc.witness);
  CHECK(tc.witness->a == 1);
  CHECK(tc.witness->b == 3);
  auto ta = two_anticommutes(ex2);
  CHECK(!ta.verdict);
  REQUIRE(ta.witness);
  CHECK(ta.witness->a == 1);
  CHECK(ta.witness->b == 3);

  // any commutative ring trivially satisfies 2ab = 2ba
  CHECK(two_commutes(z_ring(4)).verdict);
  CHECK(two_commutes(z_ring(3)).verdict);
}

TEST_CASE("characteristic-4 identities") {
  CHECK(char4_identities(example1()).verdict);
  CHECK(char4_identities(zero_multiplication_ring(AdditiveGroup({4}))).verdict);
  CHECK_THROWS_AS(char4_identities(example2()), PreconditionNotMet);  // char 3
  CHECK_THROWS_AS(char4_identities(z_ring(4)), PreconditionNotMet);   // not even-square
}

TEST_CASE("unitality") {
  CHECK(!is_unital(example1()).verdict);
  CHECK(!is_unital(example2()).verdict);
  auto z4 = is_unital(z_ring(4));
  CHECK(z4.verdict);
  CHECK(*z4.numeric == 1);
  auto triv = is_unital(zero_multiplication_ring(AdditiveGroup{}));
  CHECK(triv.verdict);
  CHECK(*triv.numeric == 0);
}

TEST_CASE("zero divisor analysis") {
  // zero multiplication on Z2: the unique special element makes the
  // cited hypothesis apply, and indeed every nonzero element annihilates
  auto zm2 = zero_divisor_analysis(zero_multiplication_ring(AdditiveGroup({2})));
  CHECK(zm2.special_elements == std::vector<Elem>{1});
  CHECK(zm2.hypothesis_applies);
  CHECK(zm2.all_nonzero_are_zero_divisors);

  auto ex1 = zero_divisor_analysis(example1());
  CHECK(ex1.zero_divisors.size() == 7);  // every nonzero element
  CHECK(ex1.all_nonzero_are_zero_divisors);
  CHECK(ex1.special_elements == std::vector<Elem>{2, 4, 6});
  CHECK(!ex1.hypothesis_applies);  // noncommutative and three special elements

  auto z3 = zero_divisor_analysis(z_ring(3));
  CHECK(z3.zero_divisors.empty());
  CHECK(z3.special_elements.empty());
  CHECK(!z3.hypothesis_applies);
}

TEST_CASE("every false universal verdict carries a witness that re-evaluates") {
  for (const FiniteRing& r : {example1(), example2(), z_ring(4), z6_ring()}) {
    auto report = build_property_report(r);
    for (const auto& [name, res] : report) {
      if (res.verdict) continue;
      if (name == "unital" || name == "zero-divisors" || name == "special-elements")
        continue;  // existential / statistics rows
      REQUIRE_MESSAGE(res.witness.has_value(), ("missing witness for " + name));
      const Witness& w = *res.witness;
      if (name == "commutative") CHECK(r.mul(w.a, w.b) != r.mul(w.b, w.a));
      if (name == "even-square") {
        auto tr = r.two_r();
        CHECK(!std::binary_search(tr.begin(), tr.end(), r.mul(w.a, w.a)));
      }
      if (name == "zero-square") CHECK(r.mul(w.a, w.a) != 0);
      if (name == "nil") {
        Elem x = w.a;
        for (int i = 1; i < w.power; ++i) x = r.mul(x, w.a);
        CHECK(x != 0);
      }
      if (name == "anticommutes") CHECK(r.add(r.mul(w.a, w.b), r.mul(w.b, w.a)) != 0);
      if (name == "two-commutes") {
        Elem ab = r.mul(w.a, w.b), ba = r.mul(w.b, w.a);
        CHECK(r.add(ab, ab) != r.add(ba, ba));
      }
      if (name == "two-anticommutes") {
        Elem ab = r.mul(w.a, w.b), ba = r.mul(w.b, w.a);
        CHECK(r.add(r.add(ab, ab), r.add(ba, ba)) != 0);
      }
    }
  }
}

TEST_CASE("property report selection") {
  auto full = build_property_report(example1());
  CHECK(full.size() >= 11);
  auto some = build_property_report(example1(), {"commutative", "nil"});
  CHECK(some.size() == 2);
  CHECK(some[0].first == "commutative");
  CHECK(some[1].first == "nil");
  // char4-identities included only when applicable
  bool has_c4 = false;
  for (auto& [name, res] : full) has_c4 |= name == "char4-identities";
  CHECK(has_c4);
  bool has_c4_ex2 = false;
  for (auto& [name, res] : build_property_report(example2()))
    has_c4_ex2 |= name == "char4-identities";
  CHECK(!has_c4_ex2);
}
