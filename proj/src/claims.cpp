#include "ringlab/claims.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "ringlab/iso.hpp"
#include "ringlab/matrix_ring.hpp"
#include "ringlab/properties.hpp"

namespace ringlab {

std::string to_string(ClaimVerdict v) {
  switch (v) {
    case ClaimVerdict::Verified: return "verified";
    case ClaimVerdict::Refuted: return "refuted";
    case ClaimVerdict::CheckedUpTo: return "checked-up-to";
  }
  return {};
}

bool ClaimReport::any_refuted() const {
  return std::any_of(claims.begin(), claims.end(), [](const Claim& c) {
    return c.verdict == ClaimVerdict::Refuted;
  });
}

RingPool RingPool::build(int max_order, int jobs) {
  RingPool pool;
  pool.max_order = max_order;
  for (int n = 1; n <= max_order; ++n) {
    auto res = enumerate_rings_detailed(n, {}, jobs);
    OrderEnumStats st;
    st.order = n;
    st.classes = res.classes_unfiltered;
    for (const auto& gs : res.stats)
      st.per_group.push_back({to_string(gs.group), gs.classes});
    pool.stats.push_back(st);
    pool.by_order[n] = std::move(res.rings);
  }
  return pool;
}

namespace {

ModularMatrix mat2(int modulus, int a, int b, int c, int d) {
  ModularMatrix m = mat_zero(2, modulus);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

std::string elem_label(const FiniteRing& r, Elem a) {
  if (a < r.element_labels.size()) return r.element_labels[a];
  return "#" + std::to_string(a);
}

void note(Claim& c, const std::string& line) { c.evidence.notes.push_back(line); }

void count(Claim& c, const std::string& label, long long value) {
  c.evidence.counts.push_back({label, value});
}

// Verified when `ok`; Refuted otherwise.
void settle(Claim& c, bool ok) {
  c.verdict = ok ? ClaimVerdict::Verified : ClaimVerdict::Refuted;
}

void settle_bounded(Claim& c, bool ok, int bound) {
  c.verdict = ok ? ClaimVerdict::CheckedUpTo : ClaimVerdict::Refuted;
  c.checked_bound = ok ? bound : 0;
}

}  // namespace

FiniteRing example1_ring() {
  MatrixGenSpec spec;
  spec.modulus = 4;
  spec.dim = 2;
  spec.generators = {mat2(4, 2, 0, 0, 0), mat2(4, 0, 1, 0, 0)};
  auto elems = closure(spec);
  return to_ring(elems, "example1", spec.describe());
}

FiniteRing example2_ring() {
  MatrixGenSpec spec;
  spec.modulus = 6;
  spec.dim = 2;
  spec.generators = {mat2(6, 2, 0, 0, 0), mat2(6, 0, 2, 0, 0)};
  auto elems = closure(spec);
  return to_ring(elems, "example2", spec.describe());
}

Claim claim_example1(const FiniteRing& ex1) {
  Claim c;
  c.id = "E1-matrix-ring";
  c.anchor = "Example 1";
  c.statement =
      "the 2x2 matrices over Z4 generated by [[2,0],[0,0]] and [[0,1],[0,0]] "
      "form a noncommutative even square ring of order eight";
  c.covers = {"example-1"};
  bool ok = ex1.order() == 8 && !ex1.validate().has_value();
  auto comm = is_commutative(ex1);
  auto es = is_even_square(ex1);
  ok = ok && !comm.verdict && es.verdict;
  count(c, "order", ex1.order());
  count(c, "characteristic", ex1.characteristic());
  if (comm.witness)
    note(c, "commutator witness: a=" + elem_label(ex1, comm.witness->a) +
                " b=" + elem_label(ex1, comm.witness->b));
  c.evidence.witness_rings.push_back(ex1);
  settle(c, ok);
  return c;
}

Claim claim_example2(const FiniteRing& ex2) {
  Claim c;
  c.id = "E2-matrix-ring";
  c.anchor = "Example 2";
  c.statement =
      "the 2x2 matrices over Z6 generated by [[2,0],[0,0]] and [[0,2],[0,0]] "
      "form a noncommutative even square ring of order nine";
  c.covers = {"example-2"};
  bool ok = ex2.order() == 9 && !ex2.validate().has_value();
  auto comm = is_commutative(ex2);
  auto es = is_even_square(ex2);
  ok = ok && !comm.verdict && es.verdict;
  count(c, "order", ex2.order());
  count(c, "characteristic", ex2.characteristic());
  if (comm.witness)
    note(c, "commutator witness: a=" + elem_label(ex2, comm.witness->a) +
                " b=" + elem_label(ex2, comm.witness->b));
  c.evidence.witness_rings.push_back(ex2);
  settle(c, ok);
  return c;
}

Claim claim_min_noncommutative_even_square(const RingPool& pool) {
  Claim c;
  c.id = "P3-min-order-8";
  c.anchor = "Proposition 3";
  c.statement = "the least order of a noncommutative even square ring is eight";
  c.covers = {"proposition-3", "no-order-4"};
  bool ok = true;
  const FiniteRing* witness = nullptr;
  for (int n = 1; n <= 8; ++n) {
    long long found = 0;
    for (const auto& r : pool.by_order.at(n))
      if (!is_commutative(r).verdict && is_even_square(r).verdict) {
        ++found;
        if (n == 8 && !witness) witness = &r;
      }
    count(c, "order " + std::to_string(n) + " noncommutative even-square classes", found);
    if (n < 8 && found != 0) ok = false;
    if (n == 8 && found == 0) ok = false;
  }
  note(c, "orders 1..7 exhausted with no noncommutative even square ring;"
          " order 4 in particular has none");
  if (witness) {
    note(c, "order-8 witness: " + witness->name);
    c.evidence.witness_rings.push_back(*witness);
  }
  settle(c, ok);
  return c;
}

Claim claim_order8_char4_nil(const RingPool& pool) {
  Claim c;
  c.id = "P3-order8-char4-nil";
  c.anchor = "Proposition 3";
  c.statement =
      "every noncommutative even square ring of order eight is a nil ring of "
      "characteristic four";
  c.covers = {"proposition-3", "order-2n-nil", "order-8-characteristics"};
  bool ok = true;

  long long checked = 0;
  std::map<long long, long long> nil_indices;
  std::set<int> chars_seen;
  for (const auto& r : pool.by_order.at(8)) {
    chars_seen.insert(r.characteristic());
    if (is_commutative(r).verdict || !is_even_square(r).verdict) continue;
    ++checked;
    auto nil = is_nil(r);
    if (r.characteristic() != 4 || !nil.verdict) ok = false;
    if (nil.verdict) ++nil_indices[*nil.numeric];
  }
  count(c, "order-8 noncommutative even-square classes", checked);
  if (checked == 0) ok = false;
  for (auto& [idx, cnt] : nil_indices)
    count(c, "nil index " + std::to_string(idx), cnt);
  {
    std::ostringstream os;
    os << "characteristics occurring at order 8:";
    for (int ch : chars_seen) os << ' ' << ch;
    note(c, os.str());
    ok = ok && std::all_of(chars_seen.begin(), chars_seen.end(),
                           [](int ch) { return ch == 2 || ch == 4 || ch == 8; });
  }
  // side check: every even square ring of two-power order in reach is nil
  long long es2n = 0;
  for (int n : {2, 4, 8}) {
    for (const auto& r : pool.by_order.at(n))
      if (is_even_square(r).verdict) {
        ++es2n;
        if (!is_nil(r).verdict) ok = false;
      }
  }
  count(c, "even-square classes of order 2/4/8 (all nil)", es2n);
  settle(c, ok);
  return c;
}

Claim claim_odd_min_nine(const RingPool& pool, const FiniteRing& ex2) {
  Claim c;
  c.id = "P4-odd-min-order-9";
  c.anchor = "Proposition 4";
  c.statement =
      "the least odd order of a noncommutative even square ring is nine";
  c.covers = {"proposition-4"};
  bool ok = true;
  for (int n = 1; n < 9 && n <= pool.max_order; n += 2) {
    long long noncomm = 0;
    for (const auto& r : pool.by_order.at(n))
      if (!is_commutative(r).verdict) ++noncomm;
    count(c, "order " + std::to_string(n) + " noncommutative classes", noncomm);
    if (noncomm != 0) ok = false;
  }
  // every odd-order ring in reach doubles onto itself
  long long odd_checked = 0;
  for (int n = 1; n <= pool.max_order; n += 2)
    for (const auto& r : pool.by_order.at(n)) {
      ++odd_checked;
      if (static_cast<int>(r.two_r().size()) != r.order()) ok = false;
    }
  count(c, "odd-order classes with 2R = R", odd_checked);

  if (pool.max_order < 9) {
    settle_bounded(c, ok, pool.max_order);
    return c;
  }
  long long found = 0;
  bool ex2_matched = false;
  for (const auto& r : pool.by_order.at(9))
    if (!is_commutative(r).verdict && is_even_square(r).verdict) {
      ++found;
      if (!ex2_matched && are_isomorphic(r, ex2).isomorphic) {
        ex2_matched = true;
        c.evidence.witness_rings.push_back(r);
        note(c, "order-9 witness " + r.name + " is isomorphic to the Example 2 ring");
      }
    }
  count(c, "order-9 noncommutative even-square classes", found);
  ok = ok && found > 0 && ex2_matched;
  settle(c, ok);
  return c;
}

Claim claim_prop1_implication(const RingPool& pool) {
  Claim c;
  c.id = "P1-anticommute-implies-commutative";
  c.anchor = "Proposition 1";
  c.statement =
      "an even square ring of characteristic four with ab + ba = 0 for all "
      "a, b is commutative; its squares satisfy 2a^2 = 0 and 2ab + 2ba = 0";
  c.covers = {"proposition-1"};
  bool ok = true;
  long long checked = 0, anticommuting = 0;
  for (int n = 1; n <= pool.max_order; ++n)
    for (const auto& r : pool.by_order.at(n)) {
      if (r.characteristic() != 4 || !is_even_square(r).verdict) continue;
      ++checked;
      if (!char4_identities(r).verdict) ok = false;
      if (anticommutes(r).verdict) {
        ++anticommuting;
        if (!is_commutative(r).verdict) ok = false;
      }
    }
  count(c, "char-4 even-square classes checked", checked);
  count(c, "of those, anticommuting (all commutative)", anticommuting);
  settle_bounded(c, ok, pool.max_order);
  return c;
}

Claim claim_prop2_counterexample(const FiniteRing& ex1) {
  Claim c;
  c.id = "P2-COR-counterexample";
  c.anchor = "Proposition 2 + Corollary";
  c.statement =
      "a ring satisfying 2ab = 2ba (and even 2ab + 2ba = 0) for all a, b "
      "need not be commutative: the Example 1 ring witnesses both";
  c.covers = {"proposition-2", "corollary"};
  auto tc = two_commutes(ex1);
  auto ta = two_anticommutes(ex1);
  auto comm = is_commutative(ex1);
  bool ok = tc.verdict && ta.verdict && !comm.verdict &&
            is_even_square(ex1).verdict && ex1.characteristic() == 4;
  count(c, "2ab = 2ba holds", tc.verdict ? 1 : 0);
  count(c, "2ab + 2ba = 0 holds", ta.verdict ? 1 : 0);
  count(c, "commutative", comm.verdict ? 1 : 0);
  if (comm.witness)
    note(c, "noncommutativity witness: a=" + elem_label(ex1, comm.witness->a) +
                " b=" + elem_label(ex1, comm.witness->b));
  c.evidence.witness_rings.push_back(ex1);
  settle(c, ok);
  return c;
}

Claim claim_zero_divisor_statement(const RingPool& pool) {
  Claim c;
  c.id = "F1-unique-special-zero-divisors";
  c.anchor = "Introduction (cited)";
  c.statement =
      "in a commutative even square ring with exactly one nonzero element a "
      "satisfying a^2 = 2a = 0, every nonzero element is a zero divisor";
  c.covers = {"unique-special-zero-divisor"};
  bool ok = true;
  long long qualifying = 0, skipped = 0;
  for (int n = 1; n <= pool.max_order; ++n)
    for (const auto& r : pool.by_order.at(n)) {
      auto zd = zero_divisor_analysis(r);
      if (!zd.hypothesis_applies) {
        ++skipped;
        continue;
      }
      ++qualifying;
      if (!zd.all_nonzero_are_zero_divisors) {
        ok = false;
        c.evidence.witness_rings.push_back(r);
      }
    }
  count(c, "qualifying classes", qualifying);
  count(c, "outside the hypothesis (skipped)", skipped);
  settle_bounded(c, ok, pool.max_order);
  return c;
}

Claim claim_zero_square_subset(const RingPool& pool, const FiniteRing& ex1,
                               const FiniteRing& ex2) {
  Claim c;
  c.id = "F2-zero-square-even-square-nil";
  c.anchor = "Introduction (cited)";
  c.statement =
      "every zero square ring is an even square ring; the converse fails, "
      "and an even square ring need not be nil";
  c.covers = {"zero-square-subset", "even-square-not-nil"};
  bool ok = true;
  long long zero_square_classes = 0;
  for (int n = 1; n <= pool.max_order; ++n)
    for (const auto& r : pool.by_order.at(n))
      if (is_zero_square(r).verdict) {
        ++zero_square_classes;
        if (!is_even_square(r).verdict) ok = false;
      }
  count(c, "zero-square classes (all even-square)", zero_square_classes);

  auto zs1 = is_zero_square(ex1);
  ok = ok && is_even_square(ex1).verdict && !zs1.verdict;
  if (zs1.witness)
    note(c, "Example 1 is even-square but not zero-square: x=" +
                elem_label(ex1, zs1.witness->a) + " has nonzero square");
  auto nil2 = is_nil(ex2);
  ok = ok && is_even_square(ex2).verdict && !nil2.verdict;
  if (nil2.witness)
    note(c, "Example 2 is even-square but not nil: a=" +
                elem_label(ex2, nil2.witness->a) + " has a^" +
                std::to_string(nil2.witness->power) + " repeating an earlier power");
  settle_bounded(c, ok, pool.max_order);
  return c;
}

Claim claim_char2_even_square_commutative(const RingPool& pool) {
  Claim c;
  c.id = "F3-char2-even-square-commutative";
  c.anchor = "Introduction (cited)";
  c.statement = "every even square ring of characteristic two is commutative";
  c.covers = {"char-two-commutative"};
  bool ok = true;
  long long checked = 0;
  for (int n = 1; n <= pool.max_order; ++n)
    for (const auto& r : pool.by_order.at(n)) {
      if (r.characteristic() != 2 || !is_even_square(r).verdict) continue;
      ++checked;
      if (!is_commutative(r).verdict) {
        ok = false;
        c.evidence.witness_rings.push_back(r);
      }
    }
  count(c, "char-2 even-square classes checked", checked);
  settle_bounded(c, ok, pool.max_order);
  return c;
}

Claim claim_order_equals_char_commutative(const RingPool& pool) {
  Claim c;
  c.id = "F4-order-equals-char-commutative";
  c.anchor = "Introduction (cited)";
  c.statement = "a ring whose order equals its characteristic is commutative";
  c.covers = {"order-equals-char"};
  bool ok = true;
  long long checked = 0;
  for (int n = 1; n <= pool.max_order; ++n)
    for (const auto& r : pool.by_order.at(n)) {
      if (r.characteristic() != r.order()) continue;
      ++checked;
      if (!is_commutative(r).verdict) {
        ok = false;
        c.evidence.witness_rings.push_back(r);
      }
    }
  count(c, "classes with characteristic equal to order", checked);
  settle_bounded(c, ok, pool.max_order);
  return c;
}

const std::vector<std::string>& required_coverage_keys() {
  static const std::vector<std::string> keys = {
      "proposition-1",  "proposition-2",
      "corollary",      "proposition-3",
      "proposition-4",  "example-1",
      "example-2",      "char-two-commutative",
      "no-order-4",     "order-2n-nil",
      "unique-special-zero-divisor", "order-equals-char",
      "order-8-characteristics",     "zero-square-subset",
      "even-square-not-nil",
  };
  return keys;
}

ClaimReport run_all(const RunOptions& options) {
  if (options.max_order < 8 || options.max_order > 16)
    throw Error("max order must be between 8 and 16");
  auto t0 = std::chrono::steady_clock::now();

  RingPool pool = RingPool::build(options.max_order, options.jobs);
  FiniteRing ex1 = options.example1_override ? *options.example1_override
                                             : example1_ring();
  FiniteRing ex2 = options.example2_override ? *options.example2_override
                                             : example2_ring();

  ClaimReport report;
  report.max_order = options.max_order;
  report.enumeration = pool.stats;
  report.claims.push_back(claim_prop1_implication(pool));
  report.claims.push_back(claim_prop2_counterexample(ex1));
  report.claims.push_back(claim_min_noncommutative_even_square(pool));
  report.claims.push_back(claim_order8_char4_nil(pool));
  report.claims.push_back(claim_odd_min_nine(pool, ex2));
  report.claims.push_back(claim_zero_divisor_statement(pool));
  report.claims.push_back(claim_zero_square_subset(pool, ex1, ex2));
  report.claims.push_back(claim_char2_even_square_commutative(pool));
  report.claims.push_back(claim_order_equals_char_commutative(pool));
  report.claims.push_back(claim_example1(ex1));
  report.claims.push_back(claim_example2(ex2));

  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace ringlab
