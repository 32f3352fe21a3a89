#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/enumerate.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

enum class ClaimVerdict { Verified, Refuted, CheckedUpTo };

std::string to_string(ClaimVerdict v);

struct ClaimEvidence {
  std::vector<std::pair<std::string, long long>> counts;  // ordered label -> value
  std::vector<std::string> notes;
  std::vector<FiniteRing> witness_rings;
};

// One machine-checked statement. verdict is Verified only when the full
// quantifier range of the statement was exhausted; statements about
// unbounded families carry CheckedUpTo with the exhausted bound.
struct Claim {
  std::string id;           // stable, e.g. "P3-min-order-8"
  std::string anchor;       // e.g. "Proposition 3"
  std::string statement;
  ClaimVerdict verdict = ClaimVerdict::Refuted;
  int checked_bound = 0;    // CheckedUpTo only
  ClaimEvidence evidence;
  std::vector<std::string> covers;  // registry keys this claim certifies
};

struct OrderEnumStats {
  int order = 0;
  int classes = 0;
  std::vector<std::pair<std::string, int>> per_group;  // moduli string -> classes
};

struct ClaimReport {
  int max_order = 0;
  std::vector<Claim> claims;
  std::vector<OrderEnumStats> enumeration;
  double runtime_seconds = 0;  // informational; never serialized

  bool any_refuted() const;
};

struct RunOptions {
  int max_order = 9;  // 8..16
  int jobs = 0;
  // Test hooks: replace the rings built from the two matrix constructions.
  std::optional<FiniteRing> example1_override;
  std::optional<FiniteRing> example2_override;
};

// Pool of enumerated rings shared by all claims: every isomorphism class
// of every order in 1..max_order, enumerated once.
struct RingPool {
  int max_order = 0;
  std::map<int, std::vector<FiniteRing>> by_order;
  std::vector<OrderEnumStats> stats;

  static RingPool build(int max_order, int jobs);
};

// The two matrix-closure rings the claims are anchored on.
FiniteRing example1_ring();
FiniteRing example2_ring();

Claim claim_example1(const FiniteRing& ex1);
Claim claim_example2(const FiniteRing& ex2);
Claim claim_min_noncommutative_even_square(const RingPool& pool);
Claim claim_order8_char4_nil(const RingPool& pool);
Claim claim_odd_min_nine(const RingPool& pool, const FiniteRing& ex2);
Claim claim_prop1_implication(const RingPool& pool);
Claim claim_prop2_counterexample(const FiniteRing& ex1);
Claim claim_zero_divisor_statement(const RingPool& pool);
Claim claim_zero_square_subset(const RingPool& pool, const FiniteRing& ex1,
                               const FiniteRing& ex2);
Claim claim_char2_even_square_commutative(const RingPool& pool);
Claim claim_order_equals_char_commutative(const RingPool& pool);

// Registry keys that must be covered by the union of all claims' `covers`.
const std::vector<std::string>& required_coverage_keys();

// Runs every registered claim against a shared enumeration of orders
// 1..max_order. Deterministic report; a refuted claim is a report outcome,
// not an error.
ClaimReport run_all(const RunOptions& options = {});

}  // namespace ringlab
