#pragma once

#include <string>
#include <vector>

#include "ringlab/claims.hpp"
#include "ringlab/matrix_ring.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// Malformed document: bad JSON, missing/ill-typed fields, out-of-range
// table entries. Distinct from ValidationError (well-formed tables that
// fail the ring axioms).
struct FormatError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  RingViolation violation;
  ValidationError(const std::string& msg, RingViolation v)
      : Error(msg), violation(v) {}
};

// RingFile: a single JSON document with fixed field order
//   formatVersion, name, order, groupModuli, mulTable,
//   elementLabels (optional), provenance (optional).
// Addition is implied by groupModuli (mixed-radix coordinates).
FiniteRing parse_ring(const std::string& text);
FiniteRing load_ring_file(const std::string& path);

// Canonical text: fixed field order, 2-space indent, '\n' terminated.
// Rings whose addition table is not in coordinate form are re-indexed via
// coordinatize() first. parse(serialize(r)) == r byte-for-byte.
std::string serialize_ring(const FiniteRing& r);

// "2,0;0,0" -> dim x dim matrix (rows ';'-separated, entries ','-separated).
ModularMatrix parse_matrix_literal(const std::string& text, int dim, int modulus);

std::string property_table_human(const PropertyReport& report);
// Header row: property,verdict,witness,numeric
std::string property_table_csv(const PropertyReport& report);
std::string property_table_json(const PropertyReport& report);
// Compact machine-readable witnesses for every false verdict (exit-1 paths).
std::string failed_property_witness_json(const PropertyReport& report);

std::string render_report_markdown(const ClaimReport& report);
std::string render_report_json(const ClaimReport& report);

}  // namespace ringlab
