#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

struct ClosureTooLarge : Error {
  using Error::Error;
};

struct NotClosed : Error {
  using Error::Error;
};

// k x k matrix over Z_m, k <= 4, entries reduced into [0, m).
struct ModularMatrix {
  int dim = 1;
  int modulus = 2;
  std::array<int, 16> entries{};  // row major, first dim*dim used

  int at(int r, int c) const { return entries[r * dim + c]; }
  int& at(int r, int c) { return entries[r * dim + c]; }

  // Lexicographic on flattened entries, for deterministic element order.
  auto operator<=>(const ModularMatrix& o) const = default;

  std::string to_string() const;  // e.g. "[[2,0],[0,0]]"
};

ModularMatrix mat_zero(int dim, int modulus);
ModularMatrix mat_add(const ModularMatrix& a, const ModularMatrix& b);
ModularMatrix mat_mul(const ModularMatrix& a, const ModularMatrix& b);

struct MatrixGenSpec {
  int modulus = 2;
  int dim = 2;
  std::vector<ModularMatrix> generators;
  int closure_cap = 4096;

  std::string describe() const;
};

// Smallest set containing 0 and the generators, closed under entrywise
// addition mod m and matrix multiplication mod m. Worklist to fixpoint;
// result sorted lexicographically by flattened entries (zero first).
// Throws ClosureTooLarge when the set exceeds spec.closure_cap.
std::vector<ModularMatrix> closure(const MatrixGenSpec& spec);

// Turns a closed set of matrices (as produced by closure) into a
// FiniteRing in the sorted element order, with the zero matrix at index 0.
// Throws NotClosed with the offending pair if the set is not closed.
FiniteRing to_ring(const std::vector<ModularMatrix>& elements,
                   std::string name = "", std::string provenance = "");

}  // namespace ringlab
