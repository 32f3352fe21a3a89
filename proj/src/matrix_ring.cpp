#include "ringlab/matrix_ring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ringlab/iso.hpp"

namespace ringlab {

std::string ModularMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < dim; ++r) {
    if (r) os << ',';
    os << '[';
    for (int c = 0; c < dim; ++c) {
      if (c) os << ',';
      os << at(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

ModularMatrix mat_zero(int dim, int modulus) {
  ModularMatrix m;
  m.dim = dim;
  m.modulus = modulus;
  m.entries.fill(0);
  return m;
}

ModularMatrix mat_add(const ModularMatrix& a, const ModularMatrix& b) {
  ModularMatrix out = mat_zero(a.dim, a.modulus);
  for (int i = 0; i < a.dim * a.dim; ++i)
    out.entries[i] = (a.entries[i] + b.entries[i]) % a.modulus;
  return out;
}

ModularMatrix mat_mul(const ModularMatrix& a, const ModularMatrix& b) {
  ModularMatrix out = mat_zero(a.dim, a.modulus);
  for (int r = 0; r < a.dim; ++r)
    for (int k = 0; k < a.dim; ++k) {
      int v = a.at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < a.dim; ++c)
        out.at(r, c) = (out.at(r, c) + v * b.at(k, c)) % a.modulus;
    }
  return out;
}

std::string MatrixGenSpec::describe() const {
  std::ostringstream os;
  os << "matrix-closure: mod " << modulus << " dim " << dim << " gens";
  for (const auto& g : generators) os << ' ' << g.to_string();
  return os.str();
}

std::vector<ModularMatrix> closure(const MatrixGenSpec& spec) {
  if (spec.dim < 1 || spec.dim > 4) throw Error("matrix dim must be 1..4");
  if (spec.modulus < 2) throw Error("matrix modulus must be >= 2");
  if (spec.generators.empty()) throw Error("at least one generator required");
  for (const auto& g : spec.generators) {
    if (g.dim != spec.dim || g.modulus != spec.modulus)
      throw Error("all generators must share the spec's dim and modulus");
    for (int i = 0; i < g.dim * g.dim; ++i)
      if (g.entries[i] < 0 || g.entries[i] >= g.modulus)
        throw Error("generator entries must be reduced mod m");
  }

  std::set<ModularMatrix> have;
  std::vector<ModularMatrix> worklist;
  auto push = [&](const ModularMatrix& m) {
    if (have.insert(m).second) {
      if (static_cast<int>(have.size()) > spec.closure_cap)
        throw ClosureTooLarge("closure exceeds cap of " +
                              std::to_string(spec.closure_cap) + " elements");
      worklist.push_back(m);
    }
  };
  push(mat_zero(spec.dim, spec.modulus));
  for (const auto& g : spec.generators) push(g);

  while (!worklist.empty()) {
    ModularMatrix x = worklist.back();
    worklist.pop_back();
    std::vector<ModularMatrix> snapshot(have.begin(), have.end());
    for (const auto& y : snapshot) {
      push(mat_add(x, y));
      push(mat_mul(x, y));
      push(mat_mul(y, x));
    }
  }
  return {have.begin(), have.end()};  // std::set iterates in sorted order
}

FiniteRing to_ring(const std::vector<ModularMatrix>& elements, std::string name,
                   std::string provenance) {
  if (elements.empty()) throw NotClosed("element set is empty");
  std::vector<ModularMatrix> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const int n = static_cast<int>(sorted.size());
  if (n > kMaxRingOrder) throw OrderTooLarge("closure has more than 512 elements");

  const ModularMatrix zero = mat_zero(sorted[0].dim, sorted[0].modulus);
  if (sorted[0] != zero) throw NotClosed("zero matrix missing from element set");

  std::map<ModularMatrix, Elem> index;
  for (int i = 0; i < n; ++i) index[sorted[i]] = static_cast<Elem>(i);
  auto lookup = [&](const ModularMatrix& m, const ModularMatrix& a,
                    const ModularMatrix& b, const char* op) {
    auto it = index.find(m);
    if (it == index.end())
      throw NotClosed(std::string("set not closed under ") + op + ": " +
                      a.to_string() + ", " + b.to_string());
    return it->second;
  };

  FiniteRing r;
  r.add_table.resize(n * n);
  r.neg_table.resize(n);
  r.mul_table.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r.add_table[a * n + b] = lookup(mat_add(sorted[a], sorted[b]), sorted[a], sorted[b], "+");
      r.mul_table[a * n + b] = lookup(mat_mul(sorted[a], sorted[b]), sorted[a], sorted[b], "*");
    }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b)
      if (r.add_table[a * n + b] == 0) {
        r.neg_table[a] = static_cast<Elem>(b);
        found = true;
        break;
      }
    if (!found) throw NotClosed("element " + sorted[a].to_string() + " has no negative");
  }

  // Group type of (R,+) from a primary basis of the addition table. The
  // stored index order is the sorted matrix order, which may or may not
  // coincide with the group's mixed-radix order.
  auto basis = find_additive_basis(r.add_table, n);
  r.group = AdditiveGroup(basis.moduli);
  r.coordinate_addition = true;
  for (int a = 0; a < n && r.coordinate_addition; ++a)
    for (int b = 0; b < n; ++b)
      if (r.add_table[a * n + b] !=
          r.group.add(static_cast<Elem>(a), static_cast<Elem>(b))) {
        r.coordinate_addition = false;
        break;
      }

  r.element_labels.reserve(n);
  for (const auto& m : sorted) r.element_labels.push_back(m.to_string());
  r.name = std::move(name);
  r.provenance = provenance.empty() ? "matrix-closure" : std::move(provenance);
  return r;
}

}  // namespace ringlab
