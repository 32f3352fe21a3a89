#include "ringlab/reference.hpp"

#include <array>
#include <numeric>
#include <vector>

#include "ringlab/enumerate.hpp"
#include "ringlab/iso.hpp"

namespace ringlab {

namespace {

// Flat lookup tables for one group; the walk below recomputes all checks
// from scratch at every step instead of carrying incremental state.
struct RefTables {
  int n, k, exponent;
  std::vector<Elem> add;                   // n*n
  std::vector<Elem> smul;                  // exponent*n
  std::vector<std::array<int, 4>> coords;  // n x k

  explicit RefTables(const AdditiveGroup& g)
      : n(g.order()), k(g.rank()), exponent(g.exponent()) {
    add.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        add[a * n + b] = g.add(static_cast<Elem>(a), static_cast<Elem>(b));
    smul.assign(static_cast<std::size_t>(exponent) * n, 0);
    for (int m = 1; m < exponent; ++m)
      for (int x = 0; x < n; ++x) smul[m * n + x] = add[smul[(m - 1) * n + x] * n + x];
    coords.resize(n);
    for (int a = 0; a < n; ++a) {
      auto c = g.coords_of(static_cast<Elem>(a));
      for (int i = 0; i < k; ++i) coords[a][i] = c[i];
    }
  }

  Elem scaled(int m, Elem x) const { return smul[(m % exponent) * n + x]; }
};

// All generator triples decidable from the first `assigned` cells hold.
bool partial_associative(const RefTables& t, const std::vector<Elem>& gp, int assigned) {
  const int k = t.k;
  auto cell = [&](int i, int j) -> int {
    int c = i * k + j;
    return c < assigned ? gp[c] : -1;
  };
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) {
      int x = cell(p, q);
      if (x < 0) continue;
      for (int r = 0; r < k; ++r) {
        int y = cell(q, r);
        if (y < 0) continue;
        bool decidable = true;
        Elem lhs = 0, rhs = 0;
        for (int m = 0; m < k && decidable; ++m) {
          int cm = t.coords[x][m];
          if (cm == 0) continue;
          int c = cell(m, r);
          if (c < 0) decidable = false;
          else lhs = t.add[lhs * t.n + t.scaled(cm, static_cast<Elem>(c))];
        }
        for (int m = 0; m < k && decidable; ++m) {
          int cm = t.coords[y][m];
          if (cm == 0) continue;
          int c = cell(p, m);
          if (c < 0) decidable = false;
          else rhs = t.add[rhs * t.n + t.scaled(cm, static_cast<Elem>(c))];
        }
        if (decidable && lhs != rhs) return false;
      }
    }
  return true;
}

FiniteRing extend(const AdditiveGroup& g, const RefTables& t, const std::vector<Elem>& gp) {
  const int k = t.k, n = t.n;
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Elem s = 0;
      for (int i = 0; i < k; ++i) {
        int ai = t.coords[a][i];
        if (ai == 0) continue;
        for (int j = 0; j < k; ++j) {
          int bj = t.coords[b][j];
          if (bj == 0) continue;
          s = t.add[s * n + t.scaled(ai * bj, gp[i * k + j])];
        }
      }
      mul[a * n + b] = s;
    }
  return coordinate_ring(g, std::move(mul));
}

}  // namespace

std::vector<FiniteRing> reference_enumerate(int n) {
  std::vector<FiniteRing> reps;
  for (const auto& g : abelian_groups_of_order(n)) {
    const int k = g.rank();
    const int cells = k * k;
    if (cells == 0) {
      reps.push_back(coordinate_ring(g, {0}, "ref-o1"));
      continue;
    }
    RefTables tables(g);
    std::vector<std::vector<Elem>> cands(cells);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int gg = std::gcd(g.moduli()[i], g.moduli()[j]);
        for (int x = 0; x < g.order(); ++x)
          if (g.scalar_mul(gg, static_cast<Elem>(x)) == 0)
            cands[i * k + j].push_back(static_cast<Elem>(x));
      }

    // Odometer with subtree skipping: when a prefix fails, advance the
    // deepest digit instead of descending below it.
    std::vector<std::size_t> digit(cells, 0);
    std::vector<Elem> gp(cells, 0);
    int t = 0;
    gp[0] = cands[0][0];
    while (true) {
      bool ok = partial_associative(tables, gp, t + 1);
      if (ok && t + 1 == cells) {
        FiniteRing ring = extend(g, tables, gp);
        if (!ring.validate()) {
          bool fresh = true;
          for (const auto& rep : reps)
            if (rep.order() == ring.order() && are_isomorphic(rep, ring).isomorphic) {
              fresh = false;
              break;
            }
          if (fresh) {
            ring.name = "ref-o" + std::to_string(n) + "-" + std::to_string(reps.size());
            ring.provenance = "reference enumeration";
            reps.push_back(std::move(ring));
          }
        }
      } else if (ok) {
        ++t;
        digit[t] = 0;
        gp[t] = cands[t][0];
        continue;
      }
      while (t >= 0 && ++digit[t] == cands[t].size()) --t;
      if (t < 0) break;
      gp[t] = cands[t][digit[t]];
    }
  }
  return reps;
}

}  // namespace ringlab
