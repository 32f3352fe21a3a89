#include "ringlab/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

#include "ringlab/properties.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ringlab {

namespace {

void partitions_desc(int e, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (int first = std::min(e, max_part); first >= 1; --first) {
    cur.push_back(first);
    partitions_desc(e - first, first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<AdditiveGroup> abelian_groups_of_order(int n) {
  if (n < 1 || n > kMaxRingOrder)
    throw OrderTooLarge("group order must be 1.." + std::to_string(kMaxRingOrder));
  // factor n
  std::vector<std::pair<int, int>> fac;  // (prime, exponent)
  int m = n;
  for (int p = 2; p <= m; ++p)
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) { m /= p; ++e; }
      fac.push_back({p, e});
    }
  // partitions of each exponent, largest part first
  std::vector<std::vector<std::vector<int>>> parts(fac.size());
  for (std::size_t i = 0; i < fac.size(); ++i) {
    std::vector<int> cur;
    partitions_desc(fac[i].second, fac[i].second, cur, parts[i]);
  }
  std::vector<AdditiveGroup> out;
  std::vector<std::size_t> pick(fac.size(), 0);
  while (true) {
    std::vector<int> moduli;
    for (std::size_t i = 0; i < fac.size(); ++i)
      for (int e : parts[i][pick[i]]) {
        int q = 1;
        for (int j = 0; j < e; ++j) q *= fac[i].first;
        moduli.push_back(q);
      }
    out.push_back(AdditiveGroup(moduli));
    if (fac.empty()) break;
    int i = static_cast<int>(fac.size()) - 1;
    while (i >= 0 && ++pick[i] == parts[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

bool EnumFilter::admits(const FiniteRing& r) const {
  if (commutative && is_commutative(r).verdict != *commutative) return false;
  if (even_square && is_even_square(r).verdict != *even_square) return false;
  if (zero_square && is_zero_square(r).verdict != *zero_square) return false;
  if (nil && is_nil(r).verdict != *nil) return false;
  if (unital && is_unital(r).verdict != *unital) return false;
  if (characteristic && r.characteristic() != *characteristic) return false;
  return true;
}

EnumFilter EnumFilter::parse(const std::string& csv) {
  EnumFilter f;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok == "commutative") f.commutative = true;
    else if (tok == "noncommutative") f.commutative = false;
    else if (tok == "even-square") f.even_square = true;
    else if (tok == "zero-square") f.zero_square = true;
    else if (tok == "nil") f.nil = true;
    else if (tok == "not-nil") f.nil = false;
    else if (tok == "unital") f.unital = true;
    else if (tok.rfind("char=", 0) == 0) f.characteristic = std::stoi(tok.substr(5));
    else throw Error("unknown filter token: " + tok);
  }
  return f;
}

namespace {

constexpr Elem kUnset = 0xffff;

// Precomputed per-group search tables.
struct SearchContext {
  AdditiveGroup group;
  int n = 1, k = 0, exponent = 1;
  std::vector<Elem> add;               // n*n
  std::vector<Elem> smul;              // exponent*n
  std::vector<std::array<int, 4>> coords;  // n x k (k <= 4)
  std::vector<std::vector<Elem>> cands;    // k*k candidate lists
  std::vector<std::array<int, 3>> triples;  // generator triples (p,q,r)
  std::vector<int> cell_order;  // assignment order: growing leading blocks

  explicit SearchContext(const AdditiveGroup& g) : group(g) {
    n = g.order();
    k = g.rank();
    exponent = g.exponent();
    add.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        add[a * n + b] = g.add(static_cast<Elem>(a), static_cast<Elem>(b));
    smul.assign(static_cast<std::size_t>(exponent) * n, 0);
    for (int m = 1; m < exponent; ++m)
      for (int x = 0; x < n; ++x)
        smul[m * n + x] = add[smul[(m - 1) * n + x] * n + x];
    coords.resize(n);
    for (int a = 0; a < n; ++a) {
      auto c = g.coords_of(static_cast<Elem>(a));
      for (int i = 0; i < k; ++i) coords[a][i] = c[i];
    }
    cands.resize(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int gg = std::gcd(g.moduli()[i], g.moduli()[j]);
        for (int x = 0; x < n; ++x)
          if (smul[(gg % exponent) * n + x] == 0)  // gg * x == 0
            cands[i * k + j].push_back(static_cast<Elem>(x));
      }
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q)
        for (int r = 0; r < k; ++r) triples.push_back({p, q, r});
    // Complete the leading t x t submatrix before touching generator t, so
    // associativity constraints among the first generators fire as early
    // as possible.
    for (int t = 0; t < k; ++t) {
      for (int i = 0; i < t; ++i) cell_order.push_back(i * k + t);
      for (int j = 0; j < t; ++j) cell_order.push_back(t * k + j);
      cell_order.push_back(t * k + t);
    }
  }

  Elem scaled(int m, Elem x) const { return smul[(m % exponent) * n + x]; }
};

// Evaluates one associativity constraint (g_p g_q) g_r = g_p (g_q g_r) on a
// partial assignment. Returns false when some needed cell is unset;
// otherwise sets `ok`.
bool try_triple(const SearchContext& ctx, const std::vector<Elem>& gp, int p,
                int q, int r, bool& ok) {
  const int k = ctx.k;
  Elem x = gp[p * k + q];
  if (x == kUnset) return false;
  Elem y = gp[q * k + r];
  if (y == kUnset) return false;
  Elem lhs = 0, rhs = 0;
  for (int m = 0; m < k; ++m) {
    int cm = ctx.coords[x][m];
    if (cm == 0) continue;
    Elem cell = gp[m * k + r];
    if (cell == kUnset) return false;
    lhs = ctx.add[lhs * ctx.n + ctx.scaled(cm, cell)];
  }
  for (int m = 0; m < k; ++m) {
    int cm = ctx.coords[y][m];
    if (cm == 0) continue;
    Elem cell = gp[p * k + m];
    if (cell == kUnset) return false;
    rhs = ctx.add[rhs * ctx.n + ctx.scaled(cm, cell)];
  }
  ok = lhs == rhs;
  return true;
}

std::vector<Elem> extend_bilinear(const SearchContext& ctx, const std::vector<Elem>& gp) {
  const int n = ctx.n, k = ctx.k;
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Elem s = 0;
      for (int i = 0; i < k; ++i) {
        int ai = ctx.coords[a][i];
        if (ai == 0) continue;
        for (int j = 0; j < k; ++j) {
          int bj = ctx.coords[b][j];
          if (bj == 0) continue;
          s = ctx.add[s * n + ctx.scaled(ai * bj, gp[i * k + j])];
        }
      }
      mul[a * n + b] = s;
    }
  return mul;
}

struct PartitionResult {
  std::set<std::vector<std::uint8_t>> forms;
  long long assignments = 0;
  long long associative = 0;
  long long arbiter_rejects = 0;
};

void dfs(const SearchContext& ctx, std::vector<Elem>& gp, int depth,
         std::uint64_t verified, PartitionResult& out) {
  const int cells = ctx.k * ctx.k;
  // Check every still-unverified generator triple that has become decidable.
  std::uint64_t now = verified;
  for (std::size_t t = 0; t < ctx.triples.size(); ++t) {
    if (now & (1ull << t)) continue;
    bool ok;
    if (try_triple(ctx, gp, ctx.triples[t][0], ctx.triples[t][1], ctx.triples[t][2], ok)) {
      if (!ok) return;
      now |= 1ull << t;
    }
  }
  if (depth == cells) {
    out.assignments += 1;
    auto mul = extend_bilinear(ctx, gp);
    FiniteRing ring = coordinate_ring(ctx.group, std::move(mul));
    if (ring.validate()) {  // final arbiter over the incremental triple checks
      out.arbiter_rejects += 1;
      return;
    }
    out.associative += 1;
    out.forms.insert(canonical_form(ring).bytes);
    return;
  }
  const int cell = ctx.cell_order[depth];
  for (Elem v : ctx.cands[cell]) {
    gp[cell] = v;
    dfs(ctx, gp, depth + 1, now, out);
  }
  gp[cell] = kUnset;
}

}  // namespace

EnumResult enumerate_rings_detailed(int n, const EnumFilter& filter, int jobs) {
  if (n < 1 || n > 16) throw OrderTooLarge("enumeration supports orders 1..16");
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
  const int threads = 1;
  (void)jobs;
#endif

  EnumResult result;
  std::vector<std::pair<std::vector<std::uint8_t>, const AdditiveGroup*>> all_forms;
  std::vector<AdditiveGroup> groups = abelian_groups_of_order(n);

  for (const auto& group : groups) {
    SearchContext ctx(group);
    GroupEnumStats stats;
    stats.group = group;

    std::set<std::vector<std::uint8_t>> group_forms;
    if (ctx.k == 0) {
      // trivial ring of order 1
      FiniteRing ring = coordinate_ring(group, {0});
      group_forms.insert(canonical_form(ring).bytes);
      stats.assignments_tried = 1;
      stats.associative = 1;
    } else {
      // Deterministic partitioning by the first generator-product choice;
      // partitions are independent and merged in partition order.
      const auto& first = ctx.cands[ctx.cell_order[0]];
      std::vector<PartitionResult> parts(first.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
      for (int pi = 0; pi < static_cast<int>(first.size()); ++pi) {
        std::vector<Elem> gp(ctx.k * ctx.k, kUnset);
        gp[ctx.cell_order[0]] = first[pi];
        dfs(ctx, gp, 1, 0, parts[pi]);
      }
      long long rejects = 0;
      for (auto& p : parts) {
        stats.assignments_tried += p.assignments;
        stats.associative += p.associative;
        rejects += p.arbiter_rejects;
        group_forms.merge(p.forms);
      }
      if (rejects > 0)
        throw Error("internal: incremental associativity check admitted a "
                    "non-associative table");
    }
    stats.classes = static_cast<int>(group_forms.size());
    result.stats.push_back(stats);
    for (auto& f : group_forms) all_forms.push_back({f, &group});
  }

  std::sort(all_forms.begin(), all_forms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  result.classes_unfiltered = static_cast<int>(all_forms.size());

  for (std::size_t i = 0; i < all_forms.size(); ++i) {
    CanonicalForm form{all_forms[i].first};
    FiniteRing ring = ring_of_canonical_form(form);
    ring.name = "o" + std::to_string(n) + "-c" + std::to_string(i);
    ring.provenance = "enumeration: order " + std::to_string(n) + " over " +
                      to_string(*all_forms[i].second);
    if (filter.admits(ring)) result.rings.push_back(std::move(ring));
  }
  return result;
}

std::vector<FiniteRing> enumerate_rings(int n, const EnumFilter& filter, int jobs) {
  return enumerate_rings_detailed(n, filter, jobs).rings;
}

}  // namespace ringlab
