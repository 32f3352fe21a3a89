#include "ringlab/iso.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace ringlab {

namespace {

std::pair<int, int> prime_exponent(int d) {
  int p = prime_power_base(d);
  int e = 0;
  for (int x = d; x > 1; x /= p) ++e;
  return {p, e};
}

}  // namespace

std::vector<GroupAutomorphism> automorphisms(const AdditiveGroup& g, std::size_t cap) {
  const int n = g.order();
  const int k = g.rank();
  if (n == 1) return {GroupAutomorphism{{0}, {0}}};

  // Candidate images per generator: elements annihilated by the generator's
  // modulus. Their product bounds the enumeration.
  std::vector<std::vector<Elem>> cands(k);
  double estimate = 1;
  for (int i = 0; i < k; ++i) {
    for (int x = 0; x < n; ++x)
      if (g.scalar_mul(g.moduli()[i], static_cast<Elem>(x)) == 0)
        cands[i].push_back(static_cast<Elem>(x));
    estimate *= static_cast<double>(cands[i].size());
  }
  if (estimate > 2e7)
    throw OrderTooLarge("automorphism enumeration infeasible for " + to_string(g));

  std::vector<std::vector<int>> coords(n);
  for (int a = 0; a < n; ++a) coords[a] = g.coords_of(static_cast<Elem>(a));

  std::vector<GroupAutomorphism> out;
  std::vector<std::size_t> pick(k, 0);
  std::vector<Elem> map(n), inv(n);
  std::vector<char> seen(n);
  while (true) {
    // Build the induced map a -> sum_i a_i * v_i and keep it if bijective.
    std::fill(seen.begin(), seen.end(), 0);
    bool bijective = true;
    for (int a = 0; a < n && bijective; ++a) {
      Elem img = 0;
      for (int i = 0; i < k; ++i)
        if (coords[a][i] != 0)
          img = g.add(img, g.scalar_mul(coords[a][i], cands[i][pick[i]]));
      map[a] = img;
      if (seen[img]) bijective = false;
      seen[img] = 1;
    }
    if (bijective) {
      for (int a = 0; a < n; ++a) inv[map[a]] = static_cast<Elem>(a);
      out.push_back(GroupAutomorphism{map, inv});
      if (out.size() > cap)
        throw OrderTooLarge("automorphism group larger than cap for " + to_string(g));
    }
    int i = k - 1;
    while (i >= 0 && ++pick[i] == cands[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

namespace {

const std::vector<GroupAutomorphism>& cached_automorphisms(const AdditiveGroup& g) {
  static std::mutex mu;
  static std::map<std::vector<int>, std::unique_ptr<std::vector<GroupAutomorphism>>> cache;
  std::scoped_lock lock(mu);
  auto& slot = cache[g.moduli()];
  if (!slot) slot = std::make_unique<std::vector<GroupAutomorphism>>(automorphisms(g));
  return *slot;
}

}  // namespace

AdditiveBasis find_additive_basis(const std::vector<Elem>& add_table, int n) {
  if (n < 1 || static_cast<int>(add_table.size()) != n * n)
    throw Error("addition table must have n^2 entries");
  if (n == 1) return {};

  auto add = [&](Elem a, Elem b) { return add_table[a * n + b]; };
  std::vector<int> ord(n, 1);
  for (int a = 1; a < n; ++a) {
    Elem x = static_cast<Elem>(a);
    int o = 1;
    while (x != 0) {
      x = add(x, static_cast<Elem>(a));
      if (++o > n) throw Error("addition table is not a group table");
    }
    ord[a] = o;
  }

  std::vector<int> primes;
  {
    int m = n;
    for (int p = 2; p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
  }

  AdditiveBasis basis;
  std::vector<std::pair<std::pair<int, int>, Elem>> keyed;  // ((p,e), element)
  for (int p : primes) {
    // p-component and its size.
    std::vector<Elem> comp;
    for (int a = 1; a < n; ++a) {
      int o = ord[a];
      while (o % p == 0) o /= p;
      if (o == 1) comp.push_back(static_cast<Elem>(a));
    }
    const int target = static_cast<int>(comp.size()) + 1;

    // Candidates by descending order then ascending index; depth-first
    // search for a chain of independent picks whose spans multiply out to
    // the whole component.
    std::vector<Elem> cands = comp;
    std::stable_sort(cands.begin(), cands.end(),
                     [&](Elem a, Elem b) { return ord[a] > ord[b]; });

    std::vector<Elem> chosen;
    std::vector<char> span(n, 0);
    span[0] = 1;

    auto span_with = [&](const std::vector<char>& cur, Elem x) {
      std::vector<char> next = cur;
      std::vector<Elem> mult;
      Elem m = x;
      while (m != 0) {
        mult.push_back(m);
        m = add(m, x);
      }
      for (int s = 0; s < n; ++s)
        if (cur[s])
          for (Elem mm : mult) next[add(static_cast<Elem>(s), mm)] = 1;
      return next;
    };

    std::function<bool(std::vector<char>&, int, int)> search =
        [&](std::vector<char>& cur, int cur_size, int max_ord) -> bool {
      if (cur_size == target) return true;
      for (Elem x : cands) {
        if (ord[x] > max_ord || cur[x]) continue;
        // independence: <x> meets the span only at 0
        bool indep = true;
        Elem m = x;
        while (m != 0) {
          if (cur[m]) { indep = false; break; }
          m = add(m, x);
        }
        if (!indep) continue;
        auto next = span_with(cur, x);
        chosen.push_back(x);
        if (search(next, cur_size * ord[x], ord[x])) return true;
        chosen.pop_back();
      }
      return false;
    };

    if (target > 1) {
      if (!search(span, 1, n))
        throw Error("internal: no primary basis found for addition table");
      for (Elem x : chosen) keyed.push_back({prime_exponent(ord[x]), x});
    }
  }

  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [pe, x] : keyed) {
    int q = 1;
    for (int i = 0; i < pe.second; ++i) q *= pe.first;
    basis.moduli.push_back(q);
    basis.elements.push_back(x);
  }
  return basis;
}

Coordinatized coordinatize(const FiniteRing& r) {
  const int n = r.order();
  if (r.coordinate_addition) {
    Coordinatized c;
    c.ring = r;
    for (int i = 0; i < r.group.rank(); ++i) c.basis.push_back(r.group.generator(i));
    c.old_to_new.resize(n);
    std::iota(c.old_to_new.begin(), c.old_to_new.end(), 0);
    return c;
  }

  auto basis = find_additive_basis(r.add_table, n);
  AdditiveGroup group(basis.moduli);
  if (group.order() != n) throw Error("internal: basis does not span the group");

  // new index -> old index via coordinates over the basis
  std::vector<Elem> new_to_old(n), old_to_new(n, 0);
  std::vector<char> hit(n, 0);
  for (int x = 0; x < n; ++x) {
    auto c = group.coords_of(static_cast<Elem>(x));
    Elem old = 0;
    for (int i = 0; i < group.rank(); ++i) {
      Elem part = 0;
      for (int m = 0; m < c[i]; ++m) part = r.add(part, basis.elements[i]);
      old = r.add(old, part);
    }
    new_to_old[x] = old;
    if (hit[old]) throw Error("internal: basis map is not a bijection");
    hit[old] = 1;
    old_to_new[old] = static_cast<Elem>(x);
  }

  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      mul[x * n + y] = old_to_new[r.mul(new_to_old[x], new_to_old[y])];

  Coordinatized out;
  out.ring = coordinate_ring(group, std::move(mul), r.name,
                             r.provenance.empty() ? "coordinatized"
                                                  : r.provenance + "; coordinatized");
  if (!r.element_labels.empty()) {
    out.ring.element_labels.resize(n);
    for (int x = 0; x < n; ++x) out.ring.element_labels[x] = r.element_labels[new_to_old[x]];
  }
  out.basis = basis.elements;
  out.old_to_new = std::move(old_to_new);
  return out;
}

std::vector<Elem> relabel_mul(const FiniteRing& r, const GroupAutomorphism& sigma) {
  const int n = r.order();
  std::vector<Elem> out(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out[a * n + b] = sigma.inverse[r.mul(sigma.map[a], sigma.map[b])];
  return out;
}

namespace {

void append_u16(std::vector<std::uint8_t>& bytes, int v) {
  bytes.push_back(static_cast<std::uint8_t>(v >> 8));
  bytes.push_back(static_cast<std::uint8_t>(v & 0xff));
}

void encode_table(std::vector<std::uint8_t>& bytes, const std::vector<Elem>& table, int n) {
  if (n <= 256)
    for (Elem e : table) bytes.push_back(static_cast<std::uint8_t>(e));
  else
    for (Elem e : table) append_u16(bytes, e);
}

std::vector<std::uint8_t> group_prefix(const AdditiveGroup& g) {
  std::vector<std::uint8_t> bytes;
  bytes.push_back(static_cast<std::uint8_t>(g.rank()));
  for (int d : g.moduli()) append_u16(bytes, d);
  return bytes;
}

}  // namespace

CanonicalForm canonical_form(const FiniteRing& r) {
  const FiniteRing* ring = &r;
  FiniteRing owned;
  if (!r.coordinate_addition) {
    owned = coordinatize(r).ring;
    ring = &owned;
  }
  const int n = ring->order();
  const auto& auts = cached_automorphisms(ring->group);

  std::vector<Elem> best;
  std::vector<Elem> cur(static_cast<std::size_t>(n) * n);
  for (const auto& sigma : auts) {
    // Relabel with early bail-out against the best table so far.
    bool worse = false, better = best.empty();
    std::size_t pos = 0;
    for (int a = 0; a < n && !worse; ++a)
      for (int b = 0; b < n; ++b, ++pos) {
        Elem v = sigma.inverse[ring->mul(sigma.map[a], sigma.map[b])];
        cur[pos] = v;
        if (!better) {
          if (v > best[pos]) { worse = true; break; }
          if (v < best[pos]) better = true;
        }
      }
    if (!worse && better) best = cur;  // cur is fully filled when not worse
  }

  CanonicalForm form;
  form.bytes = group_prefix(ring->group);
  encode_table(form.bytes, best, n);
  return form;
}

FiniteRing ring_of_canonical_form(const CanonicalForm& form) {
  const auto& b = form.bytes;
  if (b.empty()) throw Error("empty canonical form");
  int k = b[0];
  std::size_t pos = 1;
  std::vector<int> moduli;
  for (int i = 0; i < k; ++i) {
    if (pos + 1 >= b.size()) throw Error("truncated canonical form");
    moduli.push_back((b[pos] << 8) | b[pos + 1]);
    pos += 2;
  }
  AdditiveGroup g(moduli);
  const int n = g.order();
  std::vector<Elem> mul;
  mul.reserve(static_cast<std::size_t>(n) * n);
  if (n <= 256) {
    if (b.size() - pos != static_cast<std::size_t>(n) * n)
      throw Error("canonical form table size mismatch");
    for (; pos < b.size(); ++pos) mul.push_back(b[pos]);
  } else {
    if (b.size() - pos != static_cast<std::size_t>(n) * n * 2)
      throw Error("canonical form table size mismatch");
    while (pos + 1 < b.size()) {
      mul.push_back(static_cast<Elem>((b[pos] << 8) | b[pos + 1]));
      pos += 2;
    }
  }
  return coordinate_ring(g, std::move(mul), "", "canonical form");
}

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

namespace {

// Isomorphism-invariant fingerprint: commutativity plus the multiset of
// (additive order of a, a^2 == 0, additive order of a^2).
std::vector<std::array<int, 3>> fingerprint(const FiniteRing& r) {
  std::vector<std::array<int, 3>> fp;
  fp.reserve(r.order());
  for (int a = 0; a < r.order(); ++a) {
    Elem sq = r.mul(a, a);
    fp.push_back({r.additive_order(static_cast<Elem>(a)), sq == 0 ? 1 : 0,
                  r.additive_order(sq)});
  }
  std::sort(fp.begin(), fp.end());
  return fp;
}

bool table_commutative(const FiniteRing& r) {
  for (int a = 0; a < r.order(); ++a)
    for (int b = a + 1; b < r.order(); ++b)
      if (r.mul(a, b) != r.mul(b, a)) return false;
  return true;
}

}  // namespace

IsoResult are_isomorphic(const FiniteRing& r, const FiniteRing& s) {
  if (r.order() != s.order()) return {false, {}, "orders differ"};

  Coordinatized cr = coordinatize(r), cs = coordinatize(s);
  if (cr.ring.group != cs.ring.group)
    return {false, {}, "additive group types differ"};
  if (table_commutative(cr.ring) != table_commutative(cs.ring))
    return {false, {}, "one ring is commutative, the other is not"};
  if (fingerprint(cr.ring) != fingerprint(cs.ring))
    return {false, {}, "element invariant fingerprints differ"};

  const int n = r.order();
  std::vector<Elem> cs_new_to_old(n);
  for (int a = 0; a < n; ++a) cs_new_to_old[cs.old_to_new[a]] = static_cast<Elem>(a);

  const auto& auts = cached_automorphisms(cr.ring.group);
  for (const auto& sigma : auts) {
    bool match = true;
    for (int a = 0; a < n && match; ++a)
      for (int b = 0; b < n; ++b)
        if (sigma.inverse[cr.ring.mul(sigma.map[a], sigma.map[b])] !=
            cs.ring.mul(a, b)) {
          match = false;
          break;
        }
    if (match) {
      // relabel(cr, sigma) == cs, so sigma maps cs-coordinates into
      // cr-coordinates; invert and compose with the coordinatizations.
      IsoResult res;
      res.isomorphic = true;
      res.map.resize(n);
      for (int a = 0; a < n; ++a)
        res.map[a] = cs_new_to_old[sigma.inverse[cr.old_to_new[a]]];
      return res;
    }
  }
  return {false, {}, "no additive automorphism matches the multiplication"};
}

}  // namespace ringlab
