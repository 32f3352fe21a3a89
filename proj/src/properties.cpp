#include "ringlab/properties.hpp"

#include <algorithm>

namespace ringlab {

std::string Witness::describe() const {
  switch (kind) {
    case Kind::CommutatorPair:
      return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " with ab != ba";
    case Kind::BadSquare:
      return "a=" + std::to_string(a) + " with offending square";
    case Kind::NonNilpotent:
      return "a=" + std::to_string(a) + " with a^" + std::to_string(power) +
             " repeating an earlier power";
    case Kind::IdentityFail:
      return "identity fails at a=" + std::to_string(a) + " b=" + std::to_string(b);
    case Kind::SpecialElement:
      return "element " + std::to_string(a);
  }
  return {};
}

PropertyResult is_commutative(const FiniteRing& r) {
  const int n = r.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r.mul(a, b) != r.mul(b, a))
        return {false,
                Witness{Witness::Kind::CommutatorPair, static_cast<Elem>(a),
                        static_cast<Elem>(b)},
                std::nullopt};
  return {true, std::nullopt, std::nullopt};
}

PropertyResult is_even_square(const FiniteRing& r) {
  auto tr = r.two_r();
  for (int a = 0; a < r.order(); ++a)
    if (!std::binary_search(tr.begin(), tr.end(), r.mul(a, a)))
      return {false, Witness{Witness::Kind::BadSquare, static_cast<Elem>(a)},
              std::nullopt};
  return {true, std::nullopt, std::nullopt};
}

PropertyResult is_zero_square(const FiniteRing& r) {
  for (int a = 0; a < r.order(); ++a)
    if (r.mul(a, a) != 0)
      return {false, Witness{Witness::Kind::BadSquare, static_cast<Elem>(a)},
              std::nullopt};
  return {true, std::nullopt, std::nullopt};
}

PropertyResult is_nil(const FiniteRing& r) {
  // Power iteration with cycle detection; no nilpotency-index theory needed.
  const int n = r.order();
  long long max_index = 0;
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    Elem x = static_cast<Elem>(a);
    int e = 1;
    while (x != 0 && !seen[x]) {
      seen[x] = 1;
      x = r.mul(x, static_cast<Elem>(a));
      ++e;
    }
    if (x != 0)
      return {false, Witness{Witness::Kind::NonNilpotent, static_cast<Elem>(a), 0, e},
              std::nullopt};
    max_index = std::max<long long>(max_index, a == 0 ? 1 : e);
  }
  return {true, std::nullopt, max_index};
}

namespace {

PropertyResult universal_pair_identity(const FiniteRing& r, bool (*holds)(const FiniteRing&, Elem, Elem)) {
  const int n = r.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!holds(r, static_cast<Elem>(a), static_cast<Elem>(b)))
        return {false,
                Witness{Witness::Kind::IdentityFail, static_cast<Elem>(a),
                        static_cast<Elem>(b)},
                std::nullopt};
  return {true, std::nullopt, std::nullopt};
}

}  // namespace

PropertyResult anticommutes(const FiniteRing& r) {
  return universal_pair_identity(r, [](const FiniteRing& r, Elem a, Elem b) {
    return r.add(r.mul(a, b), r.mul(b, a)) == 0;
  });
}

PropertyResult two_commutes(const FiniteRing& r) {
  return universal_pair_identity(r, [](const FiniteRing& r, Elem a, Elem b) {
    Elem ab = r.mul(a, b), ba = r.mul(b, a);
    return r.add(ab, ab) == r.add(ba, ba);
  });
}

PropertyResult two_anticommutes(const FiniteRing& r) {
  return universal_pair_identity(r, [](const FiniteRing& r, Elem a, Elem b) {
    Elem ab = r.mul(a, b), ba = r.mul(b, a);
    return r.add(r.add(ab, ab), r.add(ba, ba)) == 0;
  });
}

PropertyResult char4_identities(const FiniteRing& r) {
  if (!is_even_square(r).verdict || r.characteristic() != 4)
    throw PreconditionNotMet("char4_identities requires an even-square ring of characteristic 4");
  for (int a = 0; a < r.order(); ++a) {
    Elem sq = r.mul(a, a);
    if (r.add(sq, sq) != 0)
      return {false, Witness{Witness::Kind::BadSquare, static_cast<Elem>(a)},
              std::nullopt};
  }
  return two_anticommutes(r);
}

PropertyResult is_unital(const FiniteRing& r) {
  const int n = r.order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = r.mul(e, a) == a && r.mul(a, e) == a;
    if (ok)
      return {true, Witness{Witness::Kind::SpecialElement, static_cast<Elem>(e)},
              static_cast<long long>(e)};
  }
  return {false, std::nullopt, std::nullopt};
}

ZeroDivisorAnalysis zero_divisor_analysis(const FiniteRing& r) {
  ZeroDivisorAnalysis out;
  const int n = r.order();
  for (int a = 1; a < n; ++a) {
    bool zd = false;
    for (int b = 1; b < n && !zd; ++b)
      zd = r.mul(a, b) == 0 || r.mul(b, a) == 0;
    if (zd) out.zero_divisors.push_back(static_cast<Elem>(a));
    if (r.mul(a, a) == 0 && r.add(a, a) == 0)
      out.special_elements.push_back(static_cast<Elem>(a));
  }
  out.all_nonzero_are_zero_divisors =
      static_cast<int>(out.zero_divisors.size()) == n - 1;
  out.hypothesis_applies = out.special_elements.size() == 1 &&
                           is_commutative(r).verdict && is_even_square(r).verdict;
  return out;
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "commutative",    "even-square",      "zero-square",
      "nil",            "anticommutes",     "two-commutes",
      "two-anticommutes", "unital",         "characteristic",
      "zero-divisors",  "special-elements", "char4-identities",
  };
  return names;
}

PropertyReport build_property_report(const FiniteRing& r,
                                     const std::vector<std::string>& names) {
  auto wanted = [&](const std::string& name) {
    return names.empty() || std::find(names.begin(), names.end(), name) != names.end();
  };
  PropertyReport report;
  auto push = [&](const std::string& name, PropertyResult res) {
    if (wanted(name)) report.emplace_back(name, std::move(res));
  };
  push("commutative", is_commutative(r));
  push("even-square", is_even_square(r));
  push("zero-square", is_zero_square(r));
  push("nil", is_nil(r));
  push("anticommutes", anticommutes(r));
  push("two-commutes", two_commutes(r));
  push("two-anticommutes", two_anticommutes(r));
  push("unital", is_unital(r));
  push("characteristic",
       PropertyResult{true, std::nullopt, static_cast<long long>(r.characteristic())});
  if (wanted("zero-divisors") || wanted("special-elements")) {
    auto zd = zero_divisor_analysis(r);
    PropertyResult zres{zd.all_nonzero_are_zero_divisors, std::nullopt,
                        static_cast<long long>(zd.zero_divisors.size())};
    if (!zd.zero_divisors.empty())
      zres.witness = Witness{Witness::Kind::SpecialElement, zd.zero_divisors.front()};
    push("zero-divisors", zres);
    PropertyResult sres{zd.special_elements.size() == 1, std::nullopt,
                        static_cast<long long>(zd.special_elements.size())};
    if (!zd.special_elements.empty())
      sres.witness = Witness{Witness::Kind::SpecialElement, zd.special_elements.front()};
    push("special-elements", sres);
  }
  if (wanted("char4-identities") && r.characteristic() == 4 && is_even_square(r).verdict)
    push("char4-identities", char4_identities(r));
  return report;
}

}  // namespace ringlab
