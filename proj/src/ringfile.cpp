#include "ringlab/ringfile.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "ringlab/iso.hpp"

namespace ringlab {

using json = nlohmann::ordered_json;

namespace {

const char* witness_kind_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::CommutatorPair: return "commutator-pair";
    case Witness::Kind::BadSquare: return "bad-square";
    case Witness::Kind::NonNilpotent: return "non-nilpotent";
    case Witness::Kind::IdentityFail: return "identity-fail";
    case Witness::Kind::SpecialElement: return "special-element";
  }
  return "unknown";
}

json witness_json(const Witness& w) {
  json j;
  j["kind"] = witness_kind_name(w.kind);
  j["a"] = w.a;
  if (w.kind == Witness::Kind::CommutatorPair || w.kind == Witness::Kind::IdentityFail)
    j["b"] = w.b;
  if (w.kind == Witness::Kind::NonNilpotent) j["power"] = w.power;
  return j;
}

json ring_json(const FiniteRing& input) {
  const FiniteRing* r = &input;
  FiniteRing owned;
  if (!input.coordinate_addition) {
    owned = coordinatize(input).ring;
    r = &owned;
  }
  const int n = r->order();
  json j;
  j["formatVersion"] = 1;
  j["name"] = r->name;
  j["order"] = n;
  j["groupModuli"] = r->group.moduli();
  json table = json::array();
  for (int a = 0; a < n; ++a) {
    json row = json::array();
    for (int b = 0; b < n; ++b) row.push_back(r->mul(a, b));
    table.push_back(std::move(row));
  }
  j["mulTable"] = std::move(table);
  if (!r->element_labels.empty()) j["elementLabels"] = r->element_labels;
  if (!r->provenance.empty()) j["provenance"] = r->provenance;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string serialize_ring(const FiniteRing& r) {
  return ring_json(r).dump(2) + "\n";
}

FiniteRing parse_ring(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("ring file must be a JSON object");

  static const std::vector<std::string> known = {
      "formatVersion", "name", "order", "groupModuli",
      "mulTable",      "elementLabels", "provenance"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw FormatError("unknown field: " + it.key());
  for (const char* req : {"formatVersion", "name", "order", "groupModuli", "mulTable"})
    if (!j.contains(req)) throw FormatError(std::string("missing field: ") + req);

  if (!j["formatVersion"].is_number_integer() || j["formatVersion"].get<int>() != 1)
    throw FormatError("formatVersion must be 1");
  if (!j["name"].is_string()) throw FormatError("name must be a string");
  if (!j["order"].is_number_integer()) throw FormatError("order must be an integer");
  const int n = j["order"].get<int>();
  if (n < 1 || n > kMaxRingOrder) throw FormatError("order out of range 1..512");

  if (!j["groupModuli"].is_array()) throw FormatError("groupModuli must be an array");
  std::vector<int> moduli;
  for (const auto& d : j["groupModuli"]) {
    if (!d.is_number_integer()) throw FormatError("groupModuli entries must be integers");
    moduli.push_back(d.get<int>());
  }
  AdditiveGroup group;
  try {
    group = AdditiveGroup(moduli);
  } catch (const Error& e) {
    throw FormatError(std::string("bad groupModuli: ") + e.what());
  }
  if (group.order() != n)
    throw FormatError("order does not match the product of groupModuli");
  if (group.moduli() != moduli)
    throw FormatError("groupModuli must be sorted ascending by (prime, exponent)");

  if (!j["mulTable"].is_array() || j["mulTable"].size() != static_cast<std::size_t>(n))
    throw FormatError("mulTable must be an order x order matrix");
  std::vector<Elem> mul;
  mul.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : j["mulTable"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw FormatError("mulTable must be an order x order matrix");
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw FormatError("mulTable entries must be integers");
      long long x = v.get<long long>();
      if (x < 0 || x >= n)
        throw FormatError("mulTable entry " + std::to_string(x) +
                          " out of range 0.." + std::to_string(n - 1));
      mul.push_back(static_cast<Elem>(x));
    }
  }

  FiniteRing r = coordinate_ring(group, std::move(mul), j["name"].get<std::string>());
  if (j.contains("elementLabels")) {
    if (!j["elementLabels"].is_array() ||
        j["elementLabels"].size() != static_cast<std::size_t>(n))
      throw FormatError("elementLabels must list one label per element");
    for (const auto& s : j["elementLabels"]) {
      if (!s.is_string()) throw FormatError("elementLabels entries must be strings");
      r.element_labels.push_back(s.get<std::string>());
    }
  }
  if (j.contains("provenance")) {
    if (!j["provenance"].is_string()) throw FormatError("provenance must be a string");
    r.provenance = j["provenance"].get<std::string>();
  }

  if (auto v = r.validate())
    throw ValidationError("tables do not form a ring: " + v->describe(), *v);
  return r;
}

FiniteRing load_ring_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ring(ss.str());
}

ModularMatrix parse_matrix_literal(const std::string& text, int dim, int modulus) {
  if (dim < 1 || dim > 4) throw FormatError("matrix dim must be 1..4");
  if (modulus < 2) throw FormatError("matrix modulus must be >= 2");
  ModularMatrix m = mat_zero(dim, modulus);
  std::stringstream rows(text);
  std::string row;
  int r = 0;
  while (std::getline(rows, row, ';')) {
    if (r >= dim) throw FormatError("matrix literal has too many rows: " + text);
    std::stringstream cells(row);
    std::string cell;
    int c = 0;
    while (std::getline(cells, cell, ',')) {
      if (c >= dim) throw FormatError("matrix literal row has too many entries: " + row);
      try {
        long long v = std::stoll(cell);
        v %= modulus;
        if (v < 0) v += modulus;
        m.at(r, c) = static_cast<int>(v);
      } catch (const std::exception&) {
        throw FormatError("matrix entry is not an integer: " + cell);
      }
      ++c;
    }
    if (c != dim) throw FormatError("matrix literal row has too few entries: " + row);
    ++r;
  }
  if (r != dim) throw FormatError("matrix literal has too few rows: " + text);
  return m;
}

namespace {

std::string witness_text(const PropertyResult& res) {
  if (!res.witness) return "";
  return res.witness->describe();
}

}  // namespace

std::string property_table_human(const PropertyReport& report) {
  std::size_t name_w = 8, wit_w = 7;
  for (const auto& [name, res] : report) {
    name_w = std::max(name_w, name.size());
    wit_w = std::max(wit_w, witness_text(res).size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_w) + 2) << "property"
     << std::setw(9) << "verdict" << std::setw(static_cast<int>(wit_w) + 2)
     << "witness" << "numeric\n";
  for (const auto& [name, res] : report) {
    os << std::left << std::setw(static_cast<int>(name_w) + 2) << name
       << std::setw(9) << (res.verdict ? "true" : "false")
       << std::setw(static_cast<int>(wit_w) + 2) << witness_text(res);
    if (res.numeric) os << *res.numeric;
    os << '\n';
  }
  return os.str();
}

std::string property_table_csv(const PropertyReport& report) {
  std::ostringstream os;
  os << "property,verdict,witness,numeric\n";
  for (const auto& [name, res] : report) {
    os << csv_escape(name) << ',' << (res.verdict ? "true" : "false") << ','
       << csv_escape(witness_text(res)) << ',';
    if (res.numeric) os << *res.numeric;
    os << '\n';
  }
  return os.str();
}

std::string property_table_json(const PropertyReport& report) {
  json out;
  out["properties"] = json::array();
  for (const auto& [name, res] : report) {
    json row;
    row["property"] = name;
    row["verdict"] = res.verdict;
    row["witness"] = res.witness ? witness_json(*res.witness) : json(nullptr);
    row["numeric"] = res.numeric ? json(*res.numeric) : json(nullptr);
    out["properties"].push_back(std::move(row));
  }
  return out.dump(2) + "\n";
}

std::string failed_property_witness_json(const PropertyReport& report) {
  json fails = json::array();
  for (const auto& [name, res] : report) {
    if (res.verdict) continue;
    json row;
    row["property"] = name;
    row["witness"] = res.witness ? witness_json(*res.witness) : json(nullptr);
    fails.push_back(std::move(row));
  }
  json out;
  out["failed"] = std::move(fails);
  return out.dump() + "\n";
}

namespace {

json claim_json(const Claim& c) {
  json j;
  j["id"] = c.id;
  j["anchor"] = c.anchor;
  j["statement"] = c.statement;
  j["verdict"] = to_string(c.verdict);
  if (c.verdict == ClaimVerdict::CheckedUpTo) j["bound"] = c.checked_bound;
  json counts = json::array();
  for (const auto& [label, value] : c.evidence.counts)
    counts.push_back(json{{"label", label}, {"value", value}});
  j["counts"] = std::move(counts);
  j["notes"] = c.evidence.notes;
  json rings = json::array();
  for (const auto& r : c.evidence.witness_rings) rings.push_back(ring_json(r));
  j["witnessRings"] = std::move(rings);
  j["covers"] = c.covers;
  return j;
}

}  // namespace

std::string render_report_json(const ClaimReport& report) {
  json j;
  j["maxOrder"] = report.max_order;
  int verified = 0, refuted = 0, bounded = 0;
  for (const auto& c : report.claims) {
    if (c.verdict == ClaimVerdict::Verified) ++verified;
    else if (c.verdict == ClaimVerdict::Refuted) ++refuted;
    else ++bounded;
  }
  j["summary"] = json{{"verified", verified},
                      {"checkedUpTo", bounded},
                      {"refuted", refuted}};
  json enumeration = json::array();
  for (const auto& st : report.enumeration) {
    json e;
    e["order"] = st.order;
    e["classes"] = st.classes;
    json groups = json::array();
    for (const auto& [g, cnt] : st.per_group)
      groups.push_back(json{{"group", g}, {"classes", cnt}});
    e["perGroup"] = std::move(groups);
    enumeration.push_back(std::move(e));
  }
  j["enumeration"] = std::move(enumeration);
  json claims = json::array();
  for (const auto& c : report.claims) claims.push_back(claim_json(c));
  j["claims"] = std::move(claims);
  return j.dump(2) + "\n";
}

std::string render_report_markdown(const ClaimReport& report) {
  std::ostringstream os;
  os << "# even square ring claims report\n\n";
  os << "max order enumerated: " << report.max_order << "\n\n";

  os << "## enumeration\n\n";
  os << "| order | classes | per group |\n|---|---|---|\n";
  for (const auto& st : report.enumeration) {
    os << "| " << st.order << " | " << st.classes << " | ";
    for (std::size_t i = 0; i < st.per_group.size(); ++i) {
      if (i) os << ", ";
      os << st.per_group[i].first << ": " << st.per_group[i].second;
    }
    os << " |\n";
  }
  os << '\n';

  os << "## claims\n\n";
  for (const auto& c : report.claims) {
    os << "### " << c.id << " - " << to_string(c.verdict);
    if (c.verdict == ClaimVerdict::CheckedUpTo) os << "(" << c.checked_bound << ")";
    os << "\n\n";
    os << "- anchor: " << c.anchor << "\n";
    os << "- statement: " << c.statement << "\n";
    if (!c.evidence.counts.empty()) {
      os << "\n| evidence | count |\n|---|---|\n";
      for (const auto& [label, value] : c.evidence.counts)
        os << "| " << label << " | " << value << " |\n";
      os << '\n';
    }
    for (const auto& n : c.evidence.notes) os << "- note: " << n << "\n";
    if (!c.evidence.witness_rings.empty()) {
      os << "\nwitness rings:\n";
      for (const auto& r : c.evidence.witness_rings)
        os << "\n```json\n" << serialize_ring(r) << "```\n";
    }
    os << '\n';
  }

  int verified = 0, refuted = 0, bounded = 0;
  for (const auto& c : report.claims) {
    if (c.verdict == ClaimVerdict::Verified) ++verified;
    else if (c.verdict == ClaimVerdict::Refuted) ++refuted;
    else ++bounded;
  }
  os << "## summary\n\n"
     << verified << " verified, " << bounded << " checked-up-to, " << refuted
     << " refuted\n";
  return os.str();
}

}  // namespace ringlab
