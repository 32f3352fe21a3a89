// ringlab - construct, check, enumerate and compare small finite rings, and
// machine-verify the bundled claims catalogue about even square rings.
//
// Exit codes: 0 success / everything verified; 1 a checked property is
// false, rings are not isomorphic, a ring file fails the ring axioms, or a
// claim is refuted (a machine-readable witness is printed); 2 usage, format
// or resource errors.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ringlab/claims.hpp"
#include "ringlab/enumerate.hpp"
#include "ringlab/iso.hpp"
#include "ringlab/matrix_ring.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/ringfile.hpp"

namespace {

using namespace ringlab;

int cmd_check(const std::string& file, const std::vector<std::string>& props,
              const std::string& format) {
  FiniteRing r;
  try {
    r = load_ring_file(file);
  } catch (const ValidationError& e) {
    std::cout << "{\"error\":\"validation\",\"detail\":\"" << e.violation.describe()
              << "\",\"witness\":{\"a\":" << e.violation.a
              << ",\"b\":" << e.violation.b << ",\"c\":" << e.violation.c << "}}\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  for (const auto& p : props) {
    const auto& known = property_names();
    if (std::find(known.begin(), known.end(), p) == known.end())
      throw Error("unknown property: " + p);
  }
  auto report = build_property_report(r, props);
  if (format == "json")
    std::cout << property_table_json(report);
  else if (format == "csv")
    std::cout << property_table_csv(report);
  else
    std::cout << "ring " << (r.name.empty() ? file : r.name) << ": order "
              << r.order() << ", group " << to_string(r.group) << "\n"
              << property_table_human(report);
  bool any_false = std::any_of(report.begin(), report.end(),
                               [](const auto& row) { return !row.second.verdict; });
  if (any_false && format != "json" && format != "csv")
    std::cout << failed_property_witness_json(report);
  return any_false ? 1 : 0;
}

int cmd_matrix(int mod, int dim, const std::vector<std::string>& gens,
               const std::string& out_file) {
  MatrixGenSpec spec;
  spec.modulus = mod;
  spec.dim = dim;
  for (const auto& g : gens) spec.generators.push_back(parse_matrix_literal(g, dim, mod));

  auto elements = closure(spec);
  FiniteRing r = to_ring(elements, "matrix-closure", spec.describe());

  auto comm = is_commutative(r);
  auto es = is_even_square(r);
  auto nil = is_nil(r);
  std::cout << "order " << r.order() << ", " << (comm.verdict ? "commutative" : "noncommutative")
            << ", " << (es.verdict ? "even-square" : "not even-square") << ", char "
            << r.characteristic();
  if (nil.verdict)
    std::cout << ", nil (index " << *nil.numeric << ")";
  else
    std::cout << ", not nil";
  std::cout << "\n";
  std::cout << "group " << to_string(r.group) << ", elements:";
  for (const auto& e : elements) std::cout << ' ' << e.to_string();
  std::cout << "\n";
  if (!comm.verdict && comm.witness)
    std::cout << "commutator witness: a=" << elements[comm.witness->a].to_string()
              << " b=" << elements[comm.witness->b].to_string() << " (ab != ba)\n";

  if (!out_file.empty()) {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw Error("cannot write " + out_file);
    out << serialize_ring(r);
    std::cout << "wrote " << out_file << "\n";
  }
  return 0;
}

int cmd_enumerate(int order, const std::string& filter_csv, bool count_only,
                  const std::string& out_dir, int jobs) {
  EnumFilter filter = EnumFilter::parse(filter_csv);
  auto result = enumerate_rings_detailed(order, filter, jobs);
  if (count_only) {
    std::cout << result.rings.size() << "\n";
    return 0;
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& r : result.rings) {
      auto path = std::filesystem::path(out_dir) / (r.name + ".json");
      std::ofstream out(path, std::ios::binary);
      if (!out) throw Error("cannot write " + path.string());
      out << serialize_ring(r);
    }
    std::cout << "wrote " << result.rings.size() << " ring files to " << out_dir << "\n";
    return 0;
  }
  for (const auto& r : result.rings) {
    auto comm = is_commutative(r);
    auto es = is_even_square(r);
    auto nil = is_nil(r);
    std::cout << r.name << ": group " << to_string(r.group) << ", char "
              << r.characteristic() << ", " << (comm.verdict ? "commutative" : "noncommutative")
              << ", " << (es.verdict ? "even-square" : "not-even-square") << ", "
              << (nil.verdict ? "nil" : "not-nil") << ", canon "
              << canonical_form(r).hex() << "\n";
  }
  std::cerr << result.rings.size() << " classes";
  if (static_cast<int>(result.rings.size()) != result.classes_unfiltered)
    std::cerr << " (of " << result.classes_unfiltered << " total)";
  std::cerr << "\n";
  return 0;
}

int cmd_iso(const std::string& file1, const std::string& file2) {
  FiniteRing r = load_ring_file(file1);
  FiniteRing s = load_ring_file(file2);
  auto res = are_isomorphic(r, s);
  if (res.isomorphic) {
    std::cout << "isomorphic\nmap:";
    for (Elem v : res.map) std::cout << ' ' << v;
    std::cout << "\n";
    return 0;
  }
  std::cout << "not isomorphic: " << res.reason << "\n";
  std::cout << "{\"isomorphic\":false,\"reason\":\"" << res.reason << "\"}\n";
  return 1;
}

int cmd_canon(const std::string& file) {
  FiniteRing r = load_ring_file(file);
  std::cout << canonical_form(r).hex() << "\n";
  return 0;
}

int cmd_verify(int max_order, const std::string& report_file,
               const std::string& format, int jobs) {
  RunOptions options;
  options.max_order = max_order;
  options.jobs = jobs;
  ClaimReport report = run_all(options);

  std::string text = format == "json" ? render_report_json(report)
                                      : render_report_markdown(report);
  if (!report_file.empty()) {
    std::ofstream out(report_file, std::ios::binary);
    if (!out) throw Error("cannot write " + report_file);
    out << text;
    std::cerr << "report written to " << report_file << "\n";
  } else {
    std::cout << text;
  }
  std::cerr << "claims evaluated in " << report.runtime_seconds << " s\n";

  for (const auto& c : report.claims) {
    std::cerr << c.id << ": " << to_string(c.verdict);
    if (c.verdict == ClaimVerdict::CheckedUpTo) std::cerr << "(" << c.checked_bound << ")";
    std::cerr << "\n";
  }
  if (report.any_refuted()) {
    std::cout << "{\"refuted\":[";
    bool first = true;
    for (const auto& c : report.claims)
      if (c.verdict == ClaimVerdict::Refuted) {
        if (!first) std::cout << ",";
        std::cout << "\"" << c.id << "\"";
        first = false;
      }
    std::cout << "]}\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringlab: a workbench for small finite rings"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "evaluate ring predicates on a ring file");
  std::string check_file, check_format = "human";
  std::vector<std::string> check_props;
  check->add_option("file", check_file, "ring file (JSON)")->required();
  check->add_option("--props", check_props, "properties to check (default: all)")
      ->delimiter(',');
  check->add_option("--format", check_format, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  auto* matrix = app.add_subcommand("matrix", "build the closure ring of generator matrices");
  int mat_mod = 0, mat_dim = 2;
  std::vector<std::string> mat_gens;
  std::string mat_out;
  matrix->add_option("--mod", mat_mod, "matrix modulus")->required();
  matrix->add_option("--dim", mat_dim, "matrix dimension (1..4)")->required();
  matrix->add_option("--gens", mat_gens, "generator matrices, e.g. \"2,0;0,0\"")
      ->required()
      ->expected(-1);
  matrix->add_option("--out", mat_out, "write the ring file here");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate rings of an order up to isomorphism");
  int enum_order = 0, enum_jobs = 0;
  std::string enum_filter, enum_out;
  bool enum_count = false;
  enumerate->add_option("--order", enum_order, "ring order (1..16)")->required();
  enumerate->add_option("--filter", enum_filter,
                        "commutative, noncommutative, even-square, zero-square, "
                        "nil, not-nil, unital, char=C");
  enumerate->add_flag("--count-only", enum_count, "print only the class count");
  enumerate->add_option("--out", enum_out, "write one ring file per class to this directory");
  enumerate->add_option("--jobs", enum_jobs, "parallelism degree (0 = all cores)");

  auto* iso = app.add_subcommand("iso", "test two ring files for isomorphism");
  std::string iso_a, iso_b;
  iso->add_option("file1", iso_a)->required();
  iso->add_option("file2", iso_b)->required();

  auto* canon = app.add_subcommand("canon", "print the canonical form digest of a ring file");
  std::string canon_file;
  canon->add_option("file", canon_file)->required();

  auto* verify = app.add_subcommand("verify-paper", "run the bundled claims catalogue");
  int verify_max = 9, verify_jobs = 0;
  std::string verify_report, verify_format = "md";
  verify->add_option("--max-order", verify_max, "largest order to enumerate (8..16)");
  verify->add_option("--report", verify_report, "write the report here instead of stdout");
  verify->add_option("--format", verify_format, "report format")
      ->check(CLI::IsMember({"md", "json"}));
  verify->add_option("--jobs", verify_jobs, "parallelism degree (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help/usage
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(check_file, check_props, check_format);
    if (*matrix) return cmd_matrix(mat_mod, mat_dim, mat_gens, mat_out);
    if (*enumerate)
      return cmd_enumerate(enum_order, enum_filter, enum_count, enum_out, enum_jobs);
    if (*iso) return cmd_iso(iso_a, iso_b);
    if (*canon) return cmd_canon(canon_file);
    if (*verify) return cmd_verify(verify_max, verify_report, verify_format, verify_jobs);
  } catch (const ValidationError& e) {
    std::cout << "{\"error\":\"validation\",\"detail\":\"" << e.violation.describe()
              << "\",\"witness\":{\"a\":" << e.violation.a << ",\"b\":" << e.violation.b
              << ",\"c\":" << e.violation.c << "}}\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
