#include <doctest.h>

#include "ringlab/claims.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/ringfile.hpp"

using namespace ringlab;

namespace {

std::string ex1_text() {
  static std::string text = serialize_ring(example1_ring());
  return text;
}

}  // namespace

TEST_CASE("serialize / parse round trip is the identity on canonical text") {
  std::string text = ex1_text();
  FiniteRing r = parse_ring(text);
  CHECK(serialize_ring(r) == text);
  CHECK(r.order() == 8);
  CHECK(r.group.moduli() == std::vector<int>{2, 4});
  CHECK(r.name == "example1");
  CHECK(r.element_labels.size() == 8);
  CHECK(r.element_labels[4] == "[[2,0],[0,0]]");
  FiniteRing again = parse_ring(serialize_ring(r));
  CHECK(again.mul_table == r.mul_table);
}

TEST_CASE("field order is fixed on output") {
  std::string text = ex1_text();
  auto pos = [&](const char* key) { return text.find(key); };
  CHECK(pos("\"formatVersion\"") < pos("\"name\""));
  CHECK(pos("\"name\"") < pos("\"order\""));
  CHECK(pos("\"order\"") < pos("\"groupModuli\""));
  CHECK(pos("\"groupModuli\"") < pos("\"mulTable\""));
  CHECK(pos("\"mulTable\"") < pos("\"elementLabels\""));
  CHECK(pos("\"elementLabels\"") < pos("\"provenance\""));
}

TEST_CASE("a non-coordinate ring serializes through its coordinatization") {
  // zero multiplication with a scrambled-but-valid addition table: build one
  // via a matrix closure whose sorted order is not mixed-radix
  MatrixGenSpec s;
  s.modulus = 4;
  s.dim = 2;
  ModularMatrix g = mat_zero(2, 4);
  g.at(0, 0) = 2;
  g.at(0, 1) = 1;
  s.generators = {g};
  FiniteRing twisted = to_ring(closure(s), "twisted");
  REQUIRE(!twisted.coordinate_addition);
  FiniteRing back = parse_ring(serialize_ring(twisted));
  CHECK(back.coordinate_addition);
  CHECK(back.order() == twisted.order());
  CHECK(!back.validate().has_value());
}

TEST_CASE("format errors") {
  CHECK_THROWS_AS(parse_ring("not json"), FormatError);
  CHECK_THROWS_AS(parse_ring("[1,2,3]"), FormatError);
  CHECK_THROWS_AS(parse_ring("{}"), FormatError);

  // entry out of range (= order)
  CHECK_THROWS_AS(
      parse_ring(R"({"formatVersion":1,"name":"","order":2,"groupModuli":[2],
                     "mulTable":[[0,0],[0,2]]})"),
      FormatError);
  // wrong version
  CHECK_THROWS_AS(
      parse_ring(R"({"formatVersion":2,"name":"","order":2,"groupModuli":[2],
                     "mulTable":[[0,0],[0,0]]})"),
      FormatError);
  // moduli not prime powers
  CHECK_THROWS_AS(
      parse_ring(R"({"formatVersion":1,"name":"","order":6,"groupModuli":[6],
                     "mulTable":[[0,0,0,0,0,0],[0,0,0,0,0,0],[0,0,0,0,0,0],
                                 [0,0,0,0,0,0],[0,0,0,0,0,0],[0,0,0,0,0,0]]})"),
      FormatError);
  // moduli not canonically sorted
  CHECK_THROWS_AS(
      parse_ring(R"({"formatVersion":1,"name":"","order":8,"groupModuli":[4,2],
                     "mulTable":[[0,0,0,0,0,0,0,0],[0,0,0,0,0,0,0,0],
                                 [0,0,0,0,0,0,0,0],[0,0,0,0,0,0,0,0],
                                 [0,0,0,0,0,0,0,0],[0,0,0,0,0,0,0,0],
                                 [0,0,0,0,0,0,0,0],[0,0,0,0,0,0,0,0]]})"),
      FormatError);
  // order does not match moduli
  CHECK_THROWS_AS(
      parse_ring(R"({"formatVersion":1,"name":"","order":4,"groupModuli":[2],
                     "mulTable":[[0,0],[0,0]]})"),
      FormatError);
  // unknown field
  CHECK_THROWS_AS(
      parse_ring(R"({"formatVersion":1,"name":"","order":2,"groupModuli":[2],
                     "mulTable":[[0,0],[0,0]],"color":"red"})"),
      FormatError);
  // ragged table
  CHECK_THROWS_AS(
      parse_ring(R"({"formatVersion":1,"name":"","order":2,"groupModuli":[2],
                     "mulTable":[[0,0],[0]]})"),
      FormatError);
}

TEST_CASE("well-formed but non-associative tables raise ValidationError") {
  // over [2,2]: g0*g0 = g1, g1*g1 = g0 extends distributively but is not
  // associative (frozen from the structure-constant tests)
  AdditiveGroup g({2, 2});
  GeneratorProducts gp(2);
  gp.at(0, 0) = g.generator(1);
  gp.at(1, 1) = g.generator(0);
  FiniteRing bad = from_generator_products(g, gp, "bad");
  std::string text = serialize_ring(bad);
  CHECK_THROWS_AS(parse_ring(text), ValidationError);
  try {
    parse_ring(text);
  } catch (const ValidationError& e) {
    CHECK(e.violation.kind == RingViolation::Kind::Associativity);
    // the witness triple re-evaluates
    CHECK(bad.mul(bad.mul(e.violation.a, e.violation.b), e.violation.c) !=
          bad.mul(e.violation.a, bad.mul(e.violation.b, e.violation.c)));
  }
}

TEST_CASE("matrix literals") {
  ModularMatrix m = parse_matrix_literal("2,0;0,0", 2, 4);
  CHECK(m.at(0, 0) == 2);
  CHECK(m.at(0, 1) == 0);
  ModularMatrix neg = parse_matrix_literal("-1,0;0,7", 2, 4);
  CHECK(neg.at(0, 0) == 3);  // reduced mod 4
  CHECK(neg.at(1, 1) == 3);
  CHECK_THROWS_AS(parse_matrix_literal("2,0;0", 2, 4), FormatError);
  CHECK_THROWS_AS(parse_matrix_literal("2,0,0;0,0,0", 2, 4), FormatError);
  CHECK_THROWS_AS(parse_matrix_literal("2,0;0,0;0,0", 2, 4), FormatError);
  CHECK_THROWS_AS(parse_matrix_literal("a,0;0,0", 2, 4), FormatError);
}

TEST_CASE("property tables") {
  FiniteRing ex1 = example1_ring();
  auto report = build_property_report(ex1);

  std::string csv = property_table_csv(report);
  CHECK(csv.rfind("property,verdict,witness,numeric\n", 0) == 0);
  CHECK(csv.find("commutative,false") != std::string::npos);
  CHECK(csv.find("even-square,true") != std::string::npos);
  CHECK(csv == property_table_csv(report));  // deterministic

  std::string js = property_table_json(report);
  CHECK(js.find("\"commutative\"") != std::string::npos);
  CHECK(js == property_table_json(report));

  std::string human = property_table_human(report);
  CHECK(human.find("commutative") != std::string::npos);

  std::string witness = failed_property_witness_json(report);
  CHECK(witness.find("\"failed\"") != std::string::npos);
  CHECK(witness.find("commutator-pair") != std::string::npos);
}

TEST_CASE("report renderings embed witness rings") {
  ClaimReport report = run_all();
  std::string md = render_report_markdown(report);
  CHECK(md.find("## claims") != std::string::npos);
  CHECK(md.find("```json") != std::string::npos);
  CHECK(md.find("P3-min-order-8") != std::string::npos);
  std::string js = render_report_json(report);
  CHECK(js.find("\"witnessRings\"") != std::string::npos);
  CHECK(js.find("\"refuted\": 0") != std::string::npos);
}
