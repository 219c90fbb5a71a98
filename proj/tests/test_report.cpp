#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>

#include "cjmm/catalog.hpp"
#include "cjmm/conway.hpp"
#include "cjmm/error.hpp"
#include "cjmm/golden.hpp"
#include "cjmm/report.hpp"
#include "cjmm/verify.hpp"

using namespace cjmm;
using Json = nlohmann::json;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no cjmm::Error thrown");
  return ErrorKind::InternalConsistency;
}

const KnotRecord& knot(const char* name) { return find_knot(default_catalog(), name); }

const Json& row(const Json& report, int n) { return report["lines"]["rows"].at(n); }

}  // namespace

TEST_CASE("expand report for 5_2 carries exact rationals as strings") {
  Json j = Json::parse(to_json(make_expand_report(knot("5_2"), 5, LineParameter::H)));
  CHECK(j["knot"] == "5_2");
  CHECK(j["order"] == 5);
  CHECK(row(j, 1)["values"][1] == "-6");
  CHECK(row(j, 2)["values"][2] == "226");
  CHECK(row(j, 1)["m_max"] == 4);
  CHECK(j["bottom_line"]["passed"] == true);
  CHECK(j["integrality"]["upheld"] == true);
  for (const auto& a : j["approx"]) CHECK(a["verdict"] != "unstable");
  for (const auto& r : j["lines"]["rows"])
    for (const auto& v : r["values"]) CHECK(v.is_string());
}

TEST_CASE("expand report for the unknot is trivial") {
  ExpandReport r = make_expand_report(knot("0_1"), 3, LineParameter::H);
  Json j = Json::parse(to_json(r));
  for (int n = 0; n <= 6; ++n) {
    const Json& values = row(j, n)["values"];
    for (std::size_t m = 0; m < values.size(); ++m) CHECK(values[m] == (n == 0 && m == 0 ? "1" : "0"));
  }
  for (const auto& a : r.approx) CHECK(a.head.is_zero());
}

TEST_CASE("h~ report for 4_1 has a vanishing first row") {
  ExpandReport r = make_expand_report(knot("4_1"), 5, LineParameter::HTilde);
  Json j = Json::parse(to_json(r));
  CHECK(j["lines"]["parameter"] == "ht");
  REQUIRE(row(j, 1)["values"].size() == 5);
  for (const auto& v : row(j, 1)["values"]) CHECK(v == "0");
  // Amphicheiral h~ lines use exponent 3(n/2)+1 on even rows only.
  for (const auto& a : r.approx) {
    CHECK(a.n % 2 == 0);
    CHECK(a.exponent == 3 * (a.n / 2) + 1);
  }
}

TEST_CASE("exponent mode override") {
  ExpandReport r = make_expand_report(knot("4_1"), 4, LineParameter::HTilde, ExponentMode::TwoNPlusOne);
  for (const auto& a : r.approx) CHECK(a.exponent == 2 * a.n + 1);
  ExpandReport s = make_expand_report(knot("5_2"), 4, LineParameter::H, ExponentMode::ThreeNPlusOne);
  for (const auto& a : s.approx) CHECK(a.exponent == 3 * (a.n / 2) + 1);
}

TEST_CASE("6_1 h~ report flags fractional coefficients") {
  Json j = Json::parse(to_json(make_expand_report(knot("6_1"), 5, LineParameter::HTilde)));
  CHECK(j["integrality"]["informational"] == true);
  CHECK_FALSE(j["integrality"]["non_integers"].empty());
}

TEST_CASE("reports are deterministic") {
  for (auto par : {LineParameter::H, LineParameter::HTilde}) {
    std::string a = to_json(make_expand_report(knot("6_1"), 4, par));
    std::string b = to_json(make_expand_report(knot("6_1"), 4, par));
    CHECK(a == b);
  }
  CHECK(to_json(make_torus_report(TorusParams(2, 5), 3)) == to_json(make_torus_report(TorusParams(2, 5), 3)));
}

TEST_CASE("JSON round trip reproduces the tables") {
  for (const char* name : {"0_1", "5_2", "6_1", "8_3"})
    for (auto par : {LineParameter::H, LineParameter::HTilde}) {
      CAPTURE(name);
      ExpandReport r = make_expand_report(knot(name), 4, par);
      ParsedExpandReport p = parse_expand_report(to_json(r));
      CHECK(p.knot == name);
      CHECK(p.dtable.order() == r.dtable.order());
      CHECK(p.dtable.entries() == r.dtable.entries());
      CHECK(p.lines == r.lines);
      CHECK(p.lines.parameter() == par);
    }
  // 6_1 h~ lines contain proper fractions.
  ExpandReport r = make_expand_report(knot("6_1"), 5, LineParameter::HTilde);
  CHECK(parse_expand_report(to_json(r)).lines == r.lines);
}

TEST_CASE("malformed reports are rejected") {
  std::string good = to_json(make_expand_report(knot("4_1"), 2, LineParameter::H));
  CHECK(kind_of([] { parse_expand_report("{"); }) == ErrorKind::SchemaViolation);
  CHECK(kind_of([] { parse_expand_report("{}"); }) == ErrorKind::SchemaViolation);
  Json j = Json::parse(good);
  j["dtable"]["entries"][0][0] = 1;
  CHECK(kind_of([&] { parse_expand_report(j.dump()); }) == ErrorKind::SchemaViolation);
  j = Json::parse(good);
  j["dtable"]["entries"][0][0] = "0.5";
  CHECK(kind_of([&] { parse_expand_report(j.dump()); }) == ErrorKind::SchemaViolation);
  j = Json::parse(good);
  j["lines"]["rows"][1]["values"].push_back("0");
  CHECK(kind_of([&] { parse_expand_report(j.dump()); }) == ErrorKind::SchemaViolation);
  j = Json::parse(good);
  j["lines"]["parameter"] = "q";
  CHECK(kind_of([&] { parse_expand_report(j.dump()); }) == ErrorKind::SchemaViolation);
}

TEST_CASE("TSV output") {
  LineTable lines = make_expand_report(knot("5_2"), 3, LineParameter::H).lines;
  std::string tsv = to_tsv(lines);
  std::istringstream in(tsv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n\tm\tvalue");
  int rows = 0;
  bool saw = false;
  while (std::getline(in, line)) {
    ++rows;
    saw = saw || line == "1\t1\t-6";
  }
  int expected = 0;
  for (int n = 0; n < lines.line_count(); ++n) expected += lines.max_m(n) + 1;
  CHECK(rows == expected);
  CHECK(saw);

  std::string t = to_tsv(make_torus_report(TorusParams(2, 3), 1));
  CHECK(t.rfind("n\tm\tvalue\n", 0) == 0);
  CHECK(t.find("1\t1\t2\n") != std::string::npos);
}

TEST_CASE("torus report") {
  TorusReport r = make_torus_report(TorusParams(2, 7), 1);
  REQUIRE(r.lines.size() == 2);
  CHECK(r.conway == conway_torus(TorusParams(2, 7)));
  CHECK(r.lines[1].numerator == QPoly{0, 0, 28, 0, 126, 0, 180, 0, 110, 0, 30, 0, 3});
  CHECK(r.lines[0].series.size() == 7);
  Json j = Json::parse(to_json(r));
  CHECK(j["p"] == 2);
  CHECK(j["q"] == 7);
  // p and q swapped give the same lines.
  TorusReport s = make_torus_report(TorusParams(7, 2), 1);
  for (int n = 0; n <= 1; ++n) {
    CHECK(s.lines[n].numerator == r.lines[n].numerator);
    CHECK(s.lines[n].series == r.lines[n].series);
  }
}

TEST_CASE("golden data is internally consistent") {
  std::set<std::string> knots;
  for (const auto& t : golden_tables()) {
    knots.insert(t.knot);
    CHECK(t.rows.size() == t.values.size());
    for (const auto& r : t.values) CHECK(r.size() == t.values.front().size());
    for (const auto& e : t.errata) {
      CHECK(e.printed != e.corrected);
      CHECK_FALSE(e.derivation.empty());
      CHECK(t.expected(e.row, e.column) == e.corrected);
      CHECK(t.provenance(e.row, e.column) == Provenance::Corrected);
    }
  }
  CHECK(knots == std::set<std::string>{"4_1", "5_2", "6_1", "8_3"});
  for (const auto& a : golden_approx())
    if (a.poly.provenance == Provenance::Corrected) {
      REQUIRE(a.poly.expected_override.has_value());
      CHECK(*a.poly.expected_override != a.poly.printed);
      CHECK_FALSE(a.poly.note.empty());
    }
  for (const auto& t : golden_torus())
    for (const auto& [n, poly] : t.numerators)
      if (poly.provenance == Provenance::Derived) CHECK(poly.expected_override.has_value());
  CHECK(golden_table("5_2").parameter == LineParameter::H);
  CHECK(golden_table("8_3").parameter == LineParameter::HTilde);
}

TEST_CASE("golden table spot values") {
  CHECK(golden_table("5_2").expected(2, 2) == 226);
  CHECK(golden_table("6_1").expected(3, 1) == -35);
  CHECK(golden_table("4_1").expected(2, 1) == -5);
  CHECK(golden_table("8_3").expected(2, 2) == -821);
  CHECK(golden_table("8_3").expected(4, 0) == 60);
}

TEST_CASE("verify suites run and report") {
  VerifyContext ctx(default_catalog());
  auto torus = run_suite(ctx, "torus", Scope::Small);
  CHECK_FALSE(torus.empty());
  CHECK(all_passed(torus));
  CHECK(kind_of([&] { run_suite(ctx, "nope", Scope::Small); }) == ErrorKind::InvalidArgument);
  CHECK(full_table_order("4_1") == 10);
  CHECK(full_table_order("8_3") == 8);
  CHECK(full_table_order("5_2") == 9);
}

TEST_CASE("verify detects a wrong catalog chirality") {
  std::vector<KnotRecord> cat = default_catalog();
  for (auto& k : cat)
    if (k.name == "5_2") k.braid = k.braid.mirror();
  VerifyContext ctx(cat);
  auto results = check_tables(ctx, Scope::Small);
  CHECK_FALSE(all_passed(results));
}
