#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cjmm/braid.hpp"
#include "cjmm/catalog.hpp"
#include "cjmm/conway.hpp"
#include "cjmm/error.hpp"

using namespace cjmm;

#ifndef CJMM_DATA_DIR
#error "CJMM_DATA_DIR must point at the data directory"
#endif

namespace {

template <class F>
Error error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no cjmm::Error thrown");
  return Error(ErrorKind::InternalConsistency, "");
}

const BraidWord& catalog_braid(const char* name) { return find_knot(default_catalog(), name).braid; }

}  // namespace

TEST_CASE("braid words validate their letters") {
  CHECK_NOTHROW(BraidWord(3, {1, -2, 2}));
  CHECK(error_of([] { BraidWord(2, {2}); }).kind() == ErrorKind::InvalidArgument);
  CHECK(error_of([] { BraidWord(3, {0}); }).kind() == ErrorKind::InvalidArgument);
  CHECK(error_of([] { BraidWord(0, {}); }).kind() == ErrorKind::InvalidArgument);
  BraidWord b(3, {1, -2});
  CHECK(b.mirror() == BraidWord(3, {-1, 2}));
  CHECK(b.stabilized(-1) == BraidWord(4, {1, -2, -3}));
  CHECK(b.rotated(1) == BraidWord(3, {-2, 1}));
  CHECK(torus_braid(3, 2) == BraidWord(3, {1, 2, 1, 2}));
}

TEST_CASE("closure component count") {
  CHECK(closure_component_count(BraidWord()) == 1);
  CHECK(closure_component_count(BraidWord(2, {1, 1, 1})) == 1);
  CHECK(closure_component_count(BraidWord(2, {1, 1})) == 2);
  CHECK(closure_component_count(BraidWord(3, {})) == 3);
  CHECK(error_of([] { require_knot(BraidWord(2, {1, 1})); }).kind() == ErrorKind::NotAKnot);
}

TEST_CASE("writhe") {
  CHECK(writhe(BraidWord(2, {1, 1, 1})) == 3);
  CHECK(writhe(BraidWord(3, {1, -2, 1, -2})) == 0);
  CHECK(writhe(BraidWord()) == 0);
}

TEST_CASE("conway_poly examples") {
  CHECK(conway_poly(BraidWord()) == QPoly{1});
  CHECK(conway_poly(catalog_braid("4_1")) == QPoly{1, 0, -1});
  CHECK(conway_poly(catalog_braid("8_3")) == QPoly{1, 0, -4});
  CHECK(conway_poly(catalog_braid("5_2")) == QPoly{1, 0, 2});
  CHECK(conway_poly(catalog_braid("6_1")) == QPoly{1, 0, -2});
  CHECK(error_of([] { conway_poly(BraidWord(2, {1, 1})); }).kind() == ErrorKind::NotAKnot);
}

TEST_CASE("conway_poly is even with constant term 1 on every catalog knot") {
  for (const auto& k : default_catalog()) {
    QPoly c = conway_poly(k.braid);
    CHECK(c.is_even());
    CHECK(c.coefficient(0) == 1);
    CHECK(c.has_integer_coefficients());
    // Chirality does not affect the Conway polynomial.
    CHECK(conway_poly(k.braid.mirror()) == c);
  }
}

TEST_CASE("conway_poly is invariant under Markov moves") {
  for (const auto& k : default_catalog()) {
    QPoly c = conway_poly(k.braid);
    CHECK(conway_poly(k.braid.stabilized(+1)) == c);
    CHECK(conway_poly(k.braid.stabilized(-1)) == c);
    CHECK(conway_poly(k.braid.stabilized(+1).stabilized(-1)) == c);
    for (std::size_t r = 0; r < k.braid.length(); ++r) CHECK(conway_poly(k.braid.rotated(r)) == c);
  }
}

TEST_CASE("conway_torus examples and symmetry") {
  CHECK(conway_torus(TorusParams(2, 3)) == QPoly{1, 0, 1});
  CHECK(conway_torus(TorusParams(2, 5)) == QPoly{1, 0, 3, 0, 1});
  CHECK(conway_torus(TorusParams(3, 5)) == QPoly{1, 0, 8, 0, 14, 0, 7, 0, 1});
  for (auto [p, q] : {std::pair{2, 3}, {2, 7}, {3, 4}, {3, 5}, {4, 5}, {2, 9}})
    CHECK(conway_torus(TorusParams(p, q)) == conway_torus(TorusParams(q, p)));
}

TEST_CASE("conway_torus agrees with the Burau route on torus braids") {
  CHECK(conway_poly(BraidWord(2, {1, 1, 1})) == conway_torus(TorusParams(2, 3)));
  for (auto [p, q] : {std::pair{2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 3}, {5, 2}})
    CHECK(conway_poly(torus_braid(p, q)) == conway_torus(TorusParams(p, q)));
}

TEST_CASE("torus parameters are validated") {
  CHECK(error_of([] { TorusParams(2, 4); }).kind() == ErrorKind::InvalidTorusParameters);
  CHECK(error_of([] { TorusParams(1, 3); }).kind() == ErrorKind::InvalidTorusParameters);
  CHECK(error_of([] { TorusParams(6, 9); }).kind() == ErrorKind::InvalidTorusParameters);
  CHECK_NOTHROW(TorusParams(-2, 3));
}

TEST_CASE("symmetric_to_z") {
  LaurentPoly z2(Variable::T, {{1, 1}, {0, -2}, {-1, 1}});
  CHECK(symmetric_to_z(z2) == QPoly{0, 0, 1});
  CHECK(symmetric_to_z(z2 * z2 + LaurentPoly::constant(Variable::T, 1)) == QPoly{1, 0, 0, 0, 1});
  CHECK(error_of([] { symmetric_to_z(LaurentPoly(Variable::T, {{1, 1}})); }).kind() ==
        ErrorKind::PresentationInconsistency);
}

TEST_CASE("catalog accepts a well-formed record") {
  auto cat = load_catalog(
      R"([{"name": "4_1", "strands": 3, "braid": [1, -2, 1, -2], "amphicheiral": true, "conway": [1, -1]}])");
  REQUIRE(cat.size() == 1);
  CHECK(cat[0].name == "4_1");
  CHECK(cat[0].amphicheiral);
  CHECK(cat[0].expected_conway == QPoly{1, 0, -1});
}

TEST_CASE("catalog conway field is optional") {
  auto cat = load_catalog(R"([{"name": "t", "strands": 2, "braid": [1, 1, 1], "amphicheiral": false}])");
  REQUIRE(cat.size() == 1);
  CHECK_FALSE(cat[0].expected_conway.has_value());
  CHECK_FALSE(cat[0].amphicheiral);
}

TEST_CASE("catalog rejects a two-component closure") {
  Error e = error_of([] { load_catalog(R"([{"name": "hopf", "strands": 2, "braid": [1, 1], "amphicheiral": false}])");
  });
  CHECK(e.kind() == ErrorKind::ValidationGate);
  CHECK(std::string(e.what()).find("2 components") != std::string::npos);
  CHECK(std::string(e.what()).find("hopf") != std::string::npos);
}

TEST_CASE("catalog rejects a Conway mismatch and reports both polynomials") {
  Error e = error_of([] {
    load_catalog(
        R"([{"name": "5_2", "strands": 3, "braid": [-1, -1, -1, -2, 1, -2], "amphicheiral": false, "conway": [1, -2]}])");
  });
  CHECK(e.kind() == ErrorKind::ValidationGate);
  std::string what = e.what();
  CHECK(what.find("5_2") != std::string::npos);
  CHECK(what.find(QPoly{1, 0, 2}.to_string()) != std::string::npos);
  CHECK(what.find(QPoly{1, 0, -2}.to_string()) != std::string::npos);
}

TEST_CASE("catalog schema violations") {
  const char* bad[] = {
      "{}",
      "[1]",
      R"([{"strands": 2, "braid": [1, 1, 1], "amphicheiral": false}])",
      R"([{"name": "x", "strands": 2, "braid": [1, 1, 1]}])",
      R"([{"name": "x", "strands": 2, "braid": [1, 1, 1], "amphicheiral": false, "colour": 3}])",
      R"([{"name": "x", "strands": "2", "braid": [1, 1, 1], "amphicheiral": false}])",
      R"([{"name": "x", "strands": 2, "braid": [1.5], "amphicheiral": false}])",
      R"([{"name": "x", "strands": 2, "braid": [1, 1, 1], "amphicheiral": false, "conway": [1, 0.5]}])",
      R"([{"name": "x", "strands": 2, "braid": [1, 1, 1], "amphicheiral": false},
          {"name": "x", "strands": 2, "braid": [1, 1, 1], "amphicheiral": false}])",
      "not json",
  };
  for (const char* doc : bad) {
    CAPTURE(doc);
    CHECK(error_of([&] { load_catalog(doc); }).kind() == ErrorKind::SchemaViolation);
  }
  CHECK(error_of([] { load_catalog(R"([{"name": "x", "strands": 2, "braid": [3], "amphicheiral": false}])");
        }).kind() == ErrorKind::ValidationGate);
}

TEST_CASE("shipped catalog file matches the built-in catalog") {
  std::ifstream in(std::string(CJMM_DATA_DIR) + "/catalog.json", std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == std::string(default_catalog_document()));
  auto from_file = load_catalog_file(std::string(CJMM_DATA_DIR) + "/catalog.json");
  CHECK(from_file.size() == default_catalog().size());
}

TEST_CASE("built-in catalog contents") {
  for (const char* name : {"0_1", "3_1", "4_1", "5_2", "6_1", "8_3"}) CHECK_NOTHROW(find_knot(default_catalog(), name));
  CHECK(find_knot(default_catalog(), "4_1").amphicheiral);
  CHECK(find_knot(default_catalog(), "8_3").amphicheiral);
  CHECK_FALSE(find_knot(default_catalog(), "5_2").amphicheiral);
  CHECK(error_of([] { find_knot(default_catalog(), "9_42"); }).kind() == ErrorKind::UnknownKnot);
  CHECK(error_of([] { load_catalog_file("/nonexistent/catalog.json"); }).kind() ==
        ErrorKind::SchemaViolation);
}

TEST_CASE("environment variable selects the active catalog") {
  const std::string path = "cjmm_test_catalog.json";
  {
    std::ofstream out(path);
    out << R"([{"name": "only", "strands": 2, "braid": [1, 1, 1], "amphicheiral": false, "conway": [1, 1]}])";
  }
  setenv(kCatalogEnvVar, path.c_str(), 1);
  auto cat = active_catalog();
  unsetenv(kCatalogEnvVar);
  REQUIRE(cat.size() == 1);
  CHECK(cat[0].name == "only");
  CHECK(active_catalog().size() == default_catalog().size());
  std::remove(path.c_str());
}
