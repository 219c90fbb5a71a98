#include "cjmm/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cjmm/conway.hpp"
#include "cjmm/error.hpp"

namespace cjmm {

namespace {

// Kept byte-identical to data/catalog.json (checked by the test suite).
constexpr std::string_view kDefaultCatalog = R"json([
  {"name": "0_1", "strands": 1, "braid": [], "amphicheiral": true, "conway": [1]},
  {"name": "3_1", "strands": 2, "braid": [1, 1, 1], "amphicheiral": false, "conway": [1, 1]},
  {"name": "4_1", "strands": 3, "braid": [1, -2, 1, -2], "amphicheiral": true, "conway": [1, -1]},
  {"name": "5_1", "strands": 2, "braid": [1, 1, 1, 1, 1], "amphicheiral": false, "conway": [1, 3, 1]},
  {"name": "5_2", "strands": 3, "braid": [-1, -1, -1, -2, 1, -2], "amphicheiral": false, "conway": [1, 2]},
  {"name": "6_1", "strands": 4, "braid": [-1, -1, -2, 1, 3, -2, 3], "amphicheiral": false, "conway": [1, -2]},
  {"name": "7_1", "strands": 2, "braid": [1, 1, 1, 1, 1, 1, 1], "amphicheiral": false, "conway": [1, 6, 5, 1]},
  {"name": "8_3", "strands": 5, "braid": [1, 1, 2, -1, -3, 2, -3, -4, 3, -4], "amphicheiral": true, "conway": [1, -4]},
  {"name": "10_124", "strands": 3, "braid": [1, 2, 1, 2, 1, 2, 1, 2, 1, 2], "amphicheiral": false, "conway": [1, 8, 14, 7, 1]}
]
)json";

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorKind::SchemaViolation, what);
}

std::string record_label(const nlohmann::json& obj, std::size_t index) {
  if (obj.is_object() && obj.contains("name") && obj["name"].is_string()) {
    return "'" + obj["name"].get<std::string>() + "'";
  }
  return "#" + std::to_string(index);
}

KnotRecord parse_record(const nlohmann::json& obj, std::size_t index) {
  const std::string label = record_label(obj, index);
  if (!obj.is_object()) {
    schema_error("catalog entry " + label + " is not an object");
  }
  for (const auto& [key, value] : obj.items()) {
    if (key != "name" && key != "strands" && key != "braid" && key != "amphicheiral" &&
        key != "conway") {
      schema_error("catalog entry " + label + " has unknown field '" + key + "'");
    }
  }
  if (!obj.contains("name") || !obj["name"].is_string()) {
    schema_error("catalog entry " + label + ": 'name' must be a string");
  }
  if (!obj.contains("strands") || !obj["strands"].is_number_integer()) {
    schema_error("catalog entry " + label + ": 'strands' must be an integer");
  }
  if (!obj.contains("braid") || !obj["braid"].is_array()) {
    schema_error("catalog entry " + label + ": 'braid' must be an array of integers");
  }
  if (!obj.contains("amphicheiral") || !obj["amphicheiral"].is_boolean()) {
    schema_error("catalog entry " + label + ": 'amphicheiral' must be a boolean");
  }
  std::vector<int> letters;
  for (const auto& x : obj["braid"]) {
    if (!x.is_number_integer()) {
      schema_error("catalog entry " + label + ": braid letters must be integers");
    }
    letters.push_back(x.get<int>());
  }
  KnotRecord rec;
  rec.name = obj["name"].get<std::string>();
  rec.amphicheiral = obj["amphicheiral"].get<bool>();
  try {
    rec.braid = BraidWord(obj["strands"].get<int>(), std::move(letters));
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationGate, "knot " + label + ": " + e.what());
  }
  if (obj.contains("conway")) {
    if (!obj["conway"].is_array()) {
      schema_error("catalog entry " + label + ": 'conway' must be an array of integers");
    }
    std::vector<Rational> even;
    for (const auto& x : obj["conway"]) {
      if (!x.is_number_integer()) {
        schema_error("catalog entry " + label + ": conway coefficients must be integers");
      }
      even.emplace_back(x.get<long>());
    }
    rec.expected_conway = QPoly::from_even(even);
  }
  return rec;
}

void validate(const KnotRecord& rec) {
  const int components = closure_component_count(rec.braid);
  if (components != 1) {
    throw Error(ErrorKind::ValidationGate, "knot '" + rec.name + "': braid closes to " +
                                               std::to_string(components) + " components");
  }
  if (rec.expected_conway) {
    const QPoly computed = conway_poly(rec.braid);
    if (!(computed == *rec.expected_conway)) {
      throw Error(ErrorKind::ValidationGate,
                  "knot '" + rec.name + "': computed Conway polynomial " + computed.to_string() +
                      " differs from catalog value " + rec.expected_conway->to_string());
    }
  }
}

}  // namespace

std::vector<KnotRecord> load_catalog(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    schema_error(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    schema_error("catalog must be a top-level list");
  }
  std::vector<KnotRecord> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    KnotRecord rec = parse_record(doc[i], i);
    for (const auto& seen : out) {
      if (seen.name == rec.name) {
        schema_error("duplicate knot name '" + rec.name + "'");
      }
    }
    validate(rec);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<KnotRecord> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::SchemaViolation, "cannot open catalog file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalog(buf.str());
}

std::string_view default_catalog_document() { return kDefaultCatalog; }

const std::vector<KnotRecord>& default_catalog() {
  static const std::vector<KnotRecord> catalog = load_catalog(kDefaultCatalog);
  return catalog;
}

std::vector<KnotRecord> active_catalog() {
  if (const char* path = std::getenv(kCatalogEnvVar); path != nullptr && *path != '\0') {
    return load_catalog_file(path);
  }
  return default_catalog();
}

const KnotRecord& find_knot(const std::vector<KnotRecord>& catalog, std::string_view name) {
  for (const auto& rec : catalog) {
    if (rec.name == name) {
      return rec;
    }
  }
  throw Error(ErrorKind::UnknownKnot, "no knot named '" + std::string(name) + "' in the catalog");
}

}  // namespace cjmm
