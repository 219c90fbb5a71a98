#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cjmm/braid.hpp"
#include "cjmm/qpoly.hpp"

namespace cjmm {

struct KnotRecord {
  std::string name;
  BraidWord braid;
  bool amphicheiral = false;
  std::optional<QPoly> expected_conway;
};

/// Parses and validates a catalog document (JSON list of knot objects).
/// Every record must be a well-formed braid closing to a knot, and must match
/// its stated Conway polynomial when one is given.
std::vector<KnotRecord> load_catalog(std::string_view document);

/// Reads the file at `path` and calls load_catalog.
std::vector<KnotRecord> load_catalog_file(const std::string& path);

/// JSON text of the built-in catalog.
std::string_view default_catalog_document();

/// The built-in catalog, validated on first use.
const std::vector<KnotRecord>& default_catalog();

/// Environment variable naming an alternative catalog file.
inline constexpr const char* kCatalogEnvVar = "CJMM_CATALOG";

/// The catalog named by $CJMM_CATALOG, or the built-in one.
std::vector<KnotRecord> active_catalog();

/// Throws UnknownKnot when the name is absent.
const KnotRecord& find_knot(const std::vector<KnotRecord>& catalog, std::string_view name);

}  // namespace cjmm
