#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cjmm/catalog.hpp"
#include "cjmm/mmexpand.hpp"
#include "cjmm/torus.hpp"

namespace cjmm {

enum class ExponentMode { Auto, TwoNPlusOne, ThreeNPlusOne };

struct ExpandReport {
  std::string knot;
  int order = 0;
  bool amphicheiral = false;
  QPoly conway;
  DTable dtable;
  LineTable lines;
  BottomLineReport bottom_line;
  IntegralityReport integrality;
  std::vector<ApproxPoly> approx;
};

/// Runs the full pipeline for one knot.
ExpandReport make_expand_report(const KnotRecord& knot, int order, LineParameter parameter,
                                ExponentMode mode = ExponentMode::Auto);

struct TorusLineReport {
  int n;
  QPoly numerator;
  std::vector<Rational> series;
};

struct TorusReport {
  int p;
  int q;
  QPoly conway;
  std::vector<TorusLineReport> lines;
};

/// Lines 0..lines of the (p,q) torus knot with certified numerators and their
/// z-series through z^(2 series_terms - 2).
TorusReport make_torus_report(const TorusParams& t, int lines, int series_terms = 7);

std::string to_json(const ExpandReport& r);
std::string to_json(const TorusReport& r);

/// Header "n\tm\tvalue", one row per available line entry.
std::string to_tsv(const LineTable& lines);
/// Header "n\tm\tvalue", one row per series coefficient.
std::string to_tsv(const TorusReport& r);

struct ParsedExpandReport {
  std::string knot;
  DTable dtable;
  LineTable lines;
};

/// Reads back the tables of an expand report. Throws SchemaViolation.
ParsedExpandReport parse_expand_report(std::string_view json_text);

}  // namespace cjmm
