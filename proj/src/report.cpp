#include "cjmm/report.hpp"

#include <sstream>

#include <json.hpp>

#include "cjmm/error.hpp"

namespace cjmm {

namespace {

using Json = nlohmann::ordered_json;

Json rationals(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) {
    a.push_back(to_string(x));
  }
  return a;
}

Json poly_json(const QPoly& p) { return rationals(p.coefficients()); }

Json ints(const std::vector<int>& xs) { return Json(xs); }

[[noreturn]] void bad_report(const std::string& what) {
  throw Error(ErrorKind::SchemaViolation, "expand report: " + what);
}

Rational read_rational(const Json& j) {
  if (!j.is_string()) {
    bad_report("rational entries must be strings");
  }
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    bad_report(e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    bad_report(std::string("missing field '") + key + "'");
  }
  return j[key];
}

std::vector<int> approx_lines(const LineTable& lines, bool amphicheiral, ExponentMode mode,
                              std::vector<int>& exponents) {
  std::vector<int> ns;
  for (int n = 1; n < lines.line_count(); ++n) {
    bool three = mode == ExponentMode::ThreeNPlusOne ||
                 (mode == ExponentMode::Auto && lines.parameter() == LineParameter::HTilde && amphicheiral);
    if (three && n % 2 != 0) {
      continue;
    }
    ns.push_back(n);
    exponents.push_back(three ? 3 * (n / 2) + 1 : 2 * n + 1);
  }
  return ns;
}

}  // namespace

ExpandReport make_expand_report(const KnotRecord& knot, int order, LineParameter parameter, ExponentMode mode) {
  ExpandReport r;
  r.knot = knot.name;
  r.order = order;
  r.amphicheiral = knot.amphicheiral;
  r.conway = knot.expected_conway ? *knot.expected_conway : conway_poly(knot.braid);
  r.dtable = build_dtable(knot, order);
  r.lines = parameter == LineParameter::H ? to_z_lines(r.dtable) : to_htilde_lines(r.dtable);
  r.bottom_line = bottom_line_check(r.dtable, r.conway);
  r.integrality = integrality_report(r.lines, knot.amphicheiral);
  std::vector<int> exponents;
  const auto ns = approx_lines(r.lines, knot.amphicheiral, mode, exponents);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    r.approx.push_back(approx_poly(r.lines, r.conway, ns[i], exponents[i]));
  }
  return r;
}

TorusReport make_torus_report(const TorusParams& t, int lines, int series_terms) {
  TorusReport r{t.p(), t.q(), conway_torus(t), {}};
  auto fns = torus_lines(t, lines, lines);
  for (auto& lf : fns) {
    const QPoly num = certify_numerator(lf, r.conway);
    const std::vector<Rational> s = lf.value.series(2 * series_terms - 2);
    std::vector<Rational> even;
    for (int k = 0; k < series_terms; ++k) {
      even.push_back(s[2 * k]);
    }
    r.lines.push_back({lf.n, num, even});
  }
  return r;
}

std::string to_json(const ExpandReport& r) {
  Json j;
  j["command"] = "expand";
  j["knot"] = r.knot;
  j["order"] = r.order;
  j["amphicheiral"] = r.amphicheiral;
  j["conway"] = poly_json(r.conway);
  Json d;
  d["index"] = {"m", "n"};
  d["rows"] = r.dtable.order() + 1;
  d["columns"] = 2 * r.dtable.order() + 1;
  Json entries = Json::array();
  for (int m = 0; m <= r.dtable.order(); ++m) {
    Json rowj = Json::array();
    for (int n = 0; n <= 2 * r.dtable.order(); ++n) {
      rowj.push_back(to_string(r.dtable(m, n)));
    }
    entries.push_back(rowj);
  }
  d["entries"] = entries;
  j["dtable"] = d;
  Json l;
  l["parameter"] = std::string(to_string(r.lines.parameter()));
  l["index"] = {"n", "m"};
  Json rows = Json::array();
  for (int n = 0; n < r.lines.line_count(); ++n) {
    Json rowj;
    rowj["n"] = n;
    rowj["m_max"] = r.lines.max_m(n);
    rowj["values"] = rationals(r.lines.line(n));
    rows.push_back(rowj);
  }
  l["rows"] = rows;
  j["lines"] = l;
  Json b;
  b["order"] = r.bottom_line.order;
  b["passed"] = r.bottom_line.passed();
  b["failing_a_orders"] = ints(r.bottom_line.failing_a_orders);
  b["failing_z_orders"] = ints(r.bottom_line.failing_z_orders);
  j["bottom_line"] = b;
  Json in;
  in["informational"] = r.integrality.informational;
  in["upheld"] = r.integrality.upheld();
  Json bad = Json::array();
  for (const auto& e : r.integrality.non_integers) {
    bad.push_back({{"n", e.n}, {"m", e.m}, {"value", to_string(e.value)}});
  }
  in["non_integers"] = bad;
  j["integrality"] = in;
  Json ap = Json::array();
  for (const auto& a : r.approx) {
    Json x;
    x["n"] = a.n;
    x["exponent"] = a.exponent;
    x["head"] = poly_json(a.head);
    x["head_bound"] = a.head_bound;
    x["known_degree"] = a.known_degree;
    x["residual_window"] = rationals(a.residual_window);
    x["verdict"] = std::string(to_string(a.verdict));
    ap.push_back(x);
  }
  j["approx"] = ap;
  return j.dump(2) + "\n";
}

std::string to_json(const TorusReport& r) {
  Json j;
  j["command"] = "torus";
  j["p"] = r.p;
  j["q"] = r.q;
  j["conway"] = poly_json(r.conway);
  Json lines = Json::array();
  for (const auto& l : r.lines) {
    Json x;
    x["n"] = l.n;
    x["denominator_power"] = 2 * l.n + 1;
    x["numerator"] = poly_json(l.numerator);
    x["series"] = rationals(l.series);
    lines.push_back(x);
  }
  j["lines"] = lines;
  return j.dump(2) + "\n";
}

std::string to_tsv(const LineTable& lines) {
  std::ostringstream out;
  out << "n\tm\tvalue\n";
  for (int n = 0; n < lines.line_count(); ++n) {
    for (int m = 0; m <= lines.max_m(n); ++m) {
      out << n << '\t' << m << '\t' << to_string(lines(n, m)) << '\n';
    }
  }
  return out.str();
}

std::string to_tsv(const TorusReport& r) {
  std::ostringstream out;
  out << "n\tm\tvalue\n";
  for (const auto& l : r.lines) {
    for (std::size_t m = 0; m < l.series.size(); ++m) {
      out << l.n << '\t' << m << '\t' << to_string(l.series[m]) << '\n';
    }
  }
  return out.str();
}

ParsedExpandReport parse_expand_report(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    bad_report(std::string("invalid JSON: ") + e.what());
  }
  const Json& knot = field(j, "knot");
  const Json& order_j = field(j, "order");
  if (!knot.is_string() || !order_j.is_number_integer()) {
    bad_report("'knot' must be a string and 'order' an integer");
  }
  const int order = order_j.get<int>();
  if (order < 0) {
    bad_report("negative order");
  }
  const Json& entries = field(field(j, "dtable"), "entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != order + 1) {
    bad_report("dtable has the wrong number of rows");
  }
  RationalMatrix d(order + 1, 2 * order + 1);
  for (int m = 0; m <= order; ++m) {
    if (!entries[m].is_array() || static_cast<int>(entries[m].size()) != 2 * order + 1) {
      bad_report("dtable row " + std::to_string(m) + " has the wrong length");
    }
    for (int n = 0; n <= 2 * order; ++n) {
      d(m, n) = read_rational(entries[m][n]);
    }
  }
  const Json& lines = field(j, "lines");
  const Json& par = field(lines, "parameter");
  if (!par.is_string() || (par != "h" && par != "ht")) {
    bad_report("line parameter must be \"h\" or \"ht\"");
  }
  const Json& rows = field(lines, "rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != 2 * order + 1) {
    bad_report("line table has the wrong number of rows");
  }
  RationalMatrix e = RationalMatrix::Constant(2 * order + 1, order + 1, Rational(0));
  for (int n = 0; n <= 2 * order; ++n) {
    const Json& values = field(rows[n], "values");
    if (field(rows[n], "n") != n || !values.is_array() || static_cast<int>(values.size()) != order - (n + 1) / 2 + 1) {
      bad_report("line row " + std::to_string(n) + " is malformed");
    }
    for (std::size_t m = 0; m < values.size(); ++m) {
      e(n, static_cast<Eigen::Index>(m)) = read_rational(values[m]);
    }
  }
  return {knot.get<std::string>(), DTable(order, d),
          LineTable(order, par == "h" ? LineParameter::H : LineParameter::HTilde, e)};
}

}  // namespace cjmm
