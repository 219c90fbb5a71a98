// Command-line front end: expand, torus, verify, catalog.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "cjmm/catalog.hpp"
#include "cjmm/error.hpp"
#include "cjmm/report.hpp"
#include "cjmm/verify.hpp"

namespace {

using namespace cjmm;

struct RunConfig {
  std::string command;
  std::vector<std::string> knots;
  int order = 0;
  int max_order = 6;
  int p = 0;
  int q = 0;
  int lines = 1;
  int max_lines = 8;
  std::string exponent_mode = "auto";
  std::string parameter = "h";
  std::string format = "json";
  std::string suite;
  std::string scope = "small";
  std::string catalog_path;
  std::string output_path;
};

std::vector<KnotRecord> load(const RunConfig& cfg) {
  return cfg.catalog_path.empty() ? active_catalog() : load_catalog_file(cfg.catalog_path);
}

bool is_torus_braid(const BraidWord& b) {
  const int s = b.strands();
  if (s < 2 || b.length() % static_cast<std::size_t>(s - 1) != 0) {
    return false;
  }
  return b == torus_braid(s, static_cast<int>(b.length()) / (s - 1));
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output_path);
  if (!out) {
    throw Error(ErrorKind::InvalidArgument, "cannot write '" + cfg.output_path + "'");
  }
  out << text;
}

ExponentMode exponent_mode(const std::string& s) {
  if (s == "2n+1") {
    return ExponentMode::TwoNPlusOne;
  }
  if (s == "3n+1") {
    return ExponentMode::ThreeNPlusOne;
  }
  return ExponentMode::Auto;
}

int cmd_expand(const RunConfig& cfg) {
  const auto catalog = load(cfg);
  std::vector<const KnotRecord*> knots;
  for (const auto& name : cfg.knots) {
    const KnotRecord& k = find_knot(catalog, name);
    const int ceiling = is_torus_braid(k.braid) ? 2 * cfg.max_order : cfg.max_order;
    if (cfg.order > ceiling) {
      throw Error(ErrorKind::BudgetExceeded, "order " + std::to_string(cfg.order) + " exceeds the ceiling " +
                                                 std::to_string(ceiling) + " for " + name + " (raise --max-order)");
    }
    knots.push_back(&k);
  }
  const LineParameter parameter = cfg.parameter == "h" ? LineParameter::H : LineParameter::HTilde;
  const ExponentMode mode = exponent_mode(cfg.exponent_mode);
  std::vector<std::future<ExpandReport>> jobs;
  for (const KnotRecord* k : knots) {
    jobs.push_back(std::async(std::launch::async,
                              [k, &cfg, parameter, mode] { return make_expand_report(*k, cfg.order, parameter, mode); }));
  }
  std::vector<std::string> sections;
  for (auto& job : jobs) {
    const ExpandReport r = job.get();
    sections.push_back(cfg.format == "json" ? to_json(r) : to_tsv(r.lines));
  }
  std::string text;
  if (cfg.format == "json" && sections.size() > 1) {
    text = "[\n";
    for (std::size_t i = 0; i < sections.size(); ++i) {
      text += sections[i].substr(0, sections[i].size() - 1);
      text += i + 1 < sections.size() ? ",\n" : "\n";
    }
    text += "]\n";
  } else {
    for (const auto& sec : sections) {
      text += sec;
    }
  }
  emit(cfg, text);
  return 0;
}

int cmd_torus(const RunConfig& cfg) {
  if (cfg.lines > cfg.max_lines) {
    throw Error(ErrorKind::BudgetExceeded, "--lines " + std::to_string(cfg.lines) + " exceeds the ceiling " +
                                               std::to_string(cfg.max_lines));
  }
  const TorusReport r = make_torus_report(TorusParams(cfg.p, cfg.q), cfg.lines);
  emit(cfg, cfg.format == "json" ? to_json(r) : to_tsv(r));
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyContext ctx(load(cfg));
  const auto results = run_suite(ctx, cfg.suite, cfg.scope == "full" ? Scope::Full : Scope::Small);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    failed += r.passed ? 0 : 1;
  }
  std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_catalog(const RunConfig& cfg) {
  const auto catalog = load(cfg);
  for (const auto& k : catalog) {
    std::cout << k.name << "\t" << k.braid.to_string() << "\t" << (k.amphicheiral ? "amphicheiral" : "chiral") << "\t"
              << conway_poly(k.braid).to_string() << "\n";
  }
  std::cout << catalog.size() << " knots validated\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored Jones polynomials and their Melvin-Morton expansion"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* expand = app.add_subcommand("expand", "D-table, lines, integrality and approximate numerators of a knot");
  expand->add_option("--knot", cfg.knots, "Catalog name (repeatable)")->required();
  expand->add_option("--order", cfg.order, "Order N (colors 1..N+1, h^0..h^2N)")->required()->check(CLI::PositiveNumber);
  expand->add_option("--max-order", cfg.max_order, "Ceiling on N (doubled for torus braids)")->check(CLI::PositiveNumber);
  expand->add_option("--parameter", cfg.parameter, "Expansion parameter")->check(CLI::IsMember({"h", "ht"}));
  expand->add_option("--exponent", cfg.exponent_mode, "nabla exponent for approximate numerators")
      ->check(CLI::IsMember({"auto", "2n+1", "3n+1"}));
  expand->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  expand->add_option("--out", cfg.output_path, "Write to this file instead of stdout");
  expand->add_option("--catalog", cfg.catalog_path, "Catalog file (default: $CJMM_CATALOG or built-in)");

  auto* torus = app.add_subcommand("torus", "Torus-knot lines from the closed formula");
  torus->add_option("--p", cfg.p, "First torus parameter")->required();
  torus->add_option("--q", cfg.q, "Second torus parameter")->required();
  torus->add_option("--lines", cfg.lines, "Highest line index")->check(CLI::NonNegativeNumber);
  torus->add_option("--max-lines", cfg.max_lines, "Ceiling on --lines")->check(CLI::NonNegativeNumber);
  torus->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  torus->add_option("--out", cfg.output_path, "Write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check the implementation against the golden data");
  verify->add_option("--suite", cfg.suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"tables", "torus", "mm", "cross", "all"}));
  verify->add_option("--scope", cfg.scope, "Table scope")->check(CLI::IsMember({"small", "full"}));
  verify->add_option("--catalog", cfg.catalog_path, "Catalog file (default: $CJMM_CATALOG or built-in)");

  auto* catalog = app.add_subcommand("catalog", "Validate and list a knot catalog");
  catalog->add_option("--path", cfg.catalog_path, "Catalog file (default: $CJMM_CATALOG or built-in)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (expand->parsed()) {
      return cmd_expand(cfg);
    }
    if (torus->parsed()) {
      return cmd_torus(cfg);
    }
    if (verify->parsed()) {
      return cmd_verify(cfg);
    }
    return cmd_catalog(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
