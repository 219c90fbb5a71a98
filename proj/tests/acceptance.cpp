// Acceptance run: one PASS/FAIL line per criterion, per-check detail below it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cjmm/catalog.hpp"
#include "cjmm/verify.hpp"

using namespace cjmm;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::optional<double> budget_seconds;
  std::function<std::vector<CheckResult>(VerifyContext&)> run;
};

std::vector<CheckResult> concat(std::vector<std::vector<CheckResult>> parts) {
  std::vector<CheckResult> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "torus numerators, exact", 10.0,
       [](VerifyContext& c) { return concat({check_torus_numerators(c), check_torus_symmetry(c)}); }},
      {2, "Alexander polynomials", 1.0, [](VerifyContext& c) { return check_alexander(c); }},
      {3, "line tables, small scope", 300.0, [](VerifyContext& c) { return check_tables(c, Scope::Small); }},
      {4, "line tables, full scope", std::nullopt, [](VerifyContext& c) { return check_tables(c, Scope::Full); }},
      {5, "vanishing and bottom line at N=5", std::nullopt,
       [](VerifyContext& c) { return check_melvin_morton(c, 5); }},
      {6, "stabilization of approximate numerators", std::nullopt,
       [](VerifyContext& c) { return check_stabilization(c); }},
      {7, "amphicheiral structure", std::nullopt, [](VerifyContext& c) { return check_amphicheiral(c); }},
      {8, "two-path agreement on torus braids", 300.0, [](VerifyContext& c) { return check_two_path(c); }},
      {9, "property suites", std::nullopt,
       [](VerifyContext& c) {
         return concat({check_crossing_identities(4), check_markov(c), check_integrality(c), check_d_iterates()});
       }},
      {10, "fractional h~ coefficients of 6_1 are flagged", std::nullopt,
       [](VerifyContext& c) { return check_informational(c); }},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    // Fresh context per criterion so each timing includes its own D-tables.
    VerifyContext ctx(default_catalog());
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    std::string crash;
    try {
      results = cr.run(ctx);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = !cr.budget_seconds || seconds <= *cr.budget_seconds;
    const bool ok = crash.empty() && !results.empty() && all_passed(results) && in_budget;
    failures += ok ? 0 : 1;

    char timing[64];
    if (cr.budget_seconds) {
      std::snprintf(timing, sizeof timing, "%.2fs, budget %.0fs", seconds, *cr.budget_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    }
    std::cout << "criterion " << cr.id << ": " << (ok ? "PASS" : "FAIL") << " " << cr.title << " (" << timing << ")\n";
    for (const auto& r : results) {
      std::cout << "    " << (r.passed ? "ok   " : "FAIL ") << r.name << ": " << r.detail << "\n";
    }
    if (!crash.empty()) std::cout << "    error: " << crash << "\n";
    if (!in_budget) std::cout << "    over the time budget\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
