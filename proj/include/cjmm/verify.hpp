#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cjmm/catalog.hpp"
#include "cjmm/mmexpand.hpp"

namespace cjmm {

enum class Scope { Small, Full };

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Shared state for a verification run: the catalog and memoized D-tables.
class VerifyContext {
 public:
  explicit VerifyContext(std::vector<KnotRecord> catalog);

  const std::vector<KnotRecord>& catalog() const { return catalog_; }
  const KnotRecord& knot(const std::string& name) const;
  const DTable& dtable(const KnotRecord& knot, int order);

 private:
  std::vector<KnotRecord> catalog_;
  std::map<std::pair<std::string, int>, DTable> cache_;
};

/// Knot record for the closure of the standard torus braid.
KnotRecord torus_knot_record(int p, int q);

/// Order used for each golden knot when the whole published table is checked.
int full_table_order(const std::string& knot);

std::vector<CheckResult> check_torus_numerators(VerifyContext& ctx);
std::vector<CheckResult> check_torus_symmetry(VerifyContext& ctx);
std::vector<CheckResult> check_alexander(VerifyContext& ctx);
std::vector<CheckResult> check_tables(VerifyContext& ctx, Scope scope);
std::vector<CheckResult> check_melvin_morton(VerifyContext& ctx, int order = 5);
std::vector<CheckResult> check_stabilization(VerifyContext& ctx);
std::vector<CheckResult> check_amphicheiral(VerifyContext& ctx);
std::vector<CheckResult> check_two_path(VerifyContext& ctx);
std::vector<CheckResult> check_crossing_identities(int max_alpha = 4);
std::vector<CheckResult> check_markov(VerifyContext& ctx);
std::vector<CheckResult> check_integrality(VerifyContext& ctx);
std::vector<CheckResult> check_d_iterates();
std::vector<CheckResult> check_informational(VerifyContext& ctx);

/// Suites: tables, torus, mm, cross, all. Throws InvalidArgument otherwise.
std::vector<CheckResult> run_suite(VerifyContext& ctx, std::string_view suite, Scope scope);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace cjmm
