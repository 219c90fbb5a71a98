#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cjmm/mmexpand.hpp"
#include "cjmm/rational.hpp"

namespace cjmm {

enum class Provenance {
  /// Printed value, used as is.
  Published,
  /// Printed value that is demonstrably wrong; the corrected value is
  /// established by an independent derivation recorded with it.
  Corrected,
  /// Computed value frozen after agreement of two independent routes.
  Derived,
};

std::string_view to_string(Provenance p);

/// One corrected cell of a golden table or polynomial.
struct Erratum {
  int row;
  int column;
  Integer printed;
  Integer corrected;
  std::string derivation;
};

/// Published line coefficients d^(n)_m for rows `rows`, m = 0 .. columns-1.
struct GoldenTable {
  std::string knot;
  LineParameter parameter;
  std::vector<int> rows;
  std::vector<std::vector<Integer>> values;
  std::vector<Erratum> errata;

  /// Expected value after applying errata.
  Integer expected(int n, int m) const;
  Provenance provenance(int n, int m) const;
};

/// A polynomial in z given by its coefficients per power.
struct GoldenPoly {
  std::string label;
  std::map<int, Integer> printed;
  Provenance provenance = Provenance::Published;
  /// Expected coefficients when they differ from the print.
  std::optional<std::map<int, Integer>> expected_override;
  std::string note;

  std::map<int, Integer> expected() const { return expected_override.value_or(printed); }
};

/// Approximate numerator for line n of a knot at a given nabla exponent.
struct GoldenApprox {
  std::string knot;
  LineParameter parameter;
  int n;
  int exponent;
  GoldenPoly poly;
};

struct GoldenTorus {
  int p;
  int q;
  std::vector<Integer> conway;  // coefficients of z^0, z^2, ...
  std::map<int, GoldenPoly> numerators;  // keyed by line n
};

struct GoldenKnotConway {
  std::string knot;
  std::vector<Integer> conway;  // coefficients of z^0, z^2, ...
};

const std::vector<GoldenTable>& golden_tables();
const std::vector<GoldenApprox>& golden_approx();
const std::vector<GoldenTorus>& golden_torus();
const std::vector<GoldenKnotConway>& golden_conway();

const GoldenTable& golden_table(const std::string& knot);

/// Coefficient map of a polynomial, zero coefficients dropped.
std::map<int, Integer> coefficient_map(const QPoly& p);

}  // namespace cjmm
