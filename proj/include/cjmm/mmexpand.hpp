#pragma once

#include <string>
#include <vector>

#include "cjmm/catalog.hpp"
#include "cjmm/qpoly.hpp"
#include "cjmm/rational.hpp"
#include "cjmm/series.hpp"

namespace cjmm {

/// Coefficients D(m, n) of alpha^(2m) h^n in V_alpha, 0 <= m <= N, 0 <= n <= 2N.
class DTable {
 public:
  DTable() : DTable(0, RationalMatrix::Constant(1, 1, Rational(0))) {}
  DTable(int order, RationalMatrix entries);

  int order() const { return order_; }
  const RationalMatrix& entries() const { return d_; }
  const Rational& operator()(int m, int n) const;

 private:
  int order_;
  RationalMatrix d_;
};

enum class LineParameter { H, HTilde };
std::string_view to_string(LineParameter p);

/// Line coefficients d^(n)_m for 0 <= n <= 2N. Entries with m > N - ceil(n/2)
/// are not determined by the data and are never exposed.
class LineTable {
 public:
  LineTable() : LineTable(0, LineParameter::H, RationalMatrix::Constant(1, 1, Rational(0))) {}
  LineTable(int order, LineParameter parameter, RationalMatrix entries);

  int order() const { return order_; }
  LineParameter parameter() const { return parameter_; }
  int line_count() const { return 2 * order_ + 1; }
  /// Largest m available on line n.
  int max_m(int n) const;
  bool has(int n, int m) const;
  /// Throws OutOfRange for withheld entries.
  const Rational& operator()(int n, int m) const;
  /// d^(n)_0 .. d^(n)_max_m(n).
  std::vector<Rational> line(int n) const;

  friend bool operator==(const LineTable& a, const LineTable& b);

 private:
  int order_;
  LineParameter parameter_;
  RationalMatrix d_;
};

/// Solves for D(m, n) from V_alpha at alpha = 1 .. N+1. With extra_colors > 0
/// the further colors are checked against the fitted model. Throws
/// ModelViolation if the fit, the D(0,0) = 1 normalization, or the vanishing
/// D(m, n) = 0 for 2m > n fails.
DTable build_dtable(const KnotRecord& knot, int order, int extra_colors = 0);

/// Entries (m, n) with 2m > n and D(m, n) != 0.
std::vector<std::pair<int, int>> vanishing_violations(const DTable& d);

struct BottomLineReport {
  int order = 0;
  /// Orders 2k at which sum_m D(m,2m) a^(2m) * nabla(2 sinh(a/2)) differs from 1.
  std::vector<int> failing_a_orders;
  /// Orders 2k at which (sum_m d^(0)_m z^(2m)) * nabla(z) differs from 1.
  std::vector<int> failing_z_orders;
  bool passed() const { return failing_a_orders.empty() && failing_z_orders.empty(); }
};

/// Checks the bottom line against 1/nabla through order 2N by both routes.
BottomLineReport bottom_line_check(const DTable& d, const QPoly& conway);

/// Lines in (z, h), by substituting alpha h = 2 arcsinh(z/2) h / log(1+h).
LineTable to_z_lines(const DTable& d);

/// Lines in (z, h) by triangular change of basis from {alpha^(2m) h^n} to
/// {z^(2m) h^n}. Independent of to_z_lines.
LineTable to_z_lines_by_basis_change(const DTable& d);

/// Lines in (z, h~) with h~ = q^(1/2) - q^(-1/2).
LineTable to_htilde_lines(const DTable& d);

enum class Stabilization { Stable, Unstable, Inconclusive };
std::string_view to_string(Stabilization s);

/// Truncated line times nabla^exponent, split at the degree a numerator can
/// have, (exponent - 1) * deg(nabla).
struct ApproxPoly {
  int n = 0;
  int exponent = 0;
  QPoly head;
  /// Degree of the highest known coefficient; coefficients of z^(2k) above
  /// head_bound and up to known_degree form the residual window.
  int head_bound = 0;
  int known_degree = 0;
  std::vector<Rational> residual_window;
  Stabilization verdict = Stabilization::Inconclusive;
};

/// exponent must be 2n+1, or 3(n/2)+1 for even n. Throws OutOfRange if line n
/// is not in the table.
ApproxPoly approx_poly(const LineTable& lines, const QPoly& conway, int n, int exponent);

struct NonInteger {
  int n;
  int m;
  Rational value;
};

struct IntegralityReport {
  std::vector<NonInteger> non_integers;
  /// Non-integers are expected (h~ lines of a knot that is not amphicheiral)
  /// and do not count as failures.
  bool informational = false;
  bool upheld() const { return informational || non_integers.empty(); }
};

IntegralityReport integrality_report(const LineTable& lines, bool amphicheiral);

}  // namespace cjmm
