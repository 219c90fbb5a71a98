#include "cjmm/mmexpand.hpp"

#include <string>

#include "cjmm/cjones.hpp"
#include "cjmm/error.hpp"
#include "cjmm/linalg.hpp"

namespace cjmm {

namespace {

std::string cell(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

int ceil_half(int n) { return (n + 1) / 2; }

// h / log(1 + h) through h^cap.
TruncSeries h_over_log1p(int cap) {
  TruncSeries l(SeriesVar::H, cap);
  for (int k = 0; k <= cap; ++k) {
    l[k] = make_rational(k % 2 == 0 ? 1 : -1, k + 1);
  }
  return l.inverse();
}

// Adds c * h^shift * src into dst (rows: first grading, columns: h).
void add_shifted(BiSeries& dst, const BiSeries& src, int shift, const Rational& c) {
  for (int a = 0; a <= std::min(dst.z_cap(), src.z_cap()); ++a) {
    for (int b = 0; b + shift <= dst.h_cap() && b <= src.h_cap(); ++b) {
      const Rational& x = src(a, b);
      if (x != 0) {
        dst(a, b + shift) += c * x;
      }
    }
  }
}

// V(z, h) = sum_{n,m} D(m, n+2m) h^n A^(2m), A = 2 arcsinh(z/2) h / log(1+h).
BiSeries substitute_z(const DTable& d) {
  const int order = d.order();
  const int cap = 2 * order;
  const BiSeries a = BiSeries::outer(series_two_arcsinh_half(cap), h_over_log1p(cap));
  const BiSeries a2 = a * a;
  BiSeries v(cap, cap);
  BiSeries power = BiSeries::constant(cap, cap, 1);
  for (int m = 0; m <= order; ++m) {
    for (int n = 0; n + 2 * m <= cap; ++n) {
      if (d(m, n + 2 * m) != 0) {
        add_shifted(v, power, n, d(m, n + 2 * m));
      }
    }
    if (m < order) {
      power = power * a2;
    }
  }
  for (int zp = 1; zp <= cap; zp += 2) {
    for (int hp = 0; hp <= cap; ++hp) {
      if (v(zp, hp) != 0) {
        throw Error(ErrorKind::InternalConsistency,
                    "odd power z^" + std::to_string(zp) + " h^" + std::to_string(hp) + " in the line expansion");
      }
    }
  }
  return v;
}

RationalMatrix lines_from_biseries(const BiSeries& v, int order) {
  const int cap = 2 * order;
  RationalMatrix e = RationalMatrix::Constant(cap + 1, order + 1, Rational(0));
  for (int n = 0; n <= cap; ++n) {
    for (int m = 0; m <= order - ceil_half(n); ++m) {
      e(n, m) = v(2 * m, n);
    }
  }
  return e;
}

void check_htilde_inversion(int cap) {
  const TruncSeries h_of_t = h_in_terms_of_htilde(cap);
  const TruncSeries t_of_h = htilde_in_terms_of_h(cap);
  if (!(series_compose(t_of_h, h_of_t) == TruncSeries::identity(SeriesVar::HTilde, cap))) {
    throw Error(ErrorKind::InternalConsistency, "h~(h(h~)) is not the identity");
  }
  const TruncSeries sq = t_of_h.pow(2);
  for (int n = 0; n <= cap; ++n) {
    const Rational want = n < 2 ? Rational(0) : Rational(n % 2 == 0 ? 1 : -1);
    if (sq[n] != want) {
      throw Error(ErrorKind::InternalConsistency,
                  "h~^2 differs from sum (-1)^n h^n at h^" + std::to_string(n));
    }
  }
}

}  // namespace

DTable::DTable(int order, RationalMatrix entries) : order_(order), d_(std::move(entries)) {
  if (order < 0 || d_.rows() != order + 1 || d_.cols() != 2 * order + 1) {
    throw Error(ErrorKind::InvalidArgument, "D-table shape does not match its order");
  }
}

const Rational& DTable::operator()(int m, int n) const {
  if (m < 0 || m > order_ || n < 0 || n > 2 * order_) {
    throw Error(ErrorKind::OutOfRange, "D-table entry " + cell(m, n) + " outside the table");
  }
  return d_(m, n);
}

std::string_view to_string(LineParameter p) { return p == LineParameter::H ? "h" : "ht"; }

LineTable::LineTable(int order, LineParameter parameter, RationalMatrix entries)
    : order_(order), parameter_(parameter), d_(std::move(entries)) {
  if (order < 0 || d_.rows() != 2 * order + 1 || d_.cols() != order + 1) {
    throw Error(ErrorKind::InvalidArgument, "line table shape does not match its order");
  }
  for (int n = 0; n <= 2 * order; ++n) {
    for (int m = max_m(n) + 1; m <= order; ++m) {
      d_(n, m) = 0;
    }
  }
}

int LineTable::max_m(int n) const { return order_ - ceil_half(n); }

bool LineTable::has(int n, int m) const { return n >= 0 && n <= 2 * order_ && m >= 0 && m <= max_m(n); }

const Rational& LineTable::operator()(int n, int m) const {
  if (!has(n, m)) {
    throw Error(ErrorKind::OutOfRange, "line entry " + cell(n, m) + " is not determined at order " +
                                           std::to_string(order_));
  }
  return d_(n, m);
}

std::vector<Rational> LineTable::line(int n) const {
  if (n < 0 || n > 2 * order_) {
    throw Error(ErrorKind::OutOfRange, "line " + std::to_string(n) + " is not in the table");
  }
  std::vector<Rational> out;
  for (int m = 0; m <= max_m(n); ++m) {
    out.push_back(d_(n, m));
  }
  return out;
}

bool operator==(const LineTable& a, const LineTable& b) {
  return a.order_ == b.order_ && a.parameter_ == b.parameter_ && a.d_ == b.d_;
}

DTable build_dtable(const KnotRecord& knot, int order, int extra_colors) {
  if (order < 1 || extra_colors < 0) {
    throw Error(ErrorKind::InvalidArgument, "build_dtable needs order >= 1 and extra_colors >= 0");
  }
  require_knot(knot.braid);
  const int cap = 2 * order;
  const int colors = order + 1 + extra_colors;
  RationalMatrix obs(colors, cap + 1);
  for (int a = 1; a <= colors; ++a) {
    const TruncSeries s = jones_h_expansion(knot.braid, ColorDimension(a), cap);
    for (int n = 0; n <= cap; ++n) {
      obs(a - 1, n) = s[n];
    }
  }
  RationalVector nodes(order + 1);
  for (int a = 1; a <= order + 1; ++a) {
    nodes(a - 1) = a * a;
  }
  const RationalMatrix d =
      solve_exact<Rational>(vandermonde<Rational>(nodes, order + 1), obs.topRows(order + 1));
  for (int a = order + 2; a <= colors; ++a) {
    for (int n = 0; n <= cap; ++n) {
      Rational fit = 0;
      Rational p = 1;
      for (int m = 0; m <= order; ++m) {
        fit += d(m, n) * p;
        p *= a * a;
      }
      if (fit != obs(a - 1, n)) {
        throw Error(ErrorKind::ModelViolation, knot.name + ": polynomial model in alpha^2 misses alpha=" +
                                                   std::to_string(a) + " at h^" + std::to_string(n));
      }
    }
  }
  DTable table(order, d);
  if (table(0, 0) != 1) {
    throw Error(ErrorKind::ModelViolation, knot.name + ": D(0,0) = " + to_string(table(0, 0)) + ", expected 1");
  }
  const auto bad = vanishing_violations(table);
  if (!bad.empty()) {
    throw Error(ErrorKind::ModelViolation, knot.name + ": D" + cell(bad[0].first, bad[0].second) + " = " +
                                               to_string(table(bad[0].first, bad[0].second)) +
                                               " should vanish");
  }
  return table;
}

std::vector<std::pair<int, int>> vanishing_violations(const DTable& d) {
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m <= d.order(); ++m) {
    for (int n = 0; n < 2 * m && n <= 2 * d.order(); ++n) {
      if (d(m, n) != 0) {
        out.emplace_back(m, n);
      }
    }
  }
  return out;
}

BottomLineReport bottom_line_check(const DTable& d, const QPoly& conway) {
  BottomLineReport rep;
  const int cap = 2 * d.order();
  rep.order = cap;
  // a-route: nabla(2 sinh(a/2)) with 2 sinh(a/2) = sum a^(2k+1) / (4^k (2k+1)!).
  TruncSeries zs(SeriesVar::Z, cap);
  Integer four_pow = 1;
  for (int k = 0; 2 * k + 1 <= cap; ++k) {
    zs[2 * k + 1] = Rational(1) / Rational(four_pow * factorial(2 * k + 1));
    four_pow *= 4;
  }
  TruncSeries nab(SeriesVar::Z, cap);
  for (int k = 0; k <= std::min(cap, conway.degree()); ++k) {
    nab[k] = conway.coefficient(k);
  }
  const TruncSeries nab_a = series_compose(nab, zs);
  TruncSeries bottom(SeriesVar::Z, cap);
  for (int m = 0; 2 * m <= cap; ++m) {
    bottom[2 * m] = d(m, 2 * m);
  }
  const TruncSeries prod_a = bottom * nab_a;
  const LineTable lines = to_z_lines(d);
  TruncSeries line0(SeriesVar::Z, cap);
  for (int m = 0; m <= lines.max_m(0); ++m) {
    line0[2 * m] = lines(0, m);
  }
  const TruncSeries prod_z = line0 * nab;
  for (int k = 0; k <= cap; ++k) {
    const Rational want = k == 0 ? 1 : 0;
    if (prod_a[k] != want) {
      rep.failing_a_orders.push_back(k);
    }
    if (prod_z[k] != want) {
      rep.failing_z_orders.push_back(k);
    }
  }
  return rep;
}

LineTable to_z_lines(const DTable& d) {
  return LineTable(d.order(), LineParameter::H, lines_from_biseries(substitute_z(d), d.order()));
}

LineTable to_z_lines_by_basis_change(const DTable& d) {
  const int order = d.order();
  const int cap = 2 * order;
  // Rows of these double series are powers of alpha^2.
  const TruncSeries l = series_log1p(cap);
  BiSeries z2(order, cap);
  TruncSeries lp = TruncSeries::constant(SeriesVar::H, cap, 1);
  for (int k = 1; k <= order; ++k) {
    lp = lp * l * l;
    const Rational c = Rational(2) / Rational(factorial(2 * k));
    for (int b = 0; b <= cap; ++b) {
      z2(k, b) = c * lp[b];
    }
  }
  std::vector<BiSeries> powers{BiSeries::constant(order, cap, 1)};
  for (int k = 1; k <= order; ++k) {
    powers.push_back(powers.back() * z2);
  }
  BiSeries rest(order, cap);
  for (int m = 0; m <= order; ++m) {
    for (int n = 0; n <= cap; ++n) {
      rest(m, n) = d(m, n);
    }
  }
  RationalMatrix e = RationalMatrix::Constant(cap + 1, order + 1, Rational(0));
  for (int n = 0; n <= cap; ++n) {
    for (int m = 0; n + 2 * m <= cap; ++m) {
      const Rational c = rest(m, n + 2 * m);
      e(n, m) = c;
      if (c != 0) {
        add_shifted(rest, powers[m], n, -c);
      }
    }
  }
  for (int m = 0; m <= order; ++m) {
    for (int n = 0; n <= cap; ++n) {
      if (rest(m, n) != 0) {
        throw Error(ErrorKind::InternalConsistency,
                    "basis change left a remainder at alpha^" + std::to_string(2 * m) + " h^" + std::to_string(n));
      }
    }
  }
  return LineTable(order, LineParameter::H, e);
}

LineTable to_htilde_lines(const DTable& d) {
  const int order = d.order();
  const int cap = 2 * order;
  check_htilde_inversion(cap);
  const RationalMatrix zl = lines_from_biseries(substitute_z(d), order);
  BiSeries v(cap, cap);
  for (int n = 0; n <= cap; ++n) {
    for (int m = 0; m <= order; ++m) {
      v(2 * m, n) = zl(n, m);
    }
  }
  const BiSeries vt = series_compose_h(v, h_in_terms_of_htilde(cap));
  return LineTable(order, LineParameter::HTilde, lines_from_biseries(vt, order));
}

std::string_view to_string(Stabilization s) {
  switch (s) {
    case Stabilization::Stable:
      return "stable";
    case Stabilization::Unstable:
      return "unstable";
    case Stabilization::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

ApproxPoly approx_poly(const LineTable& lines, const QPoly& conway, int n, int exponent) {
  if (n < 0 || n >= lines.line_count()) {
    throw Error(ErrorKind::OutOfRange, "line " + std::to_string(n) + " is not in the table");
  }
  const bool ok = exponent == 2 * n + 1 || (n % 2 == 0 && exponent == 3 * (n / 2) + 1);
  if (!ok) {
    throw Error(ErrorKind::InvalidArgument, "exponent " + std::to_string(exponent) + " is not 2n+1 or 3(n/2)+1 for n=" +
                                                std::to_string(n));
  }
  ApproxPoly ap;
  ap.n = n;
  ap.exponent = exponent;
  ap.known_degree = 2 * lines.max_m(n);
  ap.head_bound = (exponent - 1) * std::max(conway.degree(), 0);
  const QPoly prod = QPoly::from_even(lines.line(n)) * conway.pow(static_cast<unsigned>(exponent));
  std::vector<Rational> head;
  for (int k = 0; k <= std::min(ap.head_bound, ap.known_degree); ++k) {
    head.push_back(prod.coefficient(k));
  }
  ap.head = QPoly(head);
  for (int k = ap.head_bound + 1; k <= ap.known_degree; ++k) {
    if (k % 2 == 0) {
      ap.residual_window.push_back(prod.coefficient(k));
    }
  }
  if (ap.residual_window.empty()) {
    ap.verdict = Stabilization::Inconclusive;
  } else {
    ap.verdict = Stabilization::Stable;
    for (const auto& r : ap.residual_window) {
      if (r != 0) {
        ap.verdict = Stabilization::Unstable;
      }
    }
  }
  return ap;
}

IntegralityReport integrality_report(const LineTable& lines, bool amphicheiral) {
  IntegralityReport rep;
  rep.informational = lines.parameter() == LineParameter::HTilde && !amphicheiral;
  for (int n = 0; n < lines.line_count(); ++n) {
    for (int m = 0; m <= lines.max_m(n); ++m) {
      if (!is_integer(lines(n, m))) {
        rep.non_integers.push_back({n, m, lines(n, m)});
      }
    }
  }
  return rep;
}

}  // namespace cjmm
