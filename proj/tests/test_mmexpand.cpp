#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cjmm/catalog.hpp"
#include "cjmm/cjones.hpp"
#include "cjmm/conway.hpp"
#include "cjmm/error.hpp"
#include "cjmm/mmexpand.hpp"

using namespace cjmm;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no cjmm::Error thrown");
  return ErrorKind::InternalConsistency;
}

const KnotRecord& knot(const char* name) { return find_knot(default_catalog(), name); }

KnotRecord mirrored(const KnotRecord& k) {
  KnotRecord m = k;
  m.name += "*";
  m.braid = k.braid.mirror();
  return m;
}

KnotRecord torus_record(int p, int q) {
  return KnotRecord{"T", torus_braid(p, q), false, conway_torus(TorusParams(p, q))};
}

}  // namespace

TEST_CASE("unknot D-table is trivial") {
  for (int order : {1, 2, 4}) {
    DTable d = build_dtable(knot("0_1"), order);
    CHECK(d.order() == order);
    for (int m = 0; m <= order; ++m)
      for (int n = 0; n <= 2 * order; ++n) CHECK(d(m, n) == (m == 0 && n == 0 ? 1 : 0));
  }
}

TEST_CASE("D-table examples") {
  CHECK(build_dtable(knot("5_2"), 2)(1, 2) == -2);
  CHECK(build_dtable(knot("4_1"), 2)(1, 2) == 1);
  CHECK(build_dtable(knot("6_1"), 3)(1, 2) == 2);
  CHECK(build_dtable(knot("8_3"), 2)(1, 2) == 4);
}

TEST_CASE("D-table reproduces V_alpha through h^(2N)") {
  const int order = 3;
  for (const char* name : {"4_1", "5_2"}) {
    DTable d = build_dtable(knot(name), order);
    for (int alpha = 1; alpha <= 7; ++alpha) {
      TruncSeries v = jones_h_expansion(knot(name).braid, ColorDimension(alpha), 2 * order);
      for (int n = 0; n <= 2 * order; ++n) {
        Rational sum = 0, a2 = 1;
        for (int m = 0; m <= order; ++m, a2 *= alpha * alpha) sum += d(m, n) * a2;
        CAPTURE(alpha);
        CAPTURE(n);
        CHECK(sum == v[n]);
      }
    }
  }
}

TEST_CASE("extra colors confirm the fitted model") {
  DTable plain = build_dtable(knot("5_2"), 3);
  DTable checked = build_dtable(knot("5_2"), 3, 3);
  CHECK(plain.entries() == checked.entries());
  CHECK(kind_of([] { build_dtable(knot("5_2"), 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { build_dtable(knot("5_2"), 2, -1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { (void)plain(4, 0); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([&] { (void)plain(0, 7); }) == ErrorKind::OutOfRange);
}

TEST_CASE("vanishing above the diagonal") {
  for (const auto& k : default_catalog()) {
    CAPTURE(k.name);
    DTable d = build_dtable(k, 4);
    CHECK(vanishing_violations(d).empty());
    // The boundary 2m = n is not forced to vanish: it carries the bottom line.
    CHECK(d(0, 0) == 1);
  }
  CHECK(build_dtable(knot("5_2"), 3)(2, 4) != 0);
}

TEST_CASE("bottom line is 1/nabla") {
  for (const auto& k : default_catalog()) {
    CAPTURE(k.name);
    BottomLineReport r = bottom_line_check(build_dtable(k, 4), conway_poly(k.braid));
    CHECK(r.passed());
    CHECK(r.order == 8);
  }
  BottomLineReport wrong = bottom_line_check(build_dtable(knot("5_2"), 4), QPoly{1, 0, -2});
  CHECK_FALSE(wrong.passed());
  CHECK_FALSE(wrong.failing_a_orders.empty());
  CHECK_FALSE(wrong.failing_z_orders.empty());
}

TEST_CASE("z-lines examples") {
  LineTable u = to_z_lines(build_dtable(knot("0_1"), 3));
  for (int n = 0; n < u.line_count(); ++n)
    for (int m = 0; m <= u.max_m(n); ++m) CHECK(u(n, m) == (n == 0 && m == 0 ? 1 : 0));

  LineTable l52 = to_z_lines(build_dtable(knot("5_2"), 5));
  CHECK(l52(2, 2) == 226);
  CHECK(l52(1, 1) == -6);
  CHECK(l52.line(0) == std::vector<Rational>{1, -2, 4, -8, 16, -32});
  LineTable l61 = to_z_lines(build_dtable(knot("6_1"), 5));
  CHECK(l61(3, 1) == -35);
  CHECK(l61.parameter() == LineParameter::H);
}

TEST_CASE("withheld line entries are never exposed") {
  LineTable l = to_z_lines(build_dtable(knot("5_2"), 4));
  CHECK(l.line_count() == 9);
  CHECK(l.max_m(0) == 4);
  CHECK(l.max_m(1) == 3);
  CHECK(l.max_m(2) == 3);
  CHECK(l.max_m(3) == 2);
  CHECK(l.max_m(8) == 0);
  CHECK(l.has(3, 2));
  CHECK_FALSE(l.has(3, 3));
  CHECK_FALSE(l.has(9, 0));
  CHECK(kind_of([&] { (void)l(3, 3); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([&] { (void)l(9, 0); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([&] { (void)l.line(9); }) == ErrorKind::OutOfRange);
  CHECK(l.line(3).size() == 3);
}

TEST_CASE("the two z-line routes agree") {
  for (const char* name : {"0_1", "3_1", "4_1", "5_2", "6_1", "8_3"}) {
    CAPTURE(name);
    DTable d = build_dtable(knot(name), 5);
    CHECK(to_z_lines(d) == to_z_lines_by_basis_change(d));
  }
  DTable t = build_dtable(torus_record(2, 5), 5);
  CHECK(to_z_lines(t) == to_z_lines_by_basis_change(t));
}

TEST_CASE("h~-lines examples") {
  LineTable u = to_htilde_lines(build_dtable(knot("0_1"), 3));
  CHECK(u.parameter() == LineParameter::HTilde);
  for (int n = 0; n < u.line_count(); ++n)
    for (int m = 0; m <= u.max_m(n); ++m) CHECK(u(n, m) == (n == 0 && m == 0 ? 1 : 0));
  CHECK(to_htilde_lines(build_dtable(knot("4_1"), 3))(2, 1) == -5);
  CHECK(to_htilde_lines(build_dtable(knot("8_3"), 4))(4, 0) == 60);
  CHECK(to_htilde_lines(build_dtable(knot("8_3"), 4))(2, 2) == -821);
}

TEST_CASE("h and h~ lines share the bottom line") {
  for (const char* name : {"4_1", "5_2", "6_1"}) {
    DTable d = build_dtable(knot(name), 4);
    CHECK(to_z_lines(d).line(0) == to_htilde_lines(d).line(0));
  }
}

TEST_CASE("odd h~-rows vanish for amphicheiral knots") {
  for (const char* name : {"4_1", "8_3"}) {
    LineTable l = to_htilde_lines(build_dtable(knot(name), 5));
    for (int n = 1; n < l.line_count(); n += 2)
      for (const auto& v : l.line(n)) CHECK(v == 0);
  }
  LineTable chiral = to_htilde_lines(build_dtable(knot("5_2"), 4));
  bool some_nonzero = false;
  for (const auto& v : chiral.line(1)) some_nonzero = some_nonzero || v != 0;
  CHECK(some_nonzero);
}

TEST_CASE("mirror flips the sign of odd h~-rows") {
  for (const char* name : {"5_2", "6_1", "3_1"}) {
    CAPTURE(name);
    LineTable l = to_htilde_lines(build_dtable(knot(name), 4));
    LineTable lm = to_htilde_lines(build_dtable(mirrored(knot(name)), 4));
    for (int n = 0; n < l.line_count(); ++n)
      for (int m = 0; m <= l.max_m(n); ++m) CHECK(lm(n, m) == (n % 2 ? -l(n, m) : l(n, m)));
  }
}

TEST_CASE("approx_poly examples") {
  LineTable l52 = to_z_lines(build_dtable(knot("5_2"), 5));
  ApproxPoly a = approx_poly(l52, QPoly{1, 0, 2}, 1, 3);
  CHECK(a.head == QPoly{0, 0, -6, 0, -5});
  CHECK(a.head_bound == 4);
  CHECK(a.known_degree == 8);
  CHECK(a.residual_window == std::vector<Rational>{0, 0});
  CHECK(a.verdict == Stabilization::Stable);

  LineTable l41 = to_htilde_lines(build_dtable(knot("4_1"), 5));
  ApproxPoly b = approx_poly(l41, QPoly{1, 0, -1}, 2, 4);
  CHECK(b.head == QPoly{-1, 0, -1});
  CHECK(b.residual_window == std::vector<Rational>{0});
  CHECK(b.verdict == Stabilization::Stable);

  LineTable u = to_z_lines(build_dtable(knot("0_1"), 4));
  for (int n = 1; n <= 3; ++n) {
    ApproxPoly c = approx_poly(u, QPoly{1}, n, 2 * n + 1);
    CHECK(c.head.is_zero());
    CHECK(c.verdict == Stabilization::Stable);
    for (const auto& v : c.residual_window) CHECK(v == 0);
  }
}

TEST_CASE("approx_poly verdicts") {
  LineTable l = to_z_lines(build_dtable(knot("5_2"), 4));
  // Window empty: head_bound 12 exceeds the known degree 4.
  ApproxPoly inc = approx_poly(l, QPoly{1, 0, 2}, 3, 7);
  CHECK(inc.residual_window.empty());
  CHECK(inc.verdict == Stabilization::Inconclusive);
  // A wrong nabla leaves a nonzero tail.
  ApproxPoly bad = approx_poly(l, QPoly{1, 0, 1}, 1, 3);
  CHECK(bad.verdict == Stabilization::Unstable);
}

TEST_CASE("stabilization holds for n <= 3") {
  for (const char* name : {"4_1", "5_2", "6_1"}) {
    const KnotRecord& k = knot(name);
    LineTable l = to_z_lines(build_dtable(k, 6));
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      ApproxPoly a = approx_poly(l, conway_poly(k.braid), n, 2 * n + 1);
      CHECK(a.verdict != Stabilization::Unstable);
      for (const auto& v : a.residual_window) CHECK(v == 0);
    }
  }
}

TEST_CASE("approx_poly errors") {
  LineTable l = to_z_lines(build_dtable(knot("5_2"), 2));
  CHECK(kind_of([&] { approx_poly(l, QPoly{1, 0, 2}, 5, 11); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([&] { approx_poly(l, QPoly{1, 0, 2}, 1, 4); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { approx_poly(l, QPoly{1, 0, 2}, 3, 5); }) == ErrorKind::InvalidArgument);
  CHECK_NOTHROW(approx_poly(l, QPoly{1, 0, 2}, 2, 4));
}

TEST_CASE("integrality report examples") {
  IntegralityReport a = integrality_report(to_z_lines(build_dtable(knot("5_2"), 5)), false);
  CHECK(a.non_integers.empty());
  CHECK(a.upheld());
  IntegralityReport b = integrality_report(to_htilde_lines(build_dtable(knot("4_1"), 5)), true);
  CHECK(b.non_integers.empty());
  IntegralityReport c = integrality_report(to_htilde_lines(build_dtable(knot("6_1"), 5)), false);
  CHECK_FALSE(c.non_integers.empty());
  CHECK(c.informational);
  CHECK(c.upheld());
  for (const auto& x : c.non_integers) CHECK_FALSE(is_integer(x.value));
}
