#include "cjmm/conway.hpp"

#include <cstdlib>
#include <numeric>

#include "cjmm/error.hpp"
#include "cjmm/linalg.hpp"

namespace cjmm {

TorusParams::TorusParams(int p, int q) : p_(p), q_(q) {
  if (std::abs(p) < 2 || std::abs(q) < 2) {
    throw Error(ErrorKind::InvalidTorusParameters, "torus parameters need |p|, |q| >= 2");
  }
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorKind::InvalidTorusParameters,
                "(" + std::to_string(p) + "," + std::to_string(q) + ") are not coprime");
  }
}

namespace {

LaurentPoly tpoly(int exponent, const Integer& c = 1) {
  return LaurentPoly::monomial(Variable::T, exponent, c);
}

LaurentPoly tzero() { return LaurentPoly(Variable::T); }

Matrix<LaurentPoly> identity_t(int n) {
  Matrix<LaurentPoly> m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = i == j ? tpoly(0) : tzero();
    }
  }
  return m;
}

Matrix<LaurentPoly> multiply(const Matrix<LaurentPoly>& a, const Matrix<LaurentPoly>& b) {
  const auto n = a.rows();
  Matrix<LaurentPoly> r(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      LaurentPoly acc = tzero();
      for (Eigen::Index k = 0; k < n; ++k) {
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) {
          acc += a(i, k) * b(k, j);
        }
      }
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

// Reduced Burau image of sigma_i^{+-1} (i is 1-based) on n strands.
Matrix<LaurentPoly> generator_matrix(int n, int i, bool inverse) {
  const int d = n - 1;
  Matrix<LaurentPoly> m = identity_t(d);
  // Block for sigma_i acting on basis indices i-2, i-1, i (0-based, where present):
  //   [1  t  0]
  //   [0 -t  0]
  //   [0  1  1]
  // and its inverse
  //   [1  1      0]
  //   [0 -t^-1   0]
  //   [0  t^-1   1]
  const int c = i - 1;
  if (!inverse) {
    m(c, c) = tpoly(1, -1);
    if (c - 1 >= 0) {
      m(c - 1, c) = tpoly(1);
    }
    if (c + 1 < d) {
      m(c + 1, c) = tpoly(0);
    }
  } else {
    m(c, c) = tpoly(-1, -1);
    if (c - 1 >= 0) {
      m(c - 1, c) = tpoly(0);
    }
    if (c + 1 < d) {
      m(c + 1, c) = tpoly(-1);
    }
  }
  return m;
}

LaurentPoly divide_or_throw(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) {
    throw Error(ErrorKind::InternalConsistency, "inexact division in Bareiss elimination");
  }
  return *q;
}

}  // namespace

Matrix<LaurentPoly> reduced_burau(const BraidWord& b) {
  const int d = b.strands() - 1;
  Matrix<LaurentPoly> m = identity_t(d);
  for (int k : b.letters()) {
    m = multiply(m, generator_matrix(b.strands(), std::abs(k), k < 0));
  }
  return m;
}

QPoly symmetric_to_z(const LaurentPoly& sym_in_t) {
  if (sym_in_t.variable() != Variable::T || !sym_in_t.is_symmetric()) {
    throw Error(ErrorKind::PresentationInconsistency,
                "not a symmetric polynomial in t: " + sym_in_t.to_string());
  }
  const LaurentPoly z2 = tpoly(1) - tpoly(0, 2) + tpoly(-1);
  LaurentPoly rest = sym_in_t;
  std::vector<Rational> even;
  while (!rest.is_zero()) {
    const int d = rest.max_exponent();
    if (d < 0 || rest.min_exponent() != -d) {
      throw Error(ErrorKind::PresentationInconsistency, "remainder in the z^2 reduction");
    }
    const Integer c = rest.terms().rbegin()->second;
    if (even.size() < static_cast<std::size_t>(d) + 1) {
      even.resize(d + 1);
    }
    even[d] = c;
    rest -= z2.pow(static_cast<unsigned>(d)) * c;
  }
  return QPoly::from_even(even);
}

namespace {

// Picks the unit +-t^k that makes a Laurent polynomial symmetric with value 1 at t = 1.
LaurentPoly normalize_alexander(const LaurentPoly& delta) {
  if (delta.is_zero()) {
    throw Error(ErrorKind::PresentationInconsistency, "vanishing Alexander polynomial");
  }
  const int span = delta.max_exponent() + delta.min_exponent();
  if (span % 2 != 0) {
    throw Error(ErrorKind::PresentationInconsistency,
                "Alexander polynomial has odd span: " + delta.to_string());
  }
  LaurentPoly sym = delta.shifted(-span / 2);
  Integer at_one = 0;
  for (const auto& [e, c] : sym.terms()) {
    at_one += c;
  }
  if (at_one == -1) {
    sym = -sym;
  } else if (at_one != 1) {
    throw Error(ErrorKind::PresentationInconsistency,
                "Alexander polynomial does not evaluate to +-1 at t = 1: " + delta.to_string());
  }
  if (!sym.is_symmetric()) {
    throw Error(ErrorKind::PresentationInconsistency,
                "Alexander polynomial is not symmetric: " + delta.to_string());
  }
  return sym;
}

}  // namespace

QPoly conway_poly(const BraidWord& b) {
  require_knot(b);
  if (b.strands() == 1) {
    return QPoly::constant(1);
  }
  Matrix<LaurentPoly> m = reduced_burau(b);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    m(i, i) -= tpoly(0);
  }
  const LaurentPoly det = bareiss_determinant<LaurentPoly>(m, tzero(), tpoly(0), divide_or_throw);
  LaurentPoly cyclotomic = tzero();
  for (int k = 0; k < b.strands(); ++k) {
    cyclotomic += tpoly(k);
  }
  auto delta = det.divide_exact(cyclotomic);
  if (!delta) {
    throw Error(ErrorKind::PresentationInconsistency,
                "det(Burau - 1) is not divisible by 1 + t + ... + t^(n-1)");
  }
  const QPoly z = symmetric_to_z(normalize_alexander(*delta));
  if (z.coefficient(0) != 1 || !z.is_even()) {
    throw Error(ErrorKind::PresentationInconsistency, "Conway polynomial normalization failed");
  }
  return z;
}

QPoly conway_torus(const TorusParams& t) {
  // Work in x = t^(1/2): {n} = x^n - x^-n, and the Laurent quotient
  // {pq}{1}/({p}{q}) is symmetric in x with only even exponents.
  const int p = std::abs(t.p());
  const int q = std::abs(t.q());
  auto brace = [](int n) { return tpoly(n) - tpoly(-n); };
  const LaurentPoly numerator = brace(p * q) * brace(1);
  const LaurentPoly denominator = brace(p) * brace(q);
  auto ratio = numerator.divide_exact(denominator);
  if (!ratio) {
    throw Error(ErrorKind::InternalConsistency, "torus Alexander quotient is not exact");
  }
  LaurentPoly in_t(Variable::T);
  for (const auto& [e, c] : ratio->terms()) {
    if (e % 2 != 0) {
      throw Error(ErrorKind::InternalConsistency, "odd power of t^(1/2) in torus Alexander polynomial");
    }
    in_t += tpoly(e / 2, c);
  }
  return symmetric_to_z(in_t);
}

}  // namespace cjmm
