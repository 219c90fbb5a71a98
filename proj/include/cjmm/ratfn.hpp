#pragma once

#include <string>

#include "cjmm/qpoly.hpp"

namespace cjmm {

/// Ratio of two polynomials in z. Arithmetic results are always reduced.
class RationalFn {
 public:
  RationalFn() : num_(), den_(QPoly::constant(1)) {}
  RationalFn(QPoly numerator, QPoly denominator);
  explicit RationalFn(QPoly numerator) : num_(std::move(numerator)), den_(QPoly::constant(1)) {}

  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const Rational& s, const RationalFn& f);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  /// Structural equality; both sides are assumed reduced.
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Taylor coefficients at z = 0 up to z^cap. Requires denominator(0) != 0.
  std::vector<Rational> series(int cap) const;

  std::string to_string() const;

 private:
  QPoly num_;
  QPoly den_;
};

/// Removes the polynomial gcd and normalizes the denominator: constant term 1
/// when it is nonzero, otherwise monic. Throws InvalidRationalFunction on a
/// zero denominator.
RationalFn ratfn_reduce(const RationalFn& f);

/// Quotient-rule derivative, reduced.
RationalFn ratfn_derivative(const RationalFn& f);

}  // namespace cjmm
