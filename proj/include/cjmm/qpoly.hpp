#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cjmm/rational.hpp"

namespace cjmm {

/// Dense polynomial in z over Q; index = power of z. No trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coefficients);
  QPoly(std::initializer_list<Rational> coefficients)
      : QPoly(std::vector<Rational>(coefficients)) {}

  static QPoly constant(const Rational& c);
  static QPoly monomial(int power, const Rational& c = 1);
  /// Builds a0 + a1 z^2 + a2 z^4 + ... from coefficients of even powers.
  static QPoly from_even(const std::vector<Rational>& even_coefficients);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(int power) const;
  const Rational& leading() const { return c_.back(); }

  bool is_even() const;
  bool is_odd() const;
  bool has_integer_coefficients() const;
  /// Coefficients of z^0, z^2, ... (caller checks is_even()).
  std::vector<Rational> even_part() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& s);
  QPoly operator-() const;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
  friend QPoly operator*(const Rational& s, QPoly a) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  QPoly pow(unsigned k) const;
  QPoly derivative() const;
  /// Multiplies by z^k (k >= 0).
  QPoly shifted(int k) const;
  QPoly monic() const;
  Rational evaluate(const Rational& z) const;

  std::string to_string(const char* var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division over Q; throws InvalidArgument on a zero divisor.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

}  // namespace cjmm
