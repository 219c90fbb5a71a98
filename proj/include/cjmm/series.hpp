#pragma once

#include <string>
#include <vector>

#include "cjmm/laurent.hpp"
#include "cjmm/rational.hpp"

namespace cjmm {

enum class SeriesVar { H, HTilde, Z };

std::string_view to_string(SeriesVar v);

/// Power series known through x^cap. Coefficients past cap do not exist:
/// reading them is an OutOfRange error, and every binary operation keeps the
/// smaller of the two caps.
class TruncSeries {
 public:
  TruncSeries(SeriesVar var, int cap);
  TruncSeries(SeriesVar var, int cap, std::vector<Rational> coefficients);

  static TruncSeries constant(SeriesVar var, int cap, const Rational& c);
  /// The series x itself.
  static TruncSeries identity(SeriesVar var, int cap);

  SeriesVar variable() const { return var_; }
  int cap() const { return cap_; }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& operator[](int k) const;
  Rational& operator[](int k);

  TruncSeries truncated(int cap) const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& s);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }
  friend TruncSeries operator*(const Rational& s, TruncSeries a) { return a *= s; }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.var_ == b.var_ && a.cap_ == b.cap_ && a.c_ == b.c_;
  }

  TruncSeries pow(unsigned k) const;
  /// Multiplicative inverse; the constant term must be nonzero.
  TruncSeries inverse() const;

  std::string to_string() const;

 private:
  void require_compatible(const TruncSeries& o) const;

  SeriesVar var_;
  int cap_;
  std::vector<Rational> c_;
};

/// Double series sum c(a,b) z^a h^b with separate caps per variable.
/// Storage is an Eigen matrix: rows are z-powers, columns h-powers.
class BiSeries {
 public:
  BiSeries(int z_cap, int h_cap);

  static BiSeries constant(int z_cap, int h_cap, const Rational& c);
  /// f(z) g(h) as a double series; caps are taken from the factors.
  static BiSeries outer(const TruncSeries& z_series, const TruncSeries& h_series);

  int z_cap() const { return static_cast<int>(c_.rows()) - 1; }
  int h_cap() const { return static_cast<int>(c_.cols()) - 1; }
  const RationalMatrix& coefficients() const { return c_; }
  const Rational& operator()(int z_power, int h_power) const;
  Rational& operator()(int z_power, int h_power);

  BiSeries truncated(int z_cap, int h_cap) const;
  /// Coefficient of h^k as a series in z.
  TruncSeries h_coefficient(int k) const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator*=(const Rational& s);
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(BiSeries a, const Rational& s) { return a *= s; }
  friend bool operator==(const BiSeries& a, const BiSeries& b);

  bool has_only_even_z_powers() const;

 private:
  RationalMatrix c_;
};

/// log(1+h) truncated at h^cap.
TruncSeries series_log1p(int cap, SeriesVar var = SeriesVar::H);

/// exp(h) - 1 truncated at h^cap.
TruncSeries series_expm1(int cap, SeriesVar var = SeriesVar::H);

/// Binomial series (1+h)^c.
TruncSeries series_pow1p(const Rational& c, int cap, SeriesVar var = SeriesVar::H);

/// 2 arcsinh(z/2) = 2 log(sqrt(1 + z^2/4) + z/2), an odd series in z.
TruncSeries series_two_arcsinh_half(int cap);

/// outer(inner(x)). inner must have zero constant term; the result is known
/// through min(outer.cap, inner.cap).
TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner);

/// outer(inner(z,h)) for a double series with zero constant term. Caps of the
/// result are shrunk until every retained coefficient is determined by the
/// known part of outer (z_cap + h_cap <= outer.cap).
BiSeries series_compose(const TruncSeries& outer, const BiSeries& inner);

/// Substitutes h = inner(x) into sum_b f_b(z) h^b; the h-variable of the result
/// is inner's variable and is known through min(f.h_cap, inner.cap).
BiSeries series_compose_h(const BiSeries& f, const TruncSeries& inner);

/// Expansion of a Laurent polynomial in q about q = 1 in powers of h = q - 1.
TruncSeries laurent_to_hseries(const LaurentPoly& p, int cap);

/// h as a series in h~ = (1+h)^(1/2) - (1+h)^(-1/2).
TruncSeries h_in_terms_of_htilde(int cap);

/// h~ = (1+h)^(1/2) - (1+h)^(-1/2) as a series in h.
TruncSeries htilde_in_terms_of_h(int cap);

}  // namespace cjmm
