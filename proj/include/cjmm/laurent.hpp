#pragma once

#include <map>
#include <optional>
#include <string>

#include "cjmm/rational.hpp"

namespace cjmm {

/// Formal variable of a Laurent polynomial: the quantum parameter q, the
/// Alexander variable t, or the root u with q = u^4.
enum class Variable { Q, T, U };

std::string_view to_string(Variable v);

/// Finitely supported integer Laurent polynomial. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  explicit LaurentPoly(Variable var = Variable::Q) : var_(var) {}
  LaurentPoly(Variable var, Terms terms);

  static LaurentPoly constant(Variable var, const Integer& c);
  static LaurentPoly monomial(Variable var, int exponent, const Integer& c = 1);

  Variable variable() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Only valid on a nonzero polynomial.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }
  Integer coefficient(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Integer& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  LaurentPoly pow(unsigned k) const;
  /// Multiplies every exponent by the shift factor: x -> x^k, k != 0.
  LaurentPoly substitute_power(int k) const;
  /// x -> x^-1.
  LaurentPoly mirrored() const { return substitute_power(-1); }
  /// Multiplies by x^shift.
  LaurentPoly shifted(int shift) const;
  /// Relabels the variable after an explicit substitution (e.g. u^4 = q).
  LaurentPoly with_variable(Variable v) const;
  /// Exact quotient over Z, or nullopt if the division leaves a remainder.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;
  /// Invariant under x -> x^-1.
  bool is_symmetric() const { return *this == mirrored(); }

  std::string to_string() const;

 private:
  void require_same_variable(const LaurentPoly& other) const;

  Variable var_;
  Terms terms_;
};

}  // namespace cjmm

namespace Eigen {

template <>
struct NumTraits<cjmm::LaurentPoly> : GenericNumTraits<cjmm::LaurentPoly> {
  using Real = cjmm::LaurentPoly;
  using NonInteger = cjmm::LaurentPoly;
  using Literal = cjmm::LaurentPoly;
  using Nested = cjmm::LaurentPoly;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 200,
    MulCost = 1000
  };
};

}  // namespace Eigen
