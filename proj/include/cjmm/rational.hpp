#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <string_view>

namespace cjmm {

using Integer = mpz_class;
/// Exact rational; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// num/den in lowest terms. Throws InvalidArgument on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q" in decimal. Floats are rejected.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

/// Generalized binomial c(c-1)...(c-k+1)/k!.
Rational binomial(const Rational& c, int k);

Integer factorial(int n);

}  // namespace cjmm

namespace Eigen {

template <>
struct NumTraits<cjmm::Rational> : GenericNumTraits<cjmm::Rational> {
  using Real = cjmm::Rational;
  using NonInteger = cjmm::Rational;
  using Literal = cjmm::Rational;
  using Nested = cjmm::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
