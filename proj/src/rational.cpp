#include "cjmm/rational.hpp"

#include <cctype>

#include "cjmm/error.hpp"

namespace cjmm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CompositionUndefined: return "composition-undefined";
    case ErrorKind::InvalidRationalFunction: return "invalid-rational-function";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NotAKnot: return "not-a-knot";
    case ErrorKind::PresentationInconsistency: return "presentation-inconsistency";
    case ErrorKind::InvalidTorusParameters: return "invalid-torus-parameters";
    case ErrorKind::SchemaViolation: return "schema-violation";
    case ErrorKind::ValidationGate: return "validation-gate";
    case ErrorKind::ConventionViolation: return "convention-violation";
    case ErrorKind::ModelViolation: return "model-violation";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::DenominatorPowerViolation: return "denominator-power-violation";
    case ErrorKind::IntegralityViolation: return "integrality-violation";
    case ErrorKind::UnknownKnot: return "unknown-knot";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
  }
  return "error";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorKind::InvalidArgument, "zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) {
    return r.get_num().get_str(10);
  }
  return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    s.remove_prefix(1);
  }
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_decimal_integer(s)) {
    throw Error(ErrorKind::InvalidArgument, "not an exact integer: '" + std::string(s) + "'");
  }
  if (s.front() == '+') {
    s.remove_prefix(1);
  }
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational binomial(const Rational& c, int k) {
  if (k < 0) {
    return 0;
  }
  Rational r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (c - i);
    r /= (i + 1);
  }
  return r;
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) {
    r *= i;
  }
  return r;
}

}  // namespace cjmm
