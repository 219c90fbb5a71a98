#include "cjmm/qpoly.hpp"

#include <sstream>

#include "cjmm/error.hpp"

namespace cjmm {

QPoly::QPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) {
    c_.pop_back();
  }
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(int power, const Rational& c) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::from_even(const std::vector<Rational>& even_coefficients) {
  std::vector<Rational> v(even_coefficients.empty() ? 0 : 2 * even_coefficients.size() - 1);
  for (std::size_t k = 0; k < even_coefficients.size(); ++k) {
    v[2 * k] = even_coefficients[k];
  }
  return QPoly(std::move(v));
}

Rational QPoly::coefficient(int power) const {
  if (power < 0 || power > degree()) {
    return 0;
  }
  return c_[power];
}

bool QPoly::is_even() const {
  for (std::size_t i = 1; i < c_.size(); i += 2) {
    if (c_[i] != 0) {
      return false;
    }
  }
  return true;
}

bool QPoly::is_odd() const {
  for (std::size_t i = 0; i < c_.size(); i += 2) {
    if (c_[i] != 0) {
      return false;
    }
  }
  return true;
}

bool QPoly::has_integer_coefficients() const {
  for (const auto& x : c_) {
    if (!is_integer(x)) {
      return false;
    }
  }
  return true;
}

std::vector<Rational> QPoly::even_part() const {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < c_.size(); i += 2) {
    v.push_back(c_[i]);
  }
  return v;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) {
    c_.resize(o.c_.size());
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] += o.c_[i];
  }
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) {
    c_.resize(o.c_.size());
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] -= o.c_[i];
  }
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) {
    x *= s;
  }
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) {
    x = -x;
  }
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return QPoly(std::move(v));
}

QPoly QPoly::pow(unsigned k) const {
  QPoly r = constant(1);
  QPoly base = *this;
  while (k > 0) {
    if (k & 1U) {
      r = r * base;
    }
    k >>= 1U;
    if (k > 0) {
      base = base * base;
    }
  }
  return r;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) {
    return {};
  }
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v[i - 1] = c_[i] * static_cast<long>(i);
  }
  return QPoly(std::move(v));
}

QPoly QPoly::shifted(int k) const {
  if (is_zero()) {
    return {};
  }
  std::vector<Rational> v(c_.size() + k);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    v[i + k] = c_[i];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
  if (is_zero()) {
    return {};
  }
  return *this * Rational(1 / leading());
}

Rational QPoly::evaluate(const Rational& z) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * z + *it;
  }
  return r;
}

std::string QPoly::to_string(const char* var) const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) {
      continue;
    }
    Rational mag = abs(c_[i]);
    out << (c_[i] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || i == 0) {
      out << cjmm::to_string(mag);
    }
    if (i > 0) {
      out << var;
      if (i > 1) {
        out << "^" << i;
      }
    }
    first = false;
  }
  return out.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  }
  if (a.degree() < b.degree()) {
    return {QPoly{}, a};
  }
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quo(a.degree() - b.degree() + 1);
  const auto& bc = b.coefficients();
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational f = rem[k + b.degree()] * inv_lead;
    if (f == 0) {
      continue;
    }
    quo[k] = f;
    for (int j = 0; j <= b.degree(); ++j) {
      rem[k + j] -= f * bc[j];
    }
  }
  rem.resize(b.degree());
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a.monic();
  QPoly y = b.monic();
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x;
}

}  // namespace cjmm
