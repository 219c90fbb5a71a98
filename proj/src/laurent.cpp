#include "cjmm/laurent.hpp"

#include <sstream>
#include <vector>

#include "cjmm/error.hpp"

namespace cjmm {

std::string_view to_string(Variable v) {
  switch (v) {
    case Variable::Q: return "q";
    case Variable::T: return "t";
    case Variable::U: return "u";
  }
  return "?";
}

LaurentPoly::LaurentPoly(Variable var, Terms terms) : var_(var) {
  for (auto& [e, c] : terms) {
    if (c != 0) {
      terms_.emplace(e, std::move(c));
    }
  }
}

LaurentPoly LaurentPoly::constant(Variable var, const Integer& c) { return monomial(var, 0, c); }

LaurentPoly LaurentPoly::monomial(Variable var, int exponent, const Integer& c) {
  LaurentPoly p(var);
  if (c != 0) {
    p.terms_.emplace(exponent, c);
  }
  return p;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::require_same_variable(const LaurentPoly& other) const {
  if (var_ != other.var_) {
    throw Error(ErrorKind::InvalidArgument, "mixing Laurent polynomials in different variables");
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_variable(other);
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) {
    c = -c;
  }
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same_variable(b);
  LaurentPoly r(a.var_);
  if (a.is_zero() || b.is_zero()) {
    return r;
  }
  const int lo = a.min_exponent() + b.min_exponent();
  std::vector<Integer> acc(a.max_exponent() + b.max_exponent() - lo + 1);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      acc[ea + eb - lo] += ca * cb;
    }
  }
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != 0) {
      r.terms_.emplace_hint(r.terms_.end(), lo + static_cast<int>(i), std::move(acc[i]));
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) {
    v *= c;
  }
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r = constant(var_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) {
      r *= base;
    }
    k >>= 1U;
    if (k > 0) {
      base *= base;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) {
    throw Error(ErrorKind::InvalidArgument, "substitute_power by zero");
  }
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) {
    r.terms_.emplace(e * k, c);
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) {
    r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
  }
  return r;
}

LaurentPoly LaurentPoly::with_variable(Variable v) const {
  LaurentPoly r = *this;
  r.var_ = v;
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  require_same_variable(divisor);
  if (divisor.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "division by zero Laurent polynomial");
  }
  LaurentPoly quotient(var_);
  LaurentPoly rem = *this;
  const int dmax = divisor.max_exponent();
  const int dmin = divisor.min_exponent();
  const Integer& lead = divisor.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    // The quotient's lowest term is pinned by the remainder's lowest term.
    if (rem.max_exponent() - dmax < rem.min_exponent() - dmin) {
      return std::nullopt;
    }
    const Integer& top = rem.terms_.rbegin()->second;
    if (top % lead != 0) {
      return std::nullopt;
    }
    LaurentPoly step = monomial(var_, rem.max_exponent() - dmax, top / lead);
    quotient += step;
    rem -= step * divisor;
  }
  return quotient;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || e == 0) {
      out << mag.get_str();
      if (e != 0) {
        out << "*";
      }
    }
    if (e != 0) {
      out << cjmm::to_string(var_);
      if (e != 1) {
        out << "^" << e;
      }
    }
    first = false;
  }
  return out.str();
}

}  // namespace cjmm
