#include "cjmm/series.hpp"

#include <algorithm>
#include <sstream>

#include "cjmm/error.hpp"

namespace cjmm {

std::string_view to_string(SeriesVar v) {
  switch (v) {
    case SeriesVar::H: return "h";
    case SeriesVar::HTilde: return "ht";
    case SeriesVar::Z: return "z";
  }
  return "?";
}

TruncSeries::TruncSeries(SeriesVar var, int cap) : var_(var), cap_(cap), c_(cap + 1) {
  if (cap < 0) {
    throw Error(ErrorKind::InvalidArgument, "negative series cap");
  }
}

TruncSeries::TruncSeries(SeriesVar var, int cap, std::vector<Rational> coefficients)
    : TruncSeries(var, cap) {
  if (coefficients.size() > c_.size()) {
    coefficients.resize(c_.size());
  }
  std::move(coefficients.begin(), coefficients.end(), c_.begin());
}

TruncSeries TruncSeries::constant(SeriesVar var, int cap, const Rational& c) {
  TruncSeries s(var, cap);
  s.c_[0] = c;
  return s;
}

TruncSeries TruncSeries::identity(SeriesVar var, int cap) {
  TruncSeries s(var, cap);
  if (cap >= 1) {
    s.c_[1] = 1;
  }
  return s;
}

const Rational& TruncSeries::operator[](int k) const {
  if (k < 0 || k > cap_) {
    throw Error(ErrorKind::OutOfRange, "series coefficient " + std::to_string(k) +
                                           " beyond cap " + std::to_string(cap_));
  }
  return c_[k];
}

Rational& TruncSeries::operator[](int k) {
  if (k < 0 || k > cap_) {
    throw Error(ErrorKind::OutOfRange, "series coefficient " + std::to_string(k) +
                                           " beyond cap " + std::to_string(cap_));
  }
  return c_[k];
}

TruncSeries TruncSeries::truncated(int cap) const {
  cap = std::min(cap, cap_);
  return TruncSeries(var_, cap, std::vector<Rational>(c_.begin(), c_.begin() + cap + 1));
}

void TruncSeries::require_compatible(const TruncSeries& o) const {
  if (var_ != o.var_) {
    throw Error(ErrorKind::InvalidArgument, "mixing series in different variables");
  }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  require_compatible(o);
  if (o.cap_ < cap_) {
    *this = truncated(o.cap_);
  }
  for (int k = 0; k <= cap_; ++k) {
    c_[k] += o.c_[k];
  }
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  require_compatible(o);
  if (o.cap_ < cap_) {
    *this = truncated(o.cap_);
  }
  for (int k = 0; k <= cap_; ++k) {
    c_[k] -= o.c_[k];
  }
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& s) {
  for (auto& x : c_) {
    x *= s;
  }
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.require_compatible(b);
  const int cap = std::min(a.cap_, b.cap_);
  TruncSeries r(a.var_, cap);
  for (int i = 0; i <= cap; ++i) {
    if (a.c_[i] == 0) {
      continue;
    }
    for (int j = 0; i + j <= cap; ++j) {
      if (b.c_[j] != 0) {
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
  }
  return r;
}

TruncSeries TruncSeries::pow(unsigned k) const {
  TruncSeries r = constant(var_, cap_, 1);
  for (unsigned i = 0; i < k; ++i) {
    r = r * *this;
  }
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (c_[0] == 0) {
    throw Error(ErrorKind::InvalidArgument, "inverse of a series with zero constant term");
  }
  TruncSeries r(var_, cap_);
  const Rational inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (int k = 1; k <= cap_; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) {
      acc += c_[j] * r.c_[k - j];
    }
    r.c_[k] = -acc * inv0;
  }
  return r;
}

std::string TruncSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= cap_; ++k) {
    if (c_[k] == 0) {
      continue;
    }
    const bool negative = c_[k] < 0;
    if (first) {
      out << (negative ? "-" : "");
    } else {
      out << (negative ? " - " : " + ");
    }
    out << cjmm::to_string(Rational(abs(c_[k])));
    if (k > 0) {
      out << "*" << cjmm::to_string(var_) << "^" << k;
    }
    first = false;
  }
  if (first) {
    out << "0";
  }
  out << " + O(" << cjmm::to_string(var_) << "^" << cap_ + 1 << ")";
  return out.str();
}

// ---------------------------------------------------------------------------

BiSeries::BiSeries(int z_cap, int h_cap) {
  if (z_cap < 0 || h_cap < 0) {
    throw Error(ErrorKind::InvalidArgument, "negative series cap");
  }
  c_ = RationalMatrix::Constant(z_cap + 1, h_cap + 1, Rational(0));
}

BiSeries BiSeries::constant(int z_cap, int h_cap, const Rational& c) {
  BiSeries s(z_cap, h_cap);
  s.c_(0, 0) = c;
  return s;
}

BiSeries BiSeries::outer(const TruncSeries& z_series, const TruncSeries& h_series) {
  BiSeries s(z_series.cap(), h_series.cap());
  for (int a = 0; a <= z_series.cap(); ++a) {
    if (z_series[a] == 0) {
      continue;
    }
    for (int b = 0; b <= h_series.cap(); ++b) {
      s.c_(a, b) = z_series[a] * h_series[b];
    }
  }
  return s;
}

const Rational& BiSeries::operator()(int z_power, int h_power) const {
  if (z_power < 0 || z_power > z_cap() || h_power < 0 || h_power > h_cap()) {
    throw Error(ErrorKind::OutOfRange, "double-series coefficient beyond caps");
  }
  return c_(z_power, h_power);
}

Rational& BiSeries::operator()(int z_power, int h_power) {
  if (z_power < 0 || z_power > z_cap() || h_power < 0 || h_power > h_cap()) {
    throw Error(ErrorKind::OutOfRange, "double-series coefficient beyond caps");
  }
  return c_(z_power, h_power);
}

BiSeries BiSeries::truncated(int z_cap_new, int h_cap_new) const {
  z_cap_new = std::min(z_cap_new, z_cap());
  h_cap_new = std::min(h_cap_new, h_cap());
  BiSeries s(z_cap_new, h_cap_new);
  s.c_ = c_.topLeftCorner(z_cap_new + 1, h_cap_new + 1);
  return s;
}

TruncSeries BiSeries::h_coefficient(int k) const {
  if (k < 0 || k > h_cap()) {
    throw Error(ErrorKind::OutOfRange, "h-power beyond cap");
  }
  TruncSeries s(SeriesVar::Z, z_cap());
  for (int a = 0; a <= z_cap(); ++a) {
    s[a] = c_(a, k);
  }
  return s;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  if (o.z_cap() < z_cap() || o.h_cap() < h_cap()) {
    *this = truncated(o.z_cap(), o.h_cap());
  }
  for (int a = 0; a <= z_cap(); ++a) {
    for (int b = 0; b <= h_cap(); ++b) {
      c_(a, b) += o.c_(a, b);
    }
  }
  return *this;
}

BiSeries& BiSeries::operator*=(const Rational& s) {
  for (Eigen::Index i = 0; i < c_.size(); ++i) {
    c_.data()[i] *= s;
  }
  return *this;
}

BiSeries operator*(const BiSeries& x, const BiSeries& y) {
  const int zc = std::min(x.z_cap(), y.z_cap());
  const int hc = std::min(x.h_cap(), y.h_cap());
  BiSeries r(zc, hc);
  for (int a1 = 0; a1 <= zc; ++a1) {
    for (int b1 = 0; b1 <= hc; ++b1) {
      const Rational& u = x.c_(a1, b1);
      if (u == 0) {
        continue;
      }
      for (int a2 = 0; a1 + a2 <= zc; ++a2) {
        for (int b2 = 0; b1 + b2 <= hc; ++b2) {
          const Rational& v = y.c_(a2, b2);
          if (v != 0) {
            r.c_(a1 + a2, b1 + b2) += u * v;
          }
        }
      }
    }
  }
  return r;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
  if (a.z_cap() != b.z_cap() || a.h_cap() != b.h_cap()) {
    return false;
  }
  for (Eigen::Index i = 0; i < a.c_.size(); ++i) {
    if (a.c_.data()[i] != b.c_.data()[i]) {
      return false;
    }
  }
  return true;
}

bool BiSeries::has_only_even_z_powers() const {
  for (int a = 1; a <= z_cap(); a += 2) {
    for (int b = 0; b <= h_cap(); ++b) {
      if (c_(a, b) != 0) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

TruncSeries series_log1p(int cap, SeriesVar var) {
  TruncSeries s(var, cap);
  for (int n = 1; n <= cap; ++n) {
    s[n] = make_rational(n % 2 == 1 ? 1 : -1, n);
  }
  return s;
}

TruncSeries series_expm1(int cap, SeriesVar var) {
  TruncSeries s(var, cap);
  for (int n = 1; n <= cap; ++n) {
    s[n] = make_rational(1, factorial(n));
  }
  return s;
}

TruncSeries series_pow1p(const Rational& c, int cap, SeriesVar var) {
  TruncSeries s(var, cap);
  Rational term = 1;
  for (int k = 0; k <= cap; ++k) {
    s[k] = term;
    term *= (c - k);
    term /= (k + 1);
  }
  return s;
}

TruncSeries series_two_arcsinh_half(int cap) {
  // d/dz [2 arcsinh(z/2)] = (1 + z^2/4)^(-1/2); integrate term by term.
  TruncSeries s(SeriesVar::Z, cap);
  const Rational minus_half = make_rational(-1, 2);
  Integer four_pow = 1;
  for (int k = 0; 2 * k + 1 <= cap; ++k) {
    s[2 * k + 1] = binomial(minus_half, k) / Rational(four_pow * (2 * k + 1));
    four_pow *= 4;
  }
  return s;
}

TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner) {
  if (inner.coefficients()[0] != 0) {
    throw Error(ErrorKind::CompositionUndefined, "inner series has a nonzero constant term");
  }
  const int cap = std::min(outer.cap(), inner.cap());
  const TruncSeries in = inner.truncated(cap);
  // Horner from the top coefficient.
  TruncSeries r = TruncSeries::constant(inner.variable(), cap, outer[cap]);
  for (int k = cap - 1; k >= 0; --k) {
    r = r * in;
    r[0] += outer[k];
  }
  return r;
}

BiSeries series_compose(const TruncSeries& outer, const BiSeries& inner) {
  if (inner(0, 0) != 0) {
    throw Error(ErrorKind::CompositionUndefined, "inner double series has a nonzero constant term");
  }
  int zc = std::min(inner.z_cap(), outer.cap());
  int hc = std::min(inner.h_cap(), outer.cap() - zc);
  const BiSeries in = inner.truncated(zc, hc);
  const int top = zc + hc;
  BiSeries r = BiSeries::constant(zc, hc, outer[top]);
  for (int k = top - 1; k >= 0; --k) {
    r = r * in;
    r(0, 0) += outer[k];
  }
  return r;
}

BiSeries series_compose_h(const BiSeries& f, const TruncSeries& inner) {
  if (inner.coefficients()[0] != 0) {
    throw Error(ErrorKind::CompositionUndefined, "inner series has a nonzero constant term");
  }
  const int hc = std::min(f.h_cap(), inner.cap());
  const TruncSeries in = inner.truncated(hc);
  BiSeries r(f.z_cap(), hc);
  TruncSeries power = TruncSeries::constant(inner.variable(), hc, 1);
  for (int b = 0; b <= hc; ++b) {
    for (int k = b; k <= hc; ++k) {
      const Rational& w = power[k];
      if (w == 0) {
        continue;
      }
      for (int a = 0; a <= f.z_cap(); ++a) {
        if (f(a, b) != 0) {
          r(a, k) += f(a, b) * w;
        }
      }
    }
    power = power * in;
  }
  return r;
}

TruncSeries laurent_to_hseries(const LaurentPoly& p, int cap) {
  if (p.variable() != Variable::Q) {
    throw Error(ErrorKind::InvalidArgument, "laurent_to_hseries expects a polynomial in q");
  }
  TruncSeries s(SeriesVar::H, cap);
  for (const auto& [e, c] : p.terms()) {
    // (1+h)^e has integer binomial coefficients for every integer e.
    Integer term = 1;
    for (int k = 0; k <= cap; ++k) {
      s[k] += Rational(c * term);
      term *= (e - k);
      term /= (k + 1);
    }
  }
  for (int k = 0; k <= cap; ++k) {
    if (!is_integer(s[k])) {
      throw Error(ErrorKind::InternalConsistency, "non-integer h-coefficient of an integer polynomial");
    }
  }
  return s;
}

TruncSeries h_in_terms_of_htilde(int cap) {
  // h = x^2/2 + x sqrt(1 + x^2/4) with x = h~.
  TruncSeries s(SeriesVar::HTilde, cap);
  if (cap >= 2) {
    s[2] = make_rational(1, 2);
  }
  const Rational half = make_rational(1, 2);
  Integer four_pow = 1;
  for (int k = 0; 2 * k + 1 <= cap; ++k) {
    s[2 * k + 1] += binomial(half, k) / Rational(four_pow);
    four_pow *= 4;
  }
  return s;
}

TruncSeries htilde_in_terms_of_h(int cap) {
  return series_pow1p(make_rational(1, 2), cap) - series_pow1p(make_rational(-1, 2), cap);
}

}  // namespace cjmm
