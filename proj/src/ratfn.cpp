#include "cjmm/ratfn.hpp"

#include "cjmm/error.hpp"

namespace cjmm {

RationalFn::RationalFn(QPoly numerator, QPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) {
    throw Error(ErrorKind::InvalidRationalFunction, "zero denominator");
  }
}

RationalFn ratfn_reduce(const RationalFn& f) {
  if (f.denominator().is_zero()) {
    throw Error(ErrorKind::InvalidRationalFunction, "zero denominator");
  }
  if (f.numerator().is_zero()) {
    return RationalFn(QPoly{}, QPoly::constant(1));
  }
  const QPoly g = gcd(f.numerator(), f.denominator());
  QPoly num = divmod(f.numerator(), g).first;
  QPoly den = divmod(f.denominator(), g).first;
  const Rational& c0 = den.coefficient(0) != 0 ? den.coefficients().front() : den.leading();
  const Rational scale = 1 / c0;
  return RationalFn(num * scale, den * scale);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) {
    return ratfn_reduce(RationalFn(a.num_ + b.num_, a.den_));
  }
  return ratfn_reduce(RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_));
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return a + Rational(-1) * b;
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return ratfn_reduce(RationalFn(a.num_ * b.num_, a.den_ * b.den_));
}

RationalFn operator*(const Rational& s, const RationalFn& f) {
  if (s == 0) {
    return RationalFn();
  }
  RationalFn r = f;
  r.num_ *= s;
  return r;
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) {
    throw Error(ErrorKind::InvalidRationalFunction, "division by the zero function");
  }
  return ratfn_reduce(RationalFn(a.num_ * b.den_, a.den_ * b.num_));
}

std::vector<Rational> RationalFn::series(int cap) const {
  const Rational d0 = den_.coefficient(0);
  if (d0 == 0) {
    throw Error(ErrorKind::InvalidRationalFunction, "denominator vanishes at z = 0");
  }
  std::vector<Rational> out(cap + 1);
  for (int k = 0; k <= cap; ++k) {
    Rational acc = num_.coefficient(k);
    for (int j = 1; j <= std::min(k, den_.degree()); ++j) {
      acc -= den_.coefficients()[j] * out[k - j];
    }
    out[k] = acc / d0;
  }
  return out;
}

std::string RationalFn::to_string() const {
  if (is_polynomial()) {
    return (num_ * Rational(1 / den_.leading())).to_string();
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFn ratfn_derivative(const RationalFn& f) {
  const QPoly& n = f.numerator();
  const QPoly& d = f.denominator();
  return ratfn_reduce(RationalFn(n.derivative() * d - n * d.derivative(), d * d));
}

}  // namespace cjmm
