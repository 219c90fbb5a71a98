#include "state_sum.hpp"

#include <cstdlib>

namespace cjmm::detail {

namespace {

void times_one_plus_h(std::vector<Integer>& c) {
  for (std::size_t i = c.size(); i-- > 1;) {
    c[i] += c[i - 1];
  }
}

bool all_zero(const std::vector<Integer>& c) {
  for (const auto& x : c) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

[[noreturn]] void mixed_residues() {
  throw Error(ErrorKind::ConventionViolation,
              "amplitude mixes u-exponents from different classes mod 4");
}

}  // namespace

HAmp HSeriesRing::one() const {
  HAmp a;
  a.r = 0;
  a.c.assign(static_cast<std::size_t>(cap_) + 1, 0);
  a.c[0] = 1;
  return a;
}

bool HSeriesRing::is_zero(const HAmp& a) const { return a.r < 0 || all_zero(a.c); }

HAmp HSeriesRing::from_u(const LaurentPoly& p) const {
  HAmp a;
  if (p.is_zero()) {
    return a;
  }
  a.c.assign(static_cast<std::size_t>(cap_) + 1, 0);
  Integer binom;
  for (const auto& [e, coeff] : p.terms()) {
    const int r = ((e % 4) + 4) % 4;
    if (a.r >= 0 && a.r != r) {
      mixed_residues();
    }
    a.r = r;
    const Integer k = (e - r) / 4;
    for (int j = 0; j <= cap_; ++j) {
      mpz_bin_ui(binom.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(j));
      a.c[j] += coeff * binom;
    }
  }
  return a;
}

HAmp HSeriesRing::prepare(HAmp a) const {
  if (a.r >= 0) {
    a.up = a.c;
    times_one_plus_h(a.up);
  }
  return a;
}

HAmp HSeriesRing::mul(const HAmp& a, const HAmp& b) const {
  HAmp out;
  if (a.r < 0 || b.r < 0) {
    return out;
  }
  out.r = 0;
  out.c.assign(static_cast<std::size_t>(cap_) + 1, 0);
  add_product(out, a, b);
  return out;
}

void HSeriesRing::add_to(HAmp& t, const HAmp& a) const {
  if (a.r < 0) {
    return;
  }
  if (t.r < 0) {
    t.r = a.r;
    t.c = a.c;
    return;
  }
  if (t.r != a.r) {
    if (!all_zero(t.c)) {
      mixed_residues();
    }
    t.r = a.r;
  }
  for (int i = 0; i <= cap_; ++i) {
    t.c[i] += a.c[i];
  }
}

void HSeriesRing::add_product(HAmp& t, const HAmp& a, const HAmp& b) const {
  if (a.r < 0 || b.r < 0) {
    return;
  }
  int r = a.r + b.r;
  std::vector<Integer> shifted;
  const std::vector<Integer>* bc = &b.c;
  if (r >= 4) {
    r -= 4;
    if (b.up.empty()) {
      shifted = b.c;
      times_one_plus_h(shifted);
      bc = &shifted;
    } else {
      bc = &b.up;
    }
  }
  if (t.r < 0) {
    t.r = r;
    t.c.assign(static_cast<std::size_t>(cap_) + 1, 0);
  } else if (t.r != r) {
    if (!all_zero(t.c)) {
      mixed_residues();
    }
    t.r = r;
  }
  for (int i = 0; i <= cap_; ++i) {
    if (a.c[i] == 0) {
      continue;
    }
    for (int j = 0; i + j <= cap_; ++j) {
      mpz_addmul(t.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), (*bc)[j].get_mpz_t());
    }
  }
}

namespace {

template <class Ring>
typename Ring::Amp braid_open_trace(const Ring& ring, const BraidWord& b, int alpha) {
  const CrossingOperator pos(ColorDimension(alpha), +1);
  const CrossingOperator neg(ColorDimension(alpha), -1);
  StateSum<Ring> sum(ring, alpha);
  using Op = typename StateSum<Ring>::Op;
  const Op pos_op = sum.from_crossing(pos, 0);
  const Op neg_op = sum.from_crossing(neg, 0);
  std::vector<Op> ops;
  ops.reserve(b.length());
  for (int letter : b.letters()) {
    Op op = letter > 0 ? pos_op : neg_op;
    op.pos = std::abs(letter) - 1;
    ops.push_back(std::move(op));
  }
  return sum.open_trace(std::move(ops), b.strands());
}

int framing_exponent(const BraidWord& b, int alpha) { return -writhe(b) * (alpha * alpha - 1); }

}  // namespace

LaurentPoly open_strand_invariant_u(const BraidWord& b, int alpha) {
  LaurentRing ring;
  const LaurentPoly c = braid_open_trace(ring, b, alpha);
  return c.shifted(framing_exponent(b, alpha));
}

TruncSeries open_strand_invariant_h(const BraidWord& b, int alpha, int cap) {
  HSeriesRing ring(cap);
  const HAmp c = braid_open_trace(ring, b, alpha);
  const HAmp v = ring.mul(c, ring.from_u(LaurentPoly::monomial(Variable::U, framing_exponent(b, alpha))));
  TruncSeries out(SeriesVar::H, cap);
  if (ring.is_zero(v)) {
    return out;
  }
  if (v.r != 0) {
    throw Error(ErrorKind::ConventionViolation,
                "colored Jones value carries a fractional power of q (u^" + std::to_string(v.r) +
                    " residue)");
  }
  for (int k = 0; k <= cap; ++k) {
    out[k] = Rational(v.c[k]);
  }
  return out;
}

}  // namespace cjmm::detail
