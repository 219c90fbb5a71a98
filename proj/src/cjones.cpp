#include "cjmm/cjones.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "cjmm/error.hpp"
#include "state_sum.hpp"

namespace cjmm {

namespace {

LaurentPoly u_monomial(int e, const Integer& c = 1) { return LaurentPoly::monomial(Variable::U, e, c); }

LaurentPoly quantum_factorial_u(int n) {
  LaurentPoly r = u_monomial(0);
  for (int k = 1; k <= n; ++k) {
    r *= quantum_integer_u(k);
  }
  return r;
}

LaurentPoly quantum_binomial_u(int n, int k) {
  const auto q = quantum_factorial_u(n).divide_exact(quantum_factorial_u(k) * quantum_factorial_u(n - k));
  if (!q) {
    throw Error(ErrorKind::InternalConsistency, "quantum binomial is not a Laurent polynomial");
  }
  return *q;
}

// Common factor (s - s^-1)^n qbinom(top, n) prod_{k<n} [alpha - top + k].
LaurentPoly lowering_factor(int alpha, int top, int n) {
  LaurentPoly c = (u_monomial(2) - u_monomial(-2)).pow(static_cast<unsigned>(n));
  c *= quantum_binomial_u(top, n);
  for (int k = 0; k < n; ++k) {
    c *= quantum_integer_u(alpha - top + k);
  }
  return c;
}

LaurentPoly u_to_q(const LaurentPoly& p) {
  LaurentPoly::Terms terms;
  for (const auto& [e, c] : p.terms()) {
    if (e % 4 != 0) {
      throw Error(ErrorKind::ConventionViolation,
                  "colored Jones value carries a fractional power of q: " + p.to_string());
    }
    terms.emplace(e / 4, c);
  }
  return LaurentPoly(Variable::Q, std::move(terms));
}

}  // namespace

ColorDimension::ColorDimension(int alpha) : alpha_(alpha) {
  if (alpha < 1) {
    throw Error(ErrorKind::InvalidArgument, "color dimension must be >= 1, got " + std::to_string(alpha));
  }
}

LaurentPoly quantum_integer_u(int k) {
  LaurentPoly r(Variable::U);
  for (int t = 0; t < k; ++t) {
    r += u_monomial(2 * (k - 1 - 2 * t));
  }
  return r;
}

CrossingOperator::CrossingOperator(ColorDimension alpha, int sign) : alpha_(alpha), sign_(sign) {
  if (sign != 1 && sign != -1) {
    throw Error(ErrorKind::InvalidArgument, "crossing sign must be +1 or -1");
  }
  const int a = alpha_;
  auto lam = [a](int i) { return a - 1 - 2 * i; };
  table_.resize(static_cast<std::size_t>(a * a));
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      auto& out = table_[i * a + j];
      if (sign > 0) {
        for (int n = 0; n <= std::min(i, a - 1 - j); ++n) {
          LaurentPoly c = u_monomial(lam(i - n) * lam(j + n) + n * (n - 1));
          c *= lowering_factor(a, i, n);
          out.push_back({j + n, i - n, std::move(c)});
        }
      } else {
        for (int n = 0; n <= std::min(j, a - 1 - i); ++n) {
          LaurentPoly c = u_monomial(-lam(i) * lam(j) - n * (n - 1), n % 2 == 0 ? 1 : -1);
          c *= lowering_factor(a, j, n);
          out.push_back({j - n, i + n, std::move(c)});
        }
      }
    }
  }
}

CrossingOperator crossing_operator(ColorDimension alpha, int sign) { return CrossingOperator(alpha, sign); }

TensorVector::TensorVector(ColorDimension alpha, int strands) : alpha_(alpha), strands_(strands) {
  if (strands < 1) {
    throw Error(ErrorKind::InvalidArgument, "tensor vector needs at least one strand");
  }
}

TensorVector TensorVector::basis(ColorDimension alpha, Index index) {
  TensorVector v(alpha, static_cast<int>(index.size()));
  for (int i : index) {
    if (i < 0 || i >= alpha.value()) {
      throw Error(ErrorKind::InvalidArgument, "basis index out of range");
    }
  }
  v.amp_.emplace(std::move(index), u_monomial(0));
  return v;
}

LaurentPoly TensorVector::amplitude(const Index& index) const {
  auto it = amp_.find(index);
  return it == amp_.end() ? LaurentPoly(Variable::U) : it->second;
}

void TensorVector::add(const Index& index, const LaurentPoly& value) {
  if (static_cast<int>(index.size()) != strands_) {
    throw Error(ErrorKind::InvalidArgument, "multi-index has the wrong length");
  }
  auto& slot = amp_.try_emplace(index, Variable::U).first->second;
  slot += value;
  if (slot.is_zero()) {
    amp_.erase(index);
  }
}

TensorVector TensorVector::apply(const CrossingOperator& op, int pos) const {
  if (op.alpha() != alpha_ || pos < 0 || pos + 1 >= strands_) {
    throw Error(ErrorKind::InvalidArgument, "crossing does not fit this tensor vector");
  }
  TensorVector out(ColorDimension(alpha_), strands_);
  for (const auto& [index, amp] : amp_) {
    for (const auto& e : op.image(index[pos], index[pos + 1])) {
      Index next = index;
      next[pos] = e.left;
      next[pos + 1] = e.right;
      out.add(next, amp * e.coefficient);
    }
  }
  return out;
}

LaurentPoly colored_jones(const BraidWord& b, ColorDimension alpha) {
  require_knot(b);
  return u_to_q(detail::open_strand_invariant_u(b, alpha));
}

LaurentPoly colored_jones_full_trace(const BraidWord& b, ColorDimension alpha) {
  require_knot(b);
  const int a = alpha.value();
  const int n = b.strands();
  const CrossingOperator pos(alpha, +1);
  const CrossingOperator neg(alpha, -1);
  LaurentPoly trace(Variable::U);
  TensorVector::Index index(static_cast<std::size_t>(n), 0);
  while (true) {
    TensorVector v = TensorVector::basis(alpha, index);
    for (int letter : b.letters()) {
      v = v.apply(letter > 0 ? pos : neg, std::abs(letter) - 1);
    }
    int weight = 0;
    for (int i : index) {
      weight += 2 * (a - 1 - 2 * i);
    }
    trace += v.amplitude(index).shifted(weight);
    int k = 0;
    while (k < n && ++index[k] == a) {
      index[k++] = 0;
    }
    if (k == n) {
      break;
    }
  }
  const LaurentPoly framed = trace.shifted(-writhe(b) * (a * a - 1));
  const auto v = framed.divide_exact(quantum_integer_u(a));
  if (!v) {
    throw Error(ErrorKind::ConventionViolation,
                "quantum trace is not divisible by the unknot value: " + framed.to_string());
  }
  return u_to_q(*v);
}

TruncSeries jones_h_expansion(const BraidWord& b, ColorDimension alpha, int cap) {
  require_knot(b);
  if (cap < 0) {
    throw Error(ErrorKind::InvalidArgument, "series cap must be >= 0");
  }
  return detail::open_strand_invariant_h(b, alpha, cap);
}

}  // namespace cjmm
