#pragma once

#include <map>
#include <vector>

#include "cjmm/braid.hpp"
#include "cjmm/laurent.hpp"
#include "cjmm/series.hpp"

namespace cjmm {

/// Dimension of the coloring representation.
class ColorDimension {
 public:
  /// Throws InvalidArgument unless alpha >= 1.
  explicit ColorDimension(int alpha);
  int value() const { return alpha_; }
  operator int() const { return alpha_; }

 private:
  int alpha_;
};

/// Braiding operator on V (x) V for the alpha-dimensional representation of
/// U_s(sl2), entries in the root variable u (q = u^4, s = u^2).
///
/// Basis v_0..v_{alpha-1} has weight alpha-1-2i. The positive operator sends
/// v_i (x) v_j to a combination of v_{j+k} (x) v_{i-k}; the negative one is its
/// inverse.
class CrossingOperator {
 public:
  struct Entry {
    int left;
    int right;
    LaurentPoly coefficient;
  };

  CrossingOperator(ColorDimension alpha, int sign);

  int alpha() const { return alpha_; }
  int sign() const { return sign_; }
  /// Image of v_i (x) v_j.
  const std::vector<Entry>& image(int i, int j) const { return table_[i * alpha_ + j]; }

 private:
  int alpha_;
  int sign_;
  std::vector<std::vector<Entry>> table_;
};

CrossingOperator crossing_operator(ColorDimension alpha, int sign);

/// Sparse vector in the strands-fold tensor power of V.
class TensorVector {
 public:
  using Index = std::vector<int>;

  TensorVector(ColorDimension alpha, int strands);
  static TensorVector basis(ColorDimension alpha, Index index);

  int alpha() const { return alpha_; }
  int strands() const { return strands_; }
  const std::map<Index, LaurentPoly>& amplitudes() const { return amp_; }
  LaurentPoly amplitude(const Index& index) const;
  void add(const Index& index, const LaurentPoly& value);

  /// Applies op to the slots (pos, pos+1), pos 0-based.
  TensorVector apply(const CrossingOperator& op, int pos) const;

  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.alpha_ == b.alpha_ && a.strands_ == b.strands_ && a.amp_ == b.amp_;
  }

 private:
  int alpha_;
  int strands_;
  std::map<Index, LaurentPoly> amp_;
};

/// Quantum integer [k] in s = u^2, as a polynomial in u.
LaurentPoly quantum_integer_u(int k);

/// Normalized colored Jones polynomial V_alpha in q (unknot = 1).
/// Uses the reduced state sum (strand elimination, open first strand).
LaurentPoly colored_jones(const BraidWord& b, ColorDimension alpha);

/// Same invariant from the plain definition: full quantum trace over every
/// basis state, framing correction, division by [alpha].
LaurentPoly colored_jones_full_trace(const BraidWord& b, ColorDimension alpha);

/// Expansion of V_alpha in h = q - 1 through h^cap, computed directly in
/// truncated h-series arithmetic.
TruncSeries jones_h_expansion(const BraidWord& b, ColorDimension alpha, int cap);

}  // namespace cjmm
