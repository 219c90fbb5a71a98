#pragma once

#include "cjmm/braid.hpp"
#include "cjmm/laurent.hpp"
#include "cjmm/linalg.hpp"
#include "cjmm/qpoly.hpp"

namespace cjmm {

/// Parameters of the (p,q) torus knot: |p|, |q| >= 2 and gcd(p,q) = 1.
class TorusParams {
 public:
  /// Throws InvalidTorusParameters when the invariants fail.
  TorusParams(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }

 private:
  int p_;
  int q_;
};

/// Reduced Burau matrix of a braid over Z[t, t^-1], size (strands-1).
Matrix<LaurentPoly> reduced_burau(const BraidWord& b);

/// Rewrites a t <-> t^-1 symmetric Laurent polynomial as a polynomial in z
/// using z^2 = t - 2 + t^-1. Throws PresentationInconsistency if the input
/// is not symmetric or the reduction leaves a remainder.
QPoly symmetric_to_z(const LaurentPoly& sym_in_t);

/// Conway-normalized Alexander polynomial from det(Burau - Id).
QPoly conway_poly(const BraidWord& b);

/// Torus-knot Alexander-Conway polynomial from the quantum-integer ratio
/// [pq][1]/([p][q]) in t^(1/2).
QPoly conway_torus(const TorusParams& t);

}  // namespace cjmm
