#pragma once

#include <optional>
#include <vector>

#include "cjmm/conway.hpp"
#include "cjmm/ratfn.hpp"
#include "cjmm/series.hpp"

namespace cjmm {

/// z f' + (z^2 + 4) f''.
RationalFn apply_D(const RationalFn& f);

/// g_0 = z / nabla, g_m = D g_(m-1), for m <= m_max.
std::vector<RationalFn> d_operator_iterates(const TorusParams& t, int m_max);

/// (1+h)^c with c = (pq - p/q - q/p)/4, and log(1+h)/(4pq).
struct TorusPrefactor {
  Rational c;
  TruncSeries series;
  TruncSeries log_factor;
};

TorusPrefactor torus_prefactor(const TorusParams& t, int h_cap);

struct LineFunction {
  int n = 0;
  RationalFn value;
  std::optional<QPoly> certified_numerator;
};

/// Lines V^(n)(z), n <= n_max, of
///   (1/z) (1+h)^c sum_m (1/m!) (log(1+h)/(4pq))^m g_m(z).
/// Requires h_cap >= n_max.
std::vector<LineFunction> torus_lines(const TorusParams& t, int n_max, int h_cap);

/// nabla^(2n+1) V^(n), which must be an even polynomial with integer
/// coefficients. Stores the result in lf.
QPoly certify_numerator(LineFunction& lf, const QPoly& conway);

/// Taylor coefficients d^(n)_m of V^(n) for 2m <= z_cap.
std::vector<Rational> torus_line_series(const TorusParams& t, int n, int z_cap);

}  // namespace cjmm
