#include "cjmm/torus.hpp"

#include <string>

#include "cjmm/error.hpp"

namespace cjmm {

RationalFn apply_D(const RationalFn& f) {
  const RationalFn d1 = ratfn_derivative(f);
  const RationalFn d2 = ratfn_derivative(d1);
  const RationalFn z(QPoly::monomial(1));
  const RationalFn z2_plus_4(QPoly{4, 0, 1});
  return z * d1 + z2_plus_4 * d2;
}

std::vector<RationalFn> d_operator_iterates(const TorusParams& t, int m_max) {
  if (m_max < 0) {
    throw Error(ErrorKind::InvalidArgument, "m_max must be >= 0");
  }
  std::vector<RationalFn> g{RationalFn(QPoly::monomial(1), conway_torus(t))};
  for (int m = 1; m <= m_max; ++m) {
    g.push_back(apply_D(g.back()));
  }
  return g;
}

TorusPrefactor torus_prefactor(const TorusParams& t, int h_cap) {
  const int p = t.p();
  const int q = t.q();
  TorusPrefactor pf{(Rational(p * q) - make_rational(p, q) - make_rational(q, p)) / 4,
                    TruncSeries(SeriesVar::H, h_cap), TruncSeries(SeriesVar::H, h_cap)};
  pf.series = series_pow1p(pf.c, h_cap);
  pf.log_factor = series_log1p(h_cap) * make_rational(1, 4 * p * q);
  return pf;
}

std::vector<LineFunction> torus_lines(const TorusParams& t, int n_max, int h_cap) {
  if (n_max < 0 || h_cap < n_max) {
    throw Error(ErrorKind::InvalidArgument, "torus_lines needs 0 <= n_max <= h_cap");
  }
  const std::vector<RationalFn> g = d_operator_iterates(t, n_max);
  for (std::size_t m = 0; m < g.size(); ++m) {
    if (!g[m].numerator().is_odd() || !g[m].denominator().is_even()) {
      throw Error(ErrorKind::InternalConsistency, "D^" + std::to_string(m) + "(z/nabla) is not odd");
    }
  }
  const TorusPrefactor pf = torus_prefactor(t, h_cap);
  // weight(m)[n] = [h^n] (1+h)^c (log(1+h)/4pq)^m / m!
  std::vector<TruncSeries> weight;
  TruncSeries lp = TruncSeries::constant(SeriesVar::H, h_cap, 1);
  for (int m = 0; m <= n_max; ++m) {
    weight.push_back(pf.series * lp * (Rational(1) / Rational(factorial(m))));
    lp = lp * pf.log_factor;
  }
  std::vector<LineFunction> out;
  for (int n = 0; n <= n_max; ++n) {
    RationalFn sum;
    for (int m = 0; m <= n; ++m) {
      if (weight[m][n] != 0) {
        sum = sum + weight[m][n] * g[m];
      }
    }
    const QPoly& num = sum.numerator();
    if (num.coefficient(0) != 0 || sum.denominator().coefficient(0) == 0) {
      throw Error(ErrorKind::InternalConsistency,
                  "line " + std::to_string(n) + " numerator is not divisible by z");
    }
    std::vector<Rational> shifted(num.coefficients().begin() + (num.is_zero() ? 0 : 1), num.coefficients().end());
    out.push_back({n, ratfn_reduce(RationalFn(QPoly(shifted), sum.denominator())), std::nullopt});
  }
  return out;
}

QPoly certify_numerator(LineFunction& lf, const QPoly& conway) {
  const QPoly scaled = lf.value.numerator() * conway.pow(static_cast<unsigned>(2 * lf.n + 1));
  const auto [quot, rem] = divmod(scaled, lf.value.denominator());
  if (!rem.is_zero()) {
    throw Error(ErrorKind::DenominatorPowerViolation,
                "denominator of V^(" + std::to_string(lf.n) + ") does not divide nabla^" +
                    std::to_string(2 * lf.n + 1) + ": " + lf.value.to_string());
  }
  if (!quot.has_integer_coefficients()) {
    throw Error(ErrorKind::IntegralityViolation,
                "P^(" + std::to_string(lf.n) + ") has non-integer coefficients: " + quot.to_string());
  }
  if (!quot.is_even()) {
    throw Error(ErrorKind::IntegralityViolation, "P^(" + std::to_string(lf.n) + ") has an odd power: " + quot.to_string());
  }
  lf.certified_numerator = quot;
  return quot;
}

std::vector<Rational> torus_line_series(const TorusParams& t, int n, int z_cap) {
  if (n < 0 || z_cap < 0) {
    throw Error(ErrorKind::InvalidArgument, "torus_line_series needs n >= 0 and z_cap >= 0");
  }
  const auto lines = torus_lines(t, n, n);
  const std::vector<Rational> s = lines[n].value.series(z_cap);
  std::vector<Rational> out;
  for (int k = 0; k <= z_cap; k += 2) {
    out.push_back(s[k]);
  }
  return out;
}

}  // namespace cjmm
