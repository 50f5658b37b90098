#pragma once

// Local Euler factors at one prime, as truncated power series in X = p^{-s}.
//
// lhs: sum_a lambda_sym^j(p^a)^l X^a.
// rhs: the product of zeta and symmetric-power local factors raised to the
//      first-difference multiplicities, (1 - X)^{-d_half} prod_m L_p(sym^{lj-2m})^{d_m}.
// correction = lhs / rhs, which starts 1 + 0 X + O(X^2).
//
// Float mode works at a concrete t = lambda(p); exact mode keeps every
// coefficient as an integer polynomial in t.

#include <symmoment/bigint.hpp>
#include <symmoment/polynomial.hpp>

#include <string>
#include <vector>

namespace symmoment {

inline constexpr int kDefaultEulerOrder = 6;

struct LocalFactorSeries {
  int order = 0;                ///< coefficients for X^0..X^order
  std::vector<double> coeffs;
  std::string label;
};

struct ExactLocalSeries {
  int order = 0;
  std::vector<IntPolynomial> coeffs;
  std::string label;

  /// Specializes every coefficient at t.
  LocalFactorSeries evaluate(double t) const;
};

LocalFactorSeries lhs_local(int l, int j, double t, int order = kDefaultEulerOrder);
LocalFactorSeries rhs_local(int l, int j, double t, int order = kDefaultEulerOrder);
LocalFactorSeries correction_series(int l, int j, double t, int order = kDefaultEulerOrder);

ExactLocalSeries lhs_local_exact(int l, int j, int order = kDefaultEulerOrder);
ExactLocalSeries rhs_local_exact(int l, int j, int order = kDefaultEulerOrder);
ExactLocalSeries correction_series_exact(int l, int j, int order = kDefaultEulerOrder);

/// Number of inverse linear factors sum_m d_m (lj - 2m + 1); checked against (j+1)^l.
BigInt degree(int l, int j);

/// 1 / prod_i (1 - a^{r-2i} X) expanded exactly, i.e. lambda_sym^r(p^a) in Z[t] for a = 0..order.
std::vector<IntPolynomial> sym_local_factor_exact(int r, int order);

}  // namespace symmoment
