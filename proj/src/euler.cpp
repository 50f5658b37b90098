#include <symmoment/combinatorics.hpp>
#include <symmoment/error.hpp>
#include <symmoment/euler.hpp>
#include <symmoment/hecke.hpp>

#include <cmath>

namespace symmoment {
namespace {

void check_order(int order) {
  if (order < 2) throw DomainError("series order must be at least 2");
}

std::string pair_label(const char* what, int l, int j) {
  return std::string(what) + "(l=" + std::to_string(l) + ",j=" + std::to_string(j) + ")";
}

template <class T>
std::vector<T> series_mul(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a.size(), T{});
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; i + k < out.size(); ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

std::vector<IntPolynomial> exact_mul(const std::vector<IntPolynomial>& a, const std::vector<IntPolynomial>& b) {
  std::vector<IntPolynomial> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t k = 0; i + k < out.size(); ++k) out[i + k] += poly_mul(a[i], b[k]);
  }
  return out;
}

/// Inverse of a series with constant term 1 (exact over Z[t]).
std::vector<IntPolynomial> exact_inverse(const std::vector<IntPolynomial>& a) {
  if (a.empty() || !(a[0] == IntPolynomial::constant(1))) {
    throw ConsistencyError("exact_inverse: constant term must be 1");
  }
  std::vector<IntPolynomial> inv(a.size());
  inv[0] = IntPolynomial::constant(1);
  for (std::size_t n = 1; n < a.size(); ++n) {
    IntPolynomial acc;
    for (std::size_t k = 1; k <= n; ++k) acc -= a[k] * inv[n - k];
    inv[n] = std::move(acc);
  }
  return inv;
}

std::vector<double> float_divide(const std::vector<double>& num, const std::vector<double>& den) {
  std::vector<double> q(num.size(), 0.0);
  for (std::size_t n = 0; n < num.size(); ++n) {
    double acc = num[n];
    for (std::size_t k = 1; k <= n && k < den.size(); ++k) acc -= den[k] * q[n - k];
    q[n] = acc / den[0];
  }
  return q;
}

/// prod_i (1 - a^{r-2i} X) as a polynomial in X with Z[t] coefficients, truncated to order.
std::vector<IntPolynomial> sym_denominator_exact(int r, int order) {
  std::vector<IntPolynomial> den(order + 1);
  den[0] = IntPolynomial::constant(1);
  // Conjugate roots pair up: (1 - a^e X)(1 - a^{-e} X) = 1 - V_e(t) X + X^2.
  for (int e = r; e > 0; e -= 2) {
    std::vector<IntPolynomial> factor(order + 1);
    factor[0] = IntPolynomial::constant(1);
    factor[1] = conjugate_pair_poly(e) * BigInt(-1);
    if (order >= 2) factor[2] = IntPolynomial::constant(1);
    den = exact_mul(den, factor);
  }
  if (r % 2 == 0) {
    std::vector<IntPolynomial> factor(order + 1);
    factor[0] = IntPolynomial::constant(1);
    factor[1] = IntPolynomial::constant(-1);
    den = exact_mul(den, factor);
  }
  return den;
}

/// g^alpha for a series with g[0] = 1, from n f_n = sum_k ((alpha + 1) k - n) g_k f_{n-k}.
std::vector<double> real_power(const std::vector<double>& g, double alpha, int order) {
  std::vector<double> f(order + 1, 0.0);
  f[0] = 1.0;
  for (int n = 1; n <= order; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= n && k < static_cast<int>(g.size()); ++k) acc += ((alpha + 1.0) * k - n) * g[k] * f[n - k];
    f[n] = acc / n;
  }
  return f;
}

}  // namespace

LocalFactorSeries ExactLocalSeries::evaluate(double t) const {
  LocalFactorSeries out;
  out.order = order;
  out.label = label;
  // Double Horner loses digits to cancellation among the large integer coefficients.
  const BigRational q(t);
  for (const auto& c : coeffs) out.coeffs.push_back(poly_eval(c, q).get_d());
  return out;
}

LocalFactorSeries lhs_local(int l, int j, double t, int order) {
  check_pair(l, j);
  check_order(order);
  const auto base = sym_prime_powers(j, order, t);
  LocalFactorSeries out;
  out.order = order;
  out.label = pair_label("lhs", l, j);
  for (double v : base) out.coeffs.push_back(std::pow(v, l));
  return out;
}

LocalFactorSeries rhs_local(int l, int j, double t, int order) {
  check_pair(l, j);
  check_order(order);
  const auto weights = decomposition_coeffs(l, j);
  const int lj = l * j;
  const double theta = satake_angle(t);
  std::vector<double> acc(order + 1, 0.0);
  acc[0] = 1.0;
  // Same pairing as the exact route: 1 - 2 cos(e theta) X + X^2 per conjugate pair, 1 - X for e = 0.
  for (std::size_t m = 0; m < weights.size(); ++m) {
    if (weights[m] == 0) continue;
    const double mult = weights[m].get_d();
    const int r = lj - 2 * static_cast<int>(m);
    for (int e = r; e > 0; e -= 2) {
      acc = series_mul(acc, real_power({1.0, -2.0 * std::cos(e * theta), 1.0}, -mult, order));
    }
    if (r % 2 == 0) acc = series_mul(acc, real_power({1.0, -1.0}, -mult, order));
  }
  LocalFactorSeries out;
  out.order = order;
  out.label = pair_label("rhs", l, j);
  out.coeffs = std::move(acc);
  return out;
}

LocalFactorSeries correction_series(int l, int j, double t, int order) {
  const auto lhs = lhs_local(l, j, t, order);
  const auto rhs = rhs_local(l, j, t, order);
  LocalFactorSeries out;
  out.order = order;
  out.label = pair_label("correction", l, j);
  out.coeffs = float_divide(lhs.coeffs, rhs.coeffs);
  return out;
}

std::vector<IntPolynomial> sym_local_factor_exact(int r, int order) {
  if (r < 0) throw DomainError("negative symmetric power");
  return exact_inverse(sym_denominator_exact(r, order));
}

ExactLocalSeries lhs_local_exact(int l, int j, int order) {
  check_pair(l, j);
  check_order(order);
  const auto base = sym_local_factor_exact(j, order);
  ExactLocalSeries out;
  out.order = order;
  out.label = pair_label("lhs", l, j);
  for (const auto& c : base) out.coeffs.push_back(pow(c, static_cast<unsigned>(l)));
  return out;
}

namespace {

/// prod over the decomposition of the local denominators, each to its multiplicity.
std::vector<IntPolynomial> rhs_denominator_exact(int l, int j, int order) {
  const auto weights = decomposition_coeffs(l, j);
  const int lj = l * j;
  std::vector<IntPolynomial> den(order + 1);
  den[0] = IntPolynomial::constant(1);
  for (std::size_t m = 0; m < weights.size(); ++m) {
    const unsigned long mult = weights[m].get_ui();
    if (mult == 0) continue;
    const auto factor = sym_denominator_exact(lj - 2 * static_cast<int>(m), order);
    for (unsigned long k = 0; k < mult; ++k) den = exact_mul(den, factor);
  }
  return den;
}

}  // namespace

ExactLocalSeries rhs_local_exact(int l, int j, int order) {
  check_pair(l, j);
  check_order(order);
  ExactLocalSeries out;
  out.order = order;
  out.label = pair_label("rhs", l, j);
  out.coeffs = exact_inverse(rhs_denominator_exact(l, j, order));
  return out;
}

ExactLocalSeries correction_series_exact(int l, int j, int order) {
  const auto lhs = lhs_local_exact(l, j, order);
  // lhs / rhs = lhs * (rhs denominator), an exact identity in Z[t][[X]].
  ExactLocalSeries out;
  out.order = order;
  out.label = pair_label("correction", l, j);
  out.coeffs = exact_mul(lhs.coeffs, rhs_denominator_exact(l, j, order));
  return out;
}

BigInt degree(int l, int j) {
  const auto weights = decomposition_coeffs(l, j);
  const int lj = l * j;
  BigInt total = 0;
  for (std::size_t m = 0; m < weights.size(); ++m) total += weights[m] * (lj - 2 * static_cast<long>(m) + 1);
  const BigInt expected = ipow(static_cast<unsigned long>(j) + 1, static_cast<unsigned long>(l));
  if (total != expected) {
    throw ConsistencyError("degree mismatch: sum d_m (lj-2m+1) = " + total.get_str() +
                           " but (j+1)^l = " + expected.get_str());
  }
  return total;
}

}  // namespace symmoment
