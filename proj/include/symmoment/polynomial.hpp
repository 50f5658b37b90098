#pragma once

// Dense integer polynomials in t = lambda_f(p), the basis S_r(t) with
// S_r(2 cos x) = sin((r + 1) x) / sin x, and the exact certificate that
// S_j(t)^l expands in that basis with the first-difference coefficients.

#include <symmoment/bigint.hpp>
#include <symmoment/combinatorics.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace symmoment {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  /// c * t^k
  static IntPolynomial monomial(const BigInt& c, int k);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int k) const;
  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

  /// +1 if only even powers appear, -1 if only odd powers, 0 otherwise (zero: +1).
  int parity() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& base, unsigned exp);

/// S_0 = 1, S_1 = t, S_r = t S_{r-1} - S_{r-2}.
IntPolynomial sym_prime_poly(int r);

/// All of S_0..S_max in one pass.
std::vector<IntPolynomial> sym_prime_polys(int max_r);

/// V_e(t) = a^e + a^{-e} where t = a + 1/a: V_0 = 2, V_1 = t, V_e = t V_{e-1} - V_{e-2}.
IntPolynomial conjugate_pair_poly(int e);

/// Horner evaluation in double precision.
double poly_eval(const IntPolynomial& p, double t);
/// Exact evaluation at a rational point.
BigRational poly_eval(const IntPolynomial& p, const BigRational& t);

struct DecompositionCertificate {
  int l = 0;
  int j = 0;
  bool holds = false;
  IntPolynomial lhs;  ///< S_j(t)^l
  IntPolynomial rhs;  ///< sum_m d_m S_{lj-2m}(t)  (e_m for odd lj)
  CoeffVector weights;
};

DecompositionCertificate verify_decomposition(int l, int j, int cap = kDefaultProductCap);

}  // namespace symmoment
