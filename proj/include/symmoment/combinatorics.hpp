#pragma once

// Bounded-composition coefficients c_m(l, j): the number of ways to write m as
// an ordered sum of l integers in [0, j], i.e. the coefficients of
// (1 + x + ... + x^j)^l, together with their first differences d_m / e_m.

#include <symmoment/bigint.hpp>

#include <vector>

namespace symmoment {

inline constexpr int kDefaultProductCap = 64;

enum class CoeffKind { C, D, E };

const char* kind_name(CoeffKind kind);

struct CoeffVector {
  int l = 0;
  int j = 0;
  CoeffKind kind = CoeffKind::C;
  std::vector<BigInt> values;

  int product() const { return l * j; }
  bool even() const { return product() % 2 == 0; }
  std::size_t size() const { return values.size(); }
  const BigInt& operator[](std::size_t m) const { return values[m]; }
};

struct StructureReport {
  bool palindromic = false;
  bool unimodal = false;
  BigInt total;
};

/// Validates 1 <= l, 1 <= j and l*j <= cap. Throws DomainError / CapacityError.
void check_pair(int l, int j, int cap = kDefaultProductCap);

/// l-1 successive convolutions with (1 + x + ... + x^j).
CoeffVector coeffs_bruteforce(int l, int j, int cap = kDefaultProductCap);

/// Inclusion-exclusion sum of binomials.
CoeffVector coeffs_closed_form(int l, int j, int cap = kDefaultProductCap);

/// First differences c_m - c_{m-1} over 0..floor(lj/2); kind D for even lj, E for odd.
CoeffVector diff_coeffs(const CoeffVector& c);

/// The binomial form of the differences with lower index l-2. Only defined for l >= 2.
CoeffVector diff_coeffs_closed_form(int l, int j, int cap = kDefaultProductCap);

StructureReport structure_report(const CoeffVector& c);

/// Shorthand for diff_coeffs(coeffs_closed_form(l, j)).
CoeffVector decomposition_coeffs(int l, int j, int cap = kDefaultProductCap);

}  // namespace symmoment
