#pragma once

// Error-term exponents for sum_{n<=x} lambda_sym^j(n)^l.
//
// theta(l, j) has three branches: lj = 4 (a fixed constant), even lj >= 6
// (balancing the shifted-contour bound x^{1-1/j^3} T^A against x/T), and odd
// lj >= 5. theta_star is the refinement obtained by pushing the contour
// closer to 1, evaluated at its delta -> 0 limit.

#include <symmoment/bigint.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace symmoment {

/// 8 sqrt(15) / 63, the exponent constant of the zeta bound |t|^{K (1-sigma)^{3/2}}.
double zeta_bound_constant();

enum class Parity { Even4, EvenBig, Odd };

const char* parity_name(Parity p);
Parity parity_of(int l, int j);

struct ProofExponents {
  double A = 0.0;      ///< T-exponent of the vertical-line bound
  double B = 0.0;      ///< T-exponent of the horizontal segments
  double T_exp = 0.0;  ///< T = x^{T_exp}
};

struct Fraction {
  long num = 0;
  long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

struct ExponentReport {
  int l = 0;
  int j = 0;
  Parity parity = Parity::Even4;
  BigInt D;
  BigInt d_half;             ///< d_{lj/2} (even) or e_{(lj-1)/2} (odd)
  BigInt d_half_minus_1;     ///< d_{lj/2-1}; zero for odd lj
  std::optional<ProofExponents> proof;  ///< even lj >= 6 only
  double theta = 0.0;
  std::optional<double> theta_star;
  std::optional<Fraction> previous;
  bool improved = false;           ///< theta < previous (false when there is no previous value)
  bool extrapolated = false;       ///< lj = 4 but (l, j) != (2, 2)
  bool contour_degenerate = false; ///< j = 1: the line Re(s) = 1 - 1/j^3 leaves the strip
  bool has_reference_value = false;
};

double theta(int l, int j);
double theta_star(int l, int j);
ProofExponents proof_exponents(int l, int j);

/// The earlier exponent for the pairs (j = 2, l = 2..8) and (l = 2, j = 2..8).
std::optional<Fraction> previous_exponent(int l, int j);

ExponentReport exponent_report(int l, int j);

/// Rows (j = 2, l = 2..8) followed by (l = 2, j = 2..8). Throws ConsistencyError
/// unless every row improves on the previous exponent and theta_star <= theta.
std::vector<ExponentReport> reference_table();

// Serialization: fields l, j, parity, D, theta, theta_star, previous, improved.
std::string reports_to_json(const std::vector<ExponentReport>& rows);
std::string reports_to_csv(const std::vector<ExponentReport>& rows);
std::string reports_to_text(const std::vector<ExponentReport>& rows);

/// Fixed 17-significant-digit rendering used by every serializer.
std::string format_real(double v);

}  // namespace symmoment
