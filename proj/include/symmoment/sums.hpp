#pragma once

// Desk-scale partial sums S(x) = sum_{n<=x} lambda_sym^j(n)^l, a least-squares
// fit of the main term x Q(log x), and the log-log slope of what is left over.

#include <symmoment/hecke.hpp>

#include <optional>
#include <string>
#include <vector>

namespace symmoment {

inline constexpr double kCheckpointRatio = 1.25;
inline constexpr int kCheckpointCount = 24;

struct Checkpoint {
  std::size_t x = 0;
  double S = 0.0;
};

struct MainTermFit {
  int degree = 0;
  std::vector<double> coefficients;  ///< Q(y) = sum_k coefficients[k] y^k
  std::vector<double> residuals;     ///< S(x) - x Q(log x), one per checkpoint
  std::size_t window = 0;            ///< number of checkpoints used

  double main(double x) const;
};

struct ResidualExponent {
  double slope = 0.0;
  double standard_error = 0.0;
  std::size_t points = 0;
};

struct PartialSumSeries {
  int l = 0;
  int j = 0;
  int weight = 12;
  std::size_t N = 0;
  std::vector<Checkpoint> checkpoints;  ///< ascending in x
  std::optional<MainTermFit> fit;
  std::optional<ResidualExponent> residual;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Distinct values ceil(N r^{-i}), i = 0..count-1, ascending.
std::vector<std::size_t> checkpoint_grid(std::size_t N, double ratio = kCheckpointRatio,
                                         int count = kCheckpointCount);

/// lambda_sym^j(n)^l for 0 <= n <= N (index 0 is 0). Elementwise powers run under OpenMP.
std::vector<double> sym_power_terms(int l, int j, std::size_t N, const EigenformTable& form);

/// Single pass over n <= N; checkpoints only (no fit).
PartialSumSeries partial_sum(int l, int j, std::size_t N, const EigenformTable& form);

/// d_{lj/2} - 1; DomainError for odd lj.
int main_term_degree(int l, int j);

/// Least squares of S(x)/x on 1, log x, ..., (log x)^degree over the top half of the checkpoints.
MainTermFit fit_main_term(const PartialSumSeries& series, int degree);

/// Slope of log|e(x)| against log x over checkpoints with e != 0; e is the fit residual
/// when a fit is given and S itself otherwise. Absent for N < 100 or fewer than 3 points.
std::optional<ResidualExponent> residual_exponent(const PartialSumSeries& series,
                                                  const MainTermFit* fit = nullptr);

/// Partial sum, fit (even lj, when enough checkpoints) and residual exponent together.
PartialSumSeries analyze_partial_sum(int l, int j, std::size_t N, const EigenformTable& form);

/// "x,S,main_fit,residual" rows; main_fit and residual are empty without a fit.
std::string series_to_csv(const PartialSumSeries& series);
std::string series_to_json(const PartialSumSeries& series);

}  // namespace symmoment
