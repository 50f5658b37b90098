#include <symmoment/combinatorics.hpp>
#include <symmoment/error.hpp>
#include <symmoment/exponents.hpp>
#include <symmoment/sums.hpp>

#include <Eigen/Dense>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

namespace symmoment {

void CompensatedSum::add(double v) {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v)) {
    comp_ += (sum_ - t) + v;
  } else {
    comp_ += (v - t) + sum_;
  }
  sum_ = t;
}

double MainTermFit::main(double x) const {
  const double y = std::log(x);
  double q = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) q = q * y + *it;
  return x * q;
}

std::vector<std::size_t> checkpoint_grid(std::size_t N, double ratio, int count) {
  std::vector<std::size_t> xs;
  double scale = 1.0;
  for (int i = 0; i < count; ++i) {
    const auto x = static_cast<std::size_t>(std::ceil(static_cast<double>(N) / scale - 1e-9));
    if (x >= 1 && (xs.empty() || x != xs.back())) xs.push_back(x);
    scale *= ratio;
  }
  std::reverse(xs.begin(), xs.end());
  return xs;
}

std::vector<double> sym_power_terms(int l, int j, std::size_t N, const EigenformTable& form) {
  if (l < 1) throw DomainError("l must be positive");
  auto terms = sym_coeff_sieve(j, N, form);
#pragma omp parallel for schedule(static, 4096)
  for (std::size_t n = 1; n <= N; ++n) {
    const double v = terms[n];
    double p = v;
    for (int k = 1; k < l; ++k) p *= v;
    terms[n] = p;
  }
  return terms;
}

PartialSumSeries partial_sum(int l, int j, std::size_t N, const EigenformTable& form) {
  check_pair(l, j);
  if (N < 1) throw DomainError("partial sum limit must be positive");
  const auto terms = sym_power_terms(l, j, N, form);
  PartialSumSeries out;
  out.l = l;
  out.j = j;
  out.weight = form.weight;
  out.N = N;
  const auto grid = checkpoint_grid(N);
  CompensatedSum acc;
  std::size_t next = 0;
  for (std::size_t n = 1; n <= N && next < grid.size(); ++n) {
    acc.add(terms[n]);
    if (n == grid[next]) {
      out.checkpoints.push_back({n, acc.value()});
      ++next;
    }
  }
  return out;
}

int main_term_degree(int l, int j) {
  check_pair(l, j);
  if ((l * j) % 2) throw DomainError("odd l*j has no main term");
  const auto d = decomposition_coeffs(l, j);
  return static_cast<int>(d.values.back().get_si()) - 1;
}

MainTermFit fit_main_term(const PartialSumSeries& series, int degree) {
  if ((series.l * series.j) % 2) throw DomainError("odd l*j has no main term to fit");
  if (degree < 0) throw FitError("negative fit degree");
  const std::size_t total = series.checkpoints.size();
  const std::size_t window = total / 2;
  const std::size_t unknowns = static_cast<std::size_t>(degree) + 1;
  if (window < unknowns + 2) {
    throw FitError(fmt::format("degree {} fit needs at least {} checkpoints in the window, have {}", degree,
                               unknowns + 2, window));
  }
  const std::size_t first = total - window;
  Eigen::MatrixXd basis(window, unknowns);
  Eigen::VectorXd target(window);
  for (std::size_t r = 0; r < window; ++r) {
    const auto& cp = series.checkpoints[first + r];
    const double y = std::log(static_cast<double>(cp.x));
    double pw = 1.0;
    for (std::size_t k = 0; k < unknowns; ++k) {
      basis(r, k) = pw;
      pw *= y;
    }
    target(r) = cp.S / static_cast<double>(cp.x);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis);
  qr.setThreshold(1e-13);
  if (qr.rank() < static_cast<Eigen::Index>(unknowns)) {
    throw FitError(fmt::format("rank-deficient main-term fit (rank {} < {})", qr.rank(), unknowns));
  }
  const Eigen::VectorXd sol = qr.solve(target);
  MainTermFit fit;
  fit.degree = degree;
  fit.window = window;
  fit.coefficients.assign(sol.data(), sol.data() + sol.size());
  for (const auto& cp : series.checkpoints) fit.residuals.push_back(cp.S - fit.main(static_cast<double>(cp.x)));
  return fit;
}

std::optional<ResidualExponent> residual_exponent(const PartialSumSeries& series, const MainTermFit* fit) {
  if (series.N < 100) return std::nullopt;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
    const double e = fit ? fit->residuals[i] : series.checkpoints[i].S;
    if (e == 0.0) continue;
    xs.push_back(std::log(static_cast<double>(series.checkpoints[i].x)));
    ys.push_back(std::log(std::abs(e)));
  }
  const std::size_t n = xs.size();
  if (n < 3) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) return std::nullopt;
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double sse = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - intercept - slope * xs[i];
    sse += r * r;
  }
  ResidualExponent out;
  out.slope = slope;
  out.standard_error = std::sqrt(sse / static_cast<double>(n - 2) / sxx);
  out.points = n;
  return out;
}

PartialSumSeries analyze_partial_sum(int l, int j, std::size_t N, const EigenformTable& form) {
  auto series = partial_sum(l, j, N, form);
  if ((l * j) % 2 == 0) {
    try {
      series.fit = fit_main_term(series, main_term_degree(l, j));
    } catch (const FitError&) {
      series.fit.reset();
    }
  }
  series.residual = residual_exponent(series, series.fit ? &*series.fit : nullptr);
  return series;
}

std::string series_to_csv(const PartialSumSeries& series) {
  std::string out = "x,S,main_fit,residual\n";
  for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
    const auto& cp = series.checkpoints[i];
    if (series.fit) {
      out += fmt::format("{},{},{},{}\n", cp.x, format_real(cp.S), format_real(series.fit->main(static_cast<double>(cp.x))),
                         format_real(series.fit->residuals[i]));
    } else {
      out += fmt::format("{},{},,\n", cp.x, format_real(cp.S));
    }
  }
  return out;
}

std::string series_to_json(const PartialSumSeries& series) {
  nlohmann::ordered_json o;
  o["l"] = series.l;
  o["j"] = series.j;
  o["weight"] = series.weight;
  o["N"] = series.N;
  o["checkpoints"] = series.checkpoints.size();
  o["S_N"] = series.checkpoints.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(series.checkpoints.back().S);
  if (series.fit) {
    nlohmann::ordered_json fit;
    fit["degree"] = series.fit->degree;
    fit["window"] = series.fit->window;
    auto coeffs = nlohmann::ordered_json::array();
    for (double c : series.fit->coefficients) coeffs.push_back(c);
    fit["coefficients"] = coeffs;
    o["fit"] = fit;
  } else {
    o["fit"] = nullptr;
  }
  if (series.residual) {
    o["residual_exponent"] = {{"slope", series.residual->slope},
                              {"standard_error", series.residual->standard_error},
                              {"points", series.residual->points}};
  } else {
    o["residual_exponent"] = nullptr;
  }
  return o.dump(2) + "\n";
}

}  // namespace symmoment
