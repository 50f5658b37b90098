#include <symmoment/combinatorics.hpp>
#include <symmoment/error.hpp>
#include <symmoment/exponents.hpp>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cmath>
#include <sstream>

namespace symmoment {
namespace {

struct Ingredients {
  double D;
  double d_half;
  double d_half_minus_1;
  double j;
};

void check_theorem_pair(int l, int j) {
  check_pair(l, j);
  if (l * j < 4) throw DomainError("exponents need l*j >= 4");
}

Ingredients ingredients(int l, int j) {
  check_theorem_pair(l, j);
  const auto d = decomposition_coeffs(l, j);
  const std::size_t half = d.size() - 1;
  const BigInt D = ipow(static_cast<unsigned long>(j) + 1, static_cast<unsigned long>(l));
  return {D.get_d(), d[half].get_d(), half >= 1 ? d[half - 1].get_d() : 0.0, static_cast<double>(j)};
}

/// 315 D - 315 d_{lj/2} - 189 d_{lj/2-1}
double balance_core(const Ingredients& in) {
  return 315.0 * in.D - 315.0 * in.d_half - 189.0 * in.d_half_minus_1;
}

struct PreviousRow {
  int l, j;
  Fraction value;
};

// Earlier exponents: theta_l for sums of lambda_sym^2(n)^l and theta_j^* for
// sums of lambda_sym^j(n)^2; (2, 2) is shared by both families.
constexpr std::array<PreviousRow, 13> kPrevious{{
    {2, 2, {389, 509}},
    {3, 2, {1367, 1487}},
    {4, 2, {1483, 1523}},
    {5, 2, {459, 463}},
    {6, 2, {12237, 12272}},
    {7, 2, {74069, 74139}},
    {8, 2, {335197, 335302}},
    {2, 3, {779, 899}},
    {2, 4, {1319, 1439}},
    {2, 5, {1979, 2099}},
    {2, 6, {2759, 2879}},
    {2, 7, {3659, 3779}},
    {2, 8, {4679, 4799}},
}};

nlohmann::ordered_json to_json(const ExponentReport& r) {
  nlohmann::ordered_json o;
  o["l"] = r.l;
  o["j"] = r.j;
  o["parity"] = parity_name(r.parity);
  o["D"] = r.D.get_str();
  o["theta"] = r.theta;
  o["theta_star"] = r.theta_star ? nlohmann::ordered_json(*r.theta_star) : nlohmann::ordered_json();
  o["previous"] = r.previous ? nlohmann::ordered_json(r.previous->str()) : nlohmann::ordered_json();
  o["improved"] = r.improved;
  return o;
}

}  // namespace

double zeta_bound_constant() { return 8.0 * std::sqrt(15.0) / 63.0; }

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::Even4: return "even4";
    case Parity::EvenBig: return "evenBig";
    case Parity::Odd: return "odd";
  }
  return "?";
}

Parity parity_of(int l, int j) {
  check_theorem_pair(l, j);
  const int lj = l * j;
  if (lj == 4) return Parity::Even4;
  return lj % 2 == 0 ? Parity::EvenBig : Parity::Odd;
}

double theta(int l, int j) {
  switch (parity_of(l, j)) {
    case Parity::Even4: {
      const double r2 = std::sqrt(2.0), r15 = std::sqrt(15.0);
      return 1.0 - 63.0 * r2 / (252.0 * r2 + 4.0 * r15);
    }
    case Parity::EvenBig: {
      const auto in = ingredients(l, j);
      const double j32 = std::pow(in.j, 1.5);
      return 1.0 - 630.0 * j32 / (j32 * balance_core(in) + 80.0 * std::sqrt(15.0) * in.d_half);
    }
    case Parity::Odd: {
      const auto in = ingredients(l, j);
      return 1.0 - 6.0 / (3.0 * in.D - 2.0 * in.d_half);
    }
  }
  throw ConsistencyError("unreachable parity");
}

double theta_star(int l, int j) {
  switch (parity_of(l, j)) {
    case Parity::Even4: return 0.75;
    case Parity::EvenBig: return 1.0 - 630.0 / balance_core(ingredients(l, j));
    case Parity::Odd: break;
  }
  throw DomainError("theta_star is only defined for even l*j");
}

ProofExponents proof_exponents(int l, int j) {
  if (parity_of(l, j) != Parity::EvenBig) throw DomainError("proof exponents need even l*j >= 6");
  const auto in = ingredients(l, j);
  const double j3 = in.j * in.j * in.j;
  const double zeta_term = in.d_half * zeta_bound_constant() * std::pow(in.j, -4.5);
  ProofExponents out;
  out.B = (in.D - in.d_half - 3.0 * in.d_half_minus_1) / (2.0 * j3) + 6.0 / (5.0 * j3) * in.d_half_minus_1 - 1.0;
  out.A = out.B + zeta_term;
  const double j32 = std::pow(in.j, 1.5);
  out.T_exp = 630.0 * j32 / (j32 * balance_core(in) + 80.0 * std::sqrt(15.0) * in.d_half);
  return out;
}

std::optional<Fraction> previous_exponent(int l, int j) {
  for (const auto& row : kPrevious) {
    if (row.l == l && row.j == j) return row.value;
  }
  return std::nullopt;
}

ExponentReport exponent_report(int l, int j) {
  ExponentReport r;
  r.l = l;
  r.j = j;
  r.parity = parity_of(l, j);
  r.D = ipow(static_cast<unsigned long>(j) + 1, static_cast<unsigned long>(l));
  const auto d = decomposition_coeffs(l, j);
  const std::size_t half = d.size() - 1;
  r.d_half = d[half];
  r.d_half_minus_1 = (r.parity != Parity::Odd && half >= 1) ? d[half - 1] : BigInt(0);
  r.theta = theta(l, j);
  if (r.parity != Parity::Odd) r.theta_star = theta_star(l, j);
  if (r.parity == Parity::EvenBig) r.proof = proof_exponents(l, j);
  r.previous = previous_exponent(l, j);
  r.improved = r.previous && r.theta < r.previous->value();
  r.extrapolated = r.parity == Parity::Even4 && !(l == 2 && j == 2);
  r.contour_degenerate = j == 1;
  r.has_reference_value = r.previous.has_value();
  return r;
}

std::vector<ExponentReport> reference_table() {
  std::vector<ExponentReport> rows;
  for (int l = 2; l <= 8; ++l) rows.push_back(exponent_report(l, 2));
  for (int j = 2; j <= 8; ++j) rows.push_back(exponent_report(2, j));
  for (const auto& r : rows) {
    if (!r.improved) {
      throw ConsistencyError(fmt::format("theta({},{}) does not improve on {}", r.l, r.j, r.previous->str()));
    }
    if (!(r.theta_star && *r.theta_star <= r.theta)) {
      throw ConsistencyError(fmt::format("theta_star({},{}) exceeds theta", r.l, r.j));
    }
  }
  return rows;
}

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

std::string reports_to_json(const std::vector<ExponentReport>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<ExponentReport>& rows) {
  std::string out = "l,j,parity,D,theta,theta_star,previous,improved\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", r.l, r.j, parity_name(r.parity), r.D.get_str(),
                       format_real(r.theta), r.theta_star ? format_real(*r.theta_star) : "",
                       r.previous ? r.previous->str() : "", r.improved ? "true" : "false");
  }
  return out;
}

std::string reports_to_text(const std::vector<ExponentReport>& rows) {
  std::string out = fmt::format("{:>3} {:>3}  {:<8} {:>12}  {:>14}  {:>14}  {:>14}  {}\n", "l", "j", "parity", "D",
                                "previous", "theta", "theta*", "notes");
  for (const auto& r : rows) {
    std::string notes;
    auto add = [&](const char* s) {
      if (!notes.empty()) notes += ", ";
      notes += s;
    };
    if (r.improved) add("improved");
    if (!r.has_reference_value) add("no reference value");
    if (r.extrapolated) add("extrapolated");
    if (r.contour_degenerate) add("j=1 contour degenerate");
    out += fmt::format("{:>3} {:>3}  {:<8} {:>12}  {:>14}  {:>14.10f}  {:>14}  {}\n", r.l, r.j, parity_name(r.parity),
                       r.D.get_str(), r.previous ? fmt::format("{:.10f}", r.previous->value()) : "-", r.theta,
                       r.theta_star ? fmt::format("{:.10f}", *r.theta_star) : "-", notes);
    if (r.proof) {
      out += fmt::format("          A = {:.12f}  B = {:.12f}  T = x^{:.12f}\n", r.proof->A, r.proof->B, r.proof->T_exp);
    }
  }
  return out;
}

}  // namespace symmoment
