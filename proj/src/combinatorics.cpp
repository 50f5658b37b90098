#include <symmoment/combinatorics.hpp>
#include <symmoment/error.hpp>

#include <string>

namespace symmoment {

const char* kind_name(CoeffKind kind) {
  switch (kind) {
    case CoeffKind::C: return "c";
    case CoeffKind::D: return "d";
    case CoeffKind::E: return "e";
  }
  return "?";
}

void check_pair(int l, int j, int cap) {
  if (l < 1 || j < 1) {
    throw DomainError("l and j must be positive (got l=" + std::to_string(l) +
                      ", j=" + std::to_string(j) + ")");
  }
  if (static_cast<long>(l) * j > cap) {
    throw CapacityError("l*j = " + std::to_string(static_cast<long>(l) * j) +
                        " exceeds the cap " + std::to_string(cap));
  }
}

CoeffVector coeffs_bruteforce(int l, int j, int cap) {
  check_pair(l, j, cap);
  std::vector<BigInt> acc(j + 1, BigInt(1));
  for (int step = 1; step < l; ++step) {
    std::vector<BigInt> next(acc.size() + j);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (int k = 0; k <= j; ++k) next[i + k] += acc[i];
    }
    acc = std::move(next);
  }
  return {l, j, CoeffKind::C, std::move(acc)};
}

CoeffVector coeffs_closed_form(int l, int j, int cap) {
  check_pair(l, j, cap);
  const int lj = l * j;
  std::vector<BigInt> out(lj + 1);
  for (int m = 0; m <= lj; ++m) {
    BigInt sum = 0;
    for (int r = 0; r <= m / (j + 1); ++r) {
      BigInt term = binomial(l, r) * binomial(m - r * (j + 1) + l - 1, l - 1);
      if (r % 2) sum -= term; else sum += term;
    }
    out[m] = sum;
  }
  return {l, j, CoeffKind::C, std::move(out)};
}

CoeffVector diff_coeffs(const CoeffVector& c) {
  if (c.kind != CoeffKind::C) throw DomainError("diff_coeffs expects a c-vector");
  const int half = c.product() / 2;
  std::vector<BigInt> out(half + 1);
  for (int m = 0; m <= half; ++m) {
    out[m] = m == 0 ? c[0] : BigInt(c[m] - c[m - 1]);
  }
  return {c.l, c.j, c.even() ? CoeffKind::D : CoeffKind::E, std::move(out)};
}

CoeffVector diff_coeffs_closed_form(int l, int j, int cap) {
  check_pair(l, j, cap);
  if (l < 2) throw DomainError("closed-form differences need l >= 2");
  const int lj = l * j;
  const int half = lj / 2;
  std::vector<BigInt> out(half + 1);
  for (int m = 0; m <= half; ++m) {
    BigInt sum = 0;
    for (int r = 0; r <= m / (j + 1); ++r) {
      BigInt term = binomial(l, r) * binomial(m - r * (j + 1) + l - 2, l - 2);
      if (r % 2) sum -= term; else sum += term;
    }
    out[m] = sum;
  }
  return {l, j, lj % 2 == 0 ? CoeffKind::D : CoeffKind::E, std::move(out)};
}

StructureReport structure_report(const CoeffVector& c) {
  if (c.kind != CoeffKind::C) throw DomainError("structure_report expects a c-vector");
  StructureReport rep;
  const int lj = c.product();
  rep.palindromic = static_cast<int>(c.size()) == lj + 1;
  for (int m = 0; rep.palindromic && m <= lj; ++m) {
    rep.palindromic = c[m] == c[lj - m];
  }
  // Nondecreasing up to floor(lj/2), nonincreasing afterwards.
  rep.unimodal = true;
  const int peak = lj / 2;
  for (int m = 0; m < peak && rep.unimodal; ++m) rep.unimodal = c[m] <= c[m + 1];
  for (int m = peak; m < lj && rep.unimodal; ++m) rep.unimodal = c[m] >= c[m + 1];
  rep.total = 0;
  for (const auto& v : c.values) rep.total += v;
  return rep;
}

CoeffVector decomposition_coeffs(int l, int j, int cap) {
  return diff_coeffs(coeffs_closed_form(l, j, cap));
}

}  // namespace symmoment
