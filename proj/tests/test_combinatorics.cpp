#include <symmoment/combinatorics.hpp>
#include <symmoment/error.hpp>

#include <doctest.h>

#include "oracles.hpp"

using namespace symmoment;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<BigInt> prefix(const CoeffVector& c, std::size_t n) {
  return {c.values.begin(), c.values.begin() + static_cast<long>(n)};
}

}  // namespace

TEST_CASE("convolution coefficients") {
  CHECK(coeffs_bruteforce(2, 2).values == big({1, 2, 3, 2, 1}));
  CHECK(coeffs_bruteforce(1, 5).values == big({1, 1, 1, 1, 1, 1}));
  CHECK(prefix(coeffs_bruteforce(8, 2), 9) == big({1, 8, 36, 112, 266, 504, 784, 1016, 1107}));
}

TEST_CASE("inclusion-exclusion coefficients") {
  CHECK(prefix(coeffs_closed_form(3, 2), 4) == big({1, 3, 6, 7}));
  CHECK(coeffs_closed_form(5, 2)[5] == 51);
  CHECK(coeffs_closed_form(4, 3).values == coeffs_bruteforce(4, 3).values);
  // l = 1 degenerates to the indicator of 0 <= m <= j.
  CHECK(coeffs_closed_form(1, 7).values == std::vector<BigInt>(8, BigInt(1)));
}

TEST_CASE("both routes agree with tuple enumeration") {
  for (int l = 1; l <= 6; ++l) {
    for (int j = 1; j <= 6; ++j) {
      CAPTURE(l);
      CAPTURE(j);
      const auto enumerated = oracle::enumerate_compositions(l, j);
      CHECK(coeffs_bruteforce(l, j).values == enumerated);
      CHECK(coeffs_closed_form(l, j).values == enumerated);
    }
  }
}

TEST_CASE("c_m for l = j = 8") {
  // The coefficients sum to 9^8, so the central one stays well inside 32 bits.
  const auto c = coeffs_closed_form(8, 8);
  BigInt total = 0;
  for (const auto& v : c.values) total += v;
  CHECK(total == ipow(9, 8));
  CHECK(c[32] == BigInt(2306025));
  CHECK(c.values == coeffs_bruteforce(8, 8).values);
}

TEST_CASE("first differences") {
  CHECK(diff_coeffs(coeffs_bruteforce(2, 2)).values == big({1, 1, 1}));
  CHECK(diff_coeffs(coeffs_bruteforce(8, 2)).values == big({1, 7, 28, 76, 154, 238, 280, 232, 91}));
  const auto ones = diff_coeffs(coeffs_bruteforce(1, 4));
  CHECK(ones.values == big({1, 0, 0}));
  CHECK(ones.kind == CoeffKind::D);
  const auto odd = diff_coeffs(coeffs_bruteforce(3, 1));
  CHECK(odd.kind == CoeffKind::E);
  CHECK(odd.values == big({1, 2}));
}

TEST_CASE("closed-form differences match first differences for l >= 2") {
  for (int l = 2; l <= 8; ++l) {
    for (int j = 1; j <= 8; ++j) {
      CAPTURE(l);
      CAPTURE(j);
      CHECK(diff_coeffs_closed_form(l, j).values == diff_coeffs(coeffs_bruteforce(l, j)).values);
    }
  }
  CHECK_THROWS_AS(diff_coeffs_closed_form(1, 4), DomainError);
}

TEST_CASE("structure report") {
  auto r = structure_report(coeffs_bruteforce(2, 2));
  CHECK(r.palindromic);
  CHECK(r.unimodal);
  CHECK(r.total == 9);
  r = structure_report(coeffs_bruteforce(7, 2));
  CHECK(r.palindromic);
  CHECK(r.unimodal);
  CHECK(r.total == 2187);
  r = structure_report(coeffs_bruteforce(1, 1));
  CHECK(r.palindromic);
  CHECK(r.unimodal);
  CHECK(r.total == 2);

  CoeffVector broken = coeffs_bruteforce(3, 2);
  broken.values[1] += 1;
  CHECK_FALSE(structure_report(broken).palindromic);
  CoeffVector dip = coeffs_bruteforce(3, 2);
  dip.values[2] = 0;
  dip.values[4] = 0;
  r = structure_report(dip);
  CHECK(r.palindromic);
  CHECK_FALSE(r.unimodal);
}

TEST_CASE("difference properties over the grid") {
  for (int l = 1; l <= 8; ++l) {
    for (int j = 1; j <= 8; ++j) {
      const auto c = coeffs_closed_form(l, j);
      const auto d = diff_coeffs(c);
      BigInt sum = 0;
      for (const auto& v : d.values) {
        CHECK(v >= 0);
        sum += v;
      }
      CHECK(sum == c[l * j / 2]);
      CHECK(d[0] == 1);
      CHECK(d.size() == static_cast<std::size_t>(l * j / 2 + 1));
    }
  }
}

TEST_CASE("domain and capacity errors") {
  CHECK_THROWS_AS(coeffs_bruteforce(0, 3), DomainError);
  CHECK_THROWS_AS(coeffs_closed_form(2, -1), DomainError);
  CHECK_THROWS_AS(coeffs_bruteforce(9, 8), CapacityError);
  CHECK_NOTHROW(coeffs_bruteforce(9, 8, 100));
  CHECK_THROWS_AS(diff_coeffs(diff_coeffs(coeffs_bruteforce(2, 2))), DomainError);
}
