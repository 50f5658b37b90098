#include <symmoment/error.hpp>
#include <symmoment/hecke.hpp>
#include <symmoment/kernels/series.hpp>
#include <symmoment/polynomial.hpp>

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"

using namespace symmoment;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  const char* base = std::getenv("SYMMOMENT_TEST_TMP");
  auto dir = std::filesystem::path(base ? base : "/tmp") / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("tau against the naive product") {
  const std::size_t N = 300;
  const auto table = delta_qexp(N);
  const auto naive = oracle::naive_delta(N);
  CHECK(table.raw == naive);
  CHECK(table.a(1) == 1);
  CHECK(table.a(2) == -24);
  CHECK(table.a(3) == 252);
  CHECK(table.a(6) == -6048);
  CHECK(table.a(6) == table.a(2) * table.a(3));
}

TEST_CASE("higher weights against naive Eisenstein products") {
  const std::size_t N = 120;
  const auto delta = oracle::naive_delta(N);
  std::vector<BigInt> e4(N + 1), e6(N + 1);
  e4[0] = e6[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    e4[n] = 240 * oracle::sigma(n, 3);
    e6[n] = -504 * oracle::sigma(n, 5);
  }
  auto times = [&](std::vector<BigInt> f, const std::vector<BigInt>& g) {
    return kernels::multiply_reference(f, g, N + 1);
  };
  CHECK(eigenform_qexp(16, N).raw == times(delta, e4));
  CHECK(eigenform_qexp(18, N).raw == times(delta, e6));
  CHECK(eigenform_qexp(20, N).raw == times(times(delta, e4), e4));
  CHECK(eigenform_qexp(22, N).raw == times(times(delta, e4), e6));
  CHECK(eigenform_qexp(26, N).raw == times(times(times(delta, e4), e4), e6));
  CHECK(eigenform_qexp(12, N).raw == delta);

  // a(2) = tau(2) + first Eisenstein coefficient
  CHECK(eigenform_qexp(16, N).a(2) == 216);
  CHECK(eigenform_qexp(18, N).a(2) == -528);
  CHECK(eigenform_qexp(20, N).a(2) == 456);
  CHECK(eigenform_qexp(22, N).a(2) == -288);
  CHECK(eigenform_qexp(26, N).a(2) == -48);
  CHECK(eigenform_qexp(18, N).a(1) == 1);
}

TEST_CASE("Hecke structure of every supported weight") {
  std::mt19937_64 rng(42);
  for (int k : {12, 16, 18, 20, 22, 26}) {
    CAPTURE(k);
    const std::size_t N = 10000;
    const auto f = eigenform_qexp(k, N);
    CHECK(f.a(1) == 1);
    CHECK(check_hecke_recursion(f, N) > 0);
    for (std::size_t p = 2; p <= N; ++p) {
      if (oracle::is_prime(p)) CHECK(std::abs(f.lambda(p)) <= 2.0);
    }
    std::uniform_int_distribution<std::size_t> pick(2, N);
    int pairs = 0;
    while (pairs < 500) {
      const std::size_t m = pick(rng), n = pick(rng);
      if (m * n > N || oracle::gcd(m, n) != 1) continue;
      CHECK(f.a(m * n) == f.a(m) * f.a(n));
      ++pairs;
    }
  }
}

TEST_CASE("limits and weights") {
  CHECK_THROWS_AS(delta_qexp(0), DomainError);
  CHECK_THROWS_AS(delta_qexp(100001), CapacityError);
  CHECK_THROWS_AS(delta_qexp(2000000, 5000000), CapacityError);
  CHECK_THROWS_AS(eigenform_qexp(14, 10), DomainError);
  CHECK_THROWS_AS(eigenform_qexp(24, 10), DomainError);
  CHECK_FALSE(is_supported_weight(10));
}

TEST_CASE("Satake data") {
  const auto f = delta_qexp(1000);
  for (const auto& s : satake_table(f)) {
    CHECK(std::abs(s.t) <= 2.0);
    CHECK(s.theta >= 0.0);
    CHECK(s.theta <= M_PI);
    CHECK(std::abs(s.alpha() * s.beta() - 1.0) < 1e-12);
    CHECK((s.alpha() + s.beta()).real() == doctest::Approx(s.t).epsilon(1e-12));
  }
  CHECK(satake_angle(2.0 + 1e-15) == 0.0);
  CHECK(satake_angle(-2.0 - 1e-15) == doctest::Approx(M_PI));
}

TEST_CASE("symmetric-power prime powers") {
  CHECK(sym_prime_power(3, 0, 0.4) == 1.0);
  for (double t : {-1.9, -0.3, 0.0, 1.2, 2.0}) {
    for (int j = 1; j <= 8; ++j) {
      CHECK(sym_prime_power(j, 1, t) == doctest::Approx(poly_eval(sym_prime_poly(j), t)).epsilon(1e-12));
      for (int a = 0; a <= 6; ++a) {
        CHECK(sym_prime_power(j, a, t) ==
              doctest::Approx(oracle::sym_power_by_multisets(j, a, t)).epsilon(1e-10).scale(1.0));
        CHECK(std::abs(sym_prime_power(j, a, t)) <= binomial(a + j, j).get_d() + 1e-9);
      }
    }
    for (int a = 0; a <= 10; ++a) {
      CHECK(sym_prime_power(1, a, t) == doctest::Approx(oracle::hecke_prime_power(a, t)).scale(1.0));
    }
  }
  CHECK(sym_prime_power(1, 3, 1.2) == doctest::Approx(-0.672).epsilon(1e-12));
  for (int j = 1; j <= 8; ++j) {
    for (int a = 0; a <= 8; ++a) CHECK(sym_prime_power(j, a, 2.0) == binomial(a + j, j).get_d());
  }
  CHECK_THROWS_AS(sym_prime_power(2, 1, 2.5), DomainError);
}

TEST_CASE("symmetric-power sieve") {
  const std::size_t N = 20000;
  const auto f = delta_qexp(N);
  const auto s1 = sym_coeff_sieve(1, N, f);
  CHECK(s1[1] == 1.0);
  for (std::size_t n = 1; n <= N; ++n) CHECK(s1[n] == doctest::Approx(f.lambda(n)).epsilon(1e-9).scale(1.0));
  for (int j : {2, 3, 4}) {
    const auto s = sym_coeff_sieve(j, N, f);
    for (std::size_t p = 2; p <= N; ++p) {
      if (!oracle::is_prime(p)) continue;
      std::size_t pj = 1;
      bool fits = true;
      for (int k = 0; k < j; ++k) {
        if (pj > N / p) fits = false;
        pj *= p;
      }
      if (!fits) break;
      CHECK(s[p] == doctest::Approx(f.lambda(pj)).epsilon(1e-9).scale(1.0));
    }
  }
  CHECK_THROWS_AS(sym_coeff_sieve(2, N + 1, f), CapacityError);
}

TEST_CASE("cache file round trip and validation") {
  const auto dir = scratch_dir("hecke_cache");
  const auto computed = load_or_compute(12, 500, dir);
  const auto path = dir / cache_file_name(12, 500);
  REQUIRE(std::filesystem::exists(path));
  {
    std::ifstream in(path);
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header == "n,a_n");
    CHECK(first == "1,1");
  }
  const auto loaded = load_or_compute(12, 500, dir);
  CHECK(loaded.raw == computed.raw);
  CHECK(loaded.normalized == computed.normalized);

  std::ostringstream os;
  write_table_csv(os, computed);
  std::string text = os.str();
  // Corrupt tau(4) = -1472.
  const auto pos = text.find("\n4,-1472\n");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 9, "\n4,-1471\n");
  std::istringstream bad(text);
  CHECK_THROWS_AS(read_table_csv(bad, 12), ConsistencyError);

  std::istringstream no_header("1,1\n");
  CHECK_THROWS_AS(read_table_csv(no_header, 12), FormatError);
  std::istringstream gap("n,a_n\n1,1\n3,252\n");
  CHECK_THROWS_AS(read_table_csv(gap, 12), FormatError);
  std::istringstream bad_int("n,a_n\n1,1\n2,-2x4\n");
  CHECK_THROWS_AS(read_table_csv(bad_int, 12), FormatError);
}
