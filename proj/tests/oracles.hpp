#pragma once

// Independent oracles used only by the tests. None of these call into the
// library path they are checking.

#include <symmoment/bigint.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using symmoment::BigInt;

/// c_m by enumerating every tuple (m_1..m_l) in [0, j]^l.
inline std::vector<BigInt> enumerate_compositions(int l, int j) {
  std::vector<BigInt> count(l * j + 1, 0);
  std::vector<int> digits(l, 0);
  for (;;) {
    int sum = 0;
    for (int d : digits) sum += d;
    count[sum] += 1;
    int pos = 0;
    while (pos < l && digits[pos] == j) digits[pos++] = 0;
    if (pos == l) break;
    ++digits[pos];
  }
  return count;
}

/// q prod_{n<N} (1 - q^n)^24, coefficients 1..N, by repeated multiplication with (1 - q^n).
inline std::vector<BigInt> naive_delta(std::size_t N) {
  std::vector<BigInt> series(N, 0);  // index = power of q in prod(1-q^n)^24
  series[0] = 1;
  for (std::size_t n = 1; n < N; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (std::size_t k = N - 1; k >= n; --k) {
        series[k] -= series[k - n];
        if (k == n) break;
      }
    }
  }
  std::vector<BigInt> out(N + 1, 0);
  for (std::size_t k = 1; k <= N; ++k) out[k] = series[k - 1];
  return out;
}

/// Naive divisor sum.
inline BigInt sigma(std::size_t n, unsigned power) {
  BigInt s = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), d, power);
      s += p;
    }
  }
  return s;
}

/// lambda(p^a) from the two-term Hecke recursion in t.
inline double hecke_prime_power(int a, double t) {
  double prev = 1.0, cur = t;
  if (a == 0) return prev;
  for (int k = 2; k <= a; ++k) {
    double next = t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Complete homogeneous symmetric polynomial h_a of the j+1 roots e^{i(j-2m)theta},
/// by enumerating multisets (exponent vectors) directly.
inline double sym_power_by_multisets(int j, int a, double t) {
  const double theta = std::acos(std::fmax(-1.0, std::fmin(1.0, t / 2)));
  std::complex<double> total = 0;
  std::vector<int> e(j + 1, 0);
  // enumerate compositions of a into j+1 nonnegative parts
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == j) {
      e[idx] = left;
      int power = 0;
      for (int m = 0; m <= j; ++m) power += e[m] * (j - 2 * m);
      total += std::polar(1.0, power * theta);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  rec(0, a);
  return total.real();
}

inline std::size_t gcd(std::size_t a, std::size_t b) {
  while (b) {
    std::size_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace oracle
