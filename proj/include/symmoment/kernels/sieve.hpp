#pragma once

// Multiplicative fill: given f(p^a) for every prime power p^a <= N, produce
// f(n) for all n <= N. The parallel kernel factors every n independently with a
// smallest-prime-factor table and multiplies the prime-power factors in
// increasing prime order, so the result does not depend on scheduling.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace symmoment::kernels {

/// spf[n] = smallest prime factor of n for 2 <= n <= N; spf[0] = spf[1] = 0.
std::vector<std::uint32_t> smallest_prime_factors(std::size_t N);

std::vector<std::uint32_t> primes_up_to(std::size_t N);

/// Values f(p^a), a = 1, 2, ..., for each prime p <= N.
class PrimePowerTable {
 public:
  explicit PrimePowerTable(std::size_t N);

  std::size_t limit() const { return limit_; }
  /// Stores f(p^1), f(p^2), ... for one prime (as many as fit below N).
  void set(std::uint32_t p, std::vector<double> values);
  /// f(p^a), a >= 1.
  double at(std::uint32_t p, unsigned a) const { return values_[slot_[p]][a - 1]; }
  bool has(std::uint32_t p) const { return p < slot_.size() && slot_[p] != kNone; }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;
  std::size_t limit_;
  std::vector<std::uint32_t> slot_;
  std::vector<std::vector<double>> values_;
};

/// Largest a with p^a <= N.
unsigned max_exponent(std::uint64_t p, std::uint64_t N);

/// out[0] = 0, out[1] = 1, out[n] = prod f(p^a) over n's factorization. OpenMP over n.
std::vector<double> multiplicative_fill(std::span<const std::uint32_t> spf, const PrimePowerTable& table);

/// Serial linear pass out[n] = out[n / p^a] * f(p^a) with p = spf[n].
std::vector<double> multiplicative_fill_reference(std::span<const std::uint32_t> spf,
                                                  const PrimePowerTable& table);

}  // namespace symmoment::kernels
