#include <symmoment/error.hpp>
#include <symmoment/kernels/sieve.hpp>

namespace symmoment::kernels {

std::vector<std::uint32_t> smallest_prime_factors(std::size_t N) {
  std::vector<std::uint32_t> spf(N + 1, 0);
  for (std::size_t i = 2; i <= N; ++i) {
    if (spf[i] != 0) continue;
    spf[i] = static_cast<std::uint32_t>(i);
    for (std::size_t k = i * i; k <= N; k += i) {
      if (spf[k] == 0) spf[k] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

std::vector<std::uint32_t> primes_up_to(std::size_t N) {
  auto spf = smallest_prime_factors(N);
  std::vector<std::uint32_t> primes;
  for (std::size_t i = 2; i <= N; ++i) {
    if (spf[i] == i) primes.push_back(static_cast<std::uint32_t>(i));
  }
  return primes;
}

unsigned max_exponent(std::uint64_t p, std::uint64_t N) {
  unsigned a = 0;
  for (std::uint64_t q = p; q <= N; q *= p) {
    ++a;
    if (q > N / p) break;
  }
  return a;
}

PrimePowerTable::PrimePowerTable(std::size_t N) : limit_(N), slot_(N + 1, kNone) {}

void PrimePowerTable::set(std::uint32_t p, std::vector<double> values) {
  if (p > limit_) throw DomainError("prime outside table range");
  if (values.size() < max_exponent(p, limit_)) throw DomainError("too few prime-power values");
  if (slot_[p] == kNone) {
    slot_[p] = static_cast<std::uint32_t>(values_.size());
    values_.push_back(std::move(values));
  } else {
    values_[slot_[p]] = std::move(values);
  }
}

std::vector<double> multiplicative_fill(std::span<const std::uint32_t> spf, const PrimePowerTable& table) {
  const std::size_t N = spf.size() - 1;
  std::vector<double> out(N + 1, 0.0);
  if (N >= 1) out[1] = 1.0;
#pragma omp parallel for schedule(static, 4096)
  for (std::size_t n = 2; n <= N; ++n) {
    std::size_t m = n;
    double acc = 1.0;
    while (m > 1) {
      const std::uint32_t p = spf[m];
      unsigned a = 0;
      while (m % p == 0) {
        m /= p;
        ++a;
      }
      acc *= table.at(p, a);
    }
    out[n] = acc;
  }
  return out;
}

std::vector<double> multiplicative_fill_reference(std::span<const std::uint32_t> spf,
                                                  const PrimePowerTable& table) {
  const std::size_t N = spf.size() - 1;
  std::vector<double> out(N + 1, 0.0);
  if (N >= 1) out[1] = 1.0;
  for (std::size_t n = 2; n <= N; ++n) {
    const std::uint32_t p = spf[n];
    std::size_t rest = n;
    unsigned a = 0;
    while (rest % p == 0) {
      rest /= p;
      ++a;
    }
    out[n] = table.at(p, a) * out[rest];
  }
  return out;
}

}  // namespace symmoment::kernels
