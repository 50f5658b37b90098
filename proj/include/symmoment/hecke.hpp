#pragma once

// q-expansions of the level-1 cusp eigenforms of weights 12..26, their
// normalized Hecke eigenvalues, Satake angles, and symmetric-power
// coefficients lambda_sym^j(n) over n <= N.

#include <symmoment/bigint.hpp>

#include <complex>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace symmoment {

inline constexpr std::size_t kDefaultQexpLimit = 100000;
inline constexpr std::size_t kHardQexpLimit = 1000000;

struct EigenformTable {
  int weight = 12;
  std::size_t limit = 0;
  std::vector<BigInt> raw;         ///< raw[n] = a(n) for 1 <= n <= limit; raw[0] = 0
  std::vector<double> normalized;  ///< a(n) / n^{(k-1)/2}

  const BigInt& a(std::size_t n) const { return raw[n]; }
  double lambda(std::size_t n) const { return normalized[n]; }
};

struct SatakeEntry {
  std::uint32_t p = 0;
  double t = 0.0;      ///< lambda(p) = alpha_p + beta_p
  double theta = 0.0;  ///< arccos(t / 2) in [0, pi]

  std::complex<double> alpha() const { return std::polar(1.0, theta); }
  std::complex<double> beta() const { return std::polar(1.0, -theta); }
};

bool is_supported_weight(int weight);

/// tau(1..N) from (sum_k (-1)^k (2k+1) q^{k(k+1)/2})^8 by three exact squarings.
EigenformTable delta_qexp(std::size_t N, std::size_t max_limit = kDefaultQexpLimit);

/// Normalized eigenform of weight 12, 16, 18, 20, 22 or 26 as Delta * E4^a * E6^b.
EigenformTable eigenform_qexp(int weight, std::size_t N, std::size_t max_limit = kDefaultQexpLimit);

/// Fills normalized from raw.
void normalize(EigenformTable& table);

/// theta = arccos(t / 2) with t / 2 clamped to [-1, 1].
double satake_angle(double t);

std::vector<SatakeEntry> satake_table(const EigenformTable& form);

/// lambda_sym^j(p^a) for a = 0..max_a at a prime with lambda(p) = t.
std::vector<double> sym_prime_powers(int j, int max_a, double t);
double sym_prime_power(int j, int a, double t);

/// lambda_sym^j(n) for 0 <= n <= N (index 0 unused, value 0).
std::vector<double> sym_coeff_sieve(int j, std::size_t N, const EigenformTable& form);

/// Exact check a(p^{c+1}) = a(p) a(p^c) - p^{k-1} a(p^{c-1}) for all p^{c+1} <= bound.
/// Returns the number of relations checked; throws ConsistencyError on failure.
std::size_t check_hecke_recursion(const EigenformTable& form, std::size_t bound);

/// Cheap structural validation used on cache load: a(1) = 1 and the recursion at small primes.
void validate_table(const EigenformTable& form);

// Cache files: "tau_<weight>_<N>.csv", header "n,a_n", one base-10 row per n.
std::string cache_file_name(int weight, std::size_t N);
void write_table_csv(std::ostream& os, const EigenformTable& form);
EigenformTable read_table_csv(std::istream& is, int weight);

/// Loads the cached table if present (re-validating it), otherwise computes and stores it.
EigenformTable load_or_compute(int weight, std::size_t N, const std::filesystem::path& cache_dir,
                               std::size_t max_limit = kDefaultQexpLimit);

}  // namespace symmoment
