#include <symmoment/error.hpp>
#include <symmoment/hecke.hpp>
#include <symmoment/kernels/series.hpp>
#include <symmoment/kernels/sieve.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace symmoment {
namespace {

void check_limit(std::size_t N, std::size_t max_limit) {
  if (N < 1) throw DomainError("q-expansion limit must be positive");
  if (max_limit > kHardQexpLimit) max_limit = kHardQexpLimit;
  if (N > max_limit) {
    throw CapacityError("q-expansion limit " + std::to_string(N) + " exceeds " + std::to_string(max_limit));
  }
}

BigInt from_u128(unsigned __int128 v) {
  BigInt hi = static_cast<unsigned long>(v >> 64);
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(v));
  return (hi << 64) + lo;
}

/// 1 + scale * sum_{n>=1} sigma_power(n) q^n for 0 <= n <= len-1.
std::vector<BigInt> eisenstein(std::size_t len, unsigned power, long scale) {
  std::vector<unsigned __int128> sigma(len, 0);
  for (std::size_t d = 1; d < len; ++d) {
    unsigned __int128 dp = 1;
    for (unsigned k = 0; k < power; ++k) dp *= d;
    for (std::size_t m = d; m < len; m += d) sigma[m] += dp;
  }
  std::vector<BigInt> out(len);
  out[0] = 1;
  for (std::size_t n = 1; n < len; ++n) out[n] = from_u128(sigma[n]) * scale;
  return out;
}

/// Delta as a series indexed by the power of q, length N + 1.
std::vector<BigInt> delta_series(std::size_t N) {
  // prod (1 - q^n)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}
  std::vector<BigInt> eta3(N, 0);
  for (std::size_t k = 0; k * (k + 1) / 2 < N; ++k) {
    long v = static_cast<long>(2 * k + 1);
    eta3[k * (k + 1) / 2] = k % 2 ? -v : v;
  }
  auto eta6 = kernels::square(eta3, N);
  auto eta12 = kernels::square(eta6, N);
  auto eta24 = kernels::square(eta12, N);
  std::vector<BigInt> out(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) out[n] = std::move(eta24[n - 1]);
  return out;
}

}  // namespace

bool is_supported_weight(int weight) {
  switch (weight) {
    case 12: case 16: case 18: case 20: case 22: case 26: return true;
    default: return false;
  }
}

void normalize(EigenformTable& table) {
  const double half = (table.weight - 1) / 2.0;
  table.normalized.assign(table.limit + 1, 0.0);
  for (std::size_t n = 1; n <= table.limit; ++n) {
    table.normalized[n] = table.raw[n].get_d() / std::pow(static_cast<double>(n), half);
  }
}

EigenformTable delta_qexp(std::size_t N, std::size_t max_limit) {
  check_limit(N, max_limit);
  EigenformTable table;
  table.weight = 12;
  table.limit = N;
  table.raw = delta_series(N);
  normalize(table);
  return table;
}

EigenformTable eigenform_qexp(int weight, std::size_t N, std::size_t max_limit) {
  if (!is_supported_weight(weight)) {
    throw DomainError("no one-dimensional level-1 cusp space of weight " + std::to_string(weight));
  }
  if (weight == 12) return delta_qexp(N, max_limit);
  check_limit(N, max_limit);
  const std::size_t len = N + 1;
  std::vector<BigInt> f = delta_series(N);
  const auto e4 = eisenstein(len, 3, 240);
  const auto e6 = eisenstein(len, 5, -504);
  int e4_power = 0, e6_power = 0;
  switch (weight) {
    case 16: e4_power = 1; break;
    case 18: e6_power = 1; break;
    case 20: e4_power = 2; break;
    case 22: e4_power = 1; e6_power = 1; break;
    case 26: e4_power = 2; e6_power = 1; break;
  }
  for (int i = 0; i < e4_power; ++i) f = kernels::multiply(f, e4, len);
  for (int i = 0; i < e6_power; ++i) f = kernels::multiply(f, e6, len);
  EigenformTable table;
  table.weight = weight;
  table.limit = N;
  table.raw = std::move(f);
  normalize(table);
  return table;
}

double satake_angle(double t) { return std::acos(std::clamp(t / 2.0, -1.0, 1.0)); }

std::vector<SatakeEntry> satake_table(const EigenformTable& form) {
  std::vector<SatakeEntry> out;
  for (auto p : kernels::primes_up_to(form.limit)) {
    const double t = form.lambda(p);
    out.push_back({p, t, satake_angle(t)});
  }
  return out;
}

std::vector<double> sym_prime_powers(int j, int max_a, double t) {
  if (j < 0 || max_a < 0) throw DomainError("sym_prime_powers: negative index");
  if (!(std::abs(t) <= 2.0 + 1e-12)) throw DomainError("sym_prime_powers: |t| > 2");
  const double theta = satake_angle(t);
  std::vector<std::complex<double>> series(max_a + 1, 0.0);
  series[0] = 1.0;
  // Multiply by 1 / (1 - w X) for each root w = e^{i (j - 2m) theta}.
  for (int m = 0; m <= j; ++m) {
    const auto w = std::polar(1.0, (j - 2 * m) * theta);
    for (int k = 1; k <= max_a; ++k) series[k] += w * series[k - 1];
  }
  std::vector<double> out(max_a + 1);
  for (int k = 0; k <= max_a; ++k) {
    const double re = series[k].real();
    if (std::abs(series[k].imag()) > 1e-10 * std::max(1.0, std::abs(re))) {
      throw ConsistencyError("sym_prime_powers: imaginary residue " + std::to_string(series[k].imag()));
    }
    out[k] = re;
  }
  return out;
}

double sym_prime_power(int j, int a, double t) { return sym_prime_powers(j, a, t)[a]; }

std::vector<double> sym_coeff_sieve(int j, std::size_t N, const EigenformTable& form) {
  if (j < 1) throw DomainError("sym_coeff_sieve: j must be positive");
  if (form.limit < N) throw CapacityError("eigenform table shorter than the sieve range");
  const auto spf = kernels::smallest_prime_factors(N);
  std::vector<std::uint32_t> primes;
  for (std::size_t n = 2; n <= N; ++n) {
    if (spf[n] == n) primes.push_back(static_cast<std::uint32_t>(n));
  }
  std::vector<std::vector<double>> values(primes.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint32_t p = primes[i];
    auto v = sym_prime_powers(j, static_cast<int>(kernels::max_exponent(p, N)), form.lambda(p));
    v.erase(v.begin());
    values[i] = std::move(v);
  }
  kernels::PrimePowerTable table(N);
  for (std::size_t i = 0; i < primes.size(); ++i) table.set(primes[i], std::move(values[i]));
  return kernels::multiplicative_fill(spf, table);
}

std::size_t check_hecke_recursion(const EigenformTable& form, std::size_t bound) {
  bound = std::min(bound, form.limit);
  std::size_t checked = 0;
  for (auto p : kernels::primes_up_to(bound)) {
    const BigInt pk = ipow(p, form.weight - 1);
    std::uint64_t prev = 1, cur = p;
    while (cur <= bound / p) {
      const std::uint64_t next = cur * p;
      const BigInt expect = form.a(p) * form.a(cur) - pk * form.a(prev);
      if (form.a(next) != expect) {
        throw ConsistencyError("Hecke recursion fails at p=" + std::to_string(p) +
                               ", p^c=" + std::to_string(next));
      }
      ++checked;
      prev = cur;
      cur = next;
    }
  }
  return checked;
}

void validate_table(const EigenformTable& form) {
  if (form.limit < 1 || form.raw.size() != form.limit + 1) throw ConsistencyError("table size mismatch");
  if (form.a(1) != 1) throw ConsistencyError("a(1) != 1");
  check_hecke_recursion(form, std::min<std::size_t>(form.limit, 1024));
  if (form.limit >= 6 && form.a(6) != form.a(2) * form.a(3)) throw ConsistencyError("a(6) != a(2) a(3)");
}

std::string cache_file_name(int weight, std::size_t N) {
  return "tau_" + std::to_string(weight) + "_" + std::to_string(N) + ".csv";
}

void write_table_csv(std::ostream& os, const EigenformTable& form) {
  os << "n,a_n\n";
  for (std::size_t n = 1; n <= form.limit; ++n) os << n << ',' << form.raw[n].get_str(10) << '\n';
}

EigenformTable read_table_csv(std::istream& is, int weight) {
  std::string line;
  if (!std::getline(is, line) || line != "n,a_n") throw FormatError("cache file: bad header");
  EigenformTable table;
  table.weight = weight;
  table.raw.emplace_back(0);
  std::size_t expect = 1;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw FormatError("cache file: missing comma on row " + std::to_string(expect));
    if (line.substr(0, comma) != std::to_string(expect)) {
      throw FormatError("cache file: expected row n=" + std::to_string(expect));
    }
    BigInt v;
    if (v.set_str(line.substr(comma + 1), 10) != 0) {
      throw FormatError("cache file: bad integer on row " + std::to_string(expect));
    }
    table.raw.push_back(std::move(v));
    ++expect;
  }
  table.limit = table.raw.size() - 1;
  validate_table(table);
  normalize(table);
  return table;
}

EigenformTable load_or_compute(int weight, std::size_t N, const std::filesystem::path& cache_dir,
                               std::size_t max_limit) {
  if (!is_supported_weight(weight)) throw DomainError("unsupported weight " + std::to_string(weight));
  const auto path = cache_dir / cache_file_name(weight, N);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    auto table = read_table_csv(in, weight);
    if (table.limit != N) throw FormatError("cache file " + path.string() + " has the wrong length");
    return table;
  }
  auto table = eigenform_qexp(weight, N, max_limit);
  std::filesystem::create_directories(cache_dir);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    write_table_csv(out, table);
    if (!out) throw FormatError("could not write cache file " + tmp);
  }
  std::filesystem::rename(tmp, path);
  return table;
}

}  // namespace symmoment
