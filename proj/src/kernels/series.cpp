#include <symmoment/error.hpp>
#include <symmoment/kernels/series.hpp>

#include <algorithm>
#include <bit>

namespace symmoment::kernels {
namespace {

// Transforms up to 2^kMaxLog points; with N <= 10^6 products never need more than 2^21.
constexpr unsigned kMaxLog = 22;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t primitive_root(std::uint32_t p) {
  std::vector<std::uint64_t> factors;
  std::uint64_t n = p - 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  for (std::uint32_t g = 2;; ++g) {
    bool ok = true;
    for (auto q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

struct Channel {
  std::uint32_t p;
  std::uint32_t g;
};

const std::vector<Channel>& channels() {
  static const std::vector<Channel> list = [] {
    std::vector<Channel> out;
    constexpr std::uint64_t step = std::uint64_t{1} << kMaxLog;
    for (std::uint64_t c = ((std::uint64_t{1} << 32) - 1) / step; c * step > (std::uint64_t{1} << 31); --c) {
      std::uint64_t p = c * step + 1;
      if (is_prime(p)) out.push_back({static_cast<std::uint32_t>(p), primitive_root(static_cast<std::uint32_t>(p))});
    }
    return out;
  }();
  return list;
}

void ntt(std::vector<std::uint64_t>& a, const Channel& ch, bool inverse) {
  const std::size_t n = a.size();
  const std::uint64_t p = ch.p;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t w = pow_mod(ch.g, (p - 1) / len, p);
    if (inverse) w = pow_mod(w, p - 2, p);
    const std::size_t half = len >> 1;
    std::vector<std::uint64_t> tw(half);
    tw[0] = 1;
    for (std::size_t k = 1; k < half; ++k) tw[k] = tw[k - 1] * w % p;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        std::uint64_t u = a[i + k];
        std::uint64_t v = a[i + k + half] * tw[k] % p;
        a[i + k] = u + v >= p ? u + v - p : u + v;
        a[i + k + half] = u >= v ? u - v : u + p - v;
      }
    }
  }
  if (inverse) {
    const std::uint64_t inv_n = pow_mod(n, p - 2, p);
    for (auto& x : a) x = x * inv_n % p;
  }
}

std::size_t max_bits(std::span<const BigInt> v) {
  std::size_t bits = 0;
  for (const auto& x : v) {
    if (x != 0) bits = std::max<std::size_t>(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  return bits;
}

std::vector<std::uint64_t> reduce(std::span<const BigInt> v, std::size_t n, std::uint32_t p) {
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t i = 0; i < v.size() && i < n; ++i) {
    out[i] = mpz_fdiv_ui(v[i].get_mpz_t(), p);
  }
  return out;
}

std::vector<BigInt> convolve(std::span<const BigInt> a, std::span<const BigInt> b, std::size_t len,
                             bool is_square) {
  if (len == 0) return {};
  a = a.first(std::min(a.size(), len));
  b = b.first(std::min(b.size(), len));
  std::vector<BigInt> out(len);
  if (a.empty() || b.empty()) return out;

  const std::size_t full = a.size() + b.size() - 1;
  const std::size_t n = std::bit_ceil(full);
  if (n > (std::size_t{1} << kMaxLog)) throw CapacityError("series product exceeds transform size");

  const std::size_t k = channels_needed(max_bits(a), max_bits(b), std::min(a.size(), b.size()));
  const auto& chans = channels();
  if (k > chans.size()) throw CapacityError("series product needs too many residue channels");

  std::vector<std::vector<std::uint64_t>> residues(k);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t c = 0; c < k; ++c) {
    const Channel& ch = chans[c];
    auto fa = reduce(a, n, ch.p);
    ntt(fa, ch, false);
    if (is_square) {
      for (std::size_t i = 0; i < n; ++i) fa[i] = fa[i] * fa[i] % ch.p;
    } else {
      auto fb = reduce(b, n, ch.p);
      ntt(fb, ch, false);
      for (std::size_t i = 0; i < n; ++i) fa[i] = fa[i] * fb[i] % ch.p;
    }
    ntt(fa, ch, true);
    fa.resize(std::min(len, full));
    residues[c] = std::move(fa);
  }

  // Garner: inv[i][j] = p_j^{-1} mod p_i for j < i.
  std::vector<std::vector<std::uint64_t>> inv(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) inv[i][j] = pow_mod(chans[j].p % chans[i].p, chans[i].p - 2, chans[i].p);
  }
  BigInt modulus = 1;
  for (std::size_t c = 0; c < k; ++c) modulus *= chans[c].p;
  const BigInt half_modulus = modulus / 2;

  const std::size_t n_out = std::min(len, full);
#pragma omp parallel
  {
    std::vector<std::uint64_t> digit(k);
    BigInt acc, radix;
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < n_out; ++i) {
      for (std::size_t c = 0; c < k; ++c) {
        const std::uint64_t p = chans[c].p;
        std::uint64_t x = residues[c][i];
        for (std::size_t d = 0; d < c; ++d) {
          x = (x + p - digit[d] % p) % p * inv[c][d] % p;
        }
        digit[c] = x;
      }
      acc = 0;
      radix = 1;
      for (std::size_t c = 0; c < k; ++c) {
        acc += radix * static_cast<unsigned long>(digit[c]);
        radix *= chans[c].p;
      }
      if (acc > half_modulus) acc -= modulus;
      out[i] = acc;
    }
  }
  return out;
}

}  // namespace

const std::vector<std::uint32_t>& ntt_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    for (const auto& ch : channels()) out.push_back(ch.p);
    return out;
  }();
  return primes;
}

std::size_t channels_needed(std::size_t bits_a, std::size_t bits_b, std::size_t len) {
  // |c_n| <= min(len_a, len_b) * max|a| * max|b|; the modulus must exceed twice that.
  const std::size_t bound_bits = bits_a + bits_b + std::bit_width(len) + 2;
  // Every channel prime exceeds 2^31.
  return (bound_bits + 30) / 31;
}

std::vector<BigInt> multiply(std::span<const BigInt> a, std::span<const BigInt> b, std::size_t len) {
  return convolve(a, b, len, false);
}

std::vector<BigInt> square(std::span<const BigInt> a, std::size_t len) {
  return convolve(a, a, len, true);
}

std::vector<BigInt> multiply_reference(std::span<const BigInt> a, std::span<const BigInt> b,
                                       std::size_t len) {
  std::vector<BigInt> out(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < b.size() && i + k < len; ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

}  // namespace symmoment::kernels
