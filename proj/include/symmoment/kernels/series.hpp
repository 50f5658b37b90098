#pragma once

// Exact truncated products of integer power series.
//
// multiply()/square() reduce the operands modulo enough NTT-friendly primes to
// cover a rigorous bound on the output coefficients, transform each residue
// channel independently (OpenMP over channels), and lift the result back with
// Garner's CRT (OpenMP over coefficients). The output is independent of the
// thread count. multiply_reference() is the serial schoolbook product kept as
// the oracle for tests and the benchmark baseline.

#include <symmoment/bigint.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace symmoment::kernels {

/// Coefficients 0..len-1 of a*b.
std::vector<BigInt> multiply(std::span<const BigInt> a, std::span<const BigInt> b, std::size_t len);
std::vector<BigInt> square(std::span<const BigInt> a, std::size_t len);

std::vector<BigInt> multiply_reference(std::span<const BigInt> a, std::span<const BigInt> b,
                                       std::size_t len);

/// Primes p = c * 2^k + 1 < 2^32 usable by the transform, largest first.
const std::vector<std::uint32_t>& ntt_primes();

/// Number of residue channels multiply() uses for operands with these bit sizes.
std::size_t channels_needed(std::size_t bits_a, std::size_t bits_b, std::size_t len);

}  // namespace symmoment::kernels
