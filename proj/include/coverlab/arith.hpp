#pragma once

// Integer and prime-number utilities shared by every other module.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "coverlab/rational.hpp"

namespace coverlab::arith {

inline constexpr std::uint64_t kDefaultSieveCapacity = 10'000'000;

/// Sieve of Eratosthenes over [0, capacity]. Read-only after construction.
class Sieve {
 public:
  explicit Sieve(std::uint64_t capacity = kDefaultSieveCapacity);

  std::uint64_t capacity() const { return capacity_; }
  /// Throws CapacityError when n > capacity().
  bool is_prime(std::uint64_t n) const;
  /// Primes in increasing order.
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  /// Primes p <= x; throws CapacityError when x > capacity().
  std::span<const std::uint32_t> primes_up_to(std::uint64_t x) const;

 private:
  std::uint64_t capacity_;
  std::vector<bool> composite_;
  std::vector<std::uint32_t> primes_;
};

/// Process-wide sieve with the default capacity, built on first use.
const Sieve& default_sieve();

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod prime^exponent with primes strictly increasing.
struct Factorization {
  std::uint64_t base = 1;
  std::vector<PrimePower> factors;

  /// P(n), the set of prime divisors, ascending.
  std::vector<std::uint64_t> primes() const;
  /// ord_p(n); 0 when p does not divide n.
  unsigned ord(std::uint64_t p) const;
  std::uint64_t largest_prime() const { return factors.empty() ? 1 : factors.back().prime; }
  std::uint64_t smallest_prime() const { return factors.empty() ? 1 : factors.front().prime; }
  bool squarefree() const;
};

/// Trial division over sieve primes. Throws std::invalid_argument for n = 0
/// and CapacityError if n has two prime factors above the sieve capacity.
Factorization factorize(std::uint64_t n);

/// Euler's totient, computed multiplicatively. Rejects n = 0.
std::uint64_t euler_phi(std::uint64_t n);

/// All divisors of n in increasing order. Rejects n = 0.
std::vector<std::uint64_t> divisor_list(std::uint64_t n);

/// ord_p(n) without a full factorization.
unsigned ord(std::uint64_t p, std::uint64_t n);

struct GcdLcm {
  std::uint64_t gcd;
  BigInt lcm;
};

/// Exact gcd and lcm; lcm is unbounded. Rejects an empty list or a zero.
GcdLcm gcd_lcm(std::span<const std::uint64_t> values);

/// prod_{p <= x} p/(p-1), exactly; 1 for x < 2.
ExactRational mertens_product(std::uint64_t x);

struct PrimeCounts {
  std::uint64_t pi = 0;
  /// sum_{p <= x} log p, accumulated over primes in ascending order.
  double theta = 0.0;
};

/// pi(x) and theta(x). Throws CapacityError beyond the default sieve.
PrimeCounts prime_counts(std::uint64_t x);

bool is_prime(std::uint64_t n);

/// p^e as an unbounded integer.
BigInt power(std::uint64_t p, unsigned e);

}  // namespace coverlab::arith
