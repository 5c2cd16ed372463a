#include "coverlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "coverlab/errors.hpp"

namespace coverlab::arith {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": argument must be positive");
}

// Product of v[lo, hi) by binary splitting; keeps operand sizes balanced.
BigInt product(const std::vector<BigInt>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 0) return 1;
  if (hi - lo == 1) return v[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return product(v, lo, mid) * product(v, mid, hi);
}

}  // namespace

Sieve::Sieve(std::uint64_t capacity) : capacity_(capacity), composite_(capacity + 1, false) {
  if (capacity < 2) throw std::invalid_argument("Sieve: capacity must be at least 2");
  composite_[0] = composite_[1] = true;
  for (std::uint64_t i = 2; i * i <= capacity; ++i) {
    if (composite_[i]) continue;
    for (std::uint64_t j = i * i; j <= capacity; j += i) composite_[j] = true;
  }
  for (std::uint64_t i = 2; i <= capacity; ++i) {
    if (!composite_[i]) primes_.push_back(static_cast<std::uint32_t>(i));
  }
}

bool Sieve::is_prime(std::uint64_t n) const {
  if (n > capacity_) {
    throw CapacityError("sieve capacity " + std::to_string(capacity_) + " exceeded by " +
                        std::to_string(n));
  }
  return !composite_[n];
}

std::span<const std::uint32_t> Sieve::primes_up_to(std::uint64_t x) const {
  if (x > capacity_) {
    throw CapacityError("sieve capacity " + std::to_string(capacity_) + " exceeded by " +
                        std::to_string(x));
  }
  auto end = std::upper_bound(primes_.begin(), primes_.end(), x);
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

const Sieve& default_sieve() {
  static const Sieve sieve;
  return sieve;
}

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

unsigned Factorization::ord(std::uint64_t p) const {
  for (const auto& f : factors) {
    if (f.prime == p) return f.exponent;
  }
  return 0;
}

bool Factorization::squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

Factorization factorize(std::uint64_t n) {
  require_positive(n, "factorize");
  Factorization out;
  out.base = n;
  std::uint64_t rest = n;
  const Sieve& sieve = default_sieve();
  for (std::uint64_t p : sieve.primes()) {
    if (p * p > rest) break;
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (rest > 1) {
    const std::uint64_t last = sieve.primes().back();
    if (rest / last >= last) {
      // rest may still be composite with every factor above the sieve
      throw CapacityError("factorize: cofactor " + std::to_string(rest) +
                          " exceeds the sieve's trial-division range");
    }
    out.factors.push_back({rest, 1});
  }
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  require_positive(n, "euler_phi");
  std::uint64_t phi = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

std::vector<std::uint64_t> divisor_list(std::uint64_t n) {
  require_positive(n, "divisor_list");
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, e] : factorize(n).factors) {
    const std::size_t current = divs.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < current; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

unsigned ord(std::uint64_t p, std::uint64_t n) {
  if (p < 2) throw std::invalid_argument("ord: p must be a prime");
  require_positive(n, "ord");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

GcdLcm gcd_lcm(std::span<const std::uint64_t> values) {
  if (values.empty()) throw std::invalid_argument("gcd_lcm: empty list");
  std::uint64_t g = 0;
  BigInt l = 1;
  for (std::uint64_t v : values) {
    require_positive(v, "gcd_lcm");
    g = std::gcd(g, v);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), to_bigint(v).get_mpz_t());
  }
  return {g, l};
}

ExactRational mertens_product(std::uint64_t x) {
  require_positive(x, "mertens_product");
  std::vector<BigInt> nums, dens;
  for (std::uint64_t p : default_sieve().primes_up_to(x)) {
    nums.emplace_back(to_bigint(p));
    dens.emplace_back(to_bigint(p - 1));
  }
  return ExactRational(product(nums, 0, nums.size()), product(dens, 0, dens.size()));
}

PrimeCounts prime_counts(std::uint64_t x) {
  require_positive(x, "prime_counts");
  PrimeCounts out;
  for (std::uint64_t p : default_sieve().primes_up_to(x)) {
    ++out.pi;
    out.theta += std::log(static_cast<double>(p));
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  const Sieve& sieve = default_sieve();
  if (n <= sieve.capacity()) return sieve.is_prime(n);
  const auto f = factorize(n);
  return f.factors.size() == 1 && f.factors.front().exponent == 1;
}

BigInt power(std::uint64_t p, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), to_bigint(p).get_mpz_t(), e);
  return r;
}

}  // namespace coverlab::arith
