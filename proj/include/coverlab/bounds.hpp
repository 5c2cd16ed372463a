#pragma once

// Bounds on the indices of uniform covers in terms of the largest index
// multiplicity M: the threshold c(M), the exponent alpha(M), and l(M).

#include <cstdint>
#include <string>
#include <vector>

namespace coverlab::bounds {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209;

/// zeta(2) = pi^2/6 in binary64.
double zeta2();

/// Smallest x >= 1 with prod_{p <= x} p/(p-1) <= x/M.
///
/// The product is constant between consecutive primes while x/M grows, so
/// each prime gap is settled by one exact division; the inequality is then
/// re-checked with ExactRational at c and c - 1. Throws std::invalid_argument
/// for M < 2 and CapacityError when the sieve runs out first.
std::uint64_t c_of(std::uint64_t M);

struct AlphaResult {
  std::uint64_t alpha = 0;
  /// log2(zeta(2) c) in binary64.
  double log2_value = 0.0;
  /// True when the binary64 value was within the guard band of an integer
  /// and the floor was taken from a 256-bit interval evaluation instead.
  bool escalated = false;
};

/// alpha = 2 + floor(log2(zeta(2) * c)).
AlphaResult alpha_of(std::uint64_t c, double guard = 1e-9);

/// floor(log2(zeta(2) * c)) from directed-rounding 256-bit bounds.
std::int64_t floor_log2_zeta2_times(std::uint64_t c);

struct BoundReport {
  std::uint64_t M = 0;
  std::uint64_t c = 0;
  std::uint64_t pi_c = 0;
  double theta_c = 0.0;
  std::uint64_t alpha = 0;
  bool alpha_escalated = false;
  /// (2 + log2(zeta(2) c)) pi(c) log c.
  double l_value = 0.0;
  /// alpha(M) theta(c(M)), the sharper middle bound on log of the least index.
  double alpha_theta = 0.0;
  /// e^gamma M log M, asymptotic reference for c(M).
  double prime_bound_float = 0.0;
  /// e^gamma M, asymptotic reference for pi(c(M)).
  double prime_count_reference = 0.0;
  std::vector<std::string> notes;
};

BoundReport bound_report(std::uint64_t M);

struct QBoundReport {
  std::uint64_t q = 0;
  std::uint64_t M = 0;
  std::uint64_t c = 0;
  /// q < M prod_{p <= q} p/(p-1), exact.
  bool premise_holds = false;
  /// q < c(M).
  bool conclusion_holds = false;
  bool implication_holds = false;
};

/// Throws std::invalid_argument for q < 2 or M < 2.
QBoundReport check_q_bound(std::uint64_t q, std::uint64_t M);
/// Same with c(M) supplied by the caller, for sweeps.
QBoundReport check_q_bound(std::uint64_t q, std::uint64_t M, std::uint64_t c);

}  // namespace coverlab::bounds
