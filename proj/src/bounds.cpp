#include "coverlab/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <mpfr.h>

#include "coverlab/arith.hpp"
#include "coverlab/errors.hpp"
#include "coverlab/rational.hpp"

namespace coverlab::bounds {

namespace {

constexpr mpfr_prec_t kHighPrecisionBits = 256;

// prod_{p <= x} p/(p-1) <= x/M
bool defining_inequality(std::uint64_t x, std::uint64_t M) {
  return arith::mertens_product(x) <=
         ExactRational(static_cast<std::int64_t>(x), static_cast<std::int64_t>(M));
}

// Lower or upper bound of log2(pi^2/6 * c) depending on rounding direction.
std::int64_t floor_of_bound(std::uint64_t c, mpfr_rnd_t rnd) {
  mpfr_t v;
  mpfr_init2(v, kHighPrecisionBits);
  mpfr_const_pi(v, rnd);
  mpfr_sqr(v, v, rnd);
  mpfr_div_ui(v, v, 6, rnd);
  mpfr_mul_ui(v, v, static_cast<unsigned long>(c), rnd);
  mpfr_log2(v, v, rnd);
  mpfr_floor(v, v);
  const long out = mpfr_get_si(v, MPFR_RNDN);
  mpfr_clear(v);
  return out;
}

}  // namespace

double zeta2() { return std::numbers::pi * std::numbers::pi / 6.0; }

std::uint64_t c_of(std::uint64_t M) {
  if (M < 2) throw std::invalid_argument("c_of: M must be at least 2");
  const auto& sieve = arith::default_sieve();
  const auto& primes = sieve.primes();
  const BigInt m = to_bigint(M);
  BigInt num = 1;
  BigInt den = 1;
  // x = 1 has product 1 and 1 < M, so the first candidate segment starts at 2.
  std::uint64_t c = 0;
  for (std::size_t j = 0; j < primes.size(); ++j) {
    const std::uint64_t p = primes[j];
    num *= static_cast<unsigned long>(p);
    den *= static_cast<unsigned long>(p - 1);
    const std::uint64_t next = j + 1 < primes.size() ? primes[j + 1] : sieve.capacity() + 1;
    BigInt x_min;
    mpz_cdiv_q(x_min.get_mpz_t(), BigInt(m * num).get_mpz_t(), den.get_mpz_t());
    if (x_min < to_bigint(next)) {
      c = std::max(p, to_u64(x_min));
      break;
    }
  }
  if (c == 0) {
    throw CapacityError("c_of: sieve capacity " + std::to_string(sieve.capacity()) +
                        " reached before the inequality holds for M = " + std::to_string(M));
  }
  if (!defining_inequality(c, M) || defining_inequality(c - 1, M)) {
    throw std::logic_error("c_of: minimality check failed at " + std::to_string(c));
  }
  return c;
}

std::int64_t floor_log2_zeta2_times(std::uint64_t c) {
  if (c == 0) throw std::invalid_argument("floor_log2_zeta2_times: c must be positive");
  const std::int64_t lo = floor_of_bound(c, MPFR_RNDD);
  const std::int64_t hi = floor_of_bound(c, MPFR_RNDU);
  if (lo != hi) {
    throw std::runtime_error("floor_log2_zeta2_times: 256-bit interval straddles an integer");
  }
  return lo;
}

AlphaResult alpha_of(std::uint64_t c, double guard) {
  if (c == 0) throw std::invalid_argument("alpha_of: c must be positive");
  AlphaResult r;
  r.log2_value = std::log2(zeta2() * static_cast<double>(c));
  const double nearest = std::round(r.log2_value);
  if (std::fabs(r.log2_value - nearest) < guard) {
    r.escalated = true;
    r.alpha = static_cast<std::uint64_t>(2 + floor_log2_zeta2_times(c));
  } else {
    r.alpha = static_cast<std::uint64_t>(2 + static_cast<std::int64_t>(std::floor(r.log2_value)));
  }
  return r;
}

BoundReport bound_report(std::uint64_t M) {
  BoundReport rep;
  rep.M = M;
  rep.c = c_of(M);
  const auto counts = arith::prime_counts(rep.c);
  rep.pi_c = counts.pi;
  rep.theta_c = counts.theta;
  const auto a = alpha_of(rep.c);
  rep.alpha = a.alpha;
  rep.alpha_escalated = a.escalated;
  const double log_c = std::log(static_cast<double>(rep.c));
  rep.l_value = (2.0 + a.log2_value) * static_cast<double>(rep.pi_c) * log_c;
  rep.alpha_theta = static_cast<double>(rep.alpha) * rep.theta_c;
  const double m = static_cast<double>(M);
  rep.prime_bound_float = std::exp(kEulerGamma) * m * std::log(m);
  rep.prime_count_reference = std::exp(kEulerGamma) * m;
  rep.notes.push_back("asymptotic references e^gamma M log M and e^gamma M carry unknown O-terms; "
                      "comparisons against them are heuristic diagnostics only");
  if (a.escalated) rep.notes.push_back("alpha floor taken from 256-bit interval evaluation");
  return rep;
}

QBoundReport check_q_bound(std::uint64_t q, std::uint64_t M, std::uint64_t c) {
  if (q < 2) throw std::invalid_argument("check_q_bound: q must exceed 1");
  if (M < 2) throw std::invalid_argument("check_q_bound: M must be at least 2");
  QBoundReport rep;
  rep.q = q;
  rep.M = M;
  rep.c = c;
  rep.premise_holds = ExactRational(static_cast<std::int64_t>(q)) <
                      ExactRational(static_cast<std::int64_t>(M)) * arith::mertens_product(q);
  rep.conclusion_holds = q < c;
  rep.implication_holds = !rep.premise_holds || rep.conclusion_holds;
  return rep;
}

QBoundReport check_q_bound(std::uint64_t q, std::uint64_t M) {
  if (M < 2) throw std::invalid_argument("check_q_bound: M must be at least 2");
  return check_q_bound(q, M, c_of(M));
}

}  // namespace coverlab::bounds
