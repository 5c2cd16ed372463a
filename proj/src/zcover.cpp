#include "coverlab/zcover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "coverlab/arith.hpp"
#include "coverlab/errors.hpp"

namespace coverlab::zcover {

namespace {

constexpr std::uint64_t kChunk = 1 << 20;

std::map<std::uint64_t, std::uint64_t> modulus_counts(const ResidueSystem& sys) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& c : sys.classes()) ++out[c.modulus];
  return out;
}

// Number of x in [0, period) covered at least once.
std::uint64_t covered_count(const ResidueSystem& sys, std::uint64_t budget) {
  return multiplicity_profile(sys, budget).covered;
}

ExactRational prime_ratio_product(std::span<const std::uint64_t> primes) {
  ExactRational r(1);
  for (std::uint64_t p : primes) {
    r *= ExactRational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(p - 1));
  }
  return r;
}

ExactRational one_minus_inverse_power(std::uint64_t p, unsigned e) {
  return ExactRational(1) - ExactRational(BigInt(1), arith::power(p, e));
}

}  // namespace

ResidueSystem::ResidueSystem(std::vector<ResidueClass> classes) : classes_(std::move(classes)) {
  if (classes_.empty()) throw std::invalid_argument("residue system must be nonempty");
  for (const auto& c : classes_) {
    if (c.modulus == 0) throw std::invalid_argument("modulus must be positive");
    if (c.residue >= c.modulus) {
      throw std::invalid_argument("residue " + std::to_string(c.residue) +
                                  " out of range for modulus " + std::to_string(c.modulus));
    }
  }
}

std::vector<ResidueClass> ResidueSystem::canonical() const {
  auto out = classes_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> ResidueSystem::moduli() const {
  std::vector<std::uint64_t> out;
  out.reserve(classes_.size());
  for (const auto& c : classes_) out.push_back(c.modulus);
  return out;
}

ResidueSystem ResidueSystem::zeroed() const {
  auto out = classes_;
  for (auto& c : out) c.residue = 0;
  return ResidueSystem(std::move(out));
}

std::string ResidueSystem::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (i) os << ' ';
    os << classes_[i].residue << '/' << classes_[i].modulus;
  }
  return os.str();
}

std::uint64_t period_of(const ResidueSystem& sys, std::uint64_t budget) {
  const auto moduli = sys.moduli();
  const BigInt lcm = arith::gcd_lcm(moduli).lcm;
  if (lcm > to_bigint(budget)) {
    throw BudgetExceeded("period " + lcm.get_str() + " exceeds budget " + std::to_string(budget));
  }
  return to_u64(lcm);
}

MultiplicityProfile multiplicity_profile(const ResidueSystem& sys, std::uint64_t budget) {
  MultiplicityProfile prof;
  prof.period = period_of(sys, budget);
  const bool keep = prof.period <= kFullProfileLimit;
  if (keep) prof.counts.reserve(prof.period);
  prof.min_w = ~std::uint64_t{0};
  std::vector<std::uint32_t> chunk;
  for (std::uint64_t lo = 0; lo < prof.period; lo += kChunk) {
    const std::uint64_t hi = std::min(prof.period, lo + kChunk);
    chunk.assign(hi - lo, 0);
    for (const auto& c : sys.classes()) {
      std::uint64_t x = lo + (c.residue + c.modulus - lo % c.modulus) % c.modulus;
      for (; x < hi; x += c.modulus) ++chunk[x - lo];
    }
    for (std::uint32_t w : chunk) {
      prof.min_w = std::min<std::uint64_t>(prof.min_w, w);
      prof.max_w = std::max<std::uint64_t>(prof.max_w, w);
      prof.total += w;
      if (w > 0) ++prof.covered;
    }
    if (keep) prof.counts.insert(prof.counts.end(), chunk.begin(), chunk.end());
  }
  return prof;
}

Classification classify(const ResidueSystem& sys, const MultiplicityProfile& profile) {
  Classification c;
  c.is_cover = profile.min_w >= 1;
  c.is_exact_cover = profile.min_w == 1 && profile.max_w == 1;
  if (profile.min_w == profile.max_w) c.uniform_m = profile.min_w;
  c.is_trivial = std::all_of(sys.classes().begin(), sys.classes().end(),
                             [](const ResidueClass& rc) { return rc.modulus == 1; });
  return c;
}

Classification classify(const ResidueSystem& sys, std::uint64_t budget) {
  return classify(sys, multiplicity_profile(sys, budget));
}

ExactRational density_union(const ResidueSystem& sys, std::uint64_t budget) {
  const auto prof = multiplicity_profile(sys, budget);
  return ExactRational(to_bigint(prof.covered), to_bigint(prof.period));
}

std::uint64_t mu_of_divisor_closure(std::span<const std::uint64_t> values) {
  std::vector<std::uint64_t> closure;
  for (std::uint64_t m : values) {
    const auto divs = arith::divisor_list(m);
    closure.insert(closure.end(), divs.begin(), divs.end());
  }
  std::sort(closure.begin(), closure.end());
  closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
  std::uint64_t mu = 0;
  for (std::uint64_t d : closure) mu += arith::euler_phi(d);
  return mu;
}

Lemma34Report check_lemma_3_4(std::span<const std::uint64_t> moduli, std::uint64_t budget) {
  if (moduli.empty()) throw std::invalid_argument("check_lemma_3_4: empty moduli list");
  if (moduli.size() > kInclusionExclusionMaxTerms) {
    throw BudgetExceeded("check_lemma_3_4: inclusion-exclusion limited to " +
                         std::to_string(kInclusionExclusionMaxTerms) + " moduli");
  }
  std::vector<ResidueClass> classes;
  for (std::uint64_t n : moduli) classes.push_back({0, n});
  const ResidueSystem sys(std::move(classes));

  Lemma34Report rep;
  rep.lhs = density_union(sys, budget);

  // P = union of P(n_i); any superset gives the same value.
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n : moduli) {
    for (std::uint64_t p : arith::factorize(n).primes()) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  const ExactRational smooth_factor = prime_ratio_product(primes);

  ExactRational smooth_sum(0);
  const std::size_t k = moduli.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    BigInt l = 1;
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), to_bigint(moduli[i]).get_mpz_t());
        ++bits;
      }
    }
    const ExactRational term = ExactRational(BigInt(1), l) * smooth_factor;
    if (bits % 2 == 1) {
      smooth_sum += term;
    } else {
      smooth_sum -= term;
    }
  }
  rep.rhs = smooth_sum / smooth_factor;
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

RogersReport check_rogers(const ResidueSystem& sys, std::uint64_t budget) {
  RogersReport rep;
  rep.period = period_of(sys, budget);
  rep.shifted_count = covered_count(sys, budget);
  rep.zeroed_count = covered_count(sys.zeroed(), budget);
  rep.holds = rep.shifted_count >= rep.zeroed_count;
  return rep;
}

Thm42Report check_thm_4_2(const ResidueSystem& sys, unsigned alpha,
                          std::optional<std::uint64_t> prime, std::uint64_t budget) {
  const auto cls = classify(sys, budget);
  if (!cls.uniform_m) throw std::invalid_argument("check_thm_4_2: system is not a uniform cover");
  if (cls.is_trivial) throw std::invalid_argument("check_thm_4_2: system is a trivial cover");

  const auto lcm_fact = arith::factorize(period_of(sys, budget));
  Thm42Report rep;
  for (const auto& f : lcm_fact.factors) {
    rep.primes.push_back(f.prime);
    rep.exponents.push_back(f.exponent);
  }
  rep.prime = prime.value_or(lcm_fact.largest_prime());
  const unsigned alpha_r = lcm_fact.ord(rep.prime);
  if (alpha_r == 0) {
    throw std::invalid_argument("check_thm_4_2: prime " + std::to_string(rep.prime) +
                                " does not divide the lcm of the moduli");
  }

  for (const auto& c : sys.classes()) rep.lambda.push_back(arith::ord(rep.prime, c.modulus));
  std::sort(rep.lambda.begin(), rep.lambda.end());
  rep.lambda.erase(std::unique(rep.lambda.begin(), rep.lambda.end()), rep.lambda.end());
  if (alpha == 0 || !std::binary_search(rep.lambda.begin(), rep.lambda.end(), alpha)) {
    throw std::invalid_argument("check_thm_4_2: alpha " + std::to_string(alpha) +
                                " is not a positive element of Lambda");
  }
  rep.alpha = alpha;
  rep.beta = 0;
  for (unsigned l : rep.lambda) {
    if (l < alpha) rep.beta = std::max(rep.beta, l);
  }

  rep.epsilon = one_minus_inverse_power(rep.prime, alpha_r - alpha + 1);
  for (const auto& f : lcm_fact.factors) {
    if (f.prime != rep.prime) rep.epsilon *= one_minus_inverse_power(f.prime, f.exponent + 1);
  }

  const auto mult = modulus_counts(sys);
  const BigInt p_alpha = arith::power(rep.prime, alpha);
  for (const auto& [n, count] : mult) {
    if (mpz_divisible_p(to_bigint(n).get_mpz_t(), p_alpha.get_mpz_t())) {
      rep.M = std::max(rep.M, count);
    }
    if (arith::ord(rep.prime, n) == alpha_r) {
      rep.top_multiplicity = std::max(rep.top_multiplicity, count);
    }
  }

  rep.lhs = ExactRational(arith::power(rep.prime, alpha - rep.beta));
  rep.rhs = rep.epsilon * ExactRational(static_cast<std::int64_t>(rep.M)) *
            prime_ratio_product(rep.primes);
  rep.holds_4_8 = rep.lhs <= rep.rhs;

  rep.top_bound = ExactRational(static_cast<std::int64_t>(rep.prime));
  for (std::uint64_t p : rep.primes) {
    if (p != rep.prime) {
      rep.top_bound *= ExactRational(static_cast<std::int64_t>(p - 1), static_cast<std::int64_t>(p));
    }
  }
  rep.top_weak_bound = ExactRational(static_cast<std::int64_t>(rep.prime),
                                     static_cast<std::int64_t>(rep.primes.size()));
  rep.holds_4_10 = ExactRational(static_cast<std::int64_t>(rep.top_multiplicity)) >= rep.top_bound &&
                   rep.top_bound >= rep.top_weak_bound;
  return rep;
}

std::vector<Thm42Report> check_thm_4_2_all(const ResidueSystem& sys, std::uint64_t budget) {
  std::vector<Thm42Report> out;
  const auto fact = arith::factorize(period_of(sys, budget));
  for (std::uint64_t p : fact.primes()) {
    std::vector<unsigned> lambda;
    for (const auto& c : sys.classes()) lambda.push_back(arith::ord(p, c.modulus));
    std::sort(lambda.begin(), lambda.end());
    lambda.erase(std::unique(lambda.begin(), lambda.end()), lambda.end());
    for (unsigned a : lambda) {
      if (a > 0) out.push_back(check_thm_4_2(sys, a, p, budget));
    }
  }
  return out;
}

SimpsonReport check_simpson(const ResidueSystem& sys, std::uint64_t budget) {
  if (sys.size() < 2) throw std::invalid_argument("check_simpson: need at least two classes");
  if (!classify(sys, budget).is_exact_cover) {
    throw std::invalid_argument("check_simpson: system is not an exact cover");
  }
  SimpsonReport rep;
  rep.M = max_modulus_multiplicity(sys);
  rep.primes = arith::factorize(period_of(sys, budget)).primes();
  const ExactRational m(static_cast<std::int64_t>(rep.M));
  rep.rhs = m * prime_ratio_product(rep.primes);
  const std::uint64_t pr = rep.primes.back();
  rep.holds = ExactRational(static_cast<std::int64_t>(pr)) <= rep.rhs;
  rep.strong_rhs =
      m * prime_ratio_product(std::span<const std::uint64_t>(rep.primes).first(rep.primes.size() - 1));
  rep.holds_strong = ExactRational(static_cast<std::int64_t>(pr)) <= rep.strong_rhs;
  return rep;
}

ResidueSystem generate_exact_cover(std::span<const SplitStep> script) {
  std::vector<ResidueClass> classes{{0, 1}};
  for (const auto& step : script) {
    if (step.class_index >= classes.size()) {
      throw std::invalid_argument("generate_exact_cover: class index " +
                                  std::to_string(step.class_index) + " out of range");
    }
    if (step.factor < 2) throw std::invalid_argument("generate_exact_cover: split factor must be >= 2");
    const ResidueClass old = classes[step.class_index];
    std::vector<ResidueClass> parts;
    for (std::uint64_t j = 0; j < step.factor; ++j) {
      parts.push_back({old.residue + j * old.modulus, old.modulus * step.factor});
    }
    const auto pos = classes.begin() + static_cast<std::ptrdiff_t>(step.class_index);
    classes.insert(classes.erase(pos), parts.begin(), parts.end());
  }
  return ResidueSystem(std::move(classes));
}

std::uint64_t max_modulus_multiplicity(const ResidueSystem& sys) {
  std::uint64_t best = 0;
  for (const auto& [n, count] : modulus_counts(sys)) best = std::max(best, count);
  return best;
}

bool two_largest_moduli_equal(const ResidueSystem& sys) {
  if (sys.size() < 2) return false;
  auto moduli = sys.moduli();
  std::sort(moduli.begin(), moduli.end());
  return moduli[moduli.size() - 1] == moduli[moduli.size() - 2];
}

LargestModulusReport check_largest_modulus(const ResidueSystem& sys) {
  LargestModulusReport rep;
  const auto counts = modulus_counts(sys);
  rep.largest = counts.rbegin()->first;
  rep.multiplicity = counts.rbegin()->second;
  rep.least_prime = arith::factorize(rep.largest).smallest_prime();
  rep.holds = rep.largest == 1 || rep.multiplicity >= rep.least_prime;
  return rep;
}

}  // namespace coverlab::zcover
