#pragma once

// Finite systems of residue classes a + nZ: covering multiplicity, exact
// densities, the divisor-closure measure, and the number-theoretic checks
// specialised to the infinite cyclic group.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coverlab/rational.hpp"

namespace coverlab::zcover {

inline constexpr std::uint64_t kDefaultPeriodBudget = 10'000'000;
/// Periods up to this size keep the full per-residue count vector.
inline constexpr std::uint64_t kFullProfileLimit = 1'000'000;

struct ResidueClass {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 1;
  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
  friend auto operator<=>(const ResidueClass& a, const ResidueClass& b) {
    if (auto c = a.modulus <=> b.modulus; c != 0) return c;
    return a.residue <=> b.residue;
  }
};

/// Nonempty list of residue classes. Input order is kept; canonical() gives
/// the (modulus, residue) order in which n_1 <= ... <= n_k.
class ResidueSystem {
 public:
  /// Throws std::invalid_argument on an empty list, a zero modulus, or a
  /// residue outside [0, modulus).
  explicit ResidueSystem(std::vector<ResidueClass> classes);

  const std::vector<ResidueClass>& classes() const { return classes_; }
  std::vector<ResidueClass> canonical() const;
  /// Moduli in input order.
  std::vector<std::uint64_t> moduli() const;
  std::size_t size() const { return classes_.size(); }
  /// Same moduli, every residue replaced by 0.
  ResidueSystem zeroed() const;
  std::string to_string() const;

  friend bool operator==(const ResidueSystem&, const ResidueSystem&) = default;

 private:
  std::vector<ResidueClass> classes_;
};

/// Covering function w(x) over one period.
struct MultiplicityProfile {
  std::uint64_t period = 1;
  /// w(x) for x in [0, period); empty when period > kFullProfileLimit.
  std::vector<std::uint32_t> counts;
  std::uint64_t min_w = 0;
  std::uint64_t max_w = 0;
  /// sum_x w(x); equals sum_i period / n_i.
  std::uint64_t total = 0;
  /// |{x : w(x) >= 1}|.
  std::uint64_t covered = 0;
};

/// lcm of the moduli, or BudgetExceeded when it is above `budget`.
std::uint64_t period_of(const ResidueSystem& sys, std::uint64_t budget = kDefaultPeriodBudget);

MultiplicityProfile multiplicity_profile(const ResidueSystem& sys,
                                         std::uint64_t budget = kDefaultPeriodBudget);

struct Classification {
  bool is_cover = false;
  bool is_exact_cover = false;
  std::optional<std::uint64_t> uniform_m;
  bool is_trivial = false;
};

Classification classify(const ResidueSystem& sys, std::uint64_t budget = kDefaultPeriodBudget);
Classification classify(const ResidueSystem& sys, const MultiplicityProfile& profile);

/// d(union of the classes), exact.
ExactRational density_union(const ResidueSystem& sys, std::uint64_t budget = kDefaultPeriodBudget);

/// sum of phi(d) over D(R), the divisors of members of R. 0 for empty R.
std::uint64_t mu_of_divisor_closure(std::span<const std::uint64_t> values);

/// Density of the union of n_i Z computed two ways.
///
/// lhs scans one period of the zero-residue system. rhs evaluates the
/// P-smooth reciprocal sum
///
///   prod_{p in P} (p-1)/p * sum_{n in U n_i Z+, P(n) in P} 1/n
///
/// in closed form: inclusion-exclusion splits the sum over lcm's of index
/// subsets I, and each piece sum_{P(n) in P, lcm_I | n} 1/n equals
/// (1/lcm_I) prod_{p in P} p/(p-1). No truncation is involved.
struct Lemma34Report {
  ExactRational lhs;
  ExactRational rhs;
  bool holds = false;
};

inline constexpr std::size_t kInclusionExclusionMaxTerms = 20;

Lemma34Report check_lemma_3_4(std::span<const std::uint64_t> moduli,
                              std::uint64_t budget = kDefaultPeriodBudget);

/// Shifting residues never shrinks a union of progressions: the count over
/// one period of the shifted system is at least the zero-residue count.
struct RogersReport {
  std::uint64_t period = 1;
  std::uint64_t shifted_count = 0;
  std::uint64_t zeroed_count = 0;
  bool holds = false;
};

RogersReport check_rogers(const ResidueSystem& sys, std::uint64_t budget = kDefaultPeriodBudget);

/// Index inequality for a uniform cover of a cyclic group at one exponent
/// alpha of the designated prime.
struct Thm42Report {
  std::uint64_t prime = 0;  // designated p_r
  std::vector<std::uint64_t> primes;  // all distinct primes of the lcm, ascending
  std::vector<unsigned> exponents;  // alpha_t, aligned with primes
  std::vector<unsigned> lambda;  // {ord_p n_i}, ascending, may contain 0
  unsigned alpha = 0;
  unsigned beta = 0;
  ExactRational epsilon;
  std::uint64_t M = 0;
  ExactRational lhs;  // p^(alpha-beta)
  ExactRational rhs;  // epsilon * M * prod p_t/(p_t-1)
  bool holds_4_8 = false;
  // Consequence at alpha = alpha_r.
  std::uint64_t top_multiplicity = 0;
  ExactRational top_bound;  // p * prod_{t != r} (p_t-1)/p_t
  ExactRational top_weak_bound;  // p / r
  bool holds_4_10 = false;
};

/// Throws std::invalid_argument when sys is not a nontrivial uniform cover,
/// when alpha is 0 or not in Lambda, or when `prime` does not divide the lcm.
/// `prime` defaults to the largest prime divisor of the lcm.
Thm42Report check_thm_4_2(const ResidueSystem& sys, unsigned alpha,
                          std::optional<std::uint64_t> prime = std::nullopt,
                          std::uint64_t budget = kDefaultPeriodBudget);

/// Every (prime, alpha) pair with alpha in Lambda \ {0}.
std::vector<Thm42Report> check_thm_4_2_all(const ResidueSystem& sys,
                                           std::uint64_t budget = kDefaultPeriodBudget);

/// Burshtein's bound for exact covers, p_r <= M prod_{t<=r} p_t/(p_t-1), plus
/// the sharper form with the product over t < r.
struct SimpsonReport {
  std::uint64_t M = 0;
  std::vector<std::uint64_t> primes;
  ExactRational rhs;
  bool holds = false;
  ExactRational strong_rhs;
  bool holds_strong = false;
};

/// Throws std::invalid_argument unless sys is an exact cover with k > 1.
SimpsonReport check_simpson(const ResidueSystem& sys, std::uint64_t budget = kDefaultPeriodBudget);

struct SplitStep {
  std::size_t class_index = 0;
  std::uint64_t factor = 2;
};

/// Starts from {0 mod 1} and replaces class a mod n by a + jn mod dn,
/// j = 0..d-1, for each step. The split classes are appended in place of
/// the original, so class indices of later classes shift by d - 1.
ResidueSystem generate_exact_cover(std::span<const SplitStep> script);

/// Largest modulus multiplicity of a system, max over n of |{i : n_i = n}|.
std::uint64_t max_modulus_multiplicity(const ResidueSystem& sys);

/// For an exact cover with k > 1, the two largest moduli coincide.
bool two_largest_moduli_equal(const ResidueSystem& sys);

/// For a nontrivial uniform cover, the largest modulus occurs at least as
/// often as its least prime divisor.
struct LargestModulusReport {
  std::uint64_t largest = 1;
  std::uint64_t multiplicity = 0;
  std::uint64_t least_prime = 1;
  bool holds = false;
};

LargestModulusReport check_largest_modulus(const ResidueSystem& sys);

}  // namespace coverlab::zcover
