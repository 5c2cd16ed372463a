#pragma once

// Systems of left cosets a_i G_i in a finite group: covering multiplicity,
// the kernel K_A, the union and index inequalities for coset systems, the
// uniform-cover index theorem with its corollaries, enumeration of uniform
// covers, and the distinct-index partition search.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coverlab/lattice.hpp"
#include "coverlab/rational.hpp"

namespace coverlab::gcover {

using group::ElementId;
using group::ElementSet;
using group::FiniteGroup;
using group::Subgroup;
using group::SubgroupLattice;

inline constexpr std::size_t kSearchOrderCap = 24;
inline constexpr std::size_t kEnumerationEntryCap = 8;
inline constexpr std::size_t kKernelSubsetCap = 12;
inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct CosetEntry {
  ElementId rep = 0;
  Subgroup subgroup;
};

/// Nonempty list of left cosets of one group. The lattice must outlive it.
class CosetSystem {
 public:
  /// Throws std::invalid_argument on an empty list, a representative out of
  /// range, or a subgroup that is not in the lattice.
  CosetSystem(const SubgroupLattice& lattice, std::vector<CosetEntry> entries);

  const SubgroupLattice& lattice() const { return *lattice_; }
  const FiniteGroup& group() const { return lattice_->group(); }
  const std::vector<CosetEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  /// [G : G_i] in entry order.
  const std::vector<std::uint64_t>& indices() const { return indices_; }
  /// Lattice id of G_i.
  std::size_t subgroup_id(std::size_t i) const { return ids_[i]; }
  ElementSet coset(std::size_t i) const;

  /// Representatives replaced by the least element of their coset, entries
  /// sorted by (index, subgroup members, representative).
  CosetSystem canonical() const;
  std::string to_string() const;

  friend bool operator==(const CosetSystem& a, const CosetSystem& b);

 private:
  const SubgroupLattice* lattice_;
  std::vector<CosetEntry> entries_;
  std::vector<std::uint64_t> indices_;
  std::vector<std::size_t> ids_;
};

struct WeightProfile {
  /// w_A(x) for each element id.
  std::vector<std::uint32_t> weights;
  std::optional<std::uint32_t> uniform_m;
  bool is_partition = false;
  /// Every G_i equals G.
  bool is_trivial = false;
};

WeightProfile weight_profile(const CosetSystem& cover);

struct KernelReport {
  Subgroup kernel;
  bool contains_intersection = false;
  bool union_property_verified = false;
  /// The subset sweep was skipped because k exceeds the cap.
  bool partial = false;
  std::uint64_t subsets_checked = 0;
};

/// K_A = {x : w_A(gx) = w_A(g) for all g}, with the coset-union property
/// checked for every nonempty subset of entries when k <= subset_cap.
KernelReport kernel_of(const CosetSystem& cover, std::size_t subset_cap = kKernelSubsetCap);

ExactRational reciprocal_index_sum(const CosetSystem& cover);

// ------------------------------------------------------- union lower bound

struct UnionBoundReport {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds = false;
  bool all_subnormal = false;
  bool prime_series = false;
  /// Neither hypothesis applies; the outcome is informational.
  bool hypothesis_free() const { return !all_subnormal && !prime_series; }
};

/// lhs counts left H-cosets meeting the union of the a_i G_i, rhs counts
/// 0 <= n < [G:H] divisible by some [G:G_i]. Throws std::invalid_argument when
/// some G_i does not contain H.
UnionBoundReport check_union_lower_bound(const SubgroupLattice& L, const Subgroup& H,
                                         const std::vector<CosetEntry>& entries);

// ------------------------------------------------------ aligned index bound

struct Thm32Report {
  /// 'a' to 'd', or '-' when no case applies.
  char case_label = '-';
  std::vector<char> applicable;
  ExactRational lhs;
  ExactRational rhs;
  bool holds = false;
  std::vector<std::string> notes;
  bool informational() const { return case_label == '-'; }
};

/// lhs = (n_1..n_k) / (h, n_1..n_k), rhs = max index multiplicity times the
/// sum of 1/d over d | [n_1..n_k]/(n_1..n_k). Throws std::invalid_argument
/// when the union is not a union of left cosets of H.
Thm32Report check_thm_3_2(const SubgroupLattice& L, const Subgroup& H, const std::vector<CosetEntry>& entries);

// ---------------------------------------------------------- uniform covers

struct EqualIndexPair {
  std::uint64_t prime = 0;
  bool hypothesis = false;
  std::optional<std::pair<std::size_t, std::size_t>> pair;  // positions in canonical order
};

struct UniformCoverReport {
  std::uint32_t m = 0;
  /// Indices in non-decreasing order.
  std::vector<std::uint64_t> indices;
  std::vector<std::uint64_t> primes;
  std::vector<unsigned> exponents;

  std::uint64_t p_r = 0;
  unsigned alpha_r = 0;
  unsigned beta_r = 0;
  ExactRational epsilon_r;
  std::uint64_t M_r = 0;
  ExactRational lhs;
  ExactRational rhs;
  bool holds = false;

  bool cond_a = false;
  /// Condition (a) held only through an empty family.
  bool cond_a_vacuous = false;
  bool cond_b = false;
  bool cond_c = false;
  bool flagged() const { return (cond_a && cond_b) || cond_c; }
  /// "ab", "c", "ab+c" or "".
  std::string justification;

  /// Squarefree |G|: some index divisible by p_r occurs at least
  /// p_1..p_r / prod_{t<r}(p_t + 1) times, which is at least
  /// max{p_1, 2 p_r / (r + 1)}.
  bool squarefree_order = false;
  std::uint64_t sqf_multiplicity = 0;
  ExactRational sqf_bound;
  ExactRational sqf_floor;
  bool sqf_holds = true;

  std::vector<EqualIndexPair> equal_pairs;
  bool equal_pairs_hold = true;

  /// Largest index multiplicity M, least and largest index primes.
  std::uint64_t max_multiplicity = 0;
  bool least_prime_hypothesis = false;
  std::uint64_t p_least = 0;
  std::uint64_t p_greatest = 0;
  std::uint64_t required_multiplicity = 0;
  std::uint64_t multiple_multiplicity = 0;
  bool least_prime_holds = true;

  std::vector<std::string> notes;
};

/// Throws std::invalid_argument for a non-uniform or trivial cover.
UniformCoverReport check_thm_4_1(const CosetSystem& cover);

struct IndexBoundReport {
  std::uint64_t M = 0;
  std::uint64_t c = 0;
  std::uint64_t pi_c = 0;
  double theta_c = 0.0;
  std::uint64_t alpha = 0;
  std::uint64_t distinct_primes = 0;
  std::uint64_t largest_prime = 0;
  double log_n1 = 0.0;
  double l_value = 0.0;
  bool primes_below_c = false;
  bool prime_count_ok = false;
  /// log n_1 <= alpha(M) theta(c(M)), with 1e-9 slack.
  bool log_bound_ok = false;
  /// log n_1 <= l(M), with 1e-9 slack.
  bool l_bound_ok = false;
  bool holds() const { return primes_below_c && prime_count_ok && log_bound_ok && l_bound_ok; }
};

/// Index bounds in terms of the multiplicity bound M (at least 2).
IndexBoundReport check_index_bounds(const std::vector<std::uint64_t>& indices);

struct Conjecture41Report {
  std::uint64_t n_max = 0;
  std::uint64_t multiplicity = 0;
  std::uint64_t least_prime = 0;
  bool holds = false;
  bool precondition_met = false;
};

Conjecture41Report probe_conjecture_4_1(const CosetSystem& cover);

// -------------------------------------------------------------- enumeration

struct EnumerationStats {
  std::uint64_t covers = 0;
  std::uint64_t nodes = 0;
  bool truncated = false;
};

/// Calls `visit` once for every nontrivial uniform m-cover with at most k_max
/// entries, up to reordering, in canonical form. Stops and sets truncated
/// when the node budget runs out. Throws std::invalid_argument beyond the
/// order and entry caps.
EnumerationStats enumerate_uniform_covers(const SubgroupLattice& L, std::size_t k_max, std::uint32_t m,
                                          const std::function<void(const CosetSystem&)>& visit,
                                          std::uint64_t node_budget = kDefaultNodeBudget);

struct HsSearchResult {
  std::string group_name;
  std::optional<CosetSystem> found;
  std::uint64_t nodes_explored = 0;
  std::vector<std::vector<std::uint64_t>> index_multisets_tried;
  bool truncated = false;
};

/// Exhaustive search for a partition of G into cosets of proper subgroups
/// with pairwise distinct indices.
HsSearchResult search_distinct_index_partition(const SubgroupLattice& L,
                                               std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace coverlab::gcover
