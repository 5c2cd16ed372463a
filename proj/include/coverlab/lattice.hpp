#pragma once

// Subgroup lattice of a finite group plus the structural queries that need
// it: normality, subnormality, cores, quotient data, Sylow and Hall
// subgroups, pyramidal chains and prime-index composition series.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "coverlab/group.hpp"

namespace coverlab::group {

inline constexpr std::size_t kLatticeOrderCap = 200;

/// Every subgroup of G, sorted by (order, member list). Seeds with the cyclic
/// subgroups and closes under joins with them. Throws BudgetExceeded when
/// |G| > cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G, std::size_t cap = kLatticeOrderCap);

class SubgroupLattice {
 public:
  explicit SubgroupLattice(FiniteGroup G, std::size_t cap = kLatticeOrderCap);

  const FiniteGroup& group() const { return group_; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }
  std::size_t size() const { return subgroups_.size(); }
  std::size_t trivial_id() const { return 0; }
  std::size_t whole_id() const { return subgroups_.size() - 1; }

  std::optional<std::size_t> find(const ElementSet& members) const;
  /// Throws std::invalid_argument when H is not in the lattice.
  std::size_t id_of(const Subgroup& H) const;

  bool normal(std::size_t i) const { return normal_[i]; }
  bool subnormal(std::size_t i) const { return subnormal_[i]; }
  std::size_t core(std::size_t i) const { return core_[i]; }
  std::size_t index(std::size_t i) const { return group_.order() / subgroups_[i].order(); }
  std::vector<std::size_t> normal_ids() const;

  /// Quotient data for G/N with N = subgroups()[n], which must be normal.
  bool quotient_solvable(std::size_t n) const;
  bool quotient_has_normal_sylow(std::size_t n, std::uint64_t p) const;

  /// Subgroups K with H < K and [K:H] prime.
  const std::vector<std::size_t>& prime_overgroups(std::size_t h) const { return up_[h]; }
  bool group_solvable() const { return solvable_; }
  /// A normal series of prime-index steps runs from subgroup i up to G.
  bool has_prime_series(std::size_t i) const { return prime_series_[i]; }

 private:
  FiniteGroup group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
  std::vector<bool> normal_;
  std::vector<bool> subnormal_;
  std::vector<std::size_t> core_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<bool> prime_series_;
  std::vector<bool> quotient_solvable_;
  std::vector<std::set<std::uint64_t>> quotient_normal_sylow_;
  bool solvable_ = true;
};

/// A Sylow p-subgroup (the first in lattice order). Throws
/// std::invalid_argument when p does not divide |G|.
Subgroup sylow_subgroup(const SubgroupLattice& L, std::uint64_t p);
/// A Hall omega-subgroup, or nullopt when none exists.
std::optional<Subgroup> hall_subgroup(const SubgroupLattice& L, const std::set<std::uint64_t>& omega);

struct PyramidalReport {
  bool pyramidal = false;
  /// {e} = H_0 < ... < H_n = G when pyramidal.
  std::optional<std::vector<Subgroup>> chain;
};

PyramidalReport is_pyramidal(const SubgroupLattice& L);

/// Chain H = F_0 < F_1 < ... < F_m = G with F_j normal of prime index in
/// F_{j+1}. With `bottom_prime` set, every step of index p precedes every
/// other step.
std::optional<std::vector<Subgroup>> prime_quotient_series(const SubgroupLattice& L, const Subgroup& H,
                                                           std::optional<std::uint64_t> bottom_prime = {});

struct LemmaCheck {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  bool informational = false;
  std::string first_violation;
};

/// Index and normal-Hall lemmas evaluated exhaustively on one group.
std::vector<LemmaCheck> run_lemma_suite(const SubgroupLattice& L);

}  // namespace coverlab::group
