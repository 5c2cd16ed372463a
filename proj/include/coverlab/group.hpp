#pragma once

// Finite groups as Cayley tables, built from permutation generators.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coverlab::group {

using ElementId = std::uint32_t;

inline constexpr std::size_t kClosureCap = 5000;
inline constexpr std::size_t kAssociativityCheckLimit = 256;

/// Bitset over the element ids of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  static ElementSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  void insert(ElementId x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(ElementId x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
  bool contains(ElementId x) const { return words_[x >> 6] >> (x & 63) & 1; }
  std::size_t size() const;
  bool empty() const;
  std::vector<ElementId> elements() const;
  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet& operator&=(const ElementSet& rhs);
  ElementSet& operator|=(const ElementSet& rhs);
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(static_cast<ElementId>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Lexicographic order of the sorted member lists.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b);

  std::size_t hash() const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// Permutation of {0, ..., degree-1} as an image vector.
using Permutation = std::vector<std::uint32_t>;

/// Parses cycle notation over points 1..degree, e.g. "(1 2)(3 4 5)" or "()".
/// Points inside a cycle may be separated by spaces or commas. Throws
/// std::invalid_argument on malformed input.
Permutation parse_cycles(std::string_view text, std::size_t degree);
/// Inverse of parse_cycles; "()" for the identity.
std::string format_cycles(const Permutation& p);

/// Group given by its composition table over ids 0..order-1, identity 0.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(1, {0}) {}
  /// Validates the identity row and column, the Latin-square property, and
  /// (for order <= 256) associativity; throws std::invalid_argument.
  FiniteGroup(std::size_t order, std::vector<ElementId> table, std::vector<std::string> labels = {},
              std::string name = {});

  std::size_t order() const { return order_; }
  static constexpr ElementId identity() { return 0; }
  ElementId mul(ElementId a, ElementId b) const { return table_[a * order_ + b]; }
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  /// g x g^-1
  ElementId conjugate(ElementId g, ElementId x) const { return mul(mul(g, x), inverse_[g]); }
  unsigned element_order(ElementId x) const;
  bool is_abelian() const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  /// Human-readable element names; "" when none were given.
  std::string label(ElementId x) const { return x < labels_.size() ? labels_[x] : std::string(); }

 private:
  std::size_t order_;
  std::vector<std::uint16_t> table_;
  std::vector<ElementId> inverse_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Closure of the generators under composition; ids follow BFS discovery
/// order from the identity, multiplying on the right by each generator in
/// turn. Products compose right to left, (pq)(x) = p(q(x)). Throws
/// std::invalid_argument on a malformed permutation and BudgetExceeded when
/// the closure exceeds `cap`.
FiniteGroup group_from_generators(std::size_t degree, std::span<const Permutation> generators,
                                  std::size_t cap = kClosureCap);

/// Subgroup of a FiniteGroup, held as the member bitset. Construction
/// validates identity and closure against the parent group.
class Subgroup {
 public:
  Subgroup() = default;
  /// Throws std::invalid_argument if `members` is not a subgroup of G.
  static Subgroup from_elements(const FiniteGroup& G, ElementSet members);
  static Subgroup generated_by(const FiniteGroup& G, std::span<const ElementId> generators);
  static Subgroup trivial(const FiniteGroup& G);
  static Subgroup whole(const FiniteGroup& G);

  const ElementSet& members() const { return members_; }
  std::size_t order() const { return order_; }
  std::size_t index_in(const FiniteGroup& G) const { return G.order() / order_; }
  bool contains(ElementId x) const { return members_.contains(x); }
  bool contains(const Subgroup& other) const { return other.members_.is_subset_of(members_); }
  std::vector<ElementId> elements() const { return members_.elements(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  /// Order first, then the lexicographic order of the member lists.
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b);

 private:
  Subgroup(ElementSet members, std::size_t order) : members_(std::move(members)), order_(order) {}
  friend Subgroup trusted_subgroup(ElementSet members);
  ElementSet members_;
  std::size_t order_ = 0;
};

/// Subgroup from a set already known to be closed. Internal fast path.
Subgroup trusted_subgroup(ElementSet members);

bool is_subgroup(const FiniteGroup& G, const ElementSet& members);
Subgroup closure(const FiniteGroup& G, const ElementSet& seed);
Subgroup join(const FiniteGroup& G, const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, ElementId g);
/// x H as an element set.
ElementSet left_coset(const FiniteGroup& G, ElementId x, const Subgroup& H);
/// For each element, the smallest element id of its left coset xH.
std::vector<ElementId> left_coset_labels(const FiniteGroup& G, const Subgroup& H);

/// H normal in K (H <= K <= G).
bool is_normal_in(const FiniteGroup& G, const Subgroup& K, const Subgroup& H);
bool is_normal(const FiniteGroup& G, const Subgroup& H);

/// Intersection of all conjugates of H. Throws when H is not a subgroup of G.
Subgroup core_of(const FiniteGroup& G, const Subgroup& H);
/// Subgroup of K generated by the K-conjugates of H.
Subgroup normal_closure(const FiniteGroup& G, const Subgroup& K, const Subgroup& H);

struct SubnormalReport {
  bool subnormal = false;
  /// K_0 = G, K_{t+1} = normal closure of H in K_t, until it stabilises.
  std::vector<Subgroup> chain;
  /// Number of proper steps when subnormal (the defect); metadata only.
  std::size_t defect = 0;
};

SubnormalReport is_subnormal(const FiniteGroup& G, const Subgroup& H);

Subgroup derived_subgroup(const FiniteGroup& G, const Subgroup& K);
std::vector<Subgroup> derived_series(const FiniteGroup& G);
bool is_solvable(const FiniteGroup& G);

/// True when G has a normal Sylow p-subgroup, i.e. the p-elements form a
/// subgroup. Vacuously true when p does not divide |G|.
bool has_normal_sylow(const FiniteGroup& G, std::uint64_t p);

/// Quotient by a normal subgroup, materialised as a coset table. Coset ids
/// follow the order of the cosets' smallest element ids.
struct Quotient {
  FiniteGroup group;
  std::vector<ElementId> projection;  // element -> coset id
};

/// Throws std::invalid_argument when N is not normal.
Quotient quotient(const FiniteGroup& G, const Subgroup& N);

/// H as a group in its own right, elements renumbered in increasing id order.
FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H);

}  // namespace coverlab::group
