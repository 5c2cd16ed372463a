#include "coverlab/gcover.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "coverlab/arith.hpp"
#include "coverlab/bounds.hpp"

namespace coverlab::gcover {

// ------------------------------------------------------------- CosetSystem

CosetSystem::CosetSystem(const SubgroupLattice& lattice, std::vector<CosetEntry> entries)
    : lattice_(&lattice), entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("coset system needs at least one entry");
  for (const auto& e : entries_) {
    if (e.rep >= lattice.group().order()) throw std::invalid_argument("representative out of range");
    auto id = lattice.find(e.subgroup.members());
    if (!id) throw std::invalid_argument("entry subgroup is not a subgroup of the group");
    ids_.push_back(*id);
    indices_.push_back(lattice.index(*id));
  }
}

ElementSet CosetSystem::coset(std::size_t i) const {
  return group::left_coset(group(), entries_[i].rep, entries_[i].subgroup);
}

CosetSystem CosetSystem::canonical() const {
  std::vector<CosetEntry> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    ElementId least = 0;
    auto c = coset(i);
    c.for_each([&, first = true](ElementId x) mutable {
      if (first) least = x;
      first = false;
    });
    out.push_back({least, entries_[i].subgroup});
  }
  const auto& G = group();
  std::sort(out.begin(), out.end(), [&](const CosetEntry& a, const CosetEntry& b) {
    auto ia = a.subgroup.index_in(G);
    auto ib = b.subgroup.index_in(G);
    if (ia != ib) return ia < ib;
    if (auto c = a.subgroup.members() <=> b.subgroup.members(); c != 0) return c < 0;
    return a.rep < b.rep;
  });
  return CosetSystem(*lattice_, std::move(out));
}

std::string CosetSystem::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ' ';
    os << entries_[i].rep << "*H" << ids_[i] << "[" << indices_[i] << "]";
  }
  return os.str();
}

bool operator==(const CosetSystem& a, const CosetSystem& b) {
  if (a.lattice_ != b.lattice_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].rep != b.entries_[i].rep || a.ids_[i] != b.ids_[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------- weights, kernel

WeightProfile weight_profile(const CosetSystem& cover) {
  WeightProfile wp;
  wp.weights.assign(cover.group().order(), 0);
  for (std::size_t i = 0; i < cover.size(); ++i) cover.coset(i).for_each([&](ElementId x) { ++wp.weights[x]; });
  auto [lo, hi] = std::minmax_element(wp.weights.begin(), wp.weights.end());
  if (*lo == *hi) wp.uniform_m = *lo;
  wp.is_partition = wp.uniform_m == 1u;
  wp.is_trivial = std::all_of(cover.indices().begin(), cover.indices().end(), [](auto n) { return n == 1; });
  return wp;
}

KernelReport kernel_of(const CosetSystem& cover, std::size_t subset_cap) {
  const auto& G = cover.group();
  const auto w = weight_profile(cover).weights;
  ElementSet kernel(G.order());
  for (ElementId x = 0; x < G.order(); ++x) {
    bool keep = true;
    for (ElementId g = 0; g < G.order() && keep; ++g) keep = w[G.mul(g, x)] == w[g];
    if (keep) kernel.insert(x);
  }
  KernelReport report;
  report.kernel = Subgroup::from_elements(G, kernel);

  ElementSet meet = ElementSet::full(G.order());
  for (const auto& e : cover.entries()) meet &= e.subgroup.members();
  report.contains_intersection = meet.is_subset_of(kernel);

  const std::size_t k = cover.size();
  if (k > subset_cap) {
    report.partial = true;
    return report;
  }
  std::vector<ElementSet> cosets;
  for (std::size_t i = 0; i < k; ++i) cosets.push_back(cover.coset(i));
  bool ok = true;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k) && ok; ++mask) {
    ElementSet X(G.order());
    ElementSet stab = kernel;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1)
        X |= cosets[i];
      else
        stab &= cover.entries()[i].subgroup.members();
    }
    auto ls = stab.elements();
    X.for_each([&](ElementId g) {
      for (auto l : ls)
        if (!X.contains(G.mul(g, l))) ok = false;
    });
    ++report.subsets_checked;
  }
  report.union_property_verified = ok;
  return report;
}

ExactRational reciprocal_index_sum(const CosetSystem& cover) {
  ExactRational sum;
  for (auto n : cover.indices()) sum += ExactRational(1, static_cast<std::int64_t>(n));
  return sum;
}

// ------------------------------------------------------- union lower bound

namespace {

std::size_t checked_id(const SubgroupLattice& L, const Subgroup& H) {
  auto id = L.find(H.members());
  if (!id) throw std::invalid_argument("not a subgroup of the group");
  return *id;
}

ElementSet union_of(const FiniteGroup& G, const std::vector<CosetEntry>& entries) {
  ElementSet U(G.order());
  for (const auto& e : entries) U |= group::left_coset(G, e.rep, e.subgroup);
  return U;
}

void check_reps(const FiniteGroup& G, const std::vector<CosetEntry>& entries) {
  if (entries.empty()) throw std::invalid_argument("no entries");
  for (const auto& e : entries)
    if (e.rep >= G.order()) throw std::invalid_argument("representative out of range");
}

std::uint64_t max_multiplicity(const std::vector<std::uint64_t>& values) {
  std::map<std::uint64_t, std::uint64_t> count;
  std::uint64_t best = 0;
  for (auto v : values) best = std::max(best, ++count[v]);
  return best;
}

ExactRational reciprocal_divisor_sum(std::uint64_t n) {
  ExactRational s;
  for (auto d : arith::divisor_list(n)) s += ExactRational(1, static_cast<std::int64_t>(d));
  return s;
}

}  // namespace

UnionBoundReport check_union_lower_bound(const SubgroupLattice& L, const Subgroup& H,
                                         const std::vector<CosetEntry>& entries) {
  const auto& G = L.group();
  check_reps(G, entries);
  const auto h_id = checked_id(L, H);
  UnionBoundReport report;
  report.all_subnormal = true;
  std::vector<std::uint64_t> indices;
  for (const auto& e : entries) {
    auto id = checked_id(L, e.subgroup);
    if (!e.subgroup.contains(H)) throw std::invalid_argument("entry subgroup does not contain H");
    indices.push_back(L.index(id));
    report.all_subnormal = report.all_subnormal && L.subnormal(id);
  }
  report.prime_series = L.has_prime_series(h_id);

  auto label = group::left_coset_labels(G, H);
  ElementSet hit(G.order());
  union_of(G, entries).for_each([&](ElementId x) { hit.insert(label[x]); });
  report.lhs = hit.size();

  const std::uint64_t h = L.index(h_id);
  for (std::uint64_t n = 0; n < h; ++n) {
    if (std::any_of(indices.begin(), indices.end(), [&](auto d) { return n % d == 0; })) ++report.rhs;
  }
  report.holds = report.lhs >= report.rhs;
  return report;
}

// ------------------------------------------------------ aligned index bound

Thm32Report check_thm_3_2(const SubgroupLattice& L, const Subgroup& H, const std::vector<CosetEntry>& entries) {
  const auto& G = L.group();
  check_reps(G, entries);
  const auto h_id = checked_id(L, H);
  ElementSet U = union_of(G, entries);
  auto hs = H.elements();
  U.for_each([&](ElementId x) {
    for (auto y : hs)
      if (!U.contains(G.mul(x, y))) throw std::invalid_argument("union is not a union of left cosets of H");
  });

  std::vector<std::uint64_t> indices;
  std::vector<std::size_t> ids;
  for (const auto& e : entries) {
    ids.push_back(checked_id(L, e.subgroup));
    indices.push_back(L.index(ids.back()));
  }
  const auto gl = arith::gcd_lcm(indices);
  const std::uint64_t g = gl.gcd;
  const std::uint64_t lcm = to_u64(gl.lcm);
  const std::uint64_t h = L.index(h_id);

  Thm32Report report;
  report.lhs = ExactRational(static_cast<std::int64_t>(g), static_cast<std::int64_t>(std::gcd(h, g)));
  report.rhs = ExactRational(static_cast<std::int64_t>(max_multiplicity(indices))) * reciprocal_divisor_sum(lcm / g);
  report.holds = report.lhs <= report.rhs;

  auto all = [&](auto pred) { return std::all_of(ids.begin(), ids.end(), pred); };
  const bool all_subnormal = all([&](std::size_t i) { return L.subnormal(i); });
  const bool all_normal = all([&](std::size_t i) { return L.normal(i); });
  const bool h_normal = L.normal(h_id);

  if (all_subnormal && h_normal) report.applicable.push_back('a');
  if (all_normal && L.subnormal(h_id)) report.applicable.push_back('b');
  if (all_normal) {
    ElementSet meet = ElementSet::full(G.order());
    for (auto i : ids) meet &= L[i].members();
    if (L.quotient_solvable(*L.find(meet))) report.applicable.push_back('c');
  }
  if (h_normal) {
    bool quotient_branch = L.quotient_solvable(h_id);
    bool cores_branch = all([&](std::size_t i) { return L.quotient_solvable(L.core(i)); });
    if (quotient_branch || cores_branch) report.applicable.push_back('d');
    if (quotient_branch && cores_branch) report.notes.push_back("case d: both G/H and every G/(G_i)_G are solvable");
  }
  if (!report.applicable.empty()) report.case_label = report.applicable.front();
  return report;
}

// ---------------------------------------------------------- uniform covers

UniformCoverReport check_thm_4_1(const CosetSystem& cover) {
  const auto wp = weight_profile(cover);
  if (!wp.uniform_m) throw std::invalid_argument("cover is not uniform");
  if (wp.is_trivial) throw std::invalid_argument("cover is trivial");
  const auto& L = cover.lattice();
  const auto& G = L.group();
  const CosetSystem canon = cover.canonical();
  const std::size_t k = canon.size();

  UniformCoverReport r;
  r.m = *wp.uniform_m;
  r.indices = canon.indices();
  const auto& n = r.indices;
  std::vector<std::size_t> ids(k), cores(k);
  for (std::size_t i = 0; i < k; ++i) {
    ids[i] = canon.subgroup_id(i);
    cores[i] = L.core(ids[i]);
  }

  const std::uint64_t N = to_u64(arith::gcd_lcm(n).lcm);
  const auto fact = arith::factorize(N);
  for (const auto& f : fact.factors) {
    r.primes.push_back(f.prime);
    r.exponents.push_back(f.exponent);
  }
  const std::size_t rr = r.primes.size();
  r.p_r = r.primes.back();
  r.alpha_r = r.exponents.back();

  auto count_equal = [&](std::uint64_t v) { return static_cast<std::uint64_t>(std::count(n.begin(), n.end(), v)); };
  r.beta_r = r.alpha_r;
  for (auto v : n) {
    auto o = arith::ord(r.p_r, v);
    if (o >= 1) r.beta_r = std::min(r.beta_r, o);
    if (o >= 1) r.M_r = std::max(r.M_r, count_equal(v));
  }

  const auto p = [](std::uint64_t v) { return ExactRational(static_cast<std::int64_t>(v)); };
  r.epsilon_r = ExactRational(1) - ExactRational::pow(p(r.p_r), -static_cast<int>(r.alpha_r - r.beta_r + 1));
  ExactRational mertens(1);
  for (std::size_t t = 0; t < rr; ++t) {
    mertens *= ExactRational(static_cast<std::int64_t>(r.primes[t]), static_cast<std::int64_t>(r.primes[t] - 1));
    if (t + 1 < rr) r.epsilon_r *= ExactRational(1) - ExactRational::pow(p(r.primes[t]), -static_cast<int>(r.exponents[t] + 1));
  }
  r.lhs = ExactRational::pow(p(r.p_r), static_cast<int>(r.beta_r));
  r.rhs = r.epsilon_r * p(r.M_r) * mertens;
  r.holds = r.lhs <= r.rhs;

  // Condition (a).
  std::vector<std::size_t> in_I, out_I;
  for (std::size_t i = 0; i < k; ++i) (n[i] % r.p_r == 0 ? in_I : out_I).push_back(i);
  auto all_of = [](const std::vector<std::size_t>& v, auto pred) { return std::all_of(v.begin(), v.end(), pred); };
  if (all_of(in_I, [&](std::size_t i) { return L.subnormal(ids[i]); })) {
    r.cond_a = true;
  } else {
    bool solv_in = all_of(in_I, [&](std::size_t i) { return L.quotient_solvable(cores[i]); });
    bool solv_out = all_of(out_I, [&](std::size_t i) { return L.quotient_solvable(cores[i]); });
    r.cond_a = solv_in || solv_out;
    if (!solv_in && solv_out && out_I.empty()) {
      r.cond_a_vacuous = true;
      r.notes.push_back("condition (a) holds only through the empty family of indices prime to p_r");
    }
  }

  // Condition (b).
  r.cond_b = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (n[i] > r.p_r && n[i] % r.p_r != 0 && !L.subnormal(ids[i]))
      r.cond_b = r.cond_b && L.quotient_has_normal_sylow(cores[i], r.p_r);
  }

  // Condition (c) on G / (intersection of the G_i)_G.
  ElementSet meet = ElementSet::full(G.order());
  for (auto id : ids) meet &= L[id].members();
  const std::size_t bar = L.core(*L.find(meet));
  const std::uint64_t bar_order = L.index(bar);
  const auto bar_primes = arith::factorize(bar_order).primes();
  const std::uint64_t bar_top = bar_primes.empty() ? 1 : bar_primes.back();
  const bool bar_solvable = L.quotient_solvable(bar);
  r.cond_c = bar_solvable && L.quotient_has_normal_sylow(bar, bar_top);
  if (r.cond_a && r.cond_b) r.justification = "ab";
  if (r.cond_c) r.justification += r.justification.empty() ? "c" : "+c";

  // Squarefree group order.
  r.squarefree_order = arith::factorize(G.order()).squarefree();
  if (r.squarefree_order) {
    ExactRational top(1), below(1);
    for (std::size_t t = 0; t < rr; ++t) {
      top *= p(r.primes[t]);
      if (t + 1 < rr) below *= p(r.primes[t] + 1);
    }
    r.sqf_multiplicity = r.M_r;
    r.sqf_bound = top / below;
    r.sqf_floor = std::max(p(r.primes.front()), ExactRational(static_cast<std::int64_t>(2 * r.p_r),
                                                              static_cast<std::int64_t>(rr + 1)));
    r.sqf_holds = p(r.sqf_multiplicity) >= r.sqf_bound && r.sqf_bound >= r.sqf_floor;
  }

  // Equal-index pairs for primes of |G bar| above r.
  for (auto q : bar_primes) {
    if (q <= rr) continue;
    EqualIndexPair pair;
    pair.prime = q;
    bool large_subnormal = true;
    for (std::size_t i = 0; i < k; ++i)
      if (n[i] >= q) large_subnormal = large_subnormal && L.subnormal(ids[i]);
    pair.hypothesis =
        (large_subnormal && N % q == 0) || (bar_solvable && L.quotient_has_normal_sylow(bar, q));
    for (std::size_t i = 0; i + 1 < k && !pair.pair; ++i)
      if (n[i] == n[i + 1] && n[i] % q == 0) pair.pair = std::make_pair(i, i + 1);
    if (pair.hypothesis && !pair.pair) r.equal_pairs_hold = false;
    r.equal_pairs.push_back(pair);
  }

  // Least and largest index primes.
  for (auto v : n) r.max_multiplicity = std::max(r.max_multiplicity, count_equal(v));
  r.p_least = r.primes.front();
  r.p_greatest = r.p_r;
  bool top_subnormal = true;
  for (std::size_t i = 0; i < k; ++i)
    if (n[i] >= r.p_greatest) top_subnormal = top_subnormal && L.subnormal(ids[i]);
  r.least_prime_hypothesis = top_subnormal || r.cond_c;
  {
    std::uint64_t num = r.p_greatest, den = 1;
    for (auto q : r.primes) {
      num *= q - 1;
      den *= q;
    }
    r.required_multiplicity = 1 + num / den;
  }
  r.multiple_multiplicity = r.M_r;
  r.least_prime_holds = r.max_multiplicity >= r.p_least && r.multiple_multiplicity >= r.required_multiplicity &&
                        r.required_multiplicity >= r.p_least;
  return r;
}

IndexBoundReport check_index_bounds(const std::vector<std::uint64_t>& indices) {
  if (indices.empty()) throw std::invalid_argument("no indices");
  IndexBoundReport r;
  r.M = std::max<std::uint64_t>(max_multiplicity(indices), 2);
  r.c = bounds::c_of(r.M);
  const auto counts = arith::prime_counts(r.c);
  r.pi_c = counts.pi;
  r.theta_c = counts.theta;
  r.alpha = bounds::alpha_of(r.c).alpha;
  const auto primes = arith::factorize(to_u64(arith::gcd_lcm(indices).lcm)).primes();
  r.distinct_primes = primes.size();
  r.largest_prime = primes.empty() ? 1 : primes.back();
  r.log_n1 = std::log(static_cast<double>(*std::min_element(indices.begin(), indices.end())));
  r.primes_below_c = r.largest_prime < r.c;
  r.prime_count_ok = r.distinct_primes <= r.pi_c;
  r.log_bound_ok = r.log_n1 <= static_cast<double>(r.alpha) * r.theta_c + 1e-9;
  r.l_value = bounds::bound_report(r.M).l_value;
  r.l_bound_ok = r.log_n1 <= r.l_value + 1e-9;
  return r;
}

Conjecture41Report probe_conjecture_4_1(const CosetSystem& cover) {
  const auto wp = weight_profile(cover);
  Conjecture41Report r;
  const auto& n = cover.indices();
  r.n_max = *std::max_element(n.begin(), n.end());
  r.multiplicity = static_cast<std::uint64_t>(std::count(n.begin(), n.end(), r.n_max));
  r.least_prime = r.n_max > 1 ? arith::factorize(r.n_max).smallest_prime() : 1;
  bool all_subnormal = true;
  for (std::size_t i = 0; i < cover.size(); ++i)
    all_subnormal = all_subnormal && cover.lattice().subnormal(cover.subgroup_id(i));
  r.precondition_met = wp.uniform_m.has_value() && !wp.is_trivial && all_subnormal;
  r.holds = r.n_max > 1 && r.multiplicity >= r.least_prime;
  return r;
}

// -------------------------------------------------------------- enumeration

namespace {

struct CosetTable {
  std::vector<ElementSet> sets;
  std::vector<std::vector<ElementId>> members;
  std::vector<std::size_t> subgroup;
  std::vector<ElementId> rep;
  std::vector<std::vector<std::size_t>> containing;  // element -> coset ids
};

CosetTable build_coset_table(const SubgroupLattice& L, bool proper_only) {
  const auto& G = L.group();
  struct Item {
    std::uint64_t index;
    std::size_t subgroup;
    ElementId rep;
    ElementSet set;
  };
  std::vector<Item> items;
  for (std::size_t s = 0; s < L.size(); ++s) {
    if (proper_only && s == L.whole_id()) continue;
    auto label = group::left_coset_labels(G, L[s]);
    for (ElementId x = 0; x < G.order(); ++x)
      if (label[x] == x) items.push_back({L.index(s), s, x, group::left_coset(G, x, L[s])});
  }
  std::stable_sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
    if (a.index != b.index) return a.index < b.index;
    if (a.subgroup != b.subgroup) return L[a.subgroup].members() < L[b.subgroup].members();
    return a.rep < b.rep;
  });
  CosetTable t;
  t.containing.resize(G.order());
  for (std::size_t c = 0; c < items.size(); ++c) {
    t.members.push_back(items[c].set.elements());
    for (auto x : t.members.back()) t.containing[x].push_back(c);
    t.sets.push_back(std::move(items[c].set));
    t.subgroup.push_back(items[c].subgroup);
    t.rep.push_back(items[c].rep);
  }
  return t;
}

class UniformEnumerator {
 public:
  UniformEnumerator(const SubgroupLattice& L, std::size_t k_max, std::uint32_t m,
                    const std::function<void(const CosetSystem&)>& visit, std::uint64_t budget)
      : L_(L), table_(build_coset_table(L, false)), k_max_(k_max), m_(m), visit_(visit), budget_(budget),
        weight_(L.group().order(), 0) {}

  EnumerationStats run() {
    descend();
    return stats_;
  }

 private:
  void descend() {
    if (stats_.truncated) return;
    if (++stats_.nodes > budget_) {
      stats_.truncated = true;
      return;
    }
    ElementId x = 0;
    const auto order = L_.group().order();
    while (x < order && weight_[x] == m_) ++x;
    if (x == order) {
      emit();
      return;
    }
    const std::uint32_t deficit = m_ - weight_[x];
    if (chosen_.size() + deficit > k_max_) return;
    pick(x, deficit, 0);
  }

  // Chooses `left` more cosets through x, ids non-decreasing from `from`.
  void pick(ElementId x, std::uint32_t left, std::size_t from) {
    if (left == 0) {
      descend();
      return;
    }
    const auto& options = table_.containing[x];
    for (std::size_t j = from; j < options.size() && !stats_.truncated; ++j) {
      const auto c = options[j];
      if (!fits(c)) continue;
      add(c, +1);
      chosen_.push_back(c);
      pick(x, left - 1, j);
      chosen_.pop_back();
      add(c, -1);
    }
  }

  bool fits(std::size_t c) const {
    for (auto y : table_.members[c])
      if (weight_[y] >= m_) return false;
    return true;
  }

  void add(std::size_t c, int delta) {
    for (auto y : table_.members[c]) weight_[y] += static_cast<std::uint32_t>(delta);
  }

  void emit() {
    bool trivial = std::all_of(chosen_.begin(), chosen_.end(),
                               [&](std::size_t c) { return table_.subgroup[c] == L_.whole_id(); });
    if (trivial) return;
    auto ids = chosen_;
    std::sort(ids.begin(), ids.end());
    std::vector<CosetEntry> entries;
    for (auto c : ids) entries.push_back({table_.rep[c], L_[table_.subgroup[c]]});
    ++stats_.covers;
    visit_(CosetSystem(L_, std::move(entries)));
  }

  const SubgroupLattice& L_;
  CosetTable table_;
  std::size_t k_max_;
  std::uint32_t m_;
  const std::function<void(const CosetSystem&)>& visit_;
  std::uint64_t budget_;
  std::vector<std::uint32_t> weight_;
  std::vector<std::size_t> chosen_;
  EnumerationStats stats_;
};

}  // namespace

EnumerationStats enumerate_uniform_covers(const SubgroupLattice& L, std::size_t k_max, std::uint32_t m,
                                          const std::function<void(const CosetSystem&)>& visit,
                                          std::uint64_t node_budget) {
  if (L.group().order() > kSearchOrderCap) {
    throw std::invalid_argument("enumeration is limited to groups of order " + std::to_string(kSearchOrderCap));
  }
  if (k_max == 0 || k_max > kEnumerationEntryCap) {
    throw std::invalid_argument("k_max must lie in 1.." + std::to_string(kEnumerationEntryCap));
  }
  if (m == 0) throw std::invalid_argument("m must be positive");
  return UniformEnumerator(L, k_max, m, visit, node_budget).run();
}

// ------------------------------------------------- distinct-index partitions

HsSearchResult search_distinct_index_partition(const SubgroupLattice& L, std::uint64_t node_budget) {
  const auto& G = L.group();
  if (G.order() > kSearchOrderCap) {
    throw std::invalid_argument("search is limited to groups of order " + std::to_string(kSearchOrderCap));
  }
  HsSearchResult result;
  result.group_name = G.name();

  std::vector<std::uint64_t> realizable;
  for (std::size_t s = 0; s < L.size(); ++s)
    if (s != L.whole_id()) realizable.push_back(L.index(s));
  std::sort(realizable.begin(), realizable.end());
  realizable.erase(std::unique(realizable.begin(), realizable.end()), realizable.end());

  const CosetTable table = build_coset_table(L, true);
  const std::size_t d = realizable.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<std::uint64_t> S;
    ExactRational sum;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask >> i & 1) {
        S.push_back(realizable[i]);
        sum += ExactRational(1, static_cast<std::int64_t>(realizable[i]));
      }
    }
    if (sum != ExactRational(1)) continue;
    result.index_multisets_tried.push_back(S);

    ElementSet covered(G.order());
    std::vector<bool> used(S.size(), false);
    std::vector<std::size_t> chosen;
    std::function<bool()> dfs = [&]() -> bool {
      if (++result.nodes_explored > node_budget) {
        result.truncated = true;
        return false;
      }
      ElementId x = 0;
      while (x < G.order() && covered.contains(x)) ++x;
      if (x == G.order()) return true;
      for (auto c : table.containing[x]) {
        if (result.truncated) return false;
        auto idx = L.index(table.subgroup[c]);
        auto pos = std::find(S.begin(), S.end(), idx);
        if (pos == S.end() || used[pos - S.begin()] || table.sets[c].intersects(covered)) continue;
        used[pos - S.begin()] = true;
        covered |= table.sets[c];
        chosen.push_back(c);
        if (dfs()) return true;
        chosen.pop_back();
        for (auto y : table.members[c]) covered.erase(y);
        used[pos - S.begin()] = false;
      }
      return false;
    };
    if (dfs()) {
      std::vector<CosetEntry> entries;
      for (auto c : chosen) entries.push_back({table.rep[c], L[table.subgroup[c]]});
      result.found = CosetSystem(L, std::move(entries)).canonical();
      return result;
    }
    if (result.truncated) return result;
  }
  return result;
}

}  // namespace coverlab::gcover
