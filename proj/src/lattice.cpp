#include "coverlab/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "coverlab/arith.hpp"
#include "coverlab/errors.hpp"

namespace coverlab::group {

std::vector<Subgroup> all_subgroups(const FiniteGroup& G, std::size_t cap) {
  if (G.order() > cap) {
    throw BudgetExceeded("subgroup enumeration capped at order " + std::to_string(cap));
  }
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> found;
  std::vector<Subgroup> cyclic;
  for (ElementId x = 0; x < G.order(); ++x) {
    ElementId gen[] = {x};
    Subgroup c = Subgroup::generated_by(G, gen);
    if (seen.insert(c.members()).second) {
      cyclic.push_back(c);
      found.push_back(std::move(c));
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : cyclic) {
      if (found[i].contains(c)) continue;
      Subgroup j = join(G, found[i], c);
      if (seen.insert(j.members()).second) found.push_back(std::move(j));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

SubgroupLattice::SubgroupLattice(FiniteGroup G, std::size_t cap)
    : group_(std::move(G)), subgroups_(all_subgroups(group_, cap)) {
  const std::size_t n = subgroups_.size();
  for (std::size_t i = 0; i < n; ++i) lookup_.emplace(subgroups_[i].members(), i);

  normal_.resize(n);
  core_.resize(n);
  subnormal_.resize(n);
  for (std::size_t i = 0; i < n; ++i) normal_[i] = is_normal(group_, subgroups_[i]);
  for (std::size_t i = 0; i < n; ++i) {
    core_[i] = normal_[i] ? i : id_of(core_of(group_, subgroups_[i]));
    subnormal_[i] = normal_[i] || is_subnormal(group_, subgroups_[i]).subnormal;
  }

  up_.resize(n);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = h + 1; k < n; ++k) {
      auto ho = subgroups_[h].order();
      auto ko = subgroups_[k].order();
      if (ko <= ho || ko % ho != 0 || !arith::is_prime(ko / ho)) continue;
      if (subgroups_[k].contains(subgroups_[h])) up_[h].push_back(k);
    }
  }

  prime_series_.assign(n, false);
  for (std::size_t h = n; h-- > 0;) {
    if (h == n - 1) {
      prime_series_[h] = true;
      continue;
    }
    for (auto k : up_[h]) {
      if (prime_series_[k] && is_normal_in(group_, subgroups_[k], subgroups_[h])) {
        prime_series_[h] = true;
        break;
      }
    }
  }

  auto series = derived_series(group_);
  solvable_ = series.back().order() == 1;
  const ElementSet& perfect = series.back().members();

  quotient_solvable_.resize(n);
  quotient_normal_sylow_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!normal_[i]) continue;
    quotient_solvable_[i] = perfect.is_subset_of(subgroups_[i].members());
    auto q = quotient(group_, subgroups_[i]);
    for (auto p : arith::factorize(q.group.order()).primes()) {
      if (has_normal_sylow(q.group, p)) quotient_normal_sylow_[i].insert(p);
    }
  }
}

std::optional<std::size_t> SubgroupLattice::find(const ElementSet& members) const {
  auto it = lookup_.find(members);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::id_of(const Subgroup& H) const {
  auto id = find(H.members());
  if (!id) throw std::invalid_argument("subgroup not in lattice");
  return *id;
}

std::vector<std::size_t> SubgroupLattice::normal_ids() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < normal_.size(); ++i)
    if (normal_[i]) out.push_back(i);
  return out;
}

bool SubgroupLattice::quotient_solvable(std::size_t n) const {
  if (!normal_.at(n)) throw std::invalid_argument("quotient by a non-normal subgroup");
  return quotient_solvable_[n];
}

bool SubgroupLattice::quotient_has_normal_sylow(std::size_t n, std::uint64_t p) const {
  if (!normal_.at(n)) throw std::invalid_argument("quotient by a non-normal subgroup");
  if (index(n) % p != 0) return true;
  return quotient_normal_sylow_[n].contains(p);
}

Subgroup sylow_subgroup(const SubgroupLattice& L, std::uint64_t p) {
  auto order = L.group().order();
  if (p < 2 || order % p != 0) throw std::invalid_argument("p does not divide the group order");
  std::size_t part = 1;
  while (order % p == 0) {
    order /= p;
    part *= p;
  }
  for (const auto& H : L.subgroups())
    if (H.order() == part) return H;
  throw std::logic_error("no Sylow subgroup in a complete lattice");
}

std::optional<Subgroup> hall_subgroup(const SubgroupLattice& L, const std::set<std::uint64_t>& omega) {
  std::size_t part = 1;
  for (const auto& [p, e] : arith::factorize(L.group().order()).factors) {
    if (omega.contains(p)) part *= static_cast<std::size_t>(to_u64(arith::power(p, e)));
  }
  for (const auto& H : L.subgroups())
    if (H.order() == part) return H;
  return std::nullopt;
}

PyramidalReport is_pyramidal(const SubgroupLattice& L) {
  // Walk down from G; indices must not decrease on the way down.
  const std::size_t n = L.size();
  std::vector<std::vector<std::size_t>> down(n);
  for (std::size_t h = 0; h < n; ++h)
    for (auto k : L.prime_overgroups(h)) down[k].push_back(h);

  std::set<std::pair<std::size_t, std::size_t>> dead;
  std::vector<std::size_t> path{L.whole_id()};
  std::function<bool(std::size_t, std::size_t)> dfs = [&](std::size_t cur, std::size_t min_index) {
    if (cur == L.trivial_id()) return true;
    if (dead.contains({cur, min_index})) return false;
    for (auto h : down[cur]) {
      std::size_t idx = L[cur].order() / L[h].order();
      if (idx < min_index) continue;
      path.push_back(h);
      if (dfs(h, idx)) return true;
      path.pop_back();
    }
    dead.insert({cur, min_index});
    return false;
  };

  PyramidalReport report;
  if (dfs(L.whole_id(), 0)) {
    report.pyramidal = true;
    std::vector<Subgroup> chain;
    for (auto it = path.rbegin(); it != path.rend(); ++it) chain.push_back(L[*it]);
    report.chain = std::move(chain);
  }
  return report;
}

std::optional<std::vector<Subgroup>> prime_quotient_series(const SubgroupLattice& L, const Subgroup& H,
                                                           std::optional<std::uint64_t> bottom_prime) {
  const auto start = L.id_of(H);
  const auto& G = L.group();
  // phase 0: steps of index bottom_prime still allowed; phase 1: not.
  std::set<std::pair<std::size_t, int>> dead;
  std::vector<std::size_t> path{start};
  std::function<bool(std::size_t, int)> dfs = [&](std::size_t cur, int phase) {
    if (cur == L.whole_id()) return true;
    if (dead.contains({cur, phase})) return false;
    for (auto k : L.prime_overgroups(cur)) {
      std::uint64_t idx = L[k].order() / L[cur].order();
      int next_phase = phase;
      if (bottom_prime) {
        if (idx == *bottom_prime && phase == 1) continue;
        if (idx != *bottom_prime) next_phase = 1;
      }
      if (!is_normal_in(G, L[k], L[cur])) continue;
      path.push_back(k);
      if (dfs(k, next_phase)) return true;
      path.pop_back();
    }
    dead.insert({cur, phase});
    return false;
  };
  if (!dfs(start, 0)) return std::nullopt;
  std::vector<Subgroup> chain;
  for (auto id : path) chain.push_back(L[id]);
  return chain;
}

namespace {

std::set<std::uint64_t> prime_set(std::uint64_t n) {
  auto ps = arith::factorize(n).primes();
  return {ps.begin(), ps.end()};
}

void record(LemmaCheck& check, bool ok, const std::function<std::string()>& witness) {
  ++check.instances;
  if (ok) return;
  if (check.violations++ == 0) check.first_violation = witness();
}

LemmaCheck make_check(std::string name, bool informational = false) {
  LemmaCheck check;
  check.name = std::move(name);
  check.informational = informational;
  return check;
}

std::string ids(std::initializer_list<std::size_t> list) {
  std::string s = "subgroups";
  for (auto i : list) s += " #" + std::to_string(i);
  return s;
}

}  // namespace

std::vector<LemmaCheck> run_lemma_suite(const SubgroupLattice& L) {
  const auto& G = L.group();
  const std::size_t n = L.size();
  std::vector<std::size_t> subnormal;
  for (std::size_t i = 0; i < n; ++i)
    if (L.subnormal(i)) subnormal.push_back(i);

  LemmaCheck divides = make_check("subnormal_intersection_index_divides_product");
  LemmaCheck prime_union = make_check("subnormal_intersection_prime_set_is_union");
  auto check_tuple = [&](const std::vector<std::size_t>& tuple) {
    ElementSet meet = L[tuple[0]].members();
    std::uint64_t product = 1;
    std::set<std::uint64_t> primes;
    for (auto t : tuple) {
      meet &= L[t].members();
      product *= L.index(t);
      auto ps = prime_set(L.index(t));
      primes.insert(ps.begin(), ps.end());
    }
    std::uint64_t meet_index = G.order() / meet.size();
    auto witness = [&] {
      std::string s = "tuple";
      for (auto t : tuple) s += " #" + std::to_string(t);
      return s;
    };
    record(divides, product % meet_index == 0, witness);
    record(prime_union, prime_set(meet_index) == primes, witness);
  };
  for (std::size_t a = 0; a < subnormal.size(); ++a) {
    check_tuple({subnormal[a]});
    for (std::size_t b = a; b < subnormal.size(); ++b) {
      check_tuple({subnormal[a], subnormal[b]});
      for (std::size_t c = b; c < subnormal.size(); ++c) check_tuple({subnormal[a], subnormal[b], subnormal[c]});
    }
  }

  LemmaCheck core_primes = make_check("subnormal_core_quotient_primes_match_index");
  for (auto i : subnormal) {
    record(core_primes, prime_set(L.index(L.core(i))) == prime_set(L.index(i)), [&] { return ids({i}); });
  }

  LemmaCheck hall_normal = make_check("subnormal_hall_subgroup_is_normal");
  for (std::size_t i = 0; i < n; ++i) {
    if (std::gcd(L[i].order(), L.index(i)) != 1 || !L.subnormal(i)) continue;
    record(hall_normal, L.normal(i), [&] { return ids({i}); });
  }

  LemmaCheck no_sylow = make_check("core_quotient_lacks_normal_sylow_off_index");
  for (std::size_t i = 0; i < n; ++i) {
    auto index_primes = prime_set(L.index(i));
    for (auto p : prime_set(L.index(L.core(i)))) {
      if (index_primes.contains(p)) continue;
      record(no_sylow, !L.quotient_has_normal_sylow(L.core(i), p),
             [&] { return ids({i}) + " p=" + std::to_string(p); });
    }
  }

  LemmaCheck ordered_series = make_check("solvable_normal_sylow_iff_ordered_series");
  const auto group_primes = prime_set(G.order());
  for (auto p : group_primes) {
    bool lhs = L.group_solvable() && has_normal_sylow(G, p);
    bool rhs = prime_quotient_series(L, L[L.trivial_id()], p).has_value();
    record(ordered_series, lhs == rhs, [&] { return "p=" + std::to_string(p); });
  }

  LemmaCheck pyramidal_sylow = make_check("pyramidal_has_normal_sylow_for_largest_prime");
  LemmaCheck hereditary = make_check("pyramidal_subgroups_and_quotients_pyramidal", true);
  if (G.order() > 1 && is_pyramidal(L).pyramidal) {
    record(pyramidal_sylow, has_normal_sylow(G, *group_primes.rbegin()), [] { return std::string("group"); });
    for (std::size_t i = 0; i < n; ++i) {
      SubgroupLattice sub(subgroup_as_group(G, L[i]));
      record(hereditary, is_pyramidal(sub).pyramidal, [&] { return ids({i}); });
      if (L.normal(i)) {
        SubgroupLattice quo(quotient(G, L[i]).group);
        record(hereditary, is_pyramidal(quo).pyramidal, [&] { return "quotient by " + ids({i}); });
      }
    }
  }

  return {divides, prime_union, core_primes, hall_normal, no_sylow, ordered_series, pyramidal_sylow, hereditary};
}

}  // namespace coverlab::group
