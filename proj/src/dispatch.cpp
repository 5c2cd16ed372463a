#include "coverlab/cli/dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "coverlab/arith.hpp"
#include "coverlab/bounds.hpp"
#include "coverlab/catalog.hpp"
#include "coverlab/cli/parse.hpp"
#include "coverlab/errors.hpp"
#include "coverlab/gcover.hpp"
#include "coverlab/zcover.hpp"

namespace coverlab::cli {

namespace {

using group::Catalog;
using group::SubgroupLattice;

// Lowers a compiled-in default, never raises it.
std::uint64_t effective_budget(const Options& o, std::uint64_t fallback) {
  std::uint64_t b = fallback;
  if (const char* env = std::getenv("COVERLAB_BUDGET"); env && *env) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw std::invalid_argument("COVERLAB_BUDGET must be a positive integer");
    b = std::min<std::uint64_t>(b, v);
  }
  if (o.budget) b = std::min(b, *o.budget);
  return b;
}

std::string input_text(const Options& o) {
  if (o.text) return *o.text;
  if (o.input) return read_file(*o.input);
  throw std::invalid_argument(o.command + " needs an input file or --text");
}

std::uint64_t require(const std::optional<std::uint64_t>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing ") + flag);
  return *v;
}

Json json_list(const std::vector<std::uint64_t>& v) { return Json(v); }

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

/// Running tally of one property over many instances.
struct Tally {
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::string witness;
  void add(bool ok, const std::function<std::string()>& describe) {
    ++instances;
    if (!ok && violations++ == 0) witness = describe();
  }
  void report(Report& r, const std::string& name, bool asserted = true) const {
    Json value = Json::object();
    value["instances"] = instances;
    value["violations"] = violations;
    if (asserted)
      r.check(name, violations == 0, value, witness);
    else
      r.inform(name, violations == 0, value, witness);
  }
};

// ------------------------------------------------------------ Z commands

// Systems whose period exceeds `max_period` are redrawn.
zcover::ResidueSystem random_system(std::mt19937_64& rng, std::uint64_t max_k, std::uint64_t max_n,
                                    std::uint64_t max_period = zcover::kDefaultPeriodBudget) {
  std::uniform_int_distribution<std::uint64_t> kd(1, max_k), nd(1, max_n);
  for (;;) {
    std::vector<zcover::ResidueClass> classes;
    for (auto k = kd(rng); k > 0; --k) {
      auto n = nd(rng);
      classes.push_back({std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng), n});
    }
    zcover::ResidueSystem sys(std::move(classes));
    if (arith::gcd_lcm(sys.moduli()).lcm <= to_bigint(max_period)) return sys;
  }
}

void cmd_verify_cover(const Options& o, Report& r) {
  auto sys = parse_cover_text(input_text(o));
  r.inputs["system"] = sys.to_string();
  auto profile = zcover::multiplicity_profile(sys, effective_budget(o, zcover::kDefaultPeriodBudget));
  auto cls = zcover::classify(sys, profile);
  r.values["period"] = profile.period;
  r.values["min_multiplicity"] = profile.min_w;
  r.values["max_multiplicity"] = profile.max_w;
  r.check("covers_all_integers", cls.is_cover, nullptr,
          cls.is_cover ? "" : "uncovered residues exist modulo " + std::to_string(profile.period));
  r.inform("exact_cover", cls.is_exact_cover);
  r.inform("uniform", cls.uniform_m.has_value(), cls.uniform_m ? Json(*cls.uniform_m) : Json(nullptr));
  r.inform("trivial", cls.is_trivial);
}

void cmd_density(const Options& o, Report& r) {
  auto sys = parse_cover_text(input_text(o));
  r.inputs["system"] = sys.to_string();
  auto budget = effective_budget(o, zcover::kDefaultPeriodBudget);
  auto density = zcover::density_union(sys, budget);
  auto profile = zcover::multiplicity_profile(sys, budget);
  r.values["density"] = to_json(density);
  auto scanned = ExactRational(to_bigint(profile.covered), to_bigint(profile.period));
  r.check("density_matches_period_scan", density == scanned, to_json(scanned));
}

void cmd_mu(const Options& o, Report& r) {
  auto sys = parse_cover_text(input_text(o));
  auto moduli = sys.moduli();
  r.inputs["moduli"] = json_list(moduli);
  r.values["mu"] = zcover::mu_of_divisor_closure(moduli);
  Tally gauss;
  for (auto n : moduli) {
    std::uint64_t total = 0;
    for (auto d : arith::divisor_list(n)) total += arith::euler_phi(d);
    gauss.add(total == n, [&] { return "n=" + std::to_string(n); });
  }
  gauss.report(r, "totient_sum_over_divisors");
  std::uint64_t lcm = to_u64(arith::gcd_lcm(moduli).lcm);
  std::vector<std::uint64_t> single{lcm};
  r.check("mu_of_lcm_divisors_is_lcm", zcover::mu_of_divisor_closure(single) == lcm, lcm);
}

void cmd_lemma34(const Options& o, Report& r) {
  auto budget = effective_budget(o, zcover::kDefaultPeriodBudget);
  if (o.random) {
    std::mt19937_64 rng(o.seed.value_or(0));
    r.seed = o.seed.value_or(0);
    Tally t;
    for (std::uint64_t i = 0; i < *o.random; ++i) {
      auto moduli = random_system(rng, 6, 30, budget).moduli();
      auto rep = zcover::check_lemma_3_4(moduli, budget);
      t.add(rep.holds, [&] { return "moduli " + join(moduli); });
    }
    t.report(r, "density_equals_smooth_reciprocal_sum");
    return;
  }
  auto moduli = parse_cover_text(input_text(o)).moduli();
  r.inputs["moduli"] = json_list(moduli);
  auto rep = zcover::check_lemma_3_4(moduli, budget);
  r.values["lhs"] = to_json(rep.lhs);
  r.values["rhs"] = to_json(rep.rhs);
  r.check("density_equals_smooth_reciprocal_sum", rep.holds);
}

void cmd_rogers(const Options& o, Report& r) {
  auto budget = effective_budget(o, zcover::kDefaultPeriodBudget);
  if (o.random) {
    std::mt19937_64 rng(o.seed.value_or(0));
    r.seed = o.seed.value_or(0);
    Tally t;
    for (std::uint64_t i = 0; i < *o.random; ++i) {
      auto sys = random_system(rng, 6, 30, budget);
      t.add(zcover::check_rogers(sys, budget).holds, [&] { return sys.to_string(); });
    }
    t.report(r, "shifted_union_not_smaller");
    return;
  }
  auto sys = parse_cover_text(input_text(o));
  r.inputs["system"] = sys.to_string();
  auto rep = zcover::check_rogers(sys, budget);
  r.values["period"] = rep.period;
  r.values["shifted_count"] = rep.shifted_count;
  r.values["zeroed_count"] = rep.zeroed_count;
  r.check("shifted_union_not_smaller", rep.holds);
}

void cmd_thm42(const Options& o, Report& r) {
  auto sys = parse_cover_text(input_text(o));
  r.inputs["system"] = sys.to_string();
  auto budget = effective_budget(o, zcover::kDefaultPeriodBudget);
  std::vector<zcover::Thm42Report> reports;
  if (o.alpha) {
    reports.push_back(zcover::check_thm_4_2(sys, static_cast<unsigned>(*o.alpha), o.prime, budget));
  } else {
    for (auto& rep : zcover::check_thm_4_2_all(sys, budget))
      if (!o.prime || rep.prime == *o.prime) reports.push_back(std::move(rep));
    if (reports.empty()) throw std::invalid_argument("prime does not divide the lcm of the moduli");
  }
  std::set<std::uint64_t> seen_prime;
  for (const auto& rep : reports) {
    std::string tag = "p=" + std::to_string(rep.prime) + " alpha=" + std::to_string(rep.alpha);
    Json v = Json::object();
    v["beta"] = rep.beta;
    v["epsilon"] = to_json(rep.epsilon);
    v["M"] = rep.M;
    v["lhs"] = to_json(rep.lhs);
    v["rhs"] = to_json(rep.rhs);
    r.check("index_inequality " + tag, rep.holds_4_8, v);
    if (seen_prime.insert(rep.prime).second) {
      Json t = Json::object();
      t["multiplicity"] = rep.top_multiplicity;
      t["bound"] = to_json(rep.top_bound);
      t["weak_bound"] = to_json(rep.top_weak_bound);
      r.check("top_exponent_multiplicity p=" + std::to_string(rep.prime), rep.holds_4_10, t);
    }
  }
}

void cmd_simpson(const Options& o, Report& r) {
  auto sys = parse_cover_text(input_text(o));
  r.inputs["system"] = sys.to_string();
  auto rep = zcover::check_simpson(sys, effective_budget(o, zcover::kDefaultPeriodBudget));
  r.values["M"] = rep.M;
  r.values["primes"] = json_list(rep.primes);
  r.check("largest_prime_bound", rep.holds, to_json(rep.rhs));
  r.check("largest_prime_bound_sharp", rep.holds_strong, to_json(rep.strong_rhs));
  r.check("two_largest_moduli_equal", zcover::two_largest_moduli_equal(sys));
  auto lm = zcover::check_largest_modulus(sys);
  Json v = Json::object();
  v["largest"] = lm.largest;
  v["multiplicity"] = lm.multiplicity;
  v["least_prime"] = lm.least_prime;
  r.check("largest_modulus_multiplicity", lm.holds, v);
}

void cmd_bounds(const Options& o, Report& r) {
  auto M = require(o.M, "--M");
  r.inputs["M"] = M;
  auto rep = bounds::bound_report(M);
  r.values["c"] = rep.c;
  r.values["pi_c"] = rep.pi_c;
  r.values["theta_c"] = rep.theta_c;
  r.values["alpha"] = rep.alpha;
  r.values["alpha_theta"] = rep.alpha_theta;
  r.values["l"] = rep.l_value;
  r.values["c_reference"] = rep.prime_bound_float;
  r.values["pi_c_reference"] = rep.prime_count_reference;
  const ExactRational Mq(static_cast<std::int64_t>(M));
  const auto c = static_cast<std::int64_t>(rep.c);
  r.check("c_satisfies_inequality", arith::mertens_product(rep.c) * Mq <= ExactRational(c));
  r.check("c_minimal", arith::mertens_product(rep.c - 1) * Mq > ExactRational(c - 1));
  r.check("c_composite", rep.c > 2 && !arith::is_prime(rep.c), rep.c);
  if (M >= 3) {
    double ratio = static_cast<double>(rep.c) / rep.prime_bound_float;
    r.inform("c_over_reference_in_half_to_two", ratio >= 0.5 && ratio <= 2.0, ratio);
  }
  for (const auto& n : rep.notes) r.warnings.push_back(n);
}

void cmd_qbound(const Options& o, Report& r) {
  auto q = require(o.q, "--q");
  auto M = require(o.M, "--M");
  r.inputs["q"] = q;
  r.inputs["M"] = M;
  auto rep = bounds::check_q_bound(q, M);
  r.values["c"] = rep.c;
  r.inform("premise", rep.premise_holds);
  r.inform("q_below_c", rep.conclusion_holds);
  r.check("premise_implies_q_below_c", rep.implication_holds);
}

// -------------------------------------------------------- group commands

const Catalog& catalog_for(const Options& o, std::unique_ptr<Catalog>& holder) {
  if (!o.catalog) return Catalog::builtin();
  holder = std::make_unique<Catalog>(Catalog::load(read_file(*o.catalog)));
  return *holder;
}

// --group NAME, an input group record, or every catalog group up to the order cap.
std::vector<group::FiniteGroup> select_groups(const Options& o, std::uint64_t default_max_order, Report& r) {
  std::unique_ptr<Catalog> holder;
  const Catalog& catalog = catalog_for(o, holder);
  std::vector<group::FiniteGroup> out;
  if (o.group) {
    const auto* e = catalog.find(*o.group);
    if (!e) throw std::invalid_argument("unknown catalog group " + *o.group);
    out.push_back(e->group);
    r.inputs["group"] = *o.group;
  } else if (o.text || o.input) {
    out.push_back(parse_group_text(input_text(o)));
    r.inputs["group"] = out.back().name();
  } else {
    auto max_order = o.max_order.value_or(default_max_order);
    for (const auto* e : catalog.up_to_order(max_order)) out.push_back(e->group);
    r.inputs["max_order"] = max_order;
    r.inputs["groups"] = out.size();
  }
  return out;
}

void cmd_group_info(const Options& o, Report& r) {
  auto groups = select_groups(o, 16, r);
  if (groups.size() != 1) throw std::invalid_argument("group-info needs --group or a group file");
  SubgroupLattice L(std::move(groups.front()));
  const auto& G = L.group();
  auto fp = group::fingerprint(L);
  r.values["name"] = G.name();
  r.values["order"] = G.order();
  r.values["abelian"] = fp.abelian;
  r.values["centre_order"] = fp.centre_order;
  r.values["subgroups"] = fp.subgroup_count;
  r.values["normal_subgroups"] = fp.normal_subgroup_count;
  r.values["solvable"] = L.group_solvable();
  r.values["pyramidal"] = group::is_pyramidal(L).pyramidal;
  Json orders = Json::object();
  for (const auto& [ord, count] : fp.element_orders) orders[std::to_string(ord)] = count;
  r.values["element_orders"] = orders;
  Json elements = Json::array();
  for (group::ElementId x = 0; x < G.order(); ++x) elements.push_back(std::to_string(x) + " " + G.label(x));
  r.values["elements"] = elements;
}

void cmd_lemma_suite(const Options& o, Report& r) {
  std::map<std::string, Tally> tallies;
  std::map<std::string, bool> informational;
  std::vector<std::string> order;
  for (auto& G : select_groups(o, 16, r)) {
    const std::string name = G.name();
    SubgroupLattice L(std::move(G));
    for (const auto& check : group::run_lemma_suite(L)) {
      if (!tallies.contains(check.name)) order.push_back(check.name);
      auto& t = tallies[check.name];
      informational[check.name] = check.informational;
      t.instances += check.instances;
      if (check.violations && t.violations == 0) t.witness = name + ": " + check.first_violation;
      t.violations += check.violations;
    }
  }
  for (const auto& name : order) tallies[name].report(r, name, !informational[name]);
}

SubgroupLattice& cached_lattice(std::vector<std::unique_ptr<SubgroupLattice>>& cache, group::FiniteGroup G) {
  cache.push_back(std::make_unique<SubgroupLattice>(std::move(G)));
  return *cache.back();
}

void cmd_thm31(const Options& o, Report& r) {
  if (o.random) {
    r.seed = o.seed.value_or(0);
    std::mt19937_64 rng(*r.seed);
    std::vector<std::unique_ptr<SubgroupLattice>> lattices;
    for (auto& G : select_groups(o, 12, r)) cached_lattice(lattices, std::move(G));
    Tally asserted, free;
    for (std::uint64_t t = 0; t < *o.random; ++t) {
      const auto& L = *lattices[std::uniform_int_distribution<std::size_t>(0, lattices.size() - 1)(rng)];
      const auto& H = L[std::uniform_int_distribution<std::size_t>(0, L.size() - 1)(rng)];
      std::vector<std::size_t> over;
      for (std::size_t i = 0; i < L.size(); ++i)
        if (L[i].contains(H)) over.push_back(i);
      std::vector<gcover::CosetEntry> entries;
      for (auto k = std::uniform_int_distribution<int>(1, 3)(rng); k > 0; --k) {
        auto sub = over[std::uniform_int_distribution<std::size_t>(0, over.size() - 1)(rng)];
        auto rep = std::uniform_int_distribution<group::ElementId>(0, L.group().order() - 1)(rng);
        entries.push_back({rep, L[sub]});
      }
      auto rep = gcover::check_union_lower_bound(L, H, entries);
      auto describe = [&] { return L.group().name() + " lhs=" + std::to_string(rep.lhs) + " rhs=" + std::to_string(rep.rhs); };
      (rep.hypothesis_free() ? free : asserted).add(rep.holds, describe);
    }
    asserted.report(r, "union_lower_bound");
    free.report(r, "union_lower_bound_without_hypothesis", false);
    return;
  }
  auto in = parse_group_cover_text(input_text(o));
  const auto& L = *in.lattice;
  auto H = in.h.value_or(group::Subgroup::trivial(L.group()));
  r.inputs["group"] = in.group_name;
  auto rep = gcover::check_union_lower_bound(L, H, in.entries);
  r.values["lhs"] = rep.lhs;
  r.values["rhs"] = rep.rhs;
  r.values["all_subnormal"] = rep.all_subnormal;
  r.values["prime_series"] = rep.prime_series;
  if (rep.hypothesis_free()) {
    r.inform("union_lower_bound", rep.holds);
    r.warnings.push_back("neither hypothesis applies; the inequality is informational");
  } else {
    r.check("union_lower_bound", rep.holds);
  }
}

void cmd_thm32(const Options& o, Report& r) {
  auto in = parse_group_cover_text(input_text(o));
  const auto& L = *in.lattice;
  r.inputs["group"] = in.group_name;
  group::Subgroup H = [&] {
    if (in.h) return *in.h;
    group::ElementSet meet = group::ElementSet::full(L.group().order());
    for (const auto& e : in.entries) meet &= e.subgroup.members();
    return group::trusted_subgroup(meet);
  }();
  r.inputs["h_index"] = H.index_in(L.group());
  auto rep = gcover::check_thm_3_2(L, H, in.entries);
  r.values["case"] = std::string(1, rep.case_label);
  r.values["lhs"] = to_json(rep.lhs);
  r.values["rhs"] = to_json(rep.rhs);
  if (rep.informational()) {
    r.inform("aligned_index_bound", rep.holds);
    r.warnings.push_back("no case applies; the inequality is informational");
  } else {
    r.check("aligned_index_bound", rep.holds);
  }
  for (const auto& n : rep.notes) r.warnings.push_back(n);
}

/// Every uniform-cover property, one tally per property.
struct CoverAudit {
  std::map<std::string, Tally> tallies;
  std::vector<std::pair<std::string, bool>> order;  // name, asserted
  Tally& at(const std::string& name, bool asserted = true) {
    if (!tallies.contains(name)) order.emplace_back(name, asserted);
    return tallies[name];
  }
  void run(const gcover::CosetSystem& cover) {
    auto describe = [&] { return cover.group().name() + " " + cover.to_string(); };
    auto wp = gcover::weight_profile(cover);
    at("uniform_weight").add(wp.uniform_m.has_value(), describe);
    if (!wp.uniform_m) return;
    at("reciprocal_index_sum_equals_m")
        .add(gcover::reciprocal_index_sum(cover) == ExactRational(*wp.uniform_m), describe);
    auto kernel = gcover::kernel_of(cover);
    at("kernel_is_whole_group").add(kernel.kernel.order() == cover.group().order(), describe);
    at("kernel_union_property").add(kernel.union_property_verified, describe);
    if (wp.is_trivial) return;

    auto rep = gcover::check_thm_4_1(cover);
    if (rep.flagged()) at("index_inequality_flagged").add(rep.holds, describe);
    else at("index_inequality_unflagged", false).add(rep.holds, describe);
    if (rep.cond_a_vacuous) at("condition_a_vacuous", false).add(true, describe);
    if (rep.squarefree_order) at("squarefree_multiplicity_bound").add(rep.sqf_holds, describe);
    at("equal_index_pair").add(rep.equal_pairs_hold, describe);
    if (rep.least_prime_hypothesis) {
      at("multiplicity_at_least_least_prime").add(rep.least_prime_holds, describe);
      auto bounds = gcover::check_index_bounds(rep.indices);
      at("index_primes_below_c").add(bounds.primes_below_c, describe);
      at("prime_count_at_most_pi_c").add(bounds.prime_count_ok, describe);
      at("least_index_log_bound").add(bounds.log_bound_ok, describe);
      at("least_index_l_bound").add(bounds.l_bound_ok, describe);
    }
    auto conj = gcover::probe_conjecture_4_1(cover);
    if (conj.precondition_met) at("largest_index_multiplicity_conjecture").add(conj.holds, describe);
  }
  void report(Report& r) const {
    for (const auto& [name, asserted] : order) tallies.at(name).report(r, name, asserted);
  }
};

void enumerate_into(const Options& o, Report& r, const std::function<void(const gcover::CosetSystem&)>& visit) {
  auto k_max = o.k_max.value_or(6);
  std::vector<std::uint32_t> ms;
  if (o.m)
    ms.push_back(static_cast<std::uint32_t>(*o.m));
  else
    ms = {1, 2};
  r.inputs["k_max"] = k_max;
  r.inputs["m"] = Json(ms);
  const auto budget = effective_budget(o, gcover::kDefaultNodeBudget);
  Json counts = Json::object();
  for (auto& G : select_groups(o, 12, r)) {
    const std::string name = G.name();
    SubgroupLattice L(std::move(G));
    Json per_m = Json::object();
    for (auto m : ms) {
      auto stats = gcover::enumerate_uniform_covers(L, k_max, m, visit, budget);
      per_m[std::to_string(m)] = stats.covers;
      if (stats.truncated) {
        r.budget_exceeded = true;
        r.warnings.push_back(name + " m=" + std::to_string(m) + ": enumeration truncated after " +
                             std::to_string(stats.nodes) + " nodes");
      }
    }
    counts[name] = per_m;
  }
  r.values["covers"] = counts;
}

void cmd_enumerate(const Options& o, Report& r) {
  CoverAudit audit;
  enumerate_into(o, r, [&](const gcover::CosetSystem& c) { audit.run(c); });
  audit.report(r);
}

void cmd_thm41(const Options& o, Report& r) {
  auto in = parse_group_cover_text(input_text(o));
  r.inputs["group"] = in.group_name;
  gcover::CosetSystem cover(*in.lattice, in.entries);
  auto rep = gcover::check_thm_4_1(cover);
  r.values["m"] = rep.m;
  r.values["indices"] = json_list(rep.indices);
  r.values["p_r"] = rep.p_r;
  r.values["alpha_r"] = rep.alpha_r;
  r.values["beta_r"] = rep.beta_r;
  r.values["epsilon_r"] = to_json(rep.epsilon_r);
  r.values["M_r"] = rep.M_r;
  r.values["lhs"] = to_json(rep.lhs);
  r.values["rhs"] = to_json(rep.rhs);
  r.values["conditions"] = rep.justification;
  if (rep.flagged())
    r.check("index_inequality", rep.holds);
  else
    r.inform("index_inequality", rep.holds);
  if (rep.squarefree_order) {
    Json v = Json::object();
    v["multiplicity"] = rep.sqf_multiplicity;
    v["bound"] = to_json(rep.sqf_bound);
    v["floor"] = to_json(rep.sqf_floor);
    r.check("squarefree_multiplicity_bound", rep.sqf_holds, v);
  }
  for (const auto& pair : rep.equal_pairs) {
    std::string name = "equal_index_pair p=" + std::to_string(pair.prime);
    std::string w = pair.pair ? "positions " + std::to_string(pair.pair->first) + "," + std::to_string(pair.pair->second) : "";
    if (pair.hypothesis)
      r.check(name, pair.pair.has_value(), nullptr, w);
    else
      r.inform(name, pair.pair.has_value(), nullptr, w);
  }
  Json lp = Json::object();
  lp["M"] = rep.max_multiplicity;
  lp["p_least"] = rep.p_least;
  lp["required"] = rep.required_multiplicity;
  lp["found"] = rep.multiple_multiplicity;
  auto bounds = gcover::check_index_bounds(rep.indices);
  Json b = Json::object();
  b["c"] = bounds.c;
  b["pi_c"] = bounds.pi_c;
  b["alpha"] = bounds.alpha;
  b["log_n1"] = bounds.log_n1;
  b["alpha_theta"] = static_cast<double>(bounds.alpha) * bounds.theta_c;
  b["l"] = bounds.l_value;
  if (rep.least_prime_hypothesis) {
    r.check("multiplicity_at_least_least_prime", rep.least_prime_holds, lp);
    r.check("index_bounds_from_c", bounds.holds(), b);
  } else {
    r.inform("multiplicity_at_least_least_prime", rep.least_prime_holds, lp);
    r.inform("index_bounds_from_c", bounds.holds(), b);
  }
  for (const auto& n : rep.notes) r.warnings.push_back(n);
}

void cmd_hs_search(const Options& o, Report& r) {
  const auto budget = effective_budget(o, gcover::kDefaultNodeBudget);
  Json per_group = Json::object();
  for (auto& G : select_groups(o, 12, r)) {
    const std::string name = G.name();
    SubgroupLattice L(std::move(G));
    auto res = gcover::search_distinct_index_partition(L, budget);
    Json v = Json::object();
    v["nodes"] = res.nodes_explored;
    Json tried = Json::array();
    for (const auto& s : res.index_multisets_tried) tried.push_back(s);
    v["index_sets_tried"] = tried;
    per_group[name] = v;
    if (res.truncated) {
      r.budget_exceeded = true;
      r.warnings.push_back(name + ": search truncated");
    }
    r.check("no_distinct_index_partition " + name, !res.found.has_value(), nullptr,
            res.found ? res.found->to_string() : "");
  }
  r.values["search"] = per_group;
  bool any = std::any_of(r.verdicts.begin(), r.verdicts.end(), [](const Verdict& v) { return !v.holds; });
  r.values["result"] = any ? "counterexample found" : "no counterexample";
}

void cmd_conjecture41(const Options& o, Report& r) {
  if (o.text || o.input) {
    auto in = parse_group_cover_text(input_text(o));
    r.inputs["group"] = in.group_name;
    gcover::CosetSystem cover(*in.lattice, in.entries);
    auto rep = gcover::probe_conjecture_4_1(cover);
    Json v = Json::object();
    v["n_max"] = rep.n_max;
    v["multiplicity"] = rep.multiplicity;
    v["least_prime"] = rep.least_prime;
    if (rep.precondition_met) {
      r.check("largest_index_multiplicity", rep.holds, v);
    } else {
      r.inform("largest_index_multiplicity", rep.holds, v);
      r.warnings.push_back("not a nontrivial uniform cover by subnormal cosets; informational");
    }
    return;
  }
  Tally asserted, informational;
  enumerate_into(o, r, [&](const gcover::CosetSystem& c) {
    auto rep = gcover::probe_conjecture_4_1(c);
    (rep.precondition_met ? asserted : informational).add(rep.holds, [&] {
      return c.group().name() + " " + c.to_string();
    });
  });
  asserted.report(r, "largest_index_multiplicity");
  informational.report(r, "largest_index_multiplicity_non_subnormal", false);
}

const std::map<std::string, void (*)(const Options&, Report&)>& commands() {
  static const std::map<std::string, void (*)(const Options&, Report&)> table{
      {"verify-cover", cmd_verify_cover}, {"density", cmd_density},
      {"mu", cmd_mu},                     {"lemma34", cmd_lemma34},
      {"rogers", cmd_rogers},             {"thm42", cmd_thm42},
      {"simpson", cmd_simpson},           {"bounds", cmd_bounds},
      {"qbound", cmd_qbound},             {"group-info", cmd_group_info},
      {"lemma-suite", cmd_lemma_suite},   {"thm31", cmd_thm31},
      {"thm32", cmd_thm32},               {"thm41", cmd_thm41},
      {"hs-search", cmd_hs_search},       {"enumerate-covers", cmd_enumerate},
      {"conjecture41", cmd_conjecture41},
  };
  return table;
}

}  // namespace

Report dispatch(const Options& options) {
  auto it = commands().find(options.command);
  if (it == commands().end()) throw std::invalid_argument("unknown command '" + options.command + "'");
  Report r;
  r.command = options.command;
  it->second(options, r);
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"coverlab: covers of the integers and of finite groups"};
  Options o;
  std::string command_list;
  for (const auto& [name, fn] : commands()) command_list += (command_list.empty() ? "" : ", ") + name;
  app.add_option("command", o.command, "one of: " + command_list)->required();
  app.add_option("input", o.input, "input file");
  app.add_option("--text", o.text, "inline input instead of a file");
  app.add_option("--seed", o.seed, "seed for --random instances");
  app.add_option("--budget", o.budget, "lower the period or search budget");
  app.add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--prime", o.prime, "designated prime for thm42");
  app.add_option("--M", o.M, "multiplicity bound M");
  app.add_option("--q", o.q, "q for qbound");
  app.add_option("--alpha", o.alpha, "exponent alpha for thm42");
  app.add_option("--k-max", o.k_max, "maximum number of cosets for enumeration");
  app.add_option("--m", o.m, "covering multiplicity for enumeration");
  app.add_option("--max-order", o.max_order, "largest catalog group order");
  app.add_option("--random", o.random, "number of seeded random instances");
  app.add_option("--group", o.group, "catalog group name");
  app.add_option("--catalog", o.catalog, "alternative group catalog file");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  try {
    Report r = dispatch(o);
    out << (o.format == "structured" ? render_structured(r) : render_text(r));
    return r.exit_status();
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace coverlab::cli
