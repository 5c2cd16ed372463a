#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "coverlab/arith.hpp"
#include "coverlab/catalog.hpp"
#include "coverlab/errors.hpp"
#include "coverlab/group.hpp"
#include "coverlab/lattice.hpp"
#include "oracles.hpp"

using namespace coverlab;
using namespace coverlab::group;

namespace {

FiniteGroup perm_group(std::size_t degree, std::vector<std::string> cycles) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(parse_cycles(c, degree));
  return group_from_generators(degree, gens);
}

const FiniteGroup& cat(const char* name) {
  const auto* e = Catalog::builtin().find(name);
  if (!e) throw std::logic_error(name);
  return e->group;
}

oracle::Table table_of(const FiniteGroup& G) {
  oracle::Table t{G.order(), {}};
  for (ElementId a = 0; a < G.order(); ++a)
    for (ElementId b = 0; b < G.order(); ++b) t.t.push_back(G.mul(a, b));
  return t;
}

Subgroup gen(const FiniteGroup& G, std::vector<ElementId> g) { return Subgroup::generated_by(G, g); }

// Element of G whose label is the given cycle string.
ElementId by_label(const FiniteGroup& G, const std::string& label) {
  for (ElementId x = 0; x < G.order(); ++x)
    if (G.label(x) == label) return x;
  throw std::logic_error(label);
}

}  // namespace

TEST(Cycles, ParseAndFormat) {
  EXPECT_EQ(parse_cycles("()", 3), (Permutation{0, 1, 2}));
  EXPECT_EQ(parse_cycles("(1 2 3)", 3), (Permutation{1, 2, 0}));
  EXPECT_EQ(parse_cycles("(1,2)(3,4)", 4), (Permutation{1, 0, 3, 2}));
  EXPECT_EQ(format_cycles(parse_cycles("(1 3)(2 4 5)", 5)), "(1 3)(2 4 5)");
  EXPECT_EQ(format_cycles(Permutation{0, 1}), "()");
  EXPECT_THROW(parse_cycles("(1 2", 3), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(1 4)", 3), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(1 2 1)", 3), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(0 1)", 3), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(a b)", 3), std::invalid_argument);
}

TEST(Generators, Examples) {
  auto s3 = perm_group(3, {"(1 2)", "(1 2 3)"});
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_FALSE(s3.is_abelian());
  EXPECT_EQ(perm_group(1, {}).order(), 1u);
  auto c4 = perm_group(4, {"(1 2 3 4)"});
  EXPECT_EQ(c4.order(), 4u);
  EXPECT_TRUE(c4.is_abelian());
  EXPECT_EQ(c4.element_order(1), 4u);
}

TEST(Generators, ClosureCap) {
  std::vector<Permutation> gens{parse_cycles("(1 2)", 5), parse_cycles("(1 2 3 4 5)", 5)};
  EXPECT_THROW(group_from_generators(5, gens, 100), BudgetExceeded);
  EXPECT_EQ(group_from_generators(5, gens).order(), 120u);
}

TEST(FiniteGroupTable, RejectsInvalidTables) {
  EXPECT_THROW(FiniteGroup(2, {0, 1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(FiniteGroup(2, {1, 0, 0, 1}), std::invalid_argument);
  // Latin square with identity 0 that is not associative (order 5 loop).
  std::vector<ElementId> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(FiniteGroup(5, loop), std::invalid_argument);
}

TEST(Subgroups, Examples) {
  EXPECT_EQ(all_subgroups(cat("C4")).size(), 3u);
  EXPECT_EQ(all_subgroups(cat("S3")).size(), 6u);
  EXPECT_EQ(all_subgroups(cat("C1")).size(), 1u);
  auto c4 = all_subgroups(cat("C4"));
  EXPECT_EQ(c4[0].order(), 1u);
  EXPECT_EQ(c4[1].order(), 2u);
  EXPECT_EQ(c4[2].order(), 4u);
  EXPECT_THROW(all_subgroups(cat("C16"), 8), BudgetExceeded);
}

TEST(Subgroups, MatchSubsetOracleOnCatalog) {
  for (const auto* e : Catalog::builtin().up_to_order(12)) {
    const auto& G = e->group;
    auto subs = all_subgroups(G);
    auto expected = oracle::subgroups_by_subsets(table_of(G));
    std::set<std::vector<std::uint32_t>> got;
    for (const auto& s : subs) got.insert(s.elements());
    EXPECT_EQ(got.size(), subs.size()) << G.name();
    EXPECT_EQ(got, expected) << G.name();
    EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end())) << G.name();
  }
}

TEST(Subgroups, FromElementsValidates) {
  const auto& G = cat("S3");
  ElementSet bad(6);
  bad.insert(0);
  bad.insert(by_label(G, "(1 2)"));
  bad.insert(by_label(G, "(1 2 3)"));
  EXPECT_FALSE(is_subgroup(G, bad));
  EXPECT_THROW(Subgroup::from_elements(G, bad), std::invalid_argument);
  ElementSet no_identity(6);
  no_identity.insert(1);
  EXPECT_THROW(Subgroup::from_elements(G, no_identity), std::invalid_argument);
}

TEST(Core, Examples) {
  const auto& G = cat("S3");
  auto t = gen(G, {by_label(G, "(1 2)")});
  EXPECT_EQ(t.order(), 2u);
  EXPECT_EQ(core_of(G, t), Subgroup::trivial(G));
  auto a3 = gen(G, {by_label(G, "(1 2 3)")});
  EXPECT_TRUE(is_normal(G, a3));
  EXPECT_EQ(core_of(G, a3), a3);
  for (const auto* e : Catalog::builtin().up_to_order(12)) {
    SubgroupLattice L(e->group);
    for (std::size_t i = 0; i < L.size(); ++i) {
      auto c = core_of(L.group(), L[i]);
      ASSERT_TRUE(is_normal(L.group(), c));
      ASSERT_TRUE(L[i].contains(c));
      ASSERT_EQ(core_of(L.group(), c), c);
      ASSERT_EQ(L[L.core(i)], c);
      for (auto n : L.normal_ids())
        if (L[i].contains(L[n])) ASSERT_TRUE(c.contains(L[n]));
    }
  }
}

TEST(Subnormal, Examples) {
  const auto& G = cat("S3");
  auto whole = is_subnormal(G, Subgroup::whole(G));
  EXPECT_TRUE(whole.subnormal);
  ASSERT_EQ(whole.chain.size(), 1u);
  EXPECT_EQ(whole.chain[0], Subgroup::whole(G));
  EXPECT_FALSE(is_subnormal(G, gen(G, {by_label(G, "(1 2)")})).subnormal);

  const auto& D8 = cat("D8");
  for (const auto& H : all_subgroups(D8)) {
    auto r = is_subnormal(D8, H);
    ASSERT_TRUE(r.subnormal);
    ASSERT_EQ(r.chain.back(), H);
    for (std::size_t i = 1; i < r.chain.size(); ++i) ASSERT_TRUE(is_normal_in(D8, r.chain[i - 1], r.chain[i]));
  }
}

TEST(Subnormal, AgreesWithLattice) {
  for (const auto* e : Catalog::builtin().up_to_order(16)) {
    SubgroupLattice L(e->group);
    for (std::size_t i = 0; i < L.size(); ++i) {
      ASSERT_EQ(is_subnormal(L.group(), L[i]).subnormal, L.subnormal(i)) << e->record.name;
      ASSERT_EQ(is_normal(L.group(), L[i]), L.normal(i));
    }
  }
}

TEST(SylowHall, Examples) {
  SubgroupLattice s3(cat("S3"));
  auto p3 = sylow_subgroup(s3, 3);
  EXPECT_EQ(p3.order(), 3u);
  EXPECT_TRUE(is_normal(s3.group(), p3));
  EXPECT_THROW(sylow_subgroup(s3, 5), std::invalid_argument);

  SubgroupLattice c12(cat("C12"));
  auto h = hall_subgroup(c12, {2, 3});
  ASSERT_TRUE(h);
  EXPECT_EQ(h->order(), 12u);

  SubgroupLattice a4(cat("A4"));
  auto h2 = hall_subgroup(a4, {2});
  ASSERT_TRUE(h2);
  EXPECT_EQ(h2->order(), 4u);
  EXPECT_TRUE(is_normal(a4.group(), *h2));

  // A5 has no subgroup of order 15.
  auto a5 = perm_group(5, {"(1 2 3)", "(1 2 3 4 5)"});
  ASSERT_EQ(a5.order(), 60u);
  SubgroupLattice la5(a5);
  EXPECT_FALSE(hall_subgroup(la5, {3, 5}));
  EXPECT_EQ(la5.size(), 59u);
}

TEST(SylowHall, SylowOrdersOnCatalog) {
  for (const auto* e : Catalog::builtin().up_to_order(16)) {
    SubgroupLattice L(e->group);
    auto f = arith::factorize(L.group().order());
    for (auto [p, a] : f.factors) {
      auto P = sylow_subgroup(L, p);
      ASSERT_EQ(to_bigint(P.order()), arith::power(p, a));
      ASSERT_EQ(has_normal_sylow(L.group(), p), is_normal(L.group(), P)) << e->record.name << " p=" << p;
    }
  }
}

TEST(Solvable, Examples) {
  EXPECT_TRUE(is_solvable(cat("C1")));
  EXPECT_TRUE(is_solvable(cat("S3")));
  EXPECT_EQ(derived_series(cat("S3")).size(), 3u);
  for (const auto* e : Catalog::builtin().up_to_order(16))
    EXPECT_TRUE(is_solvable(e->group));
  EXPECT_FALSE(is_solvable(perm_group(5, {"(1 2 3)", "(1 2 3 4 5)"})));
  EXPECT_TRUE(is_solvable(perm_group(4, {"(1 2)", "(1 2 3 4)"})));
}

TEST(Pyramidal, Examples) {
  SubgroupLattice c1(cat("C1"));
  auto t = is_pyramidal(c1);
  EXPECT_TRUE(t.pyramidal);
  ASSERT_TRUE(t.chain);
  EXPECT_EQ(t.chain->size(), 1u);

  SubgroupLattice s3(cat("S3"));
  auto r = is_pyramidal(s3);
  ASSERT_TRUE(r.pyramidal);
  ASSERT_TRUE(r.chain);
  ASSERT_EQ(r.chain->size(), 3u);
  EXPECT_EQ((*r.chain)[1].order(), 3u);

  SubgroupLattice a4(cat("A4"));
  EXPECT_FALSE(is_pyramidal(a4).pyramidal);
  EXPECT_FALSE(is_pyramidal(a4).chain);
}

TEST(Pyramidal, WitnessChainsAreValid) {
  for (const auto* e : Catalog::builtin().up_to_order(16)) {
    SubgroupLattice L(e->group);
    auto r = is_pyramidal(L);
    if (!r.pyramidal) continue;
    const auto& c = *r.chain;
    ASSERT_EQ(c.front().order(), 1u);
    ASSERT_EQ(c.back().order(), L.group().order());
    std::uint64_t prev = ~std::uint64_t{0};
    for (std::size_t i = 1; i < c.size(); ++i) {
      ASSERT_TRUE(c[i].contains(c[i - 1]));
      std::uint64_t idx = c[i].order() / c[i - 1].order();
      ASSERT_TRUE(arith::is_prime(idx));
      ASSERT_LE(idx, prev) << e->record.name;
      prev = idx;
    }
  }
}

TEST(PrimeQuotientSeries, Examples) {
  SubgroupLattice c12(cat("C12"));
  auto chain = prime_quotient_series(c12, Subgroup::trivial(c12.group()));
  ASSERT_TRUE(chain);
  std::multiset<std::uint64_t> steps;
  for (std::size_t i = 1; i < chain->size(); ++i) steps.insert((*chain)[i].order() / (*chain)[i - 1].order());
  EXPECT_EQ(steps, (std::multiset<std::uint64_t>{2, 2, 3}));

  auto top = prime_quotient_series(c12, Subgroup::whole(c12.group()));
  ASSERT_TRUE(top);
  EXPECT_EQ(top->size(), 1u);

  SubgroupLattice s3(cat("S3"));
  auto ordered = prime_quotient_series(s3, Subgroup::trivial(s3.group()), 3);
  ASSERT_TRUE(ordered);
  EXPECT_EQ((*ordered)[1].order(), 3u);
  EXPECT_EQ(ordered.has_value(), is_solvable(s3.group()) && has_normal_sylow(s3.group(), 3));
  EXPECT_FALSE(prime_quotient_series(s3, Subgroup::trivial(s3.group()), 2));
}

TEST(PrimeQuotientSeries, LatticeFlagAgrees) {
  for (const auto* e : Catalog::builtin().up_to_order(16)) {
    SubgroupLattice L(e->group);
    for (std::size_t i = 0; i < L.size(); ++i)
      ASSERT_EQ(L.has_prime_series(i), prime_quotient_series(L, L[i]).has_value()) << e->record.name << " " << i;
  }
}

TEST(Quotient, ValidGroups) {
  for (const auto* e : Catalog::builtin().up_to_order(16)) {
    SubgroupLattice L(e->group);
    const auto& G = L.group();
    for (auto n : L.normal_ids()) {
      auto Q = quotient(G, L[n]);
      ASSERT_EQ(Q.group.order() * L[n].order(), G.order());
      for (ElementId a = 0; a < G.order(); ++a)
        for (ElementId b = 0; b < G.order(); ++b)
          ASSERT_EQ(Q.projection[G.mul(a, b)], Q.group.mul(Q.projection[a], Q.projection[b]));
      ASSERT_EQ(L.quotient_solvable(n), is_solvable(Q.group));
    }
    for (std::size_t i = 0; i < L.size(); ++i)
      if (!L.normal(i)) ASSERT_THROW(quotient(G, L[i]), std::invalid_argument);
  }
}

TEST(LemmaSuite, ZeroViolationsOnCatalog) {
  for (const auto& e : Catalog::builtin().entries()) {
    SubgroupLattice L(e.group);
    for (const auto& c : run_lemma_suite(L)) {
      EXPECT_EQ(c.violations, 0u) << e.record.name << " " << c.name << " " << c.first_violation;
    }
  }
}

TEST(LemmaSuite, SubnormalIntersectionIndexDivides) {
  // Direct re-check of the first lemma on a group with many subnormal subgroups.
  SubgroupLattice L(cat("D16"));
  std::vector<std::size_t> sn;
  for (std::size_t i = 0; i < L.size(); ++i)
    if (L.subnormal(i)) sn.push_back(i);
  ASSERT_EQ(sn.size(), L.size());
  for (auto a : sn)
    for (auto b : sn) {
      auto I = intersect(L[a], L[b]);
      ASSERT_EQ((L.index(a) * L.index(b)) % (L.group().order() / I.order()), 0u);
    }
}
