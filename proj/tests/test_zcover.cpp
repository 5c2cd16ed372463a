#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "coverlab/arith.hpp"
#include "coverlab/errors.hpp"
#include "coverlab/zcover.hpp"
#include "oracles.hpp"

using namespace coverlab;
using namespace coverlab::zcover;

namespace {

ResidueSystem sys(std::vector<std::pair<std::uint64_t, std::uint64_t>> v) {
  std::vector<ResidueClass> c;
  for (auto [a, n] : v) c.push_back({a, n});
  return ResidueSystem(std::move(c));
}

ExactRational q(const mpq_class& v) { return ExactRational(BigInt(v.get_num()), BigInt(v.get_den())); }

// Redraws systems whose period exceeds max_period.
ResidueSystem random_system(std::mt19937_64& rng, std::uint64_t max_k, std::uint64_t max_n,
                            std::uint64_t max_period = kFullProfileLimit) {
  std::uniform_int_distribution<std::uint64_t> kd(1, max_k), nd(1, max_n);
  for (;;) {
    std::vector<ResidueClass> classes;
    for (auto k = kd(rng); k > 0; --k) {
      auto n = nd(rng);
      classes.push_back({std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng), n});
    }
    ResidueSystem s(std::move(classes));
    if (arith::gcd_lcm(s.moduli()).lcm <= to_bigint(max_period)) return s;
  }
}

ResidueSystem random_exact_cover(std::mt19937_64& rng, std::size_t max_steps, std::uint64_t max_factor) {
  std::vector<SplitStep> script;
  std::size_t classes = 1;
  auto steps = std::uniform_int_distribution<std::size_t>(0, max_steps)(rng);
  for (std::size_t s = 0; s < steps; ++s) {
    SplitStep st{std::uniform_int_distribution<std::size_t>(0, classes - 1)(rng),
                 std::uniform_int_distribution<std::uint64_t>(2, max_factor)(rng)};
    classes += st.factor - 1;
    script.push_back(st);
  }
  return generate_exact_cover(script);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs(const ResidueSystem& s) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> v;
  for (auto c : s.classes()) v.emplace_back(c.residue, c.modulus);
  return v;
}

}  // namespace

TEST(ResidueSystem, RejectsBadInput) {
  EXPECT_THROW(ResidueSystem({}), std::invalid_argument);
  EXPECT_THROW(sys({{0, 0}}), std::invalid_argument);
  EXPECT_THROW(sys({{2, 2}}), std::invalid_argument);
}

TEST(ResidueSystem, CanonicalOrderKeepsInput) {
  auto s = sys({{3, 4}, {0, 2}, {1, 4}});
  EXPECT_EQ(s.classes().front(), (ResidueClass{3, 4}));
  auto c = s.canonical();
  EXPECT_EQ(c[0], (ResidueClass{0, 2}));
  EXPECT_EQ(c[1], (ResidueClass{1, 4}));
  EXPECT_EQ(c[2], (ResidueClass{3, 4}));
}

TEST(Profile, Examples) {
  auto whole = multiplicity_profile(sys({{0, 1}}));
  EXPECT_EQ(whole.period, 1u);
  EXPECT_EQ(whole.counts, (std::vector<std::uint32_t>{1}));
  EXPECT_EQ(whole.min_w, 1u);
  EXPECT_EQ(whole.max_w, 1u);

  auto p = multiplicity_profile(sys({{0, 2}, {1, 4}, {3, 4}}));
  EXPECT_EQ(p.period, 4u);
  EXPECT_EQ(p.counts, (std::vector<std::uint32_t>{1, 1, 1, 1}));

  auto r = multiplicity_profile(sys({{0, 2}, {0, 3}, {1, 4}, {5, 6}, {7, 12}}));
  EXPECT_EQ(r.period, 12u);
  EXPECT_EQ(r.min_w, 1u);
  EXPECT_EQ(r.max_w, 2u);
}

TEST(Profile, MatchesScanOracleAndDoubleCounting) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    auto s = random_system(rng, 6, 24);
    auto p = multiplicity_profile(s);
    auto w = oracle::weights_by_scan(pairs(s), p.period);
    ASSERT_EQ(p.counts.size(), w.size());
    for (std::size_t x = 0; x < w.size(); ++x) ASSERT_EQ(p.counts[x], w[x]);
    std::uint64_t expected = 0;
    for (auto c : s.classes()) expected += p.period / c.modulus;
    ASSERT_EQ(p.total, expected);
    ASSERT_EQ(std::accumulate(p.counts.begin(), p.counts.end(), std::uint64_t{0}), expected);
  }
}

TEST(Profile, StreamingAboveFullLimit) {
  // Period 1009 * 997 * 2 > 10^6.
  auto s = sys({{0, 1009}, {5, 997}, {1, 2}});
  auto p = multiplicity_profile(s);
  EXPECT_GT(p.period, kFullProfileLimit);
  EXPECT_TRUE(p.counts.empty());
  EXPECT_EQ(p.total, p.period / 1009 + p.period / 997 + p.period / 2);
  EXPECT_EQ(p.max_w, 3u);
  EXPECT_EQ(p.min_w, 0u);
}

TEST(Profile, PeriodBudget) {
  auto s = sys({{0, 9973}, {0, 9967}});
  EXPECT_THROW(multiplicity_profile(s, 1000), BudgetExceeded);
  EXPECT_THROW(density_union(s, 1000), BudgetExceeded);
}

TEST(Classify, Examples) {
  auto a = classify(sys({{0, 2}, {1, 4}, {3, 4}}));
  EXPECT_TRUE(a.is_cover);
  EXPECT_TRUE(a.is_exact_cover);
  EXPECT_EQ(a.uniform_m, 1u);
  EXPECT_FALSE(a.is_trivial);

  auto b = classify(sys({{0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}));
  EXPECT_TRUE(b.is_cover);
  EXPECT_FALSE(b.is_exact_cover);
  EXPECT_EQ(b.uniform_m, 2u);

  auto c = classify(sys({{0, 3}}));
  EXPECT_FALSE(c.is_cover);

  EXPECT_TRUE(classify(sys({{0, 1}})).is_trivial);
}

TEST(Density, Examples) {
  EXPECT_EQ(density_union(sys({{0, 1}})), ExactRational(1));
  EXPECT_EQ(density_union(sys({{0, 2}, {0, 3}})), ExactRational(2, 3));
}

TEST(Density, ZeroResiduesMatchInclusionExclusion) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    auto s = random_system(rng, 6, 30).zeroed();
    ASSERT_EQ(density_union(s), q(oracle::inclusion_exclusion_density(s.moduli()))) << s.to_string();
  }
}

TEST(Mu, Examples) {
  EXPECT_EQ(mu_of_divisor_closure(std::vector<std::uint64_t>{}), 0u);
  EXPECT_EQ(mu_of_divisor_closure(std::vector<std::uint64_t>{12}), 12u);
  EXPECT_EQ(mu_of_divisor_closure(std::vector<std::uint64_t>{4, 6}), 8u);
}

TEST(Mu, ScalingProperty) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    auto k = std::uniform_int_distribution<std::uint64_t>(1, 20)(rng);
    auto size = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
    std::vector<std::uint64_t> R, kR;
    for (std::size_t j = 0; j < size; ++j) R.push_back(std::uniform_int_distribution<std::uint64_t>(1, 100)(rng));
    for (auto r : R) kR.push_back(k * r);
    ASSERT_EQ(mu_of_divisor_closure(kR), k * mu_of_divisor_closure(R));
  }
}

TEST(Mu, CountsMultiplesBelowN) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 200; ++i) {
    auto N = std::uniform_int_distribution<std::uint64_t>(1, 10000)(rng);
    auto divs = oracle::divisors_by_scan(N);
    auto k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::vector<std::uint64_t> n, quotients;
    for (std::size_t j = 0; j < k; ++j) {
      n.push_back(divs[std::uniform_int_distribution<std::size_t>(0, divs.size() - 1)(rng)]);
      quotients.push_back(N / n.back());
    }
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < N; ++x)
      count += std::any_of(n.begin(), n.end(), [&](std::uint64_t d) { return x % d == 0; });
    ASSERT_EQ(mu_of_divisor_closure(quotients), count) << N;
  }
}

TEST(Lemma34, Examples) {
  auto one = check_lemma_3_4(std::vector<std::uint64_t>{1});
  EXPECT_EQ(one.lhs, ExactRational(1));
  EXPECT_EQ(one.rhs, ExactRational(1));
  EXPECT_TRUE(one.holds);
  auto two = check_lemma_3_4(std::vector<std::uint64_t>{2, 3});
  EXPECT_EQ(two.lhs, ExactRational(2, 3));
  EXPECT_EQ(two.rhs, ExactRational(2, 3));
}

TEST(Lemma34, RandomSystems) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 200; ++i) {
    auto m = random_system(rng, 6, 30, kDefaultPeriodBudget).moduli();
    auto r = check_lemma_3_4(m);
    ASSERT_TRUE(r.holds);
    ASSERT_EQ(r.lhs, q(oracle::inclusion_exclusion_density(m)));
  }
}

TEST(Rogers, Examples) {
  auto z = check_rogers(sys({{0, 2}, {0, 3}}));
  EXPECT_EQ(z.shifted_count, z.zeroed_count);
  auto r = check_rogers(sys({{1, 2}, {0, 4}}));
  EXPECT_EQ(r.period, 4u);
  EXPECT_EQ(r.shifted_count, 3u);
  EXPECT_EQ(r.zeroed_count, 2u);
  EXPECT_TRUE(r.holds);
}

TEST(Rogers, RandomSystems) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 500; ++i) {
    auto s = random_system(rng, 6, 30, kDefaultPeriodBudget);
    auto r = check_rogers(s);
    ASSERT_TRUE(r.holds) << s.to_string();
    auto p = multiplicity_profile(s);
    ASSERT_EQ(r.shifted_count, p.covered);
  }
}

TEST(Thm42, Examples) {
  auto s = sys({{0, 2}, {1, 4}, {3, 4}});
  auto r = check_thm_4_2(s, 2);
  EXPECT_EQ(r.prime, 2u);
  EXPECT_EQ(r.lambda, (std::vector<unsigned>{1, 2}));
  EXPECT_EQ(r.beta, 1u);
  EXPECT_EQ(r.epsilon, ExactRational(1, 2));
  EXPECT_EQ(r.M, 2u);
  EXPECT_EQ(r.lhs, ExactRational(2));
  EXPECT_EQ(r.rhs, ExactRational(2));
  EXPECT_TRUE(r.holds_4_8);
  EXPECT_TRUE(r.holds_4_10);

  auto a1 = check_thm_4_2(s, 1);
  EXPECT_EQ(a1.beta, 0u);
  EXPECT_EQ(a1.lhs, ExactRational(2));
  EXPECT_EQ(a1.epsilon, ExactRational(3, 4));
  EXPECT_TRUE(a1.holds_4_8);
}

TEST(Thm42, Preconditions) {
  auto s = sys({{0, 2}, {1, 4}, {3, 4}});
  EXPECT_THROW(check_thm_4_2(s, 0), std::invalid_argument);
  EXPECT_THROW(check_thm_4_2(s, 3), std::invalid_argument);
  EXPECT_THROW(check_thm_4_2(s, 1, 3), std::invalid_argument);
  EXPECT_THROW(check_thm_4_2(sys({{0, 3}}), 1), std::invalid_argument);
  EXPECT_THROW(check_thm_4_2(sys({{0, 1}, {0, 1}}), 1), std::invalid_argument);
}

TEST(Thm42, AllPairsOnGeneratedCovers) {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 200; ++i) {
    auto s = random_exact_cover(rng, 6, 5);
    if (s.size() == 1) continue;
    for (const auto& r : check_thm_4_2_all(s)) {
      ASSERT_TRUE(r.holds_4_8) << s.to_string() << " p=" << r.prime << " alpha=" << r.alpha;
      ASSERT_TRUE(r.holds_4_10) << s.to_string();
    }
  }
}

TEST(Simpson, Examples) {
  auto r = check_simpson(sys({{0, 2}, {1, 4}, {3, 4}}));
  EXPECT_EQ(r.M, 2u);
  EXPECT_EQ(r.primes, (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(r.rhs, ExactRational(4));
  EXPECT_TRUE(r.holds);
  auto t = check_simpson(sys({{0, 2}, {1, 2}}));
  EXPECT_EQ(t.M, 2u);
  EXPECT_EQ(t.rhs, ExactRational(4));
  EXPECT_TRUE(t.holds);
  EXPECT_THROW(check_simpson(sys({{0, 1}})), std::invalid_argument);
  EXPECT_THROW(check_simpson(sys({{0, 2}, {0, 3}, {1, 6}, {5, 6}})), std::invalid_argument);
}

TEST(GenerateExactCover, Examples) {
  EXPECT_EQ(generate_exact_cover({}), sys({{0, 1}}));
  std::vector<SplitStep> script{{0, 2}, {1, 2}};
  EXPECT_EQ(generate_exact_cover(script), sys({{0, 2}, {1, 4}, {3, 4}}));
}

TEST(GenerateExactCover, RandomScriptsGiveExactCovers) {
  std::mt19937_64 rng(28);
  for (int i = 0; i < 200; ++i) {
    auto s = random_exact_cover(rng, 6, 5);
    auto w = oracle::weights_by_scan(pairs(s), period_of(s));
    ASSERT_TRUE(std::all_of(w.begin(), w.end(), [](unsigned v) { return v == 1; })) << s.to_string();
    ASSERT_TRUE(classify(s).is_exact_cover);
    if (s.size() > 1) {
      ASSERT_TRUE(two_largest_moduli_equal(s)) << s.to_string();
      ASSERT_TRUE(check_simpson(s).holds) << s.to_string();
      ASSERT_TRUE(check_largest_modulus(s).holds) << s.to_string();
    }
  }
}

TEST(LargestModulus, UniformCovers) {
  auto r = check_largest_modulus(sys({{0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}));
  EXPECT_EQ(r.largest, 3u);
  EXPECT_EQ(r.multiplicity, 3u);
  EXPECT_EQ(r.least_prime, 3u);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(max_modulus_multiplicity(sys({{0, 2}, {1, 4}, {3, 4}})), 2u);
}

TEST(UniformCovers, ReciprocalSumEqualsMultiplicity) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    auto a = random_exact_cover(rng, 4, 4);
    auto b = random_exact_cover(rng, 4, 4);
    auto classes = a.classes();
    classes.insert(classes.end(), b.classes().begin(), b.classes().end());
    ResidueSystem s(classes);
    auto c = classify(s);
    ASSERT_EQ(c.uniform_m, 2u);
    ExactRational sum;
    for (auto n : s.moduli()) sum += ExactRational(1, static_cast<std::int64_t>(n));
    ASSERT_EQ(sum, ExactRational(2));
  }
}
