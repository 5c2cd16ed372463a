#pragma once

// Brute-force reference computations. None of these call into the library;
// they exist to produce or re-derive the values the unit tests freeze.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline std::uint64_t phi_by_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t x = 1; x <= n; ++x)
    if (std::gcd(x, n) == 1) ++c;
  return c;
}

inline bool prime_by_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> divisors_by_scan(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// prod_{p <= x} p/(p-1), one integer at a time.
inline mpq_class mertens_by_scan(std::uint64_t x) {
  mpq_class prod = 1;
  for (std::uint64_t n = 2; n <= x; ++n)
    if (prime_by_trial(n)) prod *= mpq_class(n, n - 1);
  prod.canonicalize();
  return prod;
}

/// Smallest x with prod_{p <= x} p/(p-1) <= x/M, scanning x = 1, 2, ...
inline std::uint64_t c_by_scan(std::uint64_t M) {
  mpq_class prod = 1;
  for (std::uint64_t x = 1;; ++x) {
    if (x >= 2 && prime_by_trial(x)) {
      prod *= mpq_class(x, x - 1);
      prod.canonicalize();
    }
    if (prod * M <= x) return x;
  }
}

/// w(x) over [0, period) for classes (a, n).
inline std::vector<unsigned> weights_by_scan(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& classes,
                                             std::uint64_t period) {
  std::vector<unsigned> w(period, 0);
  for (std::uint64_t x = 0; x < period; ++x)
    for (auto [a, n] : classes)
      if (x % n == a) ++w[x];
  return w;
}

/// d(union of n_i Z) by inclusion-exclusion over nonempty index subsets.
inline mpq_class inclusion_exclusion_density(const std::vector<std::uint64_t>& moduli) {
  mpq_class total = 0;
  const std::size_t k = moduli.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    mpz_class l = 1;
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        mpz_class n = static_cast<unsigned long>(moduli[i]);
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), n.get_mpz_t());
        ++bits;
      }
    }
    mpq_class term(1, l);
    term.canonicalize();
    total += bits % 2 ? term : mpq_class(-term);
  }
  total.canonicalize();
  return total;
}

/// Composition table given as table[a * n + b].
struct Table {
  std::size_t n;
  std::vector<std::uint32_t> t;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return t[a * n + b]; }
};

/// Subgroups of a group of order <= 16 by testing every subset containing
/// the identity for closure.
inline std::set<std::vector<std::uint32_t>> subgroups_by_subsets(const Table& g) {
  std::set<std::vector<std::uint32_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << g.n); mask += 2) {
    bool closed = true;
    for (std::uint32_t a = 0; a < g.n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::uint32_t b = 0; b < g.n && closed; ++b)
        if ((mask >> b & 1) && !(mask >> g.mul(a, b) & 1)) closed = false;
    }
    if (!closed) continue;
    std::vector<std::uint32_t> members;
    for (std::uint32_t a = 0; a < g.n; ++a)
      if (mask >> a & 1) members.push_back(a);
    out.insert(members);
  }
  return out;
}

/// Number of nontrivial uniform m-covers with at most k_max cosets, counted
/// as multisets of distinct cosets-with-subgroup, by exhaustive multiset
/// enumeration. A coset is (subgroup, member set); equal member sets from
/// different subgroups cannot occur.
inline std::uint64_t count_uniform_covers(const Table& g, std::size_t k_max, unsigned m) {
  auto subs = subgroups_by_subsets(g);
  std::vector<std::vector<std::uint32_t>> cosets;
  std::vector<bool> whole;
  for (const auto& s : subs) {
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint32_t x = 0; x < g.n; ++x) {
      std::vector<std::uint32_t> c;
      for (auto h : s) c.push_back(g.mul(x, h));
      std::sort(c.begin(), c.end());
      if (seen.insert(c).second) {
        cosets.push_back(c);
        whole.push_back(s.size() == g.n);
      }
    }
  }
  std::uint64_t count = 0;
  std::vector<unsigned> w(g.n, 0);
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!chosen.empty() && std::all_of(w.begin(), w.end(), [&](unsigned v) { return v == m; })) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return whole[c]; })) ++count;
    }
    if (chosen.size() == k_max) return;
    for (std::size_t c = from; c < cosets.size(); ++c) {
      bool ok = true;
      for (auto x : cosets[c]) ok = ok && w[x] < m;
      if (!ok) continue;
      for (auto x : cosets[c]) ++w[x];
      chosen.push_back(c);
      self(self, c);
      chosen.pop_back();
      for (auto x : cosets[c]) --w[x];
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace oracle
