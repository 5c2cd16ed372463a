#include "coverlab/group.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "coverlab/errors.hpp"

namespace coverlab::group {

// ---------------------------------------------------------------- ElementSet

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t x = 0; x < universe; ++x) s.insert(static_cast<ElementId>(x));
  return s;
}

std::size_t ElementSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<ElementId> ElementSet::elements() const {
  std::vector<ElementId> out;
  for_each([&](ElementId x) { out.push_back(x); });
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

ElementSet& ElementSet::operator&=(const ElementSet& rhs) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= rhs.words_[w];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& rhs) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= rhs.words_[w];
  return *this;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  auto ea = a.elements();
  auto eb = b.elements();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::size_t ElementSet::hash() const {
  std::size_t h = universe_;
  for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ (w + (h >> 7));
  return h;
}

// -------------------------------------------------------------- permutations

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> seen(degree, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  if (i == text.size()) throw std::invalid_argument("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_space();
      }
      if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t point = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), point);
      if (ec != std::errc()) throw std::invalid_argument("expected a point at offset " + std::to_string(i));
      i = static_cast<std::size_t>(ptr - text.data());
      if (point < 1 || point > degree) {
        throw std::invalid_argument("point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      }
      if (seen[point - 1]) throw std::invalid_argument("point " + std::to_string(point) + " repeated");
      seen[point - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(point - 1));
    }
    for (std::size_t t = 0; t < cycle.size(); ++t) p[cycle[t]] = cycle[(t + 1) % cycle.size()];
    skip_space();
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// --------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(std::size_t order, std::vector<ElementId> table, std::vector<std::string> labels,
                         std::string name)
    : order_(order), labels_(std::move(labels)), name_(std::move(name)) {
  if (order == 0) throw std::invalid_argument("group order must be positive");
  if (order > 65535) throw std::invalid_argument("group order too large for the table encoding");
  if (table.size() != order * order) throw std::invalid_argument("table size does not match order");
  for (auto v : table) {
    if (v >= order) throw std::invalid_argument("table entry out of range");
  }
  for (std::size_t x = 0; x < order; ++x) {
    if (table[x] != x || table[x * order] != x) throw std::invalid_argument("element 0 is not the identity");
  }
  std::vector<std::size_t> seen(order, SIZE_MAX);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      auto v = table[a * order + b];
      if (seen[v] == a) throw std::invalid_argument("table row is not a permutation");
      seen[v] = a;
    }
  }
  std::fill(seen.begin(), seen.end(), SIZE_MAX);
  for (std::size_t b = 0; b < order; ++b) {
    for (std::size_t a = 0; a < order; ++a) {
      auto v = table[a * order + b];
      if (seen[v] == b) throw std::invalid_argument("table column is not a permutation");
      seen[v] = b;
    }
  }
  table_.assign(table.begin(), table.end());
  if (order <= kAssociativityCheckLimit) {
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) {
        auto ab = table_[a * order + b];
        for (std::size_t c = 0; c < order; ++c) {
          if (table_[ab * order + c] != table_[a * order + table_[b * order + c]]) {
            throw std::invalid_argument("table is not associative");
          }
        }
      }
  }
  inverse_.resize(order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (table_[a * order + b] == 0) inverse_[a] = static_cast<ElementId>(b);
}

unsigned FiniteGroup::element_order(ElementId x) const {
  unsigned n = 1;
  for (ElementId y = x; y != 0; y = mul(y, x)) ++n;
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (ElementId a = 0; a < order_; ++a)
    for (ElementId b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = p.size();
    for (auto v : p) h = h * 1000003u ^ v;
    return h;
  }
};

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

}  // namespace

FiniteGroup group_from_generators(std::size_t degree, std::span<const Permutation> generators, std::size_t cap) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  for (const auto& g : generators) {
    if (g.size() != degree) throw std::invalid_argument("generator has the wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw std::invalid_argument("generator is not a permutation");
      hit[v] = true;
    }
  }
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);

  std::vector<Permutation> elems{id};
  std::unordered_map<Permutation, ElementId, PermHash> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = compose(elems[head], g);
      if (index.contains(next)) continue;
      if (elems.size() >= cap) {
        throw BudgetExceeded("group closure exceeds cap " + std::to_string(cap));
      }
      index.emplace(next, static_cast<ElementId>(elems.size()));
      elems.push_back(std::move(next));
    }
  }
  const std::size_t n = elems.size();
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elems) labels.push_back(format_cycles(e));
  return FiniteGroup(n, std::move(table), std::move(labels));
}

// ------------------------------------------------------------------ Subgroup

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
  if (auto c = a.order_ <=> b.order_; c != 0) return c;
  return a.members_ <=> b.members_;
}

Subgroup trusted_subgroup(ElementSet members) {
  auto n = members.size();
  return Subgroup(std::move(members), n);
}

bool is_subgroup(const FiniteGroup& G, const ElementSet& members) {
  if (members.universe() != G.order() || !members.contains(0)) return false;
  auto elems = members.elements();
  for (auto a : elems)
    for (auto b : elems)
      if (!members.contains(G.mul(a, b))) return false;
  return true;
}

Subgroup Subgroup::from_elements(const FiniteGroup& G, ElementSet members) {
  if (!is_subgroup(G, members)) throw std::invalid_argument("element set is not a subgroup");
  return trusted_subgroup(std::move(members));
}

Subgroup closure(const FiniteGroup& G, const ElementSet& seed) {
  if (seed.universe() != G.order()) throw std::invalid_argument("element set from a different group");
  auto gens = seed.elements();
  ElementSet members(G.order());
  members.insert(0);
  std::vector<ElementId> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto g : gens) {
      auto y = G.mul(queue[head], g);
      if (!members.contains(y)) {
        members.insert(y);
        queue.push_back(y);
      }
    }
  }
  return trusted_subgroup(std::move(members));
}

Subgroup Subgroup::generated_by(const FiniteGroup& G, std::span<const ElementId> generators) {
  ElementSet seed(G.order());
  for (auto g : generators) {
    if (g >= G.order()) throw std::invalid_argument("generator id out of range");
    seed.insert(g);
  }
  return closure(G, seed);
}

Subgroup Subgroup::trivial(const FiniteGroup& G) {
  ElementSet s(G.order());
  s.insert(0);
  return trusted_subgroup(std::move(s));
}

Subgroup Subgroup::whole(const FiniteGroup& G) { return trusted_subgroup(ElementSet::full(G.order())); }

Subgroup join(const FiniteGroup& G, const Subgroup& a, const Subgroup& b) {
  return closure(G, a.members() | b.members());
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) { return trusted_subgroup(a.members() & b.members()); }

Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, ElementId g) {
  ElementSet s(G.order());
  H.members().for_each([&](ElementId h) { s.insert(G.conjugate(g, h)); });
  return trusted_subgroup(std::move(s));
}

ElementSet left_coset(const FiniteGroup& G, ElementId x, const Subgroup& H) {
  ElementSet s(G.order());
  H.members().for_each([&](ElementId h) { s.insert(G.mul(x, h)); });
  return s;
}

std::vector<ElementId> left_coset_labels(const FiniteGroup& G, const Subgroup& H) {
  constexpr ElementId kUnset = ~ElementId{0};
  std::vector<ElementId> label(G.order(), kUnset);
  auto hs = H.elements();
  for (ElementId x = 0; x < G.order(); ++x) {
    if (label[x] != kUnset) continue;
    for (auto h : hs) label[G.mul(x, h)] = x;
  }
  return label;
}

bool is_normal_in(const FiniteGroup& G, const Subgroup& K, const Subgroup& H) {
  auto hs = H.elements();
  bool ok = true;
  K.members().for_each([&](ElementId k) {
    if (!ok) return;
    for (auto h : hs) {
      if (!H.contains(G.conjugate(k, h))) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) { return is_normal_in(G, Subgroup::whole(G), H); }

Subgroup core_of(const FiniteGroup& G, const Subgroup& H) {
  if (!is_subgroup(G, H.members())) throw std::invalid_argument("H is not a subgroup of G");
  ElementSet core = H.members();
  for (ElementId g = 0; g < G.order(); ++g) core &= conjugate(G, H, g).members();
  return trusted_subgroup(std::move(core));
}

Subgroup normal_closure(const FiniteGroup& G, const Subgroup& K, const Subgroup& H) {
  ElementSet seed(G.order());
  auto hs = H.elements();
  K.members().for_each([&](ElementId k) {
    for (auto h : hs) seed.insert(G.conjugate(k, h));
  });
  return closure(G, seed);
}

SubnormalReport is_subnormal(const FiniteGroup& G, const Subgroup& H) {
  if (!is_subgroup(G, H.members())) throw std::invalid_argument("H is not a subgroup of G");
  SubnormalReport report;
  report.chain.push_back(Subgroup::whole(G));
  for (;;) {
    const Subgroup& top = report.chain.back();
    if (top == H) break;
    Subgroup next = normal_closure(G, top, H);
    if (next == top) break;
    if (!is_normal_in(G, top, next)) throw std::logic_error("normal closure is not normal");
    report.chain.push_back(std::move(next));
  }
  report.subnormal = report.chain.back() == H;
  report.defect = report.subnormal ? report.chain.size() - 1 : 0;
  return report;
}

Subgroup derived_subgroup(const FiniteGroup& G, const Subgroup& K) {
  ElementSet seed(G.order());
  auto ks = K.elements();
  for (auto a : ks)
    for (auto b : ks) seed.insert(G.mul(G.mul(a, b), G.mul(G.inverse(a), G.inverse(b))));
  return closure(G, seed);
}

std::vector<Subgroup> derived_series(const FiniteGroup& G) {
  std::vector<Subgroup> series{Subgroup::whole(G)};
  for (;;) {
    Subgroup next = derived_subgroup(G, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const FiniteGroup& G) { return derived_series(G).back().order() == 1; }

bool has_normal_sylow(const FiniteGroup& G, std::uint64_t p) {
  std::uint64_t part = 1;
  for (auto n = G.order(); n % p == 0; n /= p) part *= p;
  std::uint64_t p_elements = 0;
  for (ElementId x = 0; x < G.order(); ++x) {
    std::uint64_t o = G.element_order(x);
    while (o % p == 0) o /= p;
    if (o == 1) ++p_elements;
  }
  return p_elements == part;
}

Quotient quotient(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw std::invalid_argument("quotient by a non-normal subgroup");
  auto label = left_coset_labels(G, N);
  std::map<ElementId, ElementId> id_of;
  for (auto l : label) id_of.emplace(l, 0);
  std::vector<ElementId> reps;
  for (auto& [rep, id] : id_of) {
    id = static_cast<ElementId>(reps.size());
    reps.push_back(rep);
  }
  Quotient q;
  q.projection.resize(G.order());
  for (ElementId x = 0; x < G.order(); ++x) q.projection[x] = id_of.at(label[x]);
  const std::size_t n = reps.size();
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = q.projection[G.mul(reps[a], reps[b])];
  q.group = FiniteGroup(n, std::move(table));
  return q;
}

FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H) {
  auto elems = H.elements();
  std::vector<ElementId> pos(G.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<ElementId>(i);
  const std::size_t n = elems.size();
  std::vector<ElementId> table(n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(G.label(elems[a]));
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = pos[G.mul(elems[a], elems[b])];
  }
  return FiniteGroup(n, std::move(table), std::move(labels));
}

}  // namespace coverlab::group
