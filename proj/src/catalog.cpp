#include "coverlab/catalog.hpp"

#include <charconv>
#include <sstream>

namespace coverlab::group {

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_count(std::string_view s, std::size_t line, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
    throw RecordError(line, std::string("expected a positive integer ") + what);
  }
  return v;
}

}  // namespace

std::vector<GroupRecord> parse_group_records(std::string_view text, std::size_t first_line) {
  std::vector<GroupRecord> out;
  std::optional<GroupRecord> open;
  std::vector<std::pair<std::size_t, std::string>> pending;
  std::size_t line_no = first_line - 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto line = trim(raw);
    if (line.empty()) continue;
    auto sp = line.find_first_of(" \t");
    auto key = line.substr(0, sp);
    auto value = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));

    if (key == "group") {
      if (open) throw RecordError(line_no, "nested group record");
      if (value.empty()) throw RecordError(line_no, "group name missing");
      open = GroupRecord{};
      open->name = std::string(value);
      pending.clear();
    } else if (!open) {
      throw RecordError(line_no, "directive outside a group record");
    } else if (key == "degree") {
      open->degree = parse_count(value, line_no, "degree");
    } else if (key == "expected_order") {
      open->expected_order = parse_count(value, line_no, "expected_order");
    } else if (key == "generator") {
      pending.emplace_back(line_no, std::string(value));
    } else if (key == "end") {
      if (open->degree == 0) throw RecordError(line_no, "record has no degree");
      if (open->expected_order == 0) throw RecordError(line_no, "record has no expected_order");
      for (const auto& [gl, gtext] : pending) {
        try {
          open->generators.push_back(parse_cycles(gtext, open->degree));
        } catch (const std::invalid_argument& e) {
          throw RecordError(gl, e.what());
        }
      }
      out.push_back(std::move(*open));
      open.reset();
    } else {
      throw RecordError(line_no, "unknown directive '" + std::string(key) + "'");
    }
    if (nl == text.size()) break;
  }
  if (open) throw RecordError(line_no, "record '" + open->name + "' not terminated by 'end'");
  return out;
}

std::string serialize_record(const GroupRecord& record) {
  std::ostringstream os;
  os << "group " << record.name << "\n  degree " << record.degree << "\n  expected_order " << record.expected_order
     << "\n";
  for (const auto& g : record.generators) os << "  generator " << format_cycles(g) << "\n";
  os << "end\n";
  return os.str();
}

FiniteGroup build_group(const GroupRecord& record) {
  FiniteGroup G = group_from_generators(record.degree, record.generators);
  if (G.order() != record.expected_order) {
    throw std::invalid_argument("group " + record.name + ": generators give order " + std::to_string(G.order()) +
                                ", expected " + std::to_string(record.expected_order));
  }
  G.set_name(record.name);
  return G;
}

Fingerprint fingerprint(const SubgroupLattice& L) {
  const auto& G = L.group();
  Fingerprint f;
  f.order = G.order();
  for (ElementId x = 0; x < G.order(); ++x) ++f.element_orders[G.element_order(x)];
  f.abelian = G.is_abelian();
  for (ElementId x = 0; x < G.order(); ++x) {
    bool central = true;
    for (ElementId y = 0; y < G.order() && central; ++y) central = G.mul(x, y) == G.mul(y, x);
    if (central) ++f.centre_order;
  }
  f.subgroup_count = L.size();
  f.normal_subgroup_count = L.normal_ids().size();
  return f;
}

Catalog Catalog::load(std::string_view text) {
  Catalog c;
  for (auto& record : parse_group_records(text)) {
    FiniteGroup G = build_group(record);
    Fingerprint f = fingerprint(SubgroupLattice(G));
    for (const auto& e : c.entries_) {
      if (e.record.name == record.name) throw std::invalid_argument("duplicate catalog name " + record.name);
      if (e.fingerprint == f) {
        throw std::invalid_argument("catalog entries " + e.record.name + " and " + record.name +
                                    " have equal fingerprints");
      }
    }
    c.entries_.push_back({std::move(record), std::move(G), std::move(f)});
  }
  return c;
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = load(builtin_catalog_text());
  return catalog;
}

const CatalogEntry* Catalog::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.record.name == name) return &e;
  return nullptr;
}

std::vector<const CatalogEntry*> Catalog::up_to_order(std::size_t max_order) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_)
    if (e.group.order() <= max_order) out.push_back(&e);
  return out;
}

}  // namespace coverlab::group
