#pragma once

// Text records describing permutation groups, and the built-in catalog of
// all groups of order at most 16.
//
// Record format, one directive per line, '#' starts a comment:
//
//   group NAME
//     degree D
//     expected_order N
//     generator (1 2)(3 4)
//   end
//
// Any number of generator lines (including none) is allowed.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coverlab/group.hpp"
#include "coverlab/lattice.hpp"

namespace coverlab::group {

/// Malformed record text; carries the 1-based line number.
class RecordError : public std::invalid_argument {
 public:
  RecordError(std::size_t line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct GroupRecord {
  std::string name;
  std::size_t degree = 0;
  std::size_t expected_order = 0;
  std::vector<Permutation> generators;
  friend bool operator==(const GroupRecord&, const GroupRecord&) = default;
};

/// Parses every record in `text`. `first_line` offsets diagnostics when the
/// records are embedded in a larger file.
std::vector<GroupRecord> parse_group_records(std::string_view text, std::size_t first_line = 1);
std::string serialize_record(const GroupRecord& record);

/// Closure of the generators, named after the record. Throws
/// std::invalid_argument when the order differs from expected_order.
FiniteGroup build_group(const GroupRecord& record);

/// Isomorphism invariants used to tell catalog entries apart.
struct Fingerprint {
  std::size_t order = 0;
  /// element order -> number of elements of that order
  std::map<unsigned, std::size_t> element_orders;
  bool abelian = false;
  std::size_t centre_order = 0;
  std::size_t subgroup_count = 0;
  std::size_t normal_subgroup_count = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const SubgroupLattice& L);

struct CatalogEntry {
  GroupRecord record;
  FiniteGroup group;
  Fingerprint fingerprint;
};

class Catalog {
 public:
  /// Builds every record, checks expected orders, and rejects two entries
  /// with equal fingerprints. Throws std::invalid_argument.
  static Catalog load(std::string_view text);
  static const Catalog& builtin();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(std::string_view name) const;
  std::vector<const CatalogEntry*> up_to_order(std::size_t max_order) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// Contents of data/groups.catalog, compiled in.
std::string_view builtin_catalog_text();

}  // namespace coverlab::group
