#pragma once

// Input files of the command-line tool.
//
// Cover file: classes written a/n, one or more per line separated by
// whitespace. '#' starts a comment; blank lines are ignored.
//
// Group file: a single group record (see catalog.hpp).
//
// Cover-over-group file: either `group NAME` naming a catalog group, or an
// inline group record, followed by entry lines
//
//   rep_id : gen_id gen_id ...
//
// giving a_i and generators of G_i as element ids (an empty list means the
// trivial subgroup). An optional line `H : gen_id ...` sets the subgroup H
// used by the union and aligned-index checks.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coverlab/catalog.hpp"
#include "coverlab/gcover.hpp"
#include "coverlab/zcover.hpp"

namespace coverlab::cli {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

zcover::ResidueSystem parse_cover_text(std::string_view text);
std::string serialize_cover(const zcover::ResidueSystem& sys);

group::FiniteGroup parse_group_text(std::string_view text);

struct GroupCoverInput {
  std::string group_name;
  std::shared_ptr<const group::SubgroupLattice> lattice;
  std::vector<gcover::CosetEntry> entries;
  std::optional<group::Subgroup> h;
};

GroupCoverInput parse_group_cover_text(std::string_view text,
                                       const group::Catalog& catalog = group::Catalog::builtin());

/// Whole file as a string; throws std::invalid_argument when unreadable.
std::string read_file(const std::string& path);

}  // namespace coverlab::cli
