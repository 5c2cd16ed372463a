#pragma once

// Command dispatch for the coverlab tool.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "coverlab/cli/report.hpp"

namespace coverlab::cli {

struct Options {
  std::string command;
  /// Input file path.
  std::optional<std::string> input;
  /// Inline input, used instead of a file.
  std::optional<std::string> text;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> prime;
  std::optional<std::uint64_t> M;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> alpha;
  std::optional<std::uint64_t> k_max;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> max_order;
  std::optional<std::uint64_t> random;
  std::optional<std::string> group;
  std::optional<std::string> catalog;
  std::string format = "text";
};

/// Runs one command. Throws std::invalid_argument (and subclasses) on bad
/// input, BudgetExceeded when a budget runs out before any result exists.
Report dispatch(const Options& options);

/// Parses argv, dispatches, prints the report and returns the exit status:
/// 0 all asserted checks hold, 1 a check failed, 2 budget exceeded,
/// 3 invalid input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coverlab::cli
