#pragma once

// Command reports and their text and structured (JSON) renderings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coverlab/rational.hpp"

namespace coverlab::cli {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

enum ExitStatus : int { kOk = 0, kViolated = 1, kBudget = 2, kInvalidInput = 3 };

/// One named check. Informational verdicts never affect the exit status.
struct Verdict {
  std::string check;
  bool holds = true;
  bool asserted = true;
  Json value;
  std::string witness;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<Verdict> verdicts;
  Json values = Json::object();
  std::optional<std::uint64_t> seed;
  std::vector<std::string> warnings;
  bool budget_exceeded = false;

  void check(std::string name, bool holds, Json value = nullptr, std::string witness = {});
  void inform(std::string name, bool holds, Json value = nullptr, std::string witness = {});
  int exit_status() const;
};

/// {"num": "...", "den": "..."} with decimal strings.
Json to_json(const ExactRational& q);

std::string render_text(const Report& report);
/// Byte-deterministic JSON with a trailing newline.
std::string render_structured(const Report& report);

}  // namespace coverlab::cli
