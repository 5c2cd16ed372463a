#include "coverlab/cli/report.hpp"

#include <sstream>

namespace coverlab::cli {

void Report::check(std::string name, bool holds, Json value, std::string witness) {
  verdicts.push_back({std::move(name), holds, true, std::move(value), std::move(witness)});
}

void Report::inform(std::string name, bool holds, Json value, std::string witness) {
  verdicts.push_back({std::move(name), holds, false, std::move(value), std::move(witness)});
}

int Report::exit_status() const {
  if (budget_exceeded) return kBudget;
  for (const auto& v : verdicts)
    if (v.asserted && !v.holds) return kViolated;
  return kOk;
}

Json to_json(const ExactRational& q) {
  Json j = Json::object();
  j["num"] = q.numerator().get_str();
  j["den"] = q.denominator().get_str();
  return j;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_object() && v.size() == 2 && v.contains("num") && v.contains("den")) {
    auto den = v["den"].get<std::string>();
    return den == "1" ? v["num"].get<std::string>() : v["num"].get<std::string>() + "/" + den;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << "command: " << report.command << "\n";
  if (report.seed) os << "seed: " << *report.seed << "\n";
  for (const auto& [key, value] : report.inputs.items()) os << "input " << key << ": " << scalar_text(value) << "\n";
  for (const auto& [key, value] : report.values.items()) os << key << ": " << scalar_text(value) << "\n";
  for (const auto& v : report.verdicts) {
    const char* tag = v.asserted ? (v.holds ? "PASS" : "FAIL") : (v.holds ? "info" : "info-no");
    os << "[" << tag << "] " << v.check;
    if (!v.value.is_null()) os << " = " << scalar_text(v.value);
    if (!v.witness.empty()) os << " (" << v.witness << ")";
    os << "\n";
  }
  for (const auto& w : report.warnings) os << "warning: " << w << "\n";
  if (report.budget_exceeded) os << "budget exceeded: results are truncated\n";
  os << "status: " << report.exit_status() << "\n";
  return os.str();
}

std::string render_structured(const Report& report) {
  Json j = Json::object();
  j["command"] = report.command;
  j["version"] = kVersion;
  j["seed"] = report.seed ? Json(*report.seed) : Json(nullptr);
  j["inputs"] = report.inputs;
  j["values"] = report.values;
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) {
    Json e = Json::object();
    e["check"] = v.check;
    e["holds"] = v.holds;
    e["asserted"] = v.asserted;
    e["value"] = v.value;
    e["witness"] = v.witness;
    verdicts.push_back(std::move(e));
  }
  j["verdicts"] = std::move(verdicts);
  j["warnings"] = report.warnings;
  j["budget_exceeded"] = report.budget_exceeded;
  j["status"] = report.exit_status();
  return j.dump(2) + "\n";
}

}  // namespace coverlab::cli
