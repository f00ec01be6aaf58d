#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hrap::cli {

// One named verification step. Queries record informational rows with
// pass = true so the conjunction semantics stay uniform.
struct CheckRecord {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::string input_digest;
  bool pass = true;
  std::vector<CheckRecord> checks;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  double duration_seconds = 0;  // shown to humans, kept out of the JSON

  void add(std::string name, bool ok, std::string detail = std::string());
};

// Deterministic machine report; identical inputs yield identical bytes.
std::string report_to_json_text(const RunReport& r);

// Terminal rendering: one table row per check plus the wall-clock line.
std::string report_to_text(const RunReport& r);

// FNV-1a 64-bit content digest, rendered as "fnv1a64:<16 hex digits>".
std::string fnv1a64_digest(std::string_view bytes);

}  // namespace hrap::cli
