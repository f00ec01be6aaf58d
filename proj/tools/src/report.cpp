#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

namespace hrap::cli {

void RunReport::add(std::string name, bool ok, std::string detail) {
  if (!ok) pass = false;
  checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string report_to_json_text(const RunReport& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["input_digest"] = r.input_digest;
  j["pass"] = r.pass;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckRecord& c : r.checks) {
    nlohmann::ordered_json row;
    row["name"] = c.name;
    row["pass"] = c.pass;
    if (!c.detail.empty()) row["detail"] = c.detail;
    checks.push_back(std::move(row));
  }
  j["checks"] = std::move(checks);
  if (!r.data.empty()) j["data"] = r.data;
  return j.dump(2) + "\n";
}

std::string report_to_text(const RunReport& r) {
  std::string out = r.command + "  (" + r.input_digest + ")\n";
  size_t width = 4;
  for (const CheckRecord& c : r.checks) width = std::max(width, c.name.size());
  for (const CheckRecord& c : r.checks) {
    out += "  ";
    out += c.pass ? "PASS" : "FAIL";
    out += "  " + c.name;
    if (!c.detail.empty()) {
      out.append(width - c.name.size() + 2, ' ');
      out += c.detail;
    }
    out += "\n";
  }
  char line[96];
  std::snprintf(line, sizeof line, "  %s in %.3fs\n",
                r.pass ? "pass" : "FAIL", r.duration_seconds);
  out += line;
  return out;
}

std::string fnv1a64_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hrap::cli
