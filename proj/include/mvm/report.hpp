#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "mvm/verify.hpp"

namespace mvm {

nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const VerificationReport& rep);

/// Rebuilds a report written by to_json; used by recheck.
VerificationReport report_from_json(const nlohmann::json& doc);

/// One line per axiom, with the first failing check spelled out.
std::string to_text(const VerificationReport& rep);

/// Everything one CLI invocation produced.
struct RunReport {
  nlohmann::json command;  // verb, flags and the model spec as given
  std::uint64_t seed = kDefaultSeed;
  std::vector<VerificationReport> reports;
  nlohmann::json results = nlohmann::json::object();  // verb-specific data
  double wall_seconds = 0;
  /// Set when a verb fails outside any verification report.
  bool failed = false;

  bool passed() const;
};

/// Sorted keys, canonical rationals and no timing, so equal runs give
/// byte-identical output.
nlohmann::json to_json(const RunReport& run);
std::string to_text(const RunReport& run);

enum class Format { json, text };
Format parse_format(const std::string& text);

/// Writes to path, or to stdout for "" and "-". Throws InputError when the
/// path is a directory or cannot be opened.
void write_report(const RunReport& run, const std::string& path, Format format);

}  // namespace mvm
