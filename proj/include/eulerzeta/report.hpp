#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace eulerzeta {

enum class Status { kPass, kFail };

struct ReportEntry {
  std::string quantity;       // e.g. "zeta(3)", "euler_integral(2)"
  std::string method;         // e.g. "main", "quadrature"
  int digits = 0;
  std::string value;          // decimal, `digits` significant digits
  std::string error_bound;    // upward-rounded scientific
  long terms_or_level = 0;    // series terms, quadrature level, or 0
  long elapsed_ms = 0;
  Status status = Status::kPass;
  // Present on comparison entries and always on FAIL entries.
  std::optional<std::string> reference_method;
  std::optional<std::string> reference_value;
  std::optional<std::string> discrepancy;
  std::optional<std::string> tolerance;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct Report {
  std::vector<ReportEntry> entries;

  bool all_pass() const;
  friend bool operator==(const Report&, const Report&) = default;
};

std::string to_string(Status s);
/// Throws std::invalid_argument for anything but "PASS"/"FAIL".
Status status_from_string(const std::string& s);

void to_json(nlohmann::json& j, const ReportEntry& e);
void from_json(const nlohmann::json& j, ReportEntry& e);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

/// Throws std::invalid_argument when a FAIL entry lacks either compared value.
void validate(const Report& r);

/// Plain-text line for one entry, without timing so output is reproducible.
std::string render_plain(const ReportEntry& e);

void write_report(const Report& r, const std::string& path);
Report read_report(const std::string& path);

}  // namespace eulerzeta
