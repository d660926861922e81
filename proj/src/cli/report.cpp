#include "eulerzeta/report.hpp"

#include <fstream>
#include <stdexcept>

namespace eulerzeta {
namespace {

template <typename T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void get_optional(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  if (auto it = j.find(key); it != j.end() && !it->is_null()) {
    v = it->get<T>();
  } else {
    v.reset();
  }
}

}  // namespace

bool Report::all_pass() const {
  for (const auto& e : entries) {
    if (e.status != Status::kPass) return false;
  }
  return true;
}

std::string to_string(Status s) { return s == Status::kPass ? "PASS" : "FAIL"; }

Status status_from_string(const std::string& s) {
  if (s == "PASS") return Status::kPass;
  if (s == "FAIL") return Status::kFail;
  throw std::invalid_argument("unknown status '" + s + "'");
}

void to_json(nlohmann::json& j, const ReportEntry& e) {
  j = nlohmann::json{{"quantity", e.quantity},
                     {"method", e.method},
                     {"digits", e.digits},
                     {"value", e.value},
                     {"error_bound", e.error_bound},
                     {"terms_or_level", e.terms_or_level},
                     {"elapsed_ms", e.elapsed_ms},
                     {"status", to_string(e.status)}};
  put_optional(j, "reference_method", e.reference_method);
  put_optional(j, "reference_value", e.reference_value);
  put_optional(j, "discrepancy", e.discrepancy);
  put_optional(j, "tolerance", e.tolerance);
}

void from_json(const nlohmann::json& j, ReportEntry& e) {
  j.at("quantity").get_to(e.quantity);
  j.at("method").get_to(e.method);
  j.at("digits").get_to(e.digits);
  j.at("value").get_to(e.value);
  j.at("error_bound").get_to(e.error_bound);
  j.at("terms_or_level").get_to(e.terms_or_level);
  j.at("elapsed_ms").get_to(e.elapsed_ms);
  e.status = status_from_string(j.at("status").get<std::string>());
  get_optional(j, "reference_method", e.reference_method);
  get_optional(j, "reference_value", e.reference_value);
  get_optional(j, "discrepancy", e.discrepancy);
  get_optional(j, "tolerance", e.tolerance);
}

void to_json(nlohmann::json& j, const Report& r) { j = nlohmann::json{{"entries", r.entries}}; }

void from_json(const nlohmann::json& j, Report& r) { j.at("entries").get_to(r.entries); }

void validate(const Report& r) {
  for (const auto& e : r.entries) {
    if (e.status == Status::kFail && (!e.reference_value || e.value.empty())) {
      throw std::invalid_argument("FAIL entry for " + e.quantity + " lacks a compared value");
    }
  }
}

std::string render_plain(const ReportEntry& e) {
  std::string line;
  const bool comparison = e.reference_method.has_value();
  if (comparison) line += to_string(e.status) + " ";
  line += e.quantity + " [" + e.method;
  if (comparison) line += " vs " + *e.reference_method;
  line += "] " + e.value + " ± " + e.error_bound;
  if (comparison && e.discrepancy) {
    line += " (diff " + *e.discrepancy;
    if (e.tolerance) line += ", tol " + *e.tolerance;
    line += ")";
  }
  if (e.status == Status::kFail && e.reference_value) line += " reference " + *e.reference_value;
  return line;
}

void write_report(const Report& r, const std::string& path) {
  validate(r);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  out << nlohmann::json(r).dump(2) << '\n';
}

Report read_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read report " + path);
  return nlohmann::json::parse(in).get<Report>();
}

}  // namespace eulerzeta
