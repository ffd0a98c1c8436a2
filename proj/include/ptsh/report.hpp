#ifndef PTSH_REPORT_HPP
#define PTSH_REPORT_HPP

#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptsh/common.hpp"
#include "ptsh/version.hpp"

namespace ptsh {

enum class OutputFormat { json, csv, text };

inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown output format: " + s);
}

/// One verified identity: expected vs observed value and the deviation that
/// was compared against the tolerance.
struct CheckRecord {
  std::string check;
  Complex expected = 0.0;
  Complex observed = 0.0;
  double deviation = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::string paper_section;  // which identity family the suite verifies
  std::map<std::string, std::string> config;  // echo of the run configuration
  std::optional<Complex> lambda;              // gauge constant, when applicable
  std::vector<CheckRecord> records;
  std::map<std::string, std::string> metadata;  // reported-but-not-asserted facts

  void add(const std::string& check, const Complex& expected, const Complex& observed,
           double tolerance) {
    CheckRecord r;
    r.check = check;
    r.expected = expected;
    r.observed = observed;
    r.deviation = std::abs(observed - expected);
    r.pass = r.deviation <= tolerance;
    records.push_back(std::move(r));
  }

  /// Record where the deviation was computed upstream (e.g. a max over a matrix).
  void add_deviation(const std::string& check, double deviation, double tolerance) {
    CheckRecord r;
    r.check = check;
    r.expected = 0.0;
    r.observed = deviation;
    r.deviation = deviation;
    r.pass = deviation <= tolerance;
    records.push_back(std::move(r));
  }

  double max_deviation() const {
    double m = 0.0;
    for (const auto& r : records) m = std::max(m, r.deviation);
    return m;
  }

  int pass_count() const {
    int n = 0;
    for (const auto& r : records) n += r.pass ? 1 : 0;
    return n;
  }

  int fail_count() const { return static_cast<int>(records.size()) - pass_count(); }

  bool all_pass() const { return fail_count() == 0; }
};

namespace detail {

inline std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

/// Stable-key-order JSON; numbers at 17 significant digits, so identical
/// configs give byte-identical output.
inline std::string emit_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["paper_section"] = r.paper_section;
  j["tool_version"] = kVersion;
  nlohmann::ordered_json cfg;
  for (const auto& [k, v] : r.config) cfg[k] = v;
  j["config"] = cfg;
  if (r.lambda) {
    j["lambda"] = {{"re", detail::num17(r.lambda->real())},
                   {"im", detail::num17(r.lambda->imag())}};
  }
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const auto& rec : r.records) {
    nlohmann::ordered_json o;
    o["check"] = rec.check;
    o["expected_re"] = detail::num17(rec.expected.real());
    o["expected_im"] = detail::num17(rec.expected.imag());
    o["observed_re"] = detail::num17(rec.observed.real());
    o["observed_im"] = detail::num17(rec.observed.imag());
    o["deviation"] = detail::num17(rec.deviation);
    o["pass"] = rec.pass;
    recs.push_back(o);
  }
  j["records"] = recs;
  j["summary"] = {{"max_deviation", detail::num17(r.max_deviation())},
                  {"pass_count", r.pass_count()},
                  {"fail_count", r.fail_count()}};
  if (!r.metadata.empty()) {
    nlohmann::ordered_json md;
    for (const auto& [k, v] : r.metadata) md[k] = v;
    j["metadata"] = md;
  }
  return j.dump(2) + "\n";
}

inline constexpr const char* kCsvHeader =
    "check,expected_re,expected_im,observed_re,observed_im,deviation,pass";

inline std::string emit_csv(const Report& r) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const auto& rec : r.records) {
    os << rec.check << ',' << detail::num17(rec.expected.real()) << ','
       << detail::num17(rec.expected.imag()) << ',' << detail::num17(rec.observed.real()) << ','
       << detail::num17(rec.observed.imag()) << ',' << detail::num17(rec.deviation) << ','
       << (rec.pass ? "true" : "false") << "\n";
  }
  return os.str();
}

/// Parses records produced by emit_csv (round-trip checked in the test suite).
inline std::vector<CheckRecord> parse_csv_records(const std::string& csv) {
  std::vector<CheckRecord> out;
  std::istringstream is(csv);
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader)
    throw std::invalid_argument("parse_csv_records: missing or bad header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 7) throw std::invalid_argument("parse_csv_records: bad row");
    CheckRecord r;
    r.check = fields[0];
    r.expected = Complex(std::stod(fields[1]), std::stod(fields[2]));
    r.observed = Complex(std::stod(fields[3]), std::stod(fields[4]));
    r.deviation = std::stod(fields[5]);
    r.pass = fields[6] == "true";
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string emit_text(const Report& r) {
  std::ostringstream os;
  os << "suite: " << r.suite << "  (" << r.paper_section << ")  version " << kVersion << "\n";
  for (const auto& [k, v] : r.config) os << "  " << k << " = " << v << "\n";
  if (r.lambda)
    os << "  lambda = " << detail::num17(r.lambda->real()) << " + "
       << detail::num17(r.lambda->imag()) << "i\n";
  os << "\n";
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-44s %-13s %-6s\n", "check", "deviation", "pass");
  os << buf;
  for (const auto& rec : r.records) {
    std::snprintf(buf, sizeof(buf), "%-44s %-13.6g %-6s\n", rec.check.c_str(), rec.deviation,
                  rec.pass ? "PASS" : "FAIL");
    os << buf;
  }
  for (const auto& [k, v] : r.metadata) os << "note: " << k << ": " << v << "\n";
  std::snprintf(buf, sizeof(buf), "\nmax deviation %.6g, %d passed, %d failed\n",
                r.max_deviation(), r.pass_count(), r.fail_count());
  os << buf;
  return os.str();
}

inline std::string emit(const Report& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: return emit_json(r);
    case OutputFormat::csv: return emit_csv(r);
    default: return emit_text(r);
  }
}

}  // namespace ptsh

#endif  // PTSH_REPORT_HPP
