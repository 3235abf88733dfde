#include "hochkit/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hochkit {

std::string format_vector(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + "]";
}

std::string format_matrix(const SparseMatrix& m) {
  std::string out = "[";
  const auto rows = m.to_dense();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ", ";
    out += format_vector(rows[i]);
  }
  return out + "]";
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; }));
}

nlohmann::ordered_json Report::to_json(bool timings) const {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["seed"] = seed;
  j["config"] = config;
  j["results"] = results;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json c;
    c["suite"] = r.suite;
    c["name"] = r.name;
    c["tag"] = r.tag;
    auto inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    c["inputs"] = inputs;
    c["lhs"] = r.lhs;
    c["rhs"] = r.rhs;
    c["pass"] = r.pass;
    if (!r.note.empty()) c["note"] = r.note;
    if (timings) c["elapsed_ms"] = r.elapsed_ms;
    checks.push_back(std::move(c));
  }
  j["checks"] = checks;
  j["notes"] = notes;
  j["summary"] = {{"total", records.size()}, {"passed", passed()}, {"failed", failed()}};
  return j;
}

namespace {

void print_value(std::ostream& os, const std::string& key, const nlohmann::ordered_json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) print_value(os, k, x, indent + 2);
  } else if (v.is_string()) {
    os << pad << key << ": " << v.get<std::string>() << "\n";
  } else {
    os << pad << key << ": " << v.dump() << "\n";
  }
}

}  // namespace

void Report::print_table(std::ostream& os, bool timings) const {
  os << "hochkit " << command << "  (seed " << seed << ")\n";
  for (const auto& [k, v] : results.items()) print_value(os, k, v, 0);
  if (!records.empty()) {
    std::size_t wt = 3;
    std::size_t wn = 4;
    for (const auto& r : records) {
      wt = std::max(wt, r.tag.size());
      wn = std::max(wn, r.name.size());
    }
    os << "\n" << std::left << std::setw(6) << "" << std::setw(static_cast<int>(wt) + 2) << "tag"
       << std::setw(static_cast<int>(wn) + 2) << "check" << "lhs | rhs\n";
    for (const auto& r : records) {
      os << std::setw(6) << (r.pass ? "PASS" : "FAIL") << std::setw(static_cast<int>(wt) + 2) << r.tag
         << std::setw(static_cast<int>(wn) + 2) << r.name << r.lhs << " | " << r.rhs;
      if (!r.note.empty()) os << "  (" << r.note << ")";
      if (timings) {
        std::ostringstream t;
        t << std::fixed << std::setprecision(1) << r.elapsed_ms;
        os << "  [" << t.str() << " ms]";
      }
      os << "\n";
    }
    os << "\n" << passed() << "/" << records.size() << " checks passed\n";
  }
  for (const auto& n : notes) os << "note: " << n << "\n";
}

}  // namespace hochkit
