#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hochkit/linalg.hpp"

namespace hochkit {

std::string format_vector(const Vector& v);
std::string format_matrix(const SparseMatrix& m);

/// One identity checked: both sides in exact scalar syntax.
struct CheckRecord {
  std::string suite;
  std::string name;
  /// Name of the theorem or lemma the identity instantiates.
  std::string tag;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::string note;
  double elapsed_ms = 0.0;
};

class Report {
 public:
  static constexpr int schema_version = 1;

  std::string command;
  std::uint64_t seed = 0;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  /// Command output other than identity checks.
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<CheckRecord> records;
  std::vector<std::string> notes;

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  std::size_t passed() const;
  std::size_t failed() const { return records.size() - passed(); }
  bool all_pass() const { return failed() == 0; }

  nlohmann::ordered_json to_json(bool timings) const;
  void print_table(std::ostream& os, bool timings) const;
};

/// Milliseconds since construction.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace hochkit
