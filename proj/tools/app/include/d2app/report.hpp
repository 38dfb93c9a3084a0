#pragma once

#include <chrono>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "d2/integer.hpp"

namespace d2app {

inline constexpr const char* kReportSchema = "d2verify.report/1";

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct CheckRecord {
  std::string id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Status status = Status::Pass;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  std::string note;
  double elapsed_ms = 0;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  const std::string& command() const noexcept { return command_; }
  const std::vector<CheckRecord>& checks() const noexcept { return checks_; }
  void add(CheckRecord r) { checks_.push_back(std::move(r)); }

  /// Runs `body` on a fresh record with the given id and params and times it.
  /// A d2::Error escaping from `body` marks the check failed, except
  /// SizeGuardExceeded and ParseError, which propagate.
  CheckRecord& run(std::string id, nlohmann::ordered_json params, const std::function<void(CheckRecord&)>& body);

  bool passed() const;
  std::size_t count(Status s) const;

  nlohmann::ordered_json to_json() const;
  void write_text(std::ostream& out) const;

 private:
  std::string command_;
  std::vector<CheckRecord> checks_;
};

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json to_json(const d2::Integer& x);

}  // namespace d2app
