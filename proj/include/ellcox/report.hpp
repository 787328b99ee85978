#pragma once

// Check records and their text/JSON renderings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellcox/variety_type.hpp"

namespace ellcox {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Status { Pass, Fail, Info };
std::string status_name(Status s);

struct CheckRecord {
  std::string name;
  Status status = Status::Info;
  std::string expected;
  std::string actual;
  std::string anchor;  // where the reference value comes from
};

struct Report {
  std::string command;
  std::string target;  // type symbol, "all", an input path, or empty
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  std::vector<CheckRecord> records;
  std::vector<std::string> repair_notes;

  /// Pass when expected == actual, Fail otherwise.
  void compare(std::string name, std::string expected, std::string actual, std::string anchor);
  void check(std::string name, bool ok, std::string expected, std::string actual, std::string anchor);
  void info(std::string name, std::string actual, std::string anchor = "");
  void note(std::string text);
  void append(const Report& other, const std::string& prefix = "");

  /// False iff some record failed.
  bool passed() const;
};

/// Stable for fixed inputs: keys are emitted in insertion order.
std::string to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace ellcox
