#include "ellcox/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace ellcox {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Info:
      return "info";
  }
  return "info";
}

void Report::compare(std::string name, std::string expected, std::string actual, std::string anchor) {
  const bool ok = expected == actual;
  check(std::move(name), ok, std::move(expected), std::move(actual), std::move(anchor));
}

void Report::check(std::string name, bool ok, std::string expected, std::string actual, std::string anchor) {
  records.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(expected), std::move(actual), std::move(anchor)});
}

void Report::info(std::string name, std::string actual, std::string anchor) {
  records.push_back({std::move(name), Status::Info, "", std::move(actual), std::move(anchor)});
}

void Report::note(std::string text) {
  if (std::find(repair_notes.begin(), repair_notes.end(), text) == repair_notes.end()) repair_notes.push_back(std::move(text));
}

void Report::append(const Report& other, const std::string& prefix) {
  for (CheckRecord r : other.records) {
    r.name = prefix + r.name;
    records.push_back(std::move(r));
  }
  for (const auto& n : other.repair_notes) note(prefix + n);
}

bool Report::passed() const {
  return std::none_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.status == Status::Fail; });
}

std::string to_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = 1;
  j["tool"] = {{"name", "ellcox"}, {"version", kToolVersion}};
  ordered_json input;
  input["command"] = r.command;
  if (!r.target.empty()) input["target"] = r.target;
  if (r.n) input["n"] = *r.n;
  if (r.seed) input["seed"] = *r.seed;
  j["input"] = input;
  j["status"] = r.passed() ? "pass" : "fail";
  ordered_json records = ordered_json::array();
  for (const auto& c : r.records)
    records.push_back(
        {{"name", c.name}, {"status", status_name(c.status)}, {"expected", c.expected}, {"actual", c.actual}, {"anchor", c.anchor}});
  j["records"] = records;
  j["repair_notes"] = r.repair_notes;
  return j.dump(2) + "\n";
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "ellcox " << kToolVersion << "  " << r.command;
  if (!r.target.empty()) os << ' ' << r.target;
  if (r.n) os << "  n=" << *r.n;
  if (r.seed) os << "  seed=" << *r.seed;
  os << '\n';
  for (const auto& c : r.records) {
    std::string tag = status_name(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    os << tag << std::string(6 - tag.size(), ' ') << c.name << ": " << c.actual;
    if (c.status != Status::Info && c.expected != c.actual) os << "  (expected " << c.expected << ')';
    if (!c.anchor.empty()) os << "  [" << c.anchor << ']';
    os << '\n';
  }
  if (!r.repair_notes.empty()) {
    os << "repair notes:\n";
    for (const auto& n : r.repair_notes) os << "  - " << n << '\n';
  }
  os << "overall: " << (r.passed() ? "pass" : "fail") << '\n';
  return os.str();
}

}  // namespace ellcox
