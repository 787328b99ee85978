// One line per acceptance criterion. With an argument k, runs criterion k only and prints
// its failing records; the exit status is 0 iff every criterion run passed.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "ellcox/checks.hpp"

int main(int argc, char** argv) {
  int first = 1, last = ellcox::kCriteria;
  if (argc > 1) {
    first = last = std::atoi(argv[1]);
    if (first < 1 || first > ellcox::kCriteria) {
      std::cerr << "usage: acceptance [1-" << ellcox::kCriteria << "]\n";
      return 2;
    }
  }
  bool all = true;
  for (int k = first; k <= last; ++k) {
    const auto start = std::chrono::steady_clock::now();
    ellcox::Report r = ellcox::acceptance_criterion(k);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    long pass = 0, fail = 0;
    for (const auto& c : r.records) {
      if (c.status == ellcox::Status::Pass) ++pass;
      if (c.status == ellcox::Status::Fail) ++fail;
    }
    // time limits: AC1 under 1 s, AC5 under 60 s
    bool timely = true;
    if (k == 1) timely = secs < 1.0;
    if (k == 5) timely = secs < 60.0;
    const bool ok = r.passed() && timely;
    all = all && ok;
    std::printf("AC%-2d %s  %-26s %ld passed, %ld failed, %.2fs%s\n", k, ok ? "PASS" : "FAIL",
                ellcox::criterion_title(k).c_str(), pass, fail, secs, timely ? "" : " (over time limit)");
    for (const auto& c : r.records)
      if (c.status == ellcox::Status::Fail)
        std::printf("     %s: expected %s, got %s\n", c.name.c_str(), c.expected.c_str(), c.actual.c_str());
    if (argc > 1)
      for (const auto& c : r.records)
        if (c.status == ellcox::Status::Info) std::printf("     %s: %s\n", c.name.c_str(), c.actual.c_str());
  }
  return all ? 0 : 1;
}
