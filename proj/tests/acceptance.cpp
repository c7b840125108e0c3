// Acceptance run: one PASS/FAIL line per criterion, each with its time
// limit. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "humbert/verify.hpp"

using namespace humbert;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome from_report(const SuiteReport& r) {
  std::string d = r.counters.dump();
  for (const auto& f : r.failures) d += "; " + f;
  return {r.pass, d};
}

int failures = 0;

void criterion(int n, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = secs <= limit_s;
  bool pass = o.pass && in_time;
  failures += !pass;
  if (o.detail.size() > 600) o.detail = o.detail.substr(0, 597) + "...";
  char timing[96];
  std::snprintf(timing, sizeof timing, "%.1f s of %.0f s%s", secs, limit_s, in_time ? "" : " (over limit)");
  std::cout << "criterion " << n << " " << (pass ? "PASS" : "FAIL") << " " << name << " [" << timing << "] "
            << o.detail << std::endl;
}

} // namespace

int main() {
  criterion(1, "delta5", 60, [] { return from_report(verify_delta5(1000, 0)); });
  criterion(2, "census", 5, [] { return from_report(verify_census()); });
  criterion(3, "degeneracy", 120, [] { return from_report(verify_degeneracy(20, 0)); });
  criterion(4, "pencil12", 120, [] { return from_report(verify_pencil12(20, 0)); });
  criterion(5, "homogeneity", 300, [] { return from_report(verify_homogeneity()); });
  criterion(6, "oracle-disc", 60, [] { return from_report(verify_oracle_disc(20, 0)); });
  criterion(7, "resultant-degree", 30, [] { return from_report(verify_resultant_degree()); });
  criterion(8, "cubic-pipelines", 1800, [] { return from_report(verify_pipelines()); });
  return failures == 0 ? 0 : 1;
}
