#pragma once

// Line-oriented run reports: KEY=VALUE pairs plus named pass/fail checks,
// rendered deterministically except for one stamp line that callers may
// suppress when comparing outputs byte for byte.

#include <chrono>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fricke/rational.hpp"

namespace fricke {

class RunReport {
 public:
  explicit RunReport(std::string command);

  void kv(const std::string& key, const std::string& value);
  void kv(const std::string& key, const char* value);
  void kv(const std::string& key, long value);
  void kv(const std::string& key, int value);
  void kv(const std::string& key, double value);
  void kv(const std::string& key, const Rational& value);

  // Emits CHECK.<name>=PASS, or CHECK.<name>=FAIL <detail>; any failing
  // check flips the overall result (and the caller's exit code).
  void check(const std::string& name, bool pass,
             const std::string& detail = "");
  bool all_passed() const { return ok_; }

  // "# run: <utc stamp> elapsed_ms=<n>" (unless suppressed), COMMAND=...,
  // the recorded lines in order, then RESULT=PASS|FAIL.
  void render(std::ostream& out, bool with_stamp = true) const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> lines_;
  bool ok_ = true;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace fricke
