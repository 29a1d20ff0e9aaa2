#include "fricke/report.hpp"

#include <cstdio>
#include <ctime>
#include <ostream>

namespace fricke {

RunReport::RunReport(std::string command)
    : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

void RunReport::kv(const std::string& key, const std::string& value) {
  lines_.emplace_back(key, value);
}

void RunReport::kv(const std::string& key, const char* value) {
  lines_.emplace_back(key, std::string(value));
}

void RunReport::kv(const std::string& key, long value) {
  lines_.emplace_back(key, std::to_string(value));
}

void RunReport::kv(const std::string& key, int value) {
  lines_.emplace_back(key, std::to_string(value));
}

void RunReport::kv(const std::string& key, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  lines_.emplace_back(key, std::string(buf));
}

void RunReport::kv(const std::string& key, const Rational& value) {
  lines_.emplace_back(key, to_string(value));
}

void RunReport::check(const std::string& name, bool pass,
                      const std::string& detail) {
  std::string v = pass ? "PASS" : "FAIL";
  if (!pass && !detail.empty()) v += " " + detail;
  lines_.emplace_back("CHECK." + name, v);
  ok_ = ok_ && pass;
}

void RunReport::render(std::ostream& out, bool with_stamp) const {
  if (with_stamp) {
    auto now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    out << "# run: " << stamp << " elapsed_ms=" << ms << '\n';
  }
  out << "COMMAND=" << command_ << '\n';
  for (const auto& [k, v] : lines_) out << k << '=' << v << '\n';
  out << "RESULT=" << (ok_ ? "PASS" : "FAIL") << '\n';
}

}  // namespace fricke
