#include "fricke/table_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fricke {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(long lineno, const std::string& msg) {
  throw TableFormatError("coefficient table line " + std::to_string(lineno) +
                         ": " + msg);
}

}  // namespace

AlphaTable parse_alpha_table(std::istream& in) {
  AlphaTable t;
  t.source = AlphaSource::ingested;
  std::string raw;
  long lineno = 0;
  long declared_n = -1;
  long expect = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = strip(raw);
    if (s.empty()) continue;
    std::istringstream row(s);
    if (!have_header) {
      long p = 0;
      std::string extra;
      if (!(row >> p >> declared_n) || (row >> extra))
        fail(lineno, "expected header \"p N\"");
      if (p < 2) fail(lineno, "level must be at least 2");
      if (declared_n < 0) fail(lineno, "declared order must be nonnegative");
      t.p = static_cast<int>(p);
      t.entries.reserve(static_cast<size_t>(declared_n) + 1);
      have_header = true;
      continue;
    }
    long n = 0;
    std::string val, extra;
    if (!(row >> n >> val) || (row >> extra))
      fail(lineno, "expected a row \"n value\"");
    if (n > declared_n)
      fail(lineno, "row index " + std::to_string(n) +
                       " exceeds the declared order " +
                       std::to_string(declared_n));
    if (n != expect)
      fail(lineno, "rows must be contiguous from 0: expected index " +
                       std::to_string(expect) + ", got " + std::to_string(n));
    try {
      t.entries.push_back(parse_rational(val));
    } catch (const std::exception& e) {
      fail(lineno, std::string("bad value \"") + val + "\": " + e.what());
    }
    ++expect;
  }
  if (!have_header) fail(lineno == 0 ? 1 : lineno, "missing \"p N\" header");
  if (expect != declared_n + 1)
    throw TableFormatError(
        "coefficient table ends at index " + std::to_string(expect - 1) +
        " but the header declares N = " + std::to_string(declared_n));
  return t;
}

AlphaTable load_alpha_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw TableFormatError("cannot open coefficient table: " + path);
  try {
    return parse_alpha_table(f);
  } catch (const std::exception& e) {
    throw TableFormatError(path + ": " + e.what());
  }
}

void emit_alpha_table(std::ostream& out, const AlphaTable& table) {
  out << table.p << ' ' << table.max_index() << '\n';
  for (long n = 0; n <= table.max_index(); ++n)
    out << n << ' ' << to_string(table.entries[static_cast<size_t>(n)])
        << '\n';
}

}  // namespace fricke
