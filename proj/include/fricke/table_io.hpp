#pragma once

// Plain-text coefficient table files: a "p N" header line, then one
// "n value" row for every n = 0..N in order, values either integers or
// "a/b" rationals. '#' starts a comment; blank lines are ignored.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fricke/modforms.hpp"

namespace fricke {

// An unreadable or malformed table file. Kept distinct from other runtime
// errors so callers can map it to an input-error exit rather than a failed
// check.
class TableFormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses a coefficient table; the result carries source = ingested. Any
// format problem throws TableFormatError naming the 1-based line number.
AlphaTable parse_alpha_table(std::istream& in);

// Reads the file at `path`; errors are prefixed with the path.
AlphaTable load_alpha_table(const std::string& path);

// Inverse of parse_alpha_table: header then all rows 0..max_index().
// parse(emit(t)) reproduces t's level and entries exactly.
void emit_alpha_table(std::ostream& out, const AlphaTable& table);

}  // namespace fricke
