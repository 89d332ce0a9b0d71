#pragma once

#include "gonal/mpoly/mpoly.hpp"

#include <string>
#include <vector>

namespace gonal {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Parses sums of products of identifiers, integers and rationals, with
/// `^` for non-negative integer powers, parentheses, and division by
/// nonzero constants. `line` is used in error positions.
MPoly parse_poly(const RingPtr& r, const std::string& text, int line = 1);

struct IdealText {
  RingPtr ring;
  std::vector<MPoly> polys;
};

/// Reads the input format: optional `field: Q | GF(p)` (default Q), then
/// `vars: x,y,z`, then one polynomial per line. Blank lines and lines
/// starting with '#' are skipped.
IdealText parse_ideal_text(const std::string& text);

/// Parses a field spec: "Q" or "GF(p)".
FieldPtr parse_field(const std::string& spec);

}  // namespace gonal
