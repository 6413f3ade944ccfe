#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "morseshed/valued.hpp"

namespace morseshed {

/// Malformed stack file. `line()` is 1-based; 0 when the problem is not
/// tied to one line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Stack file format:
//
//   pseudomanifold d=2
//   1 2 3 : 7
//   1 2 : 9
//   ...
//
// One record per simplex: vertex ids, a colon, an integer value. Blank lines
// and '#' comments are ignored. Every simplex of the closure of the listed
// simplices must have exactly one record, and the closure must be a
// d-pseudomanifold.

ValuedComplex parse_stack_file(std::istream& in);
ValuedComplex parse_stack_text(const std::string& text);

/// Canonical form: header, then records sorted by (dim, lex).
void write_stack_file(std::ostream& out, const ValuedComplex& v);
std::string serialize_stack_file(const ValuedComplex& v);

}  // namespace morseshed
