#pragma once

#include "gorstab/wpoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace gorstab {

/// Malformed polynomial text. Line and column are 1-based.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  /// Message without the position.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

/// Parses polynomial text such as "z^2 + y^5 + 2*x0^2*y^4" over ring.
///
/// Grammar: sums and differences of products; '*' between factors is
/// optional; '^' takes a non-negative integer; coefficients are integers or
/// integer quotients "a/b"; parentheses group. Division of anything other
/// than two integer literals is rejected.
WPoly parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace gorstab
