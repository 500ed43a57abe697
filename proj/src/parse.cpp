#include "gorstab/parse.hpp"

#include <cctype>

namespace gorstab {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::invalid_argument(what + " at line " + std::to_string(line) + ", column " +
                            std::to_string(column)),
      message_(what),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  WPoly parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    WPoly p = expression();
    skip_space();
    if (!at_end()) {
      if (peek() == ')') fail("unbalanced ')'");
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  WPoly expression() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    WPoly sum = term();
    if (negate) sum = -sum;
    while (true) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      WPoly t = term();
      if (c == '+') sum += t;
      else sum -= t;
    }
    return sum;
  }

  bool starts_primary() {
    skip_space();
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_' || c == '(';
  }

  WPoly term() {
    if (!starts_primary()) {
      if (at_end()) fail("expected a term but reached end of input");
      fail(std::string("expected a term before '") + peek() + "'");
    }
    WPoly prod = factor();
    while (true) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        if (!starts_primary()) fail("expected a factor after '*'");
        prod *= factor();
      } else if (peek() == '/') {
        fail("division in input");
      } else if (starts_primary()) {
        prod *= factor();
      } else {
        break;
      }
    }
    return prod;
  }

  WPoly factor() {
    WPoly base = primary();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("malformed exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 1000) fail_at("exponent too large", start);
      base = pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Integer integer_literal() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  WPoly primary() {
    skip_space();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer_literal();
      std::size_t save = pos_;
      skip_space();
      if (peek() == '/') {
        std::size_t slash = pos_;
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_at("division in input", slash);
        Integer den = integer_literal();
        if (sgn(den) == 0) fail_at("zero denominator", slash);
        return WPoly(ring_, make_rational(num, den));
      }
      pos_ = save;
      return WPoly(ring_, Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) fail_at("unknown variable '" + name + "'", start);
      return WPoly::variable(ring_, *idx);
    }
    if (c == '(') {
      ++pos_;
      WPoly inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

WPoly parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

}  // namespace gorstab
