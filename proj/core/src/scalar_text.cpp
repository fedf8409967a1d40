#include <cctype>
#include <string>

#include "tpa/error.hpp"
#include "tpa/scalar.hpp"

namespace tpa {

namespace {

// Recursive-descent parser:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' ['-'] digits)?
//   atom  := digits | 't' | '(' expr ')'
class ExprParser {
public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip_ws();
    if (pos_ != s_.size()) {
      fail("unexpected trailing input");
    }
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) {
          throw DivisionByZero();
        }
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) {
      return -unary();
    }
    if (accept('+')) {
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!accept('^')) {
      return base;
    }
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else if (accept('(')) {
      // allow t^(-2)
      negative = accept('-');
      const long e = digits();
      if (!accept(')')) {
        fail("expected ')'");
      }
      return raise(base, negative ? -e : e);
    }
    const long e = digits();
    return raise(base, negative ? -e : e);
  }

  static RationalFunction raise(const RationalFunction& base, long e) {
    RationalFunction out(1);
    const long n = e < 0 ? -e : e;
    for (long i = 0; i < n; ++i) {
      out *= base;
    }
    return e < 0 ? out.inv() : out;
  }

  long digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected an integer exponent");
    }
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  RationalFunction atom() {
    skip_ws();
    if (pos_ >= s_.size()) {
      fail("unexpected end of input");
    }
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expr();
      if (!accept(')')) {
        fail("expected ')'");
      }
      return inner;
    }
    if (c == 't') {
      ++pos_;
      return RationalFunction::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      }
      return RationalFunction(Rational::parse(s_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

RationalFunction parse_rational_function(std::string_view text) { return ExprParser(text).parse(); }

} // namespace tpa
