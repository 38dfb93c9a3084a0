#include "d2/expression.hpp"

#include <cctype>
#include <string>

#include "d2/errors.hpp"

namespace d2 {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const DihedralGroup& group) : text_(normalize(text)), group_(group) {}

  RingElement parse() {
    auto x = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return x;
  }

 private:
  // Maps the unicode minus sign and middle dot onto ASCII.
  static std::string normalize(std::string_view in) {
    std::string out;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (in.substr(i, 3) == "\xE2\x88\x92") {
        out += '-';
        i += 2;
      } else if (in.substr(i, 2) == "\xC2\xB7") {
        out += '*';
        i += 1;
      } else {
        out += in[i];
      }
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + text_ + "' at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RingElement expression() {
    RingElement acc(group_);
    bool first = true;
    while (true) {
      char c = peek();
      bool negative = false;
      if (c == '+' || c == '-') {
        negative = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      auto t = term();
      if (negative) acc -= t;
      else acc += t;
      first = false;
    }
    return acc;
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'a' || c == 'b' || c == 'e' || c == '(';
  }

  RingElement term() {
    auto acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  RingElement factor() {
    auto base = primary();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const long long k = integer_literal().get_si();
    return power(base, negative ? -k : k);
  }

  RingElement power(const RingElement& base, long long k) {
    // single group element with coefficient 1: use group arithmetic
    std::size_t support = 0, where = 0;
    for (std::size_t i = 0; i < base.coeffs().size(); ++i)
      if (sgn(base.coeffs()[i]) != 0) {
        ++support;
        where = i;
      }
    if (support == 1 && base.coeffs()[where] == 1)
      return RingElement::of(group_, group_.power(group_.element(where), k));
    if (k < 0) fail("negative power of a non-group element");
    if (k > 4096) fail("exponent too large");
    auto out = RingElement::one(group_);
    for (long long i = 0; i < k; ++i) out = out * base;
    return out;
  }

  Integer integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(text_.substr(start, pos_ - start));
  }

  RingElement primary() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return RingElement::constant(group_, integer_literal());
    if (c == 'a') {
      ++pos_;
      return RingElement::of(group_, group_.a());
    }
    if (c == 'b') {
      ++pos_;
      return RingElement::of(group_, group_.b());
    }
    if (c == 'e') {
      ++pos_;
      return RingElement::one(group_);
    }
    if (c == '(') {
      ++pos_;
      auto inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string text_;
  const DihedralGroup& group_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_ring_expression(std::string_view text, const DihedralGroup& group) {
  return Parser(text, group).parse();
}

}  // namespace d2
