#include "g2gamma/ratfun/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "g2gamma/errors.hpp"

namespace g2gamma {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar s = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedInput(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expression() {
    std::vector<Scalar> terms{term()};
    for (;;) {
      if (accept('+'))
        terms.push_back(term());
      else if (accept('-'))
        terms.push_back(-term());
      else
        return terms.size() == 1 ? terms.front() : Scalar::sum(terms);
    }
  }

  Scalar term() {
    Scalar acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  long exponent() {
    const bool paren = accept('(');
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return negative ? -e : e;
  }

  Scalar power() {
    Scalar base = primary();
    if (accept('^')) {
      const long e = exponent();
      if (e < 0 && base.is_zero()) fail("zero raised to a negative power");
      return base.pow(e);
    }
    return base;
  }

  Scalar primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar s = expression();
      if (!accept(')')) fail("expected ')'");
      return s;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "q") return Scalar::q();
      if (name == "u") return Scalar::sqrt_q();
      if (name == "X") {
        pos_ = start;
        fail("X is not a symbol-ring element");
      }
      return Scalar::symbol(name);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

Rational parse_rational(std::string_view text) {
  const Scalar s = parse_scalar(text);
  if (!s.is_rational()) throw MalformedInput("expected a rational number, got \"" + std::string(text) + "\"");
  return s.rational_value();
}

}  // namespace g2gamma
