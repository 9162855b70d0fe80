#include "cm/symb.hpp"

#include <cctype>

namespace cm::symb {

namespace {

class Parser {
 public:
  Parser(int dim, std::string_view text) : dim_(dim), text_(text) {}

  RF run() {
    RF r = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  RF expr() {
    RF r = term();
    for (;;) {
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  RF term() {
    RF r = unary();
    for (;;) {
      if (eat('*')) {
        r *= unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        RF d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        r /= d;
      } else {
        return r;
      }
    }
  }

  RF unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RF power() {
    RF base = atom();
    if (eat('^')) return base.pow(static_cast<unsigned>(number()));
    return base;
  }

  RF atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RF r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RF::constant(dim_, Rational(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == 'x' || c == 'y') {
      std::size_t at = pos_;
      ++pos_;
      int mu = number();
      Coordinate v = Coordinate::x(mu);
      if (c == 'y') {
        if (pos_ >= text_.size() || text_[pos_] != '_') fail("expected '_' in frame coordinate");
        ++pos_;
        v = Coordinate::y(mu, number());
      }
      if (!v.valid(dim_)) throw ParseError("coordinate " + v.name() + " outside dim " + std::to_string(dim_), at);
      return RF::variable(dim_, v);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  int dim_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RF parse_rf(int dim, std::string_view text) {
  check_dim(dim);
  return Parser(dim, text).run();
}

Polynomial parse_polynomial(int dim, std::string_view text) {
  RF r = parse_rf(dim, text);
  if (!r.is_polynomial()) throw ParseError("expected a polynomial", 0);
  return r.numerator();
}

}  // namespace cm::symb
