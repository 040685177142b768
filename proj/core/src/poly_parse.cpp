#include "wmix/poly_parse.hpp"

#include <cctype>

#include "wmix/errors.hpp"

namespace wmix {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PolyVars& vars) : text_(text), vars_(vars) {}

  BivariatePolynomial parse() {
    BivariatePolynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  BivariatePolynomial expression() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = (take() == '-');
    BivariatePolynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        take();
        BivariatePolynomial t = term();
        if (c == '+') {
          acc += t;
        } else {
          acc -= t;
        }
      } else {
        return acc;
      }
    }
  }

  BivariatePolynomial term() {
    BivariatePolynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        take();
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  BivariatePolynomial factor() {
    BivariatePolynomial base = atom();
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      unsigned long e = exponent();
      BivariatePolynomial acc = BivariatePolynomial::constant(1);
      for (unsigned long i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  BivariatePolynomial atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      take();
      BivariatePolynomial inner = expression();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      take();
      return inner;
    }
    if (c == '-') {
      take();
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return BivariatePolynomial::constant(integer());
    }
    if (match_var(vars_.primary)) return BivariatePolynomial::monomial(1, 1, 0);
    if (!vars_.second.empty() && match_var(vars_.second)) {
      return BivariatePolynomial::monomial(1, 0, 1);
    }
    fail("expected a coefficient, a variable or '('");
  }

  bool match_var(const std::string& name) {
    if (text_.substr(pos_, name.size()) != name) return false;
    // Reject longer identifiers starting with the variable name.
    std::size_t after = pos_ + name.size();
    if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after]))) {
      return false;
    }
    pos_ = after;
    return true;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  unsigned long exponent() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    mpz_class e = integer();
    if (!e.fits_ulong_p() || e.get_ui() > 64) fail("exponent out of range");
    return e.get_ui();
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("polynomial syntax error at position " + std::to_string(pos_) + ": " + msg +
                     " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  const PolyVars& vars_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

}  // namespace

BivariatePolynomial parse_polynomial(std::string_view text, const PolyVars& vars) {
  return Parser(text, vars).parse();
}

IntPolynomial parse_int_polynomial(std::string_view text, const PolyVars& vars) {
  PolyVars univariate{vars.primary, ""};
  // All terms have second exponent 0, so specializing at any value is exact.
  return parse_polynomial(text, univariate).specialize_second(0);
}

std::vector<BivariatePolynomial> parse_family(std::string_view text, const PolyVars& vars) {
  std::vector<BivariatePolynomial> out;
  for (auto part : split_top_level(text)) out.push_back(parse_polynomial(part, vars));
  if (out.empty()) throw ParseError("empty polynomial family");
  return out;
}

std::vector<IntPolynomial> parse_int_family(std::string_view text, const PolyVars& vars) {
  std::vector<IntPolynomial> out;
  for (auto part : split_top_level(text)) out.push_back(parse_int_polynomial(part, vars));
  if (out.empty()) throw ParseError("empty polynomial family");
  return out;
}

}  // namespace wmix
