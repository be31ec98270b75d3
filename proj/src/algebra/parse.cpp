#include "hopfcurv/algebra/parse.hpp"

#include <cctype>

namespace hopfcurv::algebra {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Aliases& aliases) : text_(text), aliases_(aliases) {}

  RationalExpr parse() {
    RationalExpr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
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

  RationalExpr expression() {
    RationalExpr acc;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  RationalExpr term() {
    RationalExpr acc = power();
    while (true) {
      if (accept('*')) acc = acc * power();
      else if (accept('/')) acc = acc / power();
      else return acc;
    }
  }

  RationalExpr power() {
    RationalExpr base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  RationalExpr primary() {
    skip_space();
    if (accept('(')) {
      RationalExpr e = expression();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (accept('{')) {
      RationalExpr e = expression();
      if (!accept('}')) fail("expected '}'");
      return e;
    }
    if (accept('-')) return -power();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalExpr(MPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (int k = 0; k < kNumVars; ++k) {
        if (name == var_name(static_cast<Var>(k))) return RationalExpr(MPoly::variable(static_cast<Var>(k)));
      }
      if (auto it = aliases_.find(name); it != aliases_.end()) return RationalExpr(MPoly::variable(it->second));
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const Aliases& aliases_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalExpr parse_expr(std::string_view text, const Aliases& aliases) { return Parser(text, aliases).parse(); }

MPoly parse_poly(std::string_view text, const Aliases& aliases) {
  const RationalExpr e = parse_expr(text, aliases);
  if (!e.is_polynomial()) throw ParseError("expected a polynomial: \"" + std::string(text) + "\"");
  return e.num() * (1 / e.den().constant_term());
}

}  // namespace hopfcurv::algebra
