#include "trilocal/expr_parser.hpp"

#include <cctype>
#include <string>

#include "trilocal/error.hpp"

namespace trilocal {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Family& family) : text_(text), family_(family) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    skip_ws();
    const std::size_t start = pos_;
    Expr lhs;
    if (accept('-')) {
      Expr neg;
      neg.kind = Expr::Kind::negate;
      neg.offset = start;
      neg.children.push_back(term());
      lhs = std::move(neg);
    } else {
      lhs = term();
    }
    while (true) {
      if (accept('+')) lhs = Expr::binary(Expr::Kind::sum, std::move(lhs), term());
      else if (accept('-')) lhs = Expr::binary(Expr::Kind::difference, std::move(lhs), term());
      else return lhs;
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (accept('*')) lhs = Expr::binary(Expr::Kind::product, std::move(lhs), factor());
    return lhs;
  }

  Expr factor() {
    Expr base = primary();
    while (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected a natural number exponent");
      unsigned long n = 0;
      try {
        n = std::stoul(std::string(text_.substr(start, pos_ - start)));
      } catch (const std::out_of_range&) {
        pos_ = start;
        fail("exponent out of range");
      }
      Expr p;
      p.kind = Expr::Kind::power;
      p.offset = base.offset;
      p.exponent = n;
      p.children.push_back(std::move(base));
      base = std::move(p);
    }
    return base;
  }

  Expr primary() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      Scalar v = Scalar::parse(text_.substr(start, pos_ - start));
      if (v.denominator() == 0) {
        pos_ = start;
        fail("zero denominator");
      }
      if (!v.belongs_to(family_.coeff_ring())) {
        pos_ = start;
        fail("constant " + v.to_string() + " is not in " + to_string(family_.coeff_ring()));
      }
      return Expr::constant(v, start);
    }
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] != '[') fail("expected '[' after 'x'");
      ++pos_;
      const std::size_t body = pos_;
      const std::size_t close = text_.find(']', body);
      if (close == std::string_view::npos) {
        pos_ = text_.size();
        fail("expected ']'");
      }
      try {
        BimElement m = family_.parse_melem(text_.substr(body, close - body));
        pos_ = close + 1;
        return Expr::letter(std::move(m), start);
      } catch (const Error& e) {
        pos_ = body;
        fail("unknown element literal for family " + family_.name() + ": " + e.what());
      }
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Family& family_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_element(std::string_view text, const Family& family) { return Parser(text, family).parse(); }

TElement parse_and_normalize(std::string_view text, const FamilyPtr& family, std::size_t budget) {
  Budget b(budget);
  return t_normalize(parse_element(text, *family), family, b);
}

}  // namespace trilocal
