#include "qhcurve/parser.hpp"

#include <optional>
#include <string>
#include <utility>

#include "qhcurve/error.hpp"

namespace qhcurve {

namespace {

struct Position {
  int line = 1;
  int column = 1;
};

class Parser {
 public:
  Parser(std::string_view text, int precision) : text_(text), precision_(precision) {}

  std::vector<std::vector<TruncatedSeries>> document() {
    std::vector<std::vector<TruncatedSeries>> rings;
    rings.push_back(generators());
    while (accept(';')) rings.push_back(generators());
    skip_space();
    if (offset_ < text_.size()) fail("expected ',' or ';' between generators");
    return rings;
  }

  std::vector<TruncatedSeries> single() {
    auto rings = document();
    if (rings.size() != 1) fail_at(ErrorKind::SyntaxError, "expected a single ring, got " + std::to_string(rings.size()), {1, 1});
    return std::move(rings.front());
  }

  TruncatedSeries polynomial() {
    TruncatedSeries f = expr(false);
    skip_space();
    if (offset_ < text_.size()) fail("expected '+' or '-' between terms");
    return f;
  }

 private:
  std::vector<TruncatedSeries> generators() {
    std::vector<TruncatedSeries> out;
    out.push_back(expr());
    while (accept(',')) out.push_back(expr());
    return out;
  }

  TruncatedSeries expr(bool as_generator = true) {
    skip_space();
    const Position start = pos_;
    std::vector<std::pair<int, Rational>> terms;
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    terms.push_back(term(negative));
    for (;;) {
      if (accept('+')) terms.push_back(term(false));
      else if (accept('-')) terms.push_back(term(true));
      else break;
    }
    TruncatedSeries series = TruncatedSeries::from_terms(terms, precision_);
    if (!as_generator) return series;
    if (series.valuation().is_infinite()) fail_at(ErrorKind::ZeroGenerator, "generator is identically zero", start);
    if (sgn(series.coeff(0)) != 0)
      fail_at(ErrorKind::ConstantTermInGenerator, "generator has nonzero constant term " + series.coeff(0).get_str(), start);
    return series;
  }

  std::pair<int, Rational> term(bool negative) {
    skip_space();
    Rational c(1);
    bool have_coeff = false;
    if (peek_digit()) {
      c = coeff();
      have_coeff = true;
      if (!accept('*')) return {0, negative ? Rational(-c) : c};
    }
    skip_space();
    if (!accept('t')) fail(have_coeff ? "expected 't' after '*'" : "expected a term");
    int exponent = 1;
    if (accept('^')) exponent = uint_exponent();
    return {exponent, negative ? Rational(-c) : c};
  }

  Rational coeff() {
    mpz_class num(digits(), 10);
    if (!accept('/')) return Rational(num);
    skip_space();
    const Position den_at = pos_;
    if (!peek_digit()) fail("expected a denominator");
    mpz_class den(digits(), 10);
    if (den == 0) fail_at(ErrorKind::ZeroDenominator, "zero denominator", den_at);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  int uint_exponent() {
    skip_space();
    const Position at = pos_;
    if (!peek_digit()) fail("expected an exponent");
    const std::string d = digits();
    if (d.size() > 9 || std::stol(d) >= precision_)
      fail_at(ErrorKind::SyntaxError, "exponent " + d + " exceeds the maximum precision " + std::to_string(precision_), at);
    return static_cast<int>(std::stol(d));
  }

  std::string digits() {
    std::string out;
    while (offset_ < text_.size() && text_[offset_] >= '0' && text_[offset_] <= '9') {
      out.push_back(text_[offset_]);
      advance();
    }
    return out;
  }

  bool peek_digit() {
    skip_space();
    return offset_ < text_.size() && text_[offset_] >= '0' && text_[offset_] <= '9';
  }

  bool accept(char c) {
    skip_space();
    if (offset_ < text_.size() && text_[offset_] == c) {
      advance();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (offset_ < text_.size()) {
      const char c = text_[offset_];
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') break;
      advance();
    }
  }

  void advance() {
    if (text_[offset_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++offset_;
  }

  static std::string describe(char c) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7f) return std::string(1, c);
    static const char* hex = "0123456789abcdef";
    return std::string("\\x") + hex[u >> 4] + hex[u & 15];
  }

  [[noreturn]] void fail(const std::string& message) {
    skip_space();
    std::string found = offset_ < text_.size() ? "'" + describe(text_[offset_]) + "'" : "end of input";
    fail_at(ErrorKind::SyntaxError, message + ", found " + found, pos_);
  }

  [[noreturn]] static void fail_at(ErrorKind kind, const std::string& message, Position at) {
    throw SyntaxError(kind, message, at.line, at.column);
  }

  std::string_view text_;
  int precision_;
  std::size_t offset_ = 0;
  Position pos_;
};

}  // namespace

std::vector<TruncatedSeries> parse_generators(std::string_view text, int precision) {
  return Parser(text, precision).single();
}

std::vector<std::vector<TruncatedSeries>> parse_document(std::string_view text, int precision) {
  return Parser(text, precision).document();
}

TruncatedSeries parse_polynomial(std::string_view text, int precision) { return Parser(text, precision).polynomial(); }

}  // namespace qhcurve
