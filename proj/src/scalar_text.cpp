#include <cctype>

#include "hochkit/cyclotomic.hpp"
#include "hochkit/error.hpp"

namespace hochkit {

namespace {

// Recursive-descent reader for the scalar grammar:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | primary
//   primary := integer | 'z' integer ['^' ['-'] integer] | '(' expr ')'
// Columns in errors are 1-based offsets into the text.
class ScalarReader {
 public:
  explicit ScalarReader(std::string_view text) : text_(text) {}

  CycScalar read_all() {
    CycScalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

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

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  CycScalar expr() {
    CycScalar v;
    if (accept('-')) {
      v = -term();
    } else {
      accept('+');
      v = term();
    }
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  CycScalar term() {
    CycScalar v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        CycScalar d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  CycScalar unary() {
    if (accept('-')) return -unary();
    return primary();
  }

  CycScalar primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of scalar");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      CycScalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'z') {
      ++pos_;
      const Integer n = integer();
      if (n <= 0 || n > 100000) fail("root of unity order out of range");
      long k = 1;
      if (accept('^')) {
        const bool neg = accept('-');
        const Integer e = integer();
        if (!e.fits_slong_p()) fail("exponent too large");
        k = neg ? -e.get_si() : e.get_si();
      }
      return CycScalar::root_of_unity(static_cast<unsigned>(n.get_ui()), k);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return CycScalar(Rational(integer()));
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Splits "[a, b, (c, d)]" at top-level commas. Returns pieces with their
// offsets in the original text.
std::vector<std::pair<std::string_view, std::size_t>> split_bracketed(std::string_view text,
                                                                      std::size_t base) {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin >= end || text[begin] != '[') throw ParseError("expected '['", 1, base + begin + 1);
  if (text[end - 1] != ']') throw ParseError("expected ']'", 1, base + end);
  std::vector<std::pair<std::string_view, std::size_t>> parts;
  int depth = 0;
  std::size_t start = begin + 1;
  for (std::size_t i = begin + 1; i + 1 < end; ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced bracket", 1, base + i + 1);
    if (c == ',' && depth == 0) {
      parts.emplace_back(text.substr(start, i - start), base + start);
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced bracket", 1, base + end);
  const std::string_view last = text.substr(start, end - 1 - start);
  if (last.find_first_not_of(" \t") != std::string_view::npos || !parts.empty()) {
    parts.emplace_back(last, base + start);
  }
  return parts;
}

}  // namespace

CycScalar parse_scalar(std::string_view text) { return ScalarReader(text).read_all(); }

std::vector<CycScalar> parse_scalar_list(std::string_view text) {
  std::vector<CycScalar> out;
  for (const auto& [piece, offset] : split_bracketed(text, 0)) {
    try {
      out.push_back(ScalarReader(piece).read_all());
    } catch (const ParseError& e) {
      throw ParseError(e.message(), 1, offset + e.column());
    }
  }
  return out;
}

std::vector<std::vector<CycScalar>> parse_scalar_rows(std::string_view text) {
  std::vector<std::vector<CycScalar>> rows;
  for (const auto& [piece, offset] : split_bracketed(text, 0)) {
    try {
      rows.push_back(parse_scalar_list(piece));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), 1, offset + e.column());
    }
  }
  return rows;
}

}  // namespace hochkit
