#include "expr_parser.hpp"

#include <cctype>
#include <regex>
#include <string>

#include "superflow/error.hpp"

namespace superflow::detail {
namespace {

void add_into(Laurent& acc, const Laurent& rhs, bool subtract) {
  for (const auto& [e, c] : rhs) {
    auto it = acc.find(e);
    if (it == acc.end()) {
      acc.emplace(e, subtract ? -c : c);
    } else {
      it->second += subtract ? -c : c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Laurent term{{{ea.first + eb.first, ea.second + eb.second}, ca * cb}};
      add_into(out, term, false);
    }
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, int conductor, bool allow_xy)
      : text_(text), conductor_(conductor), allow_xy_(allow_xy) {}

  Laurent parse() {
    Laurent result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

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

  Laurent expr() {
    Laurent acc = term();
    while (true) {
      if (accept('+')) {
        add_into(acc, term(), false);
      } else if (accept('-')) {
        add_into(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  Laurent term() {
    Laurent acc = unary();
    while (true) {
      if (accept('*')) {
        acc = multiply(acc, unary());
      } else if (accept('/')) {
        Laurent divisor = unary();
        if (divisor.size() != 1) fail("division only by single-term expressions");
        const auto& [e, c] = *divisor.begin();
        Laurent inv{{{-e.first, -e.second}, c.inverse()}};
        acc = multiply(acc, inv);
      } else {
        return acc;
      }
    }
  }

  Laurent unary() {
    if (accept('-')) {
      Laurent v = unary();
      for (auto& [e, c] : v) c = -c;
      return v;
    }
    if (accept('+')) return unary();
    return power();
  }

  Laurent power() {
    Laurent base = atom();
    if (!accept('^')) return base;
    skip_ws();
    bool negative = false;
    if (accept('-')) negative = true;
    skip_ws();
    long exponent = integer();
    if (negative) {
      if (base.size() != 1) fail("negative power of a multi-term expression");
      const auto& [e, c] = *base.begin();
      return Laurent{{{static_cast<int>(-e.first * exponent), static_cast<int>(-e.second * exponent)},
                      c.pow(-exponent)}};
    }
    Laurent result{{{0, 0}, CycNum(Rational(1), conductor_)}};
    for (long i = 0; i < exponent; ++i) result = multiply(result, base);
    return result;
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Laurent atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Laurent inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational value(std::string(text_.substr(start, pos_ - start)));
      if (value == 0) return {};
      return Laurent{{{0, 0}, CycNum(value, conductor_)}};
    }
    ++pos_;
    if (c == 'z') {
      if (conductor_ < 1) fail("z used without a conductor");
      return Laurent{{{0, 0}, CycNum::root_of_unity(conductor_, 1)}};
    }
    if ((c == 'x' || c == 'y') && allow_xy_) {
      Exponent e = c == 'x' ? Exponent{1, 0} : Exponent{0, 1};
      return Laurent{{e, CycNum(Rational(1), conductor_)}};
    }
    --pos_;
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int conductor_;
  bool allow_xy_;
};

}  // namespace

int split_conductor(std::string_view& text) {
  auto semicolon = text.rfind(';');
  if (semicolon == std::string_view::npos) return 1;
  static const std::regex suffix(R"(^\s*z\s*=\s*zeta_(\d+)\s*$)");
  std::string tail(text.substr(semicolon + 1));
  std::smatch match;
  if (!std::regex_match(tail, match, suffix)) {
    throw ParseError("malformed conductor suffix '" + tail + "'");
  }
  int n = std::stoi(match[1].str());
  if (n < 1) throw ParseError("conductor must be positive");
  text = text.substr(0, semicolon);
  return n;
}

Laurent parse_expression(std::string_view text, int conductor, bool allow_xy) {
  return Parser(text, conductor, allow_xy).parse();
}

}  // namespace superflow::detail
