#include "secinv/parser.hpp"

#include <cctype>

#include "secinv/errors.hpp"

namespace secinv {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars, Ring ring)
      : text_(text), vars_(vars), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
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

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return text_.substr(start, pos_ - start);
  }

  Polynomial factor() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num{std::string(digits())};
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t den_pos = pos_;
        den = Integer(std::string(digits()));
        if (den == 0) throw ParseError("zero denominator", den_pos);
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      std::size_t index = vars_.size();
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) index = i;
      if (index == vars_.size()) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      unsigned power = 1;
      if (accept('^')) {
        skip_space();
        std::size_t exp_pos = pos_;
        std::string_view e = digits();
        if (e.size() > 3 || std::stoul(std::string(e)) > kMaxExponent)
          throw ParseError("exponent too large", exp_pos);
        power = static_cast<unsigned>(std::stoul(std::string(e)));
      }
      return Polynomial::monomial(ring_, Monomial::variable(ring_.n, index, power));
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  Ring ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> vars,
                            MonomialOrder order) {
  return Parser(text, vars, Ring{vars.size(), order}).parse();
}

}  // namespace secinv
