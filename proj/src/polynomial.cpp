#include "bassinv/polynomial.hpp"

#include <cctype>
#include <limits>

namespace bassinv {

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&]() -> std::string {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected digits", pos);
    return std::string(text.substr(start, pos - start));
  };

  skip_ws();
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Rational value{Integer(read_digits())};
  skip_ws();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t at = pos;
    Integer denominator(read_digits());
    if (denominator == 0) throw ParseError("zero denominator", at);
    value /= Rational(denominator);
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("unexpected character", pos);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(const RationalPolynomial& f) {
  if (f.is_zero()) return "0";
  const Ring& ring = *f.ring();
  std::string out;
  bool first = true;
  for (const auto& term : f.terms()) {
    const bool negative = term.coefficient < 0;
    const Rational magnitude = negative ? Rational(-term.coefficient) : term.coefficient;
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;

    std::string monomial;
    for (Eigen::Index i = 0; i < term.exponents.size(); ++i) {
      const int k = term.exponents(i);
      if (k == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += ring.variables[static_cast<std::size_t>(i)];
      if (k > 1) monomial += '^' + std::to_string(k);
    }
    if (monomial.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += to_string(magnitude) + '*' + monomial;
    }
  }
  return out;
}

namespace {

constexpr long kMaxExponent = 1'000'000;

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  RationalPolynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    RationalPolynomial p = expression();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_primary() {
    skip_ws();
    const unsigned char c = static_cast<unsigned char>(peek());
    return std::isdigit(c) || std::isalpha(c) || c == '_' || c == '(';
  }

  RationalPolynomial expression() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    RationalPolynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      const char op = peek();
      if (op != '+' && op != '-') break;
      ++pos_;
      RationalPolynomial rhs = term();
      if (op == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

  RationalPolynomial term() {
    RationalPolynomial acc = power();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc *= power();
      } else if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const Integer divisor = integer_literal();
        if (divisor == 0) throw ParseError("division by zero", at);
        acc *= Rational(1) / Rational(divisor);
      } else if (starts_primary()) {
        acc *= power();
      } else {
        break;
      }
    }
    return acc;
  }

  RationalPolynomial power() {
    RationalPolynomial base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    const Integer k = integer_literal();
    if (k > kMaxExponent) throw ParseError("exponent too large", at);
    return pow(base, k.convert_to<unsigned>());
  }

  RationalPolynomial primary() {
    skip_ws();
    const unsigned char c = static_cast<unsigned char>(peek());
    if (c == '(') {
      ++pos_;
      RationalPolynomial inner = expression();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(c)) {
      return RationalPolynomial::constant(ring_, Rational(integer_literal()));
    }
    if (std::isalpha(c) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto index = ring_->index_of(name);
      if (!index) throw UnknownVariable(name, start);
      return RationalPolynomial::variable(ring_, static_cast<Eigen::Index>(*index));
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
  }

  Integer integer_literal() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                                    const std::optional<std::string>& parameter) {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    for (std::size_t j = i + 1; j < variables.size(); ++j) {
      if (variables[i] == variables[j]) throw PreconditionViolation("duplicate variable name");
    }
    if (parameter && *parameter == variables[i]) {
      throw PreconditionViolation("parameter name clashes with a variable");
    }
  }
  return PolynomialParser(text, make_ring(variables, parameter)).parse();
}

}  // namespace bassinv
