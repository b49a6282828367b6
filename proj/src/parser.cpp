#include "burchlab/parser.hpp"

#include <cctype>
#include <string>

#include "burchlab/errors.hpp"

namespace burchlab {

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      advance();
    }
    terms.push_back(parse_term(negate));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      advance();
      terms.push_back(parse_term(c == '-'));
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  Term parse_term(bool negate) {
    const auto& f = ring_->field();
    skip_ws();
    FieldElement coef = f.one();
    Monomial mono(ring_->nvars());
    bool need_factor = true;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = parse_coefficient();
      skip_ws();
      if (!at_end() && peek() == '*') {
        advance();
      } else {
        need_factor = false;
      }
    }
    if (need_factor) {
      mono = mono * parse_factor();
      while (true) {
        skip_ws();
        if (at_end() || peek() != '*') break;
        advance();
        mono = mono * parse_factor();
      }
    }
    ring_->check_degree(mono.degree());
    return {negate ? f.neg(coef) : coef, mono};
  }

  Monomial parse_factor() {
    skip_ws();
    std::size_t start = pos_;
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError("expected a variable", pos_);
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) advance();
    std::string name(text_.substr(start, pos_ - start));
    int index = ring_->variable_index(name);
    if (index < 0) throw ParseError("unknown variable '" + name + "'", start);
    int exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      advance();
      skip_ws();
      std::size_t epos = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected an exponent", pos_);
      long long e = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + (peek() - '0');
        if (e > 0xffff) throw ParseError("exponent too large", epos);
        advance();
      }
      exponent = static_cast<int>(e);
    }
    Monomial m(ring_->nvars());
    m.set(static_cast<std::size_t>(index), exponent);
    return m;
  }

  // Literals are reduced digit by digit, so any length is accepted.
  FieldElement parse_coefficient() {
    const auto& f = ring_->field();
    FieldElement value = f.zero();
    FieldElement ten = f.from_integer(10);
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = f.add(f.mul(value, ten), f.from_integer(peek() - '0'));
      advance();
    }
    return value;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { ++pos_; }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  return PolynomialParser(text, ring).parse();
}

}  // namespace burchlab
