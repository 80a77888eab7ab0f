#include <cctype>
#include <string>

#include "locmod/polynomial.hpp"

namespace locmod {
namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw error("empty polynomial");
    bool negate = consume_sign(true);
    while (true) {
      parse_term(terms, negate);
      skip_ws();
      if (at_end()) break;
      negate = consume_sign(false);
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  ParseError error(const std::string& msg) const {
    return ParseError(msg + " at position " + std::to_string(pos_) + " in '" +
                      std::string(text_) + "'");
  }

  // Returns true when the consumed sign is '-'. When optional, absence of a
  // sign is accepted (leading term); otherwise a sign is required.
  bool consume_sign(bool optional) {
    skip_ws();
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      const bool neg = peek() == '-';
      ++pos_;
      return neg;
    }
    if (!optional) throw error("expected '+' or '-'");
    return false;
  }

  Int parse_integer() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw error("expected integer");
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      digits.push_back(text_[pos_++]);
    return Int(digits);
  }

  std::string parse_identifier() {
    std::string name;
    name.push_back(text_[pos_++]);
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      name.push_back(text_[pos_++]);
    return name;
  }

  void parse_term(std::vector<Term>& out, bool negate) {
    Rat coeff(negate ? -1 : 1);
    std::vector<int> exps(static_cast<std::size_t>(ring_->nvars()), 0);
    bool any_factor = false;
    bool expect_factor = true;
    while (true) {
      skip_ws();
      if (at_end()) {
        if (expect_factor) throw error("expected a factor");
        break;
      }
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Int num = parse_integer();
        skip_ws();
        if (!at_end() && peek() == '/') {
          ++pos_;
          Int den = parse_integer();
          if (den == 0) throw error("zero denominator");
          coeff *= Rat(num, den);
        } else {
          coeff *= Rat(num);
        }
        any_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t name_pos = pos_;
        const std::string name = parse_identifier();
        const int idx = ring_->var_index(name);
        if (idx < 0) {
          pos_ = name_pos;
          throw error("unknown variable '" + name + "'");
        }
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          Int big = parse_integer();
          if (big > 1000000) throw error("exponent too large");
          e = big.convert_to<int>();
        }
        exps[static_cast<std::size_t>(idx)] += e;
        any_factor = true;
      } else {
        throw error("expected a coefficient or variable");
      }
      expect_factor = false;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        expect_factor = true;
        continue;
      }
      break;
    }
    if (!any_factor) throw error("empty term");
    try {
      coeff = ring_->field.canon(coeff);
    } catch (const RangeError& e) {
      throw error(e.what());
    }
    out.push_back({Monomial(std::move(exps)), std::move(coeff)});
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return Parser(ring, text).run();
}

}  // namespace locmod
