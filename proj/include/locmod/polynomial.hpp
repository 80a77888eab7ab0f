#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locmod/errors.hpp"
#include "locmod/field.hpp"

namespace locmod {

// Monomial orders used by the Groebner layer. Polynomials themselves always
// store terms in descending graded-reverse-lexicographic order; an order is
// a parameter of basis computations, not of the ring.
enum class MonomialOrder { Grevlex, Lex };

const char* to_string(MonomialOrder order);

// A polynomial ring context: coefficient field plus an ordered variable set.
// Variables are ordered largest-first: vars[0] > vars[1] > ...
struct RingContext {
  Field field;
  std::vector<std::string> vars;

  int nvars() const { return static_cast<int>(vars.size()); }
  // Index of a variable name, or -1 if absent.
  int var_index(std::string_view name) const;
};

using RingPtr = std::shared_ptr<const RingContext>;

// Validates that variable names are nonempty, distinct, and well-formed
// identifiers ([A-Za-z_][A-Za-z0-9_]*).
RingPtr make_ring(Field field, std::vector<std::string> vars);

// Ring contexts are compared structurally (same field, same variable list).
bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);  // ContextMismatch

class Monomial {
 public:
  explicit Monomial(std::vector<int> exps);  // RangeError on negative exponents
  static Monomial one(int nvars);

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const { return deg_; }
  int exp(int i) const { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exps() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  // pre: m.divides(*this)
  Monomial divide(const Monomial& m) const;

  bool operator==(const Monomial& m) const { return e_ == m.e_; }
  bool operator!=(const Monomial& m) const { return e_ != m.e_; }

 private:
  std::vector<int> e_;
  int deg_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);

// Three-way comparison: <0 if a < b, 0 if equal, >0 if a > b.
int cmp_monomial(const Monomial& a, const Monomial& b, MonomialOrder order);

struct Term {
  Monomial mono;
  Rat coeff;
};

// Immutable exact polynomial. Invariants: all coefficients are nonzero and in
// canonical field form; terms are sorted in descending grevlex order; all
// binary operations require structurally equal ring contexts.
class Polynomial {
 public:
  Polynomial() = default;  // detached zero; usable only after assignment

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, const Rat& c);
  static Polynomial variable(RingPtr ring, int index);  // RangeError on bad index
  // Normalizes: canonicalizes coefficients, merges duplicate monomials, drops
  // zeros, sorts. SizeMismatch if an exponent vector length differs from the
  // ring's variable count.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;

  // RangeError on the zero polynomial.
  const Term& leading_term(MonomialOrder order = MonomialOrder::Grevlex) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rat& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(int n) const;  // RangeError on n < 0

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Simultaneous substitution. Keys are variable indices of this ring; values
  // are polynomials sharing one target ring (which may differ from this
  // ring). Unassigned variables must exist by name in the target ring;
  // otherwise ContextMismatch. An empty assignment returns *this.
  Polynomial substitute(const std::map<int, Polynomial>& assignment) const;

  // Exact evaluation at a point (one value per ring variable, canonicalized).
  Rat evaluate(const std::vector<Rat>& point) const;  // SizeMismatch

  // Format: "3*a11^2*a12 - 1/2*a21"; zero prints as "0". Terms appear in
  // descending grevlex order; parse_polynomial inverts this exactly.
  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  Polynomial add_impl(const Polynomial& o, bool negate) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Exact parser for the to_string() format: signed sums of terms, each a '*'
// product of rational literals (e.g. "3", "1/2") and powers "var^k". Throws
// ParseError with position information on malformed input.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

// Elementary symmetric polynomial e_k in all ring variables (e_0 = 1).
// RangeError unless 0 <= k <= nvars.
Polynomial elementary_symmetric(const RingPtr& ring, int k);

}  // namespace locmod
