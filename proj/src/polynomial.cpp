#include "locmod/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace locmod {

const char* to_string(MonomialOrder order) {
  return order == MonomialOrder::Grevlex ? "grevlex" : "lex";
}

int RingContext::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

RingPtr make_ring(Field field, std::vector<std::string> vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!valid_identifier(v))
      throw RangeError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw RangeError("duplicate variable name '" + v + "'");
  }
  return std::make_shared<RingContext>(RingContext{field, std::move(vars)});
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->field == b->field && a->vars == b->vars;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b))
    throw ContextMismatch("ring contexts differ (field or variable set)");
}

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
  for (int x : e_) {
    if (x < 0) throw RangeError("negative exponent in monomial");
    deg_ += x;
  }
}

Monomial Monomial::one(int nvars) {
  return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

bool Monomial::divides(const Monomial& m) const {
  if (e_.size() != m.e_.size())
    throw SizeMismatch("monomials live in different rings");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  if (e_.size() != m.e_.size())
    throw SizeMismatch("monomials live in different rings");
  std::vector<int> out(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) out[i] = e_[i] + m.e_[i];
  return Monomial(std::move(out));
}

Monomial Monomial::divide(const Monomial& m) const {
  if (e_.size() != m.e_.size())
    throw SizeMismatch("monomials live in different rings");
  std::vector<int> out(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    out[i] = e_[i] - m.e_[i];
    if (out[i] < 0) throw RangeError("monomial division is not exact");
  }
  return Monomial(std::move(out));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw SizeMismatch("monomials live in different rings");
  std::vector<int> out(static_cast<std::size_t>(a.nvars()));
  for (int i = 0; i < a.nvars(); ++i) out[static_cast<std::size_t>(i)] = std::max(a.exp(i), b.exp(i));
  return Monomial(std::move(out));
}

int cmp_monomial(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.nvars() != b.nvars())
    throw SizeMismatch("monomials live in different rings");
  const int n = a.nvars();
  if (order == MonomialOrder::Grevlex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = n - 1; i >= 0; --i) {
      if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
    }
    return 0;
  }
  for (int i = 0; i < n; ++i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
  }
  return 0;
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, const Rat& c) {
  const Rat cc = ring->field.canon(c);
  if (Field::is_zero(cc)) return zero(std::move(ring));
  std::vector<Term> t;
  t.push_back({Monomial::one(ring->nvars()), cc});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->nvars())
    throw RangeError("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(ring->nvars()), 0);
  e[static_cast<std::size_t>(index)] = 1;
  std::vector<Term> t;
  t.push_back({Monomial(std::move(e)), Rat(1)});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Field& F = ring->field;
  const int n = ring->nvars();
  for (const Term& t : terms) {
    if (t.mono.nvars() != n)
      throw SizeMismatch("term exponent vector does not match ring variable count");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return cmp_monomial(a.mono, b.mono, MonomialOrder::Grevlex) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, F.canon(t.coeff));
      if (Field::is_zero(out.back().coeff)) out.pop_back();
    } else {
      Rat c = F.canon(t.coeff);
      if (!Field::is_zero(c)) out.push_back({std::move(t.mono), std::move(c)});
    }
  }
  return Polynomial(std::move(ring), std::move(out));
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // grevlex-descending storage puts a maximal-degree term first
  return terms_.front().mono.degree();
}

const Term& Polynomial::leading_term(MonomialOrder order) const {
  if (terms_.empty()) throw RangeError("leading term of the zero polynomial");
  if (order == MonomialOrder::Grevlex) return terms_.front();
  const Term* best = &terms_.front();
  for (const Term& t : terms_)
    if (cmp_monomial(t.mono, best->mono, order) > 0) best = &t;
  return *best;
}

Polynomial Polynomial::add_impl(const Polynomial& o, bool negate) const {
  require_same_ring(ring_, o.ring_);
  const Field& F = ring_->field;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = cmp_monomial(terms_[i].mono, o.terms_[j].mono, MonomialOrder::Grevlex);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j]);
      if (negate) out.back().coeff = F.neg(out.back().coeff);
      ++j;
    } else {
      Rat s = negate ? F.sub(terms_[i].coeff, o.terms_[j].coeff)
                     : F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!Field::is_zero(s)) out.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) {
    out.push_back(o.terms_[j]);
    if (negate) out.back().coeff = F.neg(out.back().coeff);
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const { return add_impl(o, false); }
Polynomial Polynomial::operator-(const Polynomial& o) const { return add_impl(o, true); }

Polynomial Polynomial::operator-() const {
  const Field& F = ring_->field;
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = F.neg(t.coeff);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const Field& F = ring_->field;
  std::map<std::vector<int>, Rat> acc;
  for (const Term& a : terms_) {
    for (const Term& b : o.terms_) {
      const Monomial m = a.mono * b.mono;
      Rat c = F.mul(a.coeff, b.coeff);
      auto it = acc.find(m.exps());
      if (it == acc.end()) {
        acc.emplace(m.exps(), std::move(c));
      } else {
        it->second = F.add(it->second, c);
        if (Field::is_zero(it->second)) acc.erase(it);
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) out.push_back({Monomial(e), std::move(c)});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    return cmp_monomial(a.mono, b.mono, MonomialOrder::Grevlex) > 0;
  });
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Rat& c) const {
  const Field& F = ring_->field;
  const Rat cc = F.canon(c);
  if (Field::is_zero(cc)) return zero(ring_);
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = F.mul(t.coeff, cc);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  if (m.nvars() != ring_->nvars())
    throw SizeMismatch("monomial does not match ring variable count");
  if (m.is_one()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back({t.mono * m, t.coeff});
  // multiplying every monomial by a fixed monomial preserves grevlex order
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw RangeError("negative polynomial power");
  Polynomial result = constant(ring_, Rat(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = (n >>= 1) > 0 ? base * base : base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  }
  return true;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& assignment) const {
  if (assignment.empty()) return *this;
  RingPtr target;
  for (const auto& [idx, value] : assignment) {
    if (idx < 0 || idx >= ring_->nvars())
      throw RangeError("substitution index out of range");
    if (!target) {
      target = value.ring();
      if (!target) throw ContextMismatch("substitution value has no ring");
    } else {
      require_same_ring(target, value.ring());
    }
  }
  // Map unassigned variables by name into the target ring.
  const int n = ring_->nvars();
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (assignment.count(i)) continue;
    image[static_cast<std::size_t>(i)] = target->var_index(ring_->vars[static_cast<std::size_t>(i)]);
    if (image[static_cast<std::size_t>(i)] < 0)
      throw ContextMismatch("unassigned variable '" + ring_->vars[static_cast<std::size_t>(i)] +
                            "' is absent from the target ring");
  }
  // Cache powers of each assigned value as needed.
  std::map<int, std::vector<Polynomial>> powers;
  auto value_power = [&](int var, int k) -> const Polynomial& {
    auto& tower = powers[var];
    if (tower.empty()) tower.push_back(Polynomial::constant(target, Rat(1)));
    while (static_cast<int>(tower.size()) <= k)
      tower.push_back(tower.back() * assignment.at(var));
    return tower[static_cast<std::size_t>(k)];
  };

  Polynomial result = Polynomial::zero(target);
  for (const Term& t : terms_) {
    Polynomial piece = Polynomial::constant(target, t.coeff);
    std::vector<int> fixed(static_cast<std::size_t>(target->nvars()), 0);
    bool fixed_used = false;
    for (int i = 0; i < n && !piece.is_zero(); ++i) {
      const int k = t.mono.exp(i);
      if (k == 0) continue;
      if (image[static_cast<std::size_t>(i)] >= 0) {
        fixed[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])] += k;
        fixed_used = true;
      } else {
        piece = piece * value_power(i, k);
      }
    }
    if (fixed_used && !piece.is_zero()) piece = piece.times_monomial(Monomial(fixed));
    result = result + piece;
  }
  return result;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != ring_->nvars())
    throw SizeMismatch("evaluation point does not match ring variable count");
  const Field& F = ring_->field;
  std::vector<Rat> vals;
  vals.reserve(point.size());
  for (const Rat& x : point) vals.push_back(F.canon(x));
  Rat total(0);
  for (const Term& t : terms_) {
    Rat v = t.coeff;
    for (int i = 0; i < t.mono.nvars(); ++i) {
      for (int k = 0; k < t.mono.exp(i); ++k)
        v = F.mul(v, vals[static_cast<std::size_t>(i)]);
    }
    total = F.add(total, v);
  }
  return total;
}

Polynomial elementary_symmetric(const RingPtr& ring, int k) {
  const int n = ring->nvars();
  if (k < 0 || k > n) throw RangeError("elementary symmetric index out of range");
  if (k == 0) return Polynomial::constant(ring, Rat(1));
  std::vector<Term> terms;
  std::vector<int> subset(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int pos, int next) -> void {
    if (pos == k) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      for (int i : subset) e[static_cast<std::size_t>(i)] = 1;
      terms.push_back({Monomial(std::move(e)), Rat(1)});
      return;
    }
    for (int i = next; i < n; ++i) {
      subset[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return Polynomial::from_terms(ring, std::move(terms));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    const bool negative = t.coeff < 0;
    Rat mag = negative ? Rat(-t.coeff) : t.coeff;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const bool trivial_mono = t.mono.is_one();
    if (mag != 1 || trivial_mono) {
      os << mag;
      if (!trivial_mono) os << "*";
    }
    if (!trivial_mono) {
      bool first_var = true;
      for (int i = 0; i < t.mono.nvars(); ++i) {
        const int e = t.mono.exp(i);
        if (e == 0) continue;
        if (!first_var) os << "*";
        first_var = false;
        os << ring_->vars[static_cast<std::size_t>(i)];
        if (e > 1) os << "^" << e;
      }
    }
  }
  return os.str();
}

}  // namespace locmod
