#include "locmod/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace locmod {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Terms sorted descending in the engine's monomial order.
struct EPoly {
  std::vector<Term> t;

  bool is_zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().mono; }
  const Rat& lc() const { return t.front().coeff; }
};

bool terms_equal(const EPoly& a, const EPoly& b) {
  if (a.t.size() != b.t.size()) return false;
  for (std::size_t k = 0; k < a.t.size(); ++k)
    if (a.t[k].mono != b.t[k].mono || a.t[k].coeff != b.t[k].coeff) return false;
  return true;
}

struct Engine {
  RingPtr ring;
  MonomialOrder order;
  // Over the rationals the engine keeps polynomials as content-normalized
  // integer polynomials and reduces fraction-free (scaling by leading
  // coefficients instead of dividing). Over F_p it keeps elements monic.
  bool integer_mode;
  std::uint64_t max_pairs, max_terms;
  std::uint64_t pairs_done = 0;

  std::vector<EPoly> basis;

  struct Pair {
    Monomial l;  // lcm of the two leading monomials
    int i, j;
  };
  struct PairLess {
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.l.degree() != b.l.degree()) return a.l.degree() < b.l.degree();
      if (a.l.exps() != b.l.exps()) return a.l.exps() < b.l.exps();
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };
  std::set<Pair, PairLess> pending;

  Engine(RingPtr r, MonomialOrder o, GroebnerBudget budget)
      : ring(std::move(r)),
        order(o),
        integer_mode(ring->field.kind() == Field::Kind::Rationals) {
    const Budgets& g = global_budgets();
    max_pairs = budget.max_s_pairs ? budget.max_s_pairs : g.groebner_s_pairs;
    max_terms = budget.max_terms ? budget.max_terms : g.groebner_terms;
  }

  const Field& field() const { return ring->field; }

  void sort_desc(std::vector<Term>& t) const {
    std::sort(t.begin(), t.end(), [this](const Term& a, const Term& b) {
      return cmp_monomial(a.mono, b.mono, order) > 0;
    });
  }

  void check_terms(std::size_t n) const {
    if (n > max_terms)
      throw ResourceLimit("term budget exhausted during polynomial reduction", max_terms, n);
  }

  // Divide out the integer content and make the leading coefficient positive
  // (integer mode only; assumes all coefficients are integers).
  void strip_content(std::vector<Term>& t) const {
    if (!integer_mode || t.empty()) return;
    Int g = 0;
    for (const Term& x : t) {
      g = boost::multiprecision::gcd(g, numerator(x.coeff));
      if (g == 1) break;
    }
    if (numerator(t.front().coeff) < 0) g = -g;
    if (g == 1 || g == 0) return;
    for (Term& x : t) x.coeff = Rat(numerator(x.coeff) / g);
  }

  // Canonical in-engine representative: primitive integer with positive
  // leading coefficient over the rationals, monic over a prime field.
  void normalize(EPoly& f) const {
    if (f.t.empty()) return;
    if (!integer_mode) {
      if (f.lc() != 1) {
        const Rat inv = field().inv(f.lc());
        for (Term& x : f.t) x.coeff = field().mul(x.coeff, inv);
      }
      return;
    }
    Int den_lcm = 1;
    for (const Term& x : f.t) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(x.coeff));
    if (den_lcm != 1) {
      const Rat scale(den_lcm);
      for (Term& x : f.t) x.coeff *= scale;
    }
    strip_content(f.t);
  }

  // a*(qf . f) - b*(qg . g), merged in descending engine order. Scalars must
  // be canonical field elements; a may be 1 to skip scaling.
  std::vector<Term> combine(const std::vector<Term>& f, const Rat& a, const Monomial& qf,
                            const std::vector<Term>& g, const Rat& b, const Monomial& qg) const {
    const Field& F = field();
    const bool a_one = a == 1;
    std::vector<Monomial> fm, gm;
    fm.reserve(f.size());
    gm.reserve(g.size());
    for (const Term& t : f) fm.push_back(qf.is_one() ? t.mono : t.mono * qf);
    for (const Term& t : g) gm.push_back(qg.is_one() ? t.mono : t.mono * qg);
    std::vector<Term> out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      int c;
      if (i >= f.size()) c = -1;
      else if (j >= g.size()) c = 1;
      else c = cmp_monomial(fm[i], gm[j], order);
      if (c > 0) {
        out.push_back({fm[i], a_one ? f[i].coeff : F.mul(a, f[i].coeff)});
        ++i;
      } else if (c < 0) {
        out.push_back({gm[j], F.neg(F.mul(b, g[j].coeff))});
        ++j;
      } else {
        Rat s = F.sub(a_one ? f[i].coeff : F.mul(a, f[i].coeff), F.mul(b, g[j].coeff));
        if (!Field::is_zero(s)) out.push_back({fm[i], std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction of h modulo `reducers` (every term of the result is
  // irreducible). In exact mode the result is literally h minus an ideal
  // combination; otherwise (integer mode) it may be scaled by a positive
  // rational, which is irrelevant for basis building.
  EPoly reduce(EPoly h, const std::vector<EPoly>& reducers, bool exact) const {
    const Field& F = field();
    const Monomial unit = Monomial::one(ring->nvars());
    std::size_t start = 0;
    while (start < h.t.size()) {
      const EPoly* red = nullptr;
      std::size_t idx = start;
      for (; idx < h.t.size() && !red; ++idx) {
        for (const EPoly& g : reducers) {
          if (g.lm().divides(h.t[idx].mono)) {
            red = &g;
            break;
          }
        }
      }
      if (!red) break;
      --idx;  // the loop advanced one past the reducible term
      const Monomial q = h.t[idx].mono.divide(red->lm());
      Rat a(1), b;
      if (!exact && integer_mode) {
        a = red->lc();
        b = h.t[idx].coeff;
      } else {
        b = F.div(h.t[idx].coeff, red->lc());
      }
      h.t = combine(h.t, a, unit, red->t, b, q);
      if (!exact) strip_content(h.t);
      check_terms(h.t.size());
      start = idx;  // everything before idx is untouched and irreducible
    }
    return h;
  }

  EPoly s_poly(const EPoly& f, const EPoly& g) const {
    const Monomial L = lcm(f.lm(), g.lm());
    const Monomial qf = L.divide(f.lm());
    const Monomial qg = L.divide(g.lm());
    EPoly out;
    if (integer_mode) {
      out.t = combine(f.t, g.lc(), qf, g.t, f.lc(), qg);
      strip_content(out.t);
    } else {
      // both monic
      out.t = combine(f.t, Rat(1), qf, g.t, Rat(1), qg);
    }
    check_terms(out.t.size());
    return out;
  }

  // Gebauer-Moeller pair update for a new basis element h (appended at the
  // end): applies the coprimality and chain criteria to the candidate pairs
  // and prunes superseded old pairs.
  void add_element(EPoly h) {
    const int t = static_cast<int>(basis.size());
    struct Cand {
      int i;
      Monomial l;
      bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
      Monomial l = lcm(basis[static_cast<std::size_t>(i)].lm(), h.lm());
      const bool cop =
          l.degree() == basis[static_cast<std::size_t>(i)].lm().degree() + h.lm().degree();
      cands.push_back({i, std::move(l), cop});
    }
    std::vector<Cand> survivors;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      bool keep = cands[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t j = k + 1; j < cands.size() && keep; ++j)
          if (cands[j].l.divides(cands[k].l)) keep = false;
        for (std::size_t j = 0; j < survivors.size() && keep; ++j)
          if (survivors[j].l.divides(cands[k].l)) keep = false;
      }
      if (keep) survivors.push_back(cands[k]);
    }
    std::set<Pair, PairLess> next;
    for (const Pair& p : pending) {
      const bool superseded = h.lm().divides(p.l) &&
                              lcm(basis[static_cast<std::size_t>(p.i)].lm(), h.lm()) != p.l &&
                              lcm(basis[static_cast<std::size_t>(p.j)].lm(), h.lm()) != p.l;
      if (!superseded) next.insert(p);
    }
    for (const Cand& c : survivors)
      if (!c.coprime) next.insert({c.l, c.i, t});
    pending.swap(next);
    basis.push_back(std::move(h));
  }

  std::vector<Polynomial> run(const std::vector<Polynomial>& gens) {
    std::vector<EPoly> input;
    for (const Polynomial& p : gens) {
      if (p.is_zero()) continue;
      EPoly e{p.terms()};
      sort_desc(e.t);
      normalize(e);
      input.push_back(std::move(e));
    }
    std::sort(input.begin(), input.end(), [this](const EPoly& x, const EPoly& y) {
      int c = cmp_monomial(x.lm(), y.lm(), order);
      if (c != 0) return c < 0;
      if (x.t.size() != y.t.size()) return x.t.size() < y.t.size();
      for (std::size_t k = 0; k < x.t.size(); ++k) {
        c = cmp_monomial(x.t[k].mono, y.t[k].mono, order);
        if (c != 0) return c < 0;
        if (x.t[k].coeff != y.t[k].coeff) return x.t[k].coeff < y.t[k].coeff;
      }
      return false;
    });
    input.erase(std::unique(input.begin(), input.end(), terms_equal), input.end());

    for (EPoly& g : input) {
      EPoly h = reduce(std::move(g), basis, /*exact=*/false);
      if (!h.is_zero()) {
        normalize(h);
        add_element(std::move(h));
      }
    }

    while (!pending.empty()) {
      if (++pairs_done > max_pairs)
        throw ResourceLimit("S-pair budget exhausted", max_pairs, pairs_done);
      const Pair pr = *pending.begin();
      pending.erase(pending.begin());
      EPoly s = s_poly(basis[static_cast<std::size_t>(pr.i)], basis[static_cast<std::size_t>(pr.j)]);
      if (s.is_zero()) continue;
      EPoly h = reduce(std::move(s), basis, /*exact=*/false);
      if (!h.is_zero()) {
        normalize(h);
        add_element(std::move(h));
      }
    }
    return finalize();
  }

  std::vector<Polynomial> finalize() {
    // Minimal basis: drop elements whose leading monomial is divisible by
    // another kept leading monomial (a strict divisor is strictly smaller in
    // every monomial order, so an ascending sweep suffices).
    std::vector<int> idx(basis.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [this](int a, int b) {
      return cmp_monomial(basis[static_cast<std::size_t>(a)].lm(),
                          basis[static_cast<std::size_t>(b)].lm(), order) < 0;
    });
    std::vector<EPoly> kept;
    for (int k : idx) {
      bool redundant = false;
      for (const EPoly& m : kept) {
        if (m.lm().divides(basis[static_cast<std::size_t>(k)].lm())) {
          redundant = true;
          break;
        }
      }
      if (!redundant) kept.push_back(basis[static_cast<std::size_t>(k)]);
    }
    // Tail-reduce each element against the others; leading monomials are
    // pairwise indivisible, so they survive and the result is the unique
    // reduced basis.
    for (std::size_t a = 0; a < kept.size(); ++a) {
      std::vector<EPoly> others;
      others.reserve(kept.size() - 1);
      for (std::size_t b = 0; b < kept.size(); ++b)
        if (b != a) others.push_back(kept[b]);
      kept[a] = reduce(std::move(kept[a]), others, /*exact=*/false);
      normalize(kept[a]);
    }
    std::vector<Polynomial> out;
    out.reserve(kept.size());
    for (EPoly& e : kept) {
      if (integer_mode && e.lc() != 1) {
        const Rat inv = field().inv(e.lc());
        for (Term& t : e.t) t.coeff = field().mul(t.coeff, inv);
      }
      out.push_back(Polynomial::from_terms(ring, std::move(e.t)));
    }
    return out;
  }
};

std::vector<EPoly> to_engine_form(const std::vector<Polynomial>& basis, const Engine& eng) {
  std::vector<EPoly> out;
  out.reserve(basis.size());
  for (const Polynomial& p : basis) {
    if (p.is_zero()) continue;
    EPoly e{p.terms()};
    eng.sort_desc(e.t);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<Polynomial> groebner_basis(const RingPtr& ring, std::vector<Polynomial> gens,
                                       MonomialOrder order, GroebnerBudget budget) {
  for (const Polynomial& g : gens)
    if (!g.is_zero()) require_same_ring(ring, g.ring());
  Engine eng(ring, order, budget);
  return eng.run(gens);
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  if (!ring_) throw ContextMismatch("ideal requires a ring context");
  gens_.reserve(gens.size());
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring_, g.ring());
    gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::groebner(MonomialOrder order, GroebnerBudget budget) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->bases.find(order);
  if (it == cache_->bases.end())
    it = cache_->bases.emplace(order, groebner_basis(ring_, gens_, order, budget)).first;
  return it->second;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& reduced_basis,
                       MonomialOrder order, GroebnerBudget budget) {
  if (f.is_zero() || reduced_basis.empty()) return f;
  for (const Polynomial& g : reduced_basis) require_same_ring(f.ring(), g.ring());
  Engine eng(f.ring(), order, budget);
  const std::vector<EPoly> reducers = to_engine_form(reduced_basis, eng);
  EPoly h{f.terms()};
  eng.sort_desc(h.t);
  h = eng.reduce(std::move(h), reducers, /*exact=*/true);
  return Polynomial::from_terms(f.ring(), std::move(h.t));
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, MonomialOrder order) {
  require_same_ring(f.ring(), I.ring());
  return normal_form(f, I.groebner(order), order);
}

bool ideal_member(const Polynomial& f, const Ideal& I) {
  if (f.is_zero()) return true;
  return normal_form(f, I).is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  for (const Polynomial& g : J.generators())
    if (!ideal_member(g, I)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  return ideal_contains(I, J) && ideal_contains(J, I);
}

std::optional<std::uint64_t> quotient_dimension(const Ideal& I) {
  const std::vector<Polynomial>& basis = I.groebner(MonomialOrder::Grevlex);
  const int n = I.ring()->nvars();
  if (basis.empty()) return n == 0 ? std::optional<std::uint64_t>(1) : std::nullopt;
  std::vector<Monomial> lts;
  lts.reserve(basis.size());
  for (const Polynomial& g : basis) {
    const Monomial& m = g.leading_term(MonomialOrder::Grevlex).mono;
    if (m.is_one()) return 0;  // unit ideal
    lts.push_back(m);
  }
  // Finite dimension iff every variable has a pure power among the leading
  // terms; the minimal such exponents bound the staircase box.
  std::vector<int> bound(static_cast<std::size_t>(n), -1);
  for (const Monomial& m : lts) {
    int nz = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (m.exp(i) > 0) {
        if (nz >= 0) {
          pure = false;
          break;
        }
        nz = i;
      }
    }
    if (!pure || nz < 0) continue;
    auto& b = bound[static_cast<std::size_t>(nz)];
    b = b < 0 ? m.exp(nz) : std::min(b, m.exp(nz));
  }
  std::uint64_t box = 1;
  const std::uint64_t budget = global_budgets().enumeration;
  for (int i = 0; i < n; ++i) {
    const int b = bound[static_cast<std::size_t>(i)];
    if (b < 0) return std::nullopt;
    box *= static_cast<std::uint64_t>(b);
    if (box > budget)
      throw ResourceLimit("staircase enumeration budget exhausted", budget, box);
  }
  // Count the box monomials outside the leading-term ideal.
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  auto divisible = [&]() {
    for (const Monomial& m : lts) {
      bool div = true;
      for (int i = 0; i < n && div; ++i)
        if (m.exp(i) > v[static_cast<std::size_t>(i)]) div = false;
      if (div) return true;
    }
    return false;
  };
  while (true) {
    if (!divisible()) ++count;
    int i = n - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] + 1 >= bound[static_cast<std::size_t>(i)]) {
      v[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return count;
}

}  // namespace locmod
