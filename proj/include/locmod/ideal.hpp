#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "locmod/budget.hpp"
#include "locmod/polynomial.hpp"

namespace locmod {

// Per-call computation limits; a zero field means "use the global default"
// (see global_budgets()).
struct GroebnerBudget {
  std::uint64_t max_s_pairs = 0;
  std::uint64_t max_terms = 0;
};

// Reduced Groebner basis of the span of `gens` with respect to `order`: every
// element monic, no term of any element divisible by another element's
// leading term, sorted by increasing leading monomial. Zero generators are
// dropped silently. Deterministic for deterministic input: S-pairs are
// processed by increasing lcm degree, ties broken lexicographically on the
// lcm, then by generator indices (normal selection strategy, with the
// coprimality and chain criteria). Over the rationals the internal reduction
// is fraction-free on content-normalized integer polynomials. Throws
// ResourceLimit when the S-pair or term budget is exhausted.
std::vector<Polynomial> groebner_basis(const RingPtr& ring, std::vector<Polynomial> gens,
                                       MonomialOrder order, GroebnerBudget budget = {});

// Finitely generated ideal in a fixed ring context. Immutable value type;
// copies share the lazily computed Groebner cache, so each basis is computed
// once per ideal value per order.
class Ideal {
 public:
  // Zero generators are dropped. ContextMismatch if a generator lives in a
  // different ring.
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Cached reduced Groebner basis; the reference stays valid for the lifetime
  // of any copy of this ideal. The budget applies only when the basis has not
  // been computed yet.
  const std::vector<Polynomial>& groebner(MonomialOrder order = MonomialOrder::Grevlex,
                                          GroebnerBudget budget = {}) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<MonomialOrder, std::vector<Polynomial>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Unique remainder of f modulo a reduced basis: no term of the result is
// divisible by any basis leading term, and f - result lies in the ideal.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& reduced_basis,
                       MonomialOrder order, GroebnerBudget budget = {});
Polynomial normal_form(const Polynomial& f, const Ideal& I,
                       MonomialOrder order = MonomialOrder::Grevlex);

bool ideal_member(const Polynomial& f, const Ideal& I);
// True when every generator of J lies in I.
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);

// Vector-space dimension of ring/I when finite (count of monomials outside
// the leading-term ideal), std::nullopt when infinite-dimensional. Throws
// ResourceLimit if the staircase enumeration exceeds the global enumeration
// budget.
std::optional<std::uint64_t> quotient_dimension(const Ideal& I);

}  // namespace locmod
