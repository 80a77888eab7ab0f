#include "locmod/orbits.hpp"

#include <stdexcept>

#include "locmod/budget.hpp"
#include "locmod/errors.hpp"

namespace locmod {

std::vector<int> PartialFlagSpec::coranks() const {
  std::vector<int> n{0};
  for (int p : rvec.parts()) n.push_back(n.back() + p);
  return n;
}

ExactMatrix jordan_matrix(const Partition& s, const Field& field) {
  const int r = static_cast<int>(s.size());
  ExactMatrix J(field, r, r);
  int offset = 0;
  for (int block : s.parts()) {
    for (int i = 0; i < block - 1; ++i) J.set(offset + i, offset + i + 1, Rat(1));
    offset += block;
  }
  return J;
}

namespace {

// rank(A^0), rank(A^1), ..., stopping at the first zero power; validates
// nilpotency against A^r.
std::vector<int> power_ranks(const ExactMatrix& A) {
  if (A.rows() != A.cols()) throw RangeError("Jordan type requires a square matrix");
  const int r = A.rows();
  std::vector<int> ranks{r};
  ExactMatrix P = ExactMatrix::identity(A.field(), r);
  for (int k = 1; k <= r && ranks.back() > 0; ++k) {
    P = P * A;
    ranks.push_back(P.rank());
  }
  if (ranks.back() != 0) throw NotNilpotent("matrix power A^r is nonzero");
  return ranks;
}

}  // namespace

Partition jordan_type_of(const ExactMatrix& A) {
  const std::vector<int> ranks = power_ranks(A);
  std::vector<int> columns;  // dual(s)_k = rank(A^{k-1}) - rank(A^k)
  for (std::size_t k = 1; k < ranks.size(); ++k)
    columns.push_back(ranks[k - 1] - ranks[k]);
  return dual(Partition(std::move(columns)));
}

bool closure_leq(const Partition& s1, const Partition& s2) {
  return dominance_leq(s1, s2);
}

bool in_orbit_closure(const ExactMatrix& A, const Partition& t) {
  if (static_cast<long long>(A.rows()) != t.size())
    throw SizeMismatch("partition size does not match the matrix");
  const bool by_type = closure_leq(jordan_type_of(A), t);

  // independent route: rank(A^k) <= rank(J_t^k) for every k
  const std::vector<int> ra = power_ranks(A);
  const std::vector<int> rt = power_ranks(jordan_matrix(t, A.field()));
  bool by_rank = true;
  for (std::size_t k = 0; k < std::max(ra.size(), rt.size()); ++k) {
    const int x = k < ra.size() ? ra[k] : 0;
    const int y = k < rt.size() ? rt[k] : 0;
    if (x > y) by_rank = false;
  }
  if (by_type != by_rank)
    throw std::logic_error("closure membership routes disagree");
  return by_type;
}

SpringerCount springer_fiber_count(const ExactMatrix& A, const PartialFlagSpec& spec,
                                   std::uint64_t budget) {
  if (A.field().kind() != Field::Kind::Prime)
    throw RangeError("flag enumeration requires a finite field");
  const int r = A.rows();
  if (spec.ambient() != r) throw SizeMismatch("flag shape does not sum to the matrix size");
  (void)power_ranks(A);  // nilpotency check
  if (budget == 0) budget = global_budgets().enumeration;

  const std::vector<int> n = spec.coranks();
  const Int p(A.field().characteristic());
  Int estimate(1);
  for (std::size_t k = 1; k < n.size(); ++k)
    estimate *= gaussian_binomial(r - n[k - 1], r - n[k], p);
  if (estimate > Int(budget)) {
    const Int capped = estimate > Int(UINT64_MAX) ? Int(UINT64_MAX) : estimate;
    throw BudgetExceeded("flag enumeration budget exhausted", budget,
                         capped.convert_to<std::uint64_t>());
  }

  const ExactMatrix At = A.transpose();  // subspaces are row spaces; A·v^T = (v·A^T)^T
  SpringerCount result;
  // chain from F_{k-1} (canonical row basis) down to F_e = 0
  auto descend = [&](auto&& self, const ExactMatrix& Fprev, std::size_t k) -> void {
    if (k == n.size()) {
      ++result.count;
      return;
    }
    const int target = r - n[k];
    const ExactMatrix image = row_space_canonical(Fprev * At);
    if (image.rows() > target) return;
    // A·F_{k-1} must sit inside F_{k-1} for any valid F_k to exist
    if (row_space_canonical(stack_rows(Fprev, image)).rows() > Fprev.rows()) return;
    for (const ExactMatrix& F : subspaces_between(image, Fprev, target, budget)) {
      ++result.flags_enumerated;
      self(self, F, k + 1);
    }
  };
  descend(descend, ExactMatrix::identity(A.field(), r), 1);
  return result;
}

}  // namespace locmod
