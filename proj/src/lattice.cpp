#include "locmod/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "locmod/budget.hpp"
#include "locmod/errors.hpp"

namespace locmod {

int PiModule::ambient_dim() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

ExactMatrix PiModule::pi_matrix() const {
  const int D = ambient_dim();
  ExactMatrix P(field, D, D);
  int offset = 0;
  for (int e : exponents) {
    for (int j = 0; j < e - 1; ++j) P.set(offset + j + 1, offset + j, Rat(1));
    offset += e;
  }
  return P;
}

PiModule make_pi_module(const Field& field, std::vector<int> exponents) {
  if (field.kind() != Field::Kind::Prime)
    throw RangeError("the ambient module needs a finite field");
  if (exponents.empty()) throw RangeError("at least one summand required");
  for (int e : exponents)
    if (e < 1) throw RangeError("summand exponents must be positive");
  return PiModule{field, std::move(exponents)};
}

PiModule homogeneous_pi_module(const Field& field, int e, int d) {
  if (d < 1) throw RangeError("at least one summand required");
  return make_pi_module(field, std::vector<int>(static_cast<std::size_t>(d), e));
}

namespace {

// rowspace(B * Pt) <= rowspace(B)?
bool stable_under(const ExactMatrix& B, const ExactMatrix& Pt) {
  const ExactMatrix image = B * Pt;
  return row_space_canonical(stack_rows(B, image)).rows() == row_space_canonical(B).rows();
}

void check_budget(const Int& needed, std::uint64_t budget, const char* what) {
  if (needed > Int(budget)) {
    const Int capped = needed > Int(UINT64_MAX) ? Int(UINT64_MAX) : needed;
    throw BudgetExceeded(what, budget, capped.convert_to<std::uint64_t>());
  }
}

void sort_points(std::vector<ExactMatrix>& pts) {
  std::sort(pts.begin(), pts.end(), [](const ExactMatrix& a, const ExactMatrix& b) {
    return a.to_string() < b.to_string();
  });
}

// Nilpotency of P|F is structural (P is nilpotent); re-derive it as the
// sanity check the moduli condition calls for.
void assert_restriction_nilpotent(const PiModule& W, const std::vector<ExactMatrix>& pts) {
  for (const ExactMatrix& F : pts)
    if (!restriction_matrix(W, F).pow(F.rows()).is_zero())
      throw std::logic_error("restricted operator is not nilpotent");
}

}  // namespace

std::vector<ExactMatrix> enumerate_points_filter(const PiModule& W, int r,
                                                 std::uint64_t budget) {
  const int D = W.ambient_dim();
  if (r < 0 || r > D) throw RangeError("subspace dimension out of range");
  if (budget == 0) budget = global_budgets().enumeration;
  check_budget(gaussian_binomial(D, r, Int(W.field.characteristic())), budget,
               "subspace enumeration budget exhausted");
  const ExactMatrix Pt = W.pi_matrix().transpose();
  std::vector<ExactMatrix> out;
  for (ExactMatrix& B : all_subspaces(W.field, D, r, budget))
    if (stable_under(B, Pt)) out.push_back(std::move(B));
  sort_points(out);
  assert_restriction_nilpotent(W, out);
  return out;
}

std::vector<ExactMatrix> enumerate_points_closure(const PiModule& W, int r,
                                                  std::uint64_t budget) {
  const int D = W.ambient_dim();
  if (r < 0 || r > D) throw RangeError("subspace dimension out of range");
  if (budget == 0) budget = global_budgets().enumeration;
  const Int p(W.field.characteristic());
  check_budget(boost::multiprecision::pow(p, static_cast<unsigned>(D)), budget,
               "vector enumeration budget exhausted");

  const ExactMatrix Pt = W.pi_matrix().transpose();
  const long long pc = W.field.characteristic();

  // all cyclic submodules k[P]v of dimension <= r, canonical + deduplicated
  std::set<std::string> seen_cyclic;
  std::vector<ExactMatrix> cyclics;
  std::vector<long long> v(static_cast<std::size_t>(D), 0);
  while (true) {
    ExactMatrix row(W.field, 1, D);
    for (int j = 0; j < D; ++j) row.set(0, j, Rat(v[static_cast<std::size_t>(j)]));
    ExactMatrix orbit = row;
    for (int k = 1; k < D; ++k) {
      const ExactMatrix next = orbit * Pt;  // adds P^k v as a row each round
      const ExactMatrix grown = row_space_canonical(stack_rows(orbit, next));
      if (grown.rows() == row_space_canonical(orbit).rows()) break;
      orbit = stack_rows(orbit, next);
    }
    ExactMatrix C = row_space_canonical(orbit);
    if (C.rows() <= r && seen_cyclic.insert(C.to_string()).second)
      cyclics.push_back(std::move(C));
    std::size_t pos = 0;
    while (pos < v.size() && v[pos] == pc - 1) v[pos++] = 0;
    if (pos == v.size()) break;
    ++v[pos];
  }

  // breadth-first closure under sums, tracking every submodule of dim <= r
  std::set<std::string> seen;
  std::vector<ExactMatrix> out;
  std::deque<ExactMatrix> work;
  const ExactMatrix zero(W.field, 0, D);
  seen.insert(zero.to_string());
  work.push_back(zero);
  std::uint64_t discovered = 1;
  while (!work.empty()) {
    const ExactMatrix S = std::move(work.front());
    work.pop_front();
    if (S.rows() == r) out.push_back(S);
    for (const ExactMatrix& C : cyclics) {
      ExactMatrix T = row_space_canonical(stack_rows(S, C));
      if (T.rows() > r) continue;
      if (!seen.insert(T.to_string()).second) continue;
      if (++discovered > budget)
        throw BudgetExceeded("submodule closure budget exhausted", budget, discovered);
      work.push_back(std::move(T));
    }
  }
  sort_points(out);
  assert_restriction_nilpotent(W, out);
  return out;
}

std::vector<ExactMatrix> enumerate_points(const PiModule& W, int r, std::uint64_t budget) {
  const int D = W.ambient_dim();
  if (r < 0 || r > D) throw RangeError("subspace dimension out of range");
  const Int total = gaussian_binomial(D, r, Int(W.field.characteristic()));
  if (total <= Int(kFilterDispatchLimit)) return enumerate_points_filter(W, r, budget);
  return enumerate_points_closure(W, r, budget);
}

ExactMatrix restriction_matrix(const PiModule& W, const ExactMatrix& F) {
  if (F.cols() != W.ambient_dim() || F.field() != W.field)
    throw ContextMismatch("point does not live in the ambient module");
  if (!(row_space_canonical(F) == F)) throw RangeError("basis matrix is not canonical");
  const ExactMatrix Pt = W.pi_matrix().transpose();
  if (!stable_under(F, Pt)) throw RangeError("subspace is not stable under the shift");
  // pivot columns of the echelon basis
  std::vector<int> pivots;
  for (int i = 0; i < F.rows(); ++i)
    for (int j = 0; j < F.cols(); ++j)
      if (!Field::is_zero(F.at(i, j))) {
        pivots.push_back(j);
        break;
      }
  // coordinates of a row-space vector w.r.t. an RREF basis = entries at the
  // pivot columns
  const ExactMatrix image = F * Pt;
  ExactMatrix R(W.field, F.rows(), F.rows());
  for (int i = 0; i < F.rows(); ++i)
    for (int j = 0; j < F.rows(); ++j)
      R.set(i, j, image.at(i, pivots[static_cast<std::size_t>(j)]));
  return R;
}

Partition stratum_of(const PiModule& W, const ExactMatrix& F) {
  return jordan_type_of(restriction_matrix(W, F));
}

PhiImage phi_image(const PiModule& W, const ExactMatrix& F) {
  ExactMatrix R = restriction_matrix(W, F);
  Partition type = jordan_type_of(R);
  return PhiImage{std::move(R), std::move(type)};
}

std::map<Partition, long long> stratify(const PiModule& W, int r, std::uint64_t budget) {
  std::map<Partition, long long> tally;
  for (const ExactMatrix& F : enumerate_points(W, r, budget)) ++tally[stratum_of(W, F)];
  return tally;
}

}  // namespace locmod
