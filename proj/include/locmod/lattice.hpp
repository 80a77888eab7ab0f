#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "locmod/exact_matrix.hpp"
#include "locmod/orbits.hpp"
#include "locmod/partition.hpp"

namespace locmod {

// The ambient module for the special-fiber moduli problem: a direct sum of
// cyclic blocks k[P]/(P^{e_i}) over a prime field, with P acting as the block
// shift. Homogeneous exponents e_i = e give the standard (e,d) setting.
struct PiModule {
  Field field = Field::prime(2);
  std::vector<int> exponents;  // one per summand, each >= 1

  int ambient_dim() const;  // D = sum of exponents
  // D x D nilpotent block-shift matrix: within each block, basis vector j
  // maps to j+1 (last one to zero).
  ExactMatrix pi_matrix() const;
};

// Validates exponents (nonempty, all >= 1) and the field (prime).
PiModule make_pi_module(const Field& field, std::vector<int> exponents);
PiModule homogeneous_pi_module(const Field& field, int e, int d);

// Points are P-stable r-dimensional subspaces F <= field^D, represented by
// canonical reduced row-echelon basis matrices (r rows, D columns); subspace
// equality is representation equality. (The nilpotency of P|F — the special
// fiber's determinant condition — is automatic and re-checked, never used as
// a filter.)
//
// Two enumeration strategies:
//  - filter: run through all r-subspaces and keep the stable ones; requires
//    gaussian_binomial(D, r, p) <= budget.
//  - closure: sums of cyclic submodules k[P]v, grown breadth-first with
//    canonical deduplication; requires p^D <= budget and counts discovered
//    submodules against the budget.
// enumerate_points dispatches: filter when the subspace count is at most
// kFilterDispatchLimit, closure otherwise. All three return the same list
// (sorted by canonical representation), and throw BudgetExceeded.
inline constexpr std::uint64_t kFilterDispatchLimit = 200'000;

std::vector<ExactMatrix> enumerate_points(const PiModule& W, int r,
                                          std::uint64_t budget = 0);
std::vector<ExactMatrix> enumerate_points_filter(const PiModule& W, int r,
                                                 std::uint64_t budget = 0);
std::vector<ExactMatrix> enumerate_points_closure(const PiModule& W, int r,
                                                  std::uint64_t budget = 0);

// Coefficient matrix of P restricted to the subspace spanned by the rows of
// F (canonical echelon basis): row i holds the coordinates of P(row i) in
// that basis. Throws RangeError if F is not P-stable or not in canonical
// form.
ExactMatrix restriction_matrix(const PiModule& W, const ExactMatrix& F);

// Jordan type of P|F: the stratum containing the point.
Partition stratum_of(const PiModule& W, const ExactMatrix& F);

// The matrix-scheme image of a point: the restricted operator together with
// its Jordan type. type always equals stratum_of(W, F) (same computation,
// exposed to express the orbit correspondence).
struct PhiImage {
  ExactMatrix matrix;
  Partition type;
};
PhiImage phi_image(const PiModule& W, const ExactMatrix& F);

// Tally of stratum_of over enumerate_points.
std::map<Partition, long long> stratify(const PiModule& W, int r,
                                        std::uint64_t budget = 0);

}  // namespace locmod
