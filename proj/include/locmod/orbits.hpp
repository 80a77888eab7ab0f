#pragma once

#include <cstdint>

#include "locmod/exact_matrix.hpp"
#include "locmod/partition.hpp"

namespace locmod {

// Partial-flag shape: quotient sizes r_1 >= ... >= r_e summing to r. The k-th
// member of a chain has corank n_k = r_1 + ... + r_k in the ambient space.
struct PartialFlagSpec {
  Partition rvec;
  int ambient() const { return static_cast<int>(rvec.size()); }
  // n_0 = 0, ..., n_e = r
  std::vector<int> coranks() const;
};

// Block-diagonal nilpotent matrix with upper Jordan blocks of sizes
// s_1 >= s_2 >= ...; the empty partition gives the 0x0 matrix.
ExactMatrix jordan_matrix(const Partition& s, const Field& field);

// Jordan type of a nilpotent matrix: the partition s with
// dual(s)_k = rank(A^{k-1}) - rank(A^k), by exact Gaussian elimination.
// Throws NotNilpotent if A^r != 0.
Partition jordan_type_of(const ExactMatrix& A);

// Orbit-closure order on nilpotent orbits = dominance on Jordan types.
// Throws SizeMismatch if |s1| != |s2|.
bool closure_leq(const Partition& s1, const Partition& s2);

// Whether A lies in the closure of the orbit with Jordan type t. Decided two
// ways — dominance of Jordan types and the direct rank comparisons
// rank(A^k) <= rank(jordan_matrix(t)^k) — which are asserted equal.
// Throws NotNilpotent; SizeMismatch if |t| != rows(A).
bool in_orbit_closure(const ExactMatrix& A, const Partition& t);

struct SpringerCount {
  long long count = 0;               // flags satisfying every condition
  std::uint64_t flags_enumerated = 0;  // subspace candidates generated during the search
};

// Number of partial flags V = F_0 > F_1 > ... > F_e = 0 with
// corank(F_k) = n_k and A·F_{k-1} <= F_k, counted by exhaustive chain
// enumeration over the prime field of A (each F_k runs over the subspaces of
// F_{k-1} of the required dimension containing A·F_{k-1}).
//
// Before enumerating, the unconstrained flag count (A = 0 case, a product of
// Gaussian multinomials) is compared against `budget` (0 = global enumeration
// budget); BudgetExceeded carries that estimate. Throws NotNilpotent, and
// SizeMismatch if spec.ambient() != rows(A); RangeError over QQ.
SpringerCount springer_fiber_count(const ExactMatrix& A, const PartialFlagSpec& spec,
                                   std::uint64_t budget = 0);

}  // namespace locmod
