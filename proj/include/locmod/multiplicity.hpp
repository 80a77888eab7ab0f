#pragma once

#include <map>

#include "locmod/field.hpp"
#include "locmod/partition.hpp"
#include "locmod/report.hpp"

namespace locmod {

// Decomposition of a tensor product of exterior-power representations of
// GL_d: entries[λ] is the multiplicity of the irreducible summand with
// highest weight λ. Keys are partitions of Σ rvec with at most d rows.
struct WeightMultiplicityTable {
  int d = 0;
  Partition rvec;
  std::map<Partition, long long> entries;
};

// Multiplicity table of ∧^{r_1}(k^d) ⊗ … ⊗ ∧^{r_e}(k^d), by iterated
// vertical-strip addition (the Pieri rule for exterior powers). Shapes with
// more than d rows are dropped as they appear; a chain only passes through
// subshapes of its endpoint, so dropping never affects the multiplicity of a
// shape that fits in d rows. RangeError when some r_i > d.
WeightMultiplicityTable tensor_minuscule_decompose(int d, const Partition& rvec);

// Stratum multiplicity as a Kostka number: K_{dual(s), rvec}. Labels outside
// the relevant closure (s ≰ dual(rvec) in dominance — where the multiplicity
// vanishes) come back as 0 with the flag set instead of an exception, so
// callers can probe arbitrary labels. SizeMismatch when |s| ≠ Σ rvec.
struct NearbyMultiplicity {
  long long value = 0;
  bool outside_closure = false;
};
NearbyMultiplicity nearby_cycle_multiplicity(const Partition& s, const Partition& rvec);

// Irreducible S_n character χ^λ evaluated on the conjugacy class of cycle
// type ρ, by the Murnaghan–Nakayama rule. SizeMismatch when |λ| ≠ |ρ|.
long long symmetric_group_character(const Partition& lambda, const Partition& rho);

// ⟨χ^s, Ind_{S_{r₁}×…×S_{r_e}}^{S_r}(sgn)⟩: the same stratum multiplicity
// computed from symmetric-group characters (Frobenius reciprocity turns it
// into a sum over cycle-type tuples weighted by centralizer orders). Exact
// rational arithmetic internally; the result is a non-negative integer.
// SizeMismatch when |s| ≠ Σ rvec; BudgetExceeded when r > 8.
long long character_multiplicity(const Partition& s, const Partition& rvec);

// dim V(λ) for GL_d by the hook-content formula ∏ (d + j − i)/hook(i,j) over
// cells (i,j) of λ. Zero when λ has more than d rows.
Int hook_content_dimension(const Partition& lambda, int d);

// Cross-checks tensor_minuscule_decompose(d, rvec): one case per table entry
// comparing the chain count against kostka_number(dual(λ), rvec), one case
// for the open-stratum multiplicity being 1, and one for the dimension
// identity Σ_λ mult(λ)·dim V(λ) = ∏_i C(d, r_i).
VerificationReport verify_tensor_vs_kostka(int d, const Partition& rvec);

}  // namespace locmod
