#pragma once

#include <string>
#include <vector>

#include "locmod/ideal.hpp"
#include "locmod/partition.hpp"
#include "locmod/polynomial.hpp"

namespace locmod {

// Matrix with Polynomial entries over one ring context.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, int rows, int cols);  // zero-filled; RangeError on bad sizes
  static PolyMatrix identity(RingPtr ring, int n);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Polynomial& at(int i, int j);
  const Polynomial& at(int i, int j) const;

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator*(const PolyMatrix& o) const;  // SizeMismatch on shape
  PolyMatrix scaled(const Polynomial& c) const;
  PolyMatrix pow(int k) const;  // RangeError unless square and k >= 0

  std::vector<Polynomial> entries() const;  // row-major copy
  bool operator==(const PolyMatrix& o) const;
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

 private:
  RingPtr ring_;
  int rows_, cols_;
  std::vector<Polynomial> e_;  // row-major
};

// Determinant of the square submatrix with the given row/column index sets.
Polynomial submatrix_det(const PolyMatrix& M, const std::vector<int>& rows,
                         const std::vector<int>& cols);

// The polynomial ring k[a11, ..., arr] with row-major variables, a11 largest.
// RangeError unless 1 <= r <= 9 (single-digit indices keep names unambiguous).
RingPtr matrix_ring(Field field, int r);
// The ring k[X1, ..., Xr] used for restrictions to diagonal matrices.
RingPtr diagonal_ring(Field field, int r);

// The generic r x r matrix A with A(i,j) = a_{i+1,j+1} over matrix_ring.
PolyMatrix generic_matrix(const RingPtr& ring);  // ContextMismatch on foreign rings

// Signed coefficients sigma_1..sigma_r of det(T*I - A) = T^r - sigma_1 T^{r-1}
// + sigma_2 T^{r-2} - ...; sigma_h is the sum of the principal h x h minors
// (valid in any characteristic).
std::vector<Polynomial> char_poly_coeffs(const PolyMatrix& A);

// t-th exterior power: the C(r,t) x C(r,t) matrix whose (S,T) entry is the
// t x t minor of M with rows S and columns T, where the t-element subsets of
// {1..r} are ordered lexicographically. Functorial in M. RangeError unless
// 1 <= t <= r.
PolyMatrix wedge_power(const PolyMatrix& M, int t);

// Degree-h "complete homogeneous" operator on the t-th exterior power:
// e_{i_1} ^ ... ^ e_{i_t} maps to the sum of A^{h_1} e_{i_1} ^ ... ^ A^{h_t}
// e_{i_t} over all h_j >= 0 with h_1 + ... + h_t = h. RangeError unless
// 1 <= t <= r and h >= 0.
PolyMatrix S_operator(const PolyMatrix& A, int t, int h);

// F^t_h(A) = sum_{i=0..h} (-1)^i sigma_i(A) * S^t_{h-i}(A), with sigma_0 = 1.
PolyMatrix F_operator(const PolyMatrix& A, int t, int h);

struct AnnotatedGenerator {
  Polynomial poly;
  std::string label;  // provenance within the construction, e.g. "k=1,t=2,h=0 (1,3)"
};

// Generator list with per-generator labels, plus the ideal they span. The
// list is zero-pruned and exact-duplicate-deduplicated (first label wins) in
// a fixed enumeration order, so it is deterministic.
struct AnnotatedIdeal {
  RingPtr ring;
  std::vector<AnnotatedGenerator> generators;
  Ideal ideal;
};

// Vanishing ideal cut out by A^e = 0 together with sigma_1(A), ..., sigma_r(A).
AnnotatedIdeal naive_special_ideal(int r, int e, const Field& field);

// The refined special-fiber ideal attached to a multiplicity vector rvec
// (weakly decreasing, sum r): for k = 0..e and every t >= 1, h >= 0 with
// t + h = r - n_k + 1 (n_k the k-th prefix sum of rvec), all entries of
// S^t_h(A) * wedge_power(A^k, t). RangeError if |rvec| != r or r < 1.
AnnotatedIdeal dcp_special_ideal(int r, const Partition& rvec, const Field& field);

struct EigenvalueDatum {
  Rat value;
  int multiplicity;
};

// Generic-fiber ideal for distinct eigenvalues a_i with multiplicities r_i:
// sigma_h(A) - e_h(eigenvalue multiset) for h = 1..r, plus all entries of
// F^t_h(A) * wedge_power(Q_f(A), t) where Q_f(A) = prod (A - a_i)^{f(i)} over
// the tuples 0 <= f(i) <= r_i and t + h = r - sum_{f(i) != 0} r_i + 1.
// DistinctnessError if the eigenvalues collide in the field.
AnnotatedIdeal dcp_generic_ideal(const std::vector<EigenvalueDatum>& eig, const Field& field);

// Two-part special case: entries of A^2, all (r2+1)-minors of A, and
// sigma_1..sigma_r, for r = r1 + r2. RangeError if r1 < r2, r2 < 0, or r < 1.
AnnotatedIdeal e2_ideal(int r1, int r2, const Field& field);

// Substitute a_ij -> 0 (i != j) and a_ii -> X_i, dropping zero generators.
// ContextMismatch unless I lives in a matrix_ring.
Ideal diagonal_restriction(const Ideal& I);

}  // namespace locmod
