#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locmod/field.hpp"

namespace locmod {

// Dense matrix with exact entries in a fixed field (QQ or GF(p)); entries are
// kept canonical (reduced fractions / least nonnegative residues). Zero rows
// or columns are allowed so that degenerate cases (empty partitions, trivial
// subspaces) need no special casing.
class ExactMatrix {
 public:
  ExactMatrix(Field field, int rows, int cols);
  static ExactMatrix identity(const Field& field, int n);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rat& at(int i, int j) const;
  // Canonicalizes the value on the way in.
  void set(int i, int j, const Rat& v);

  ExactMatrix operator+(const ExactMatrix&) const;
  ExactMatrix operator-(const ExactMatrix&) const;
  ExactMatrix operator*(const ExactMatrix&) const;
  ExactMatrix pow(int k) const;
  ExactMatrix transpose() const;
  bool operator==(const ExactMatrix&) const;
  bool is_zero() const;

  int rank() const;
  std::optional<ExactMatrix> inverse() const;  // nullopt when singular

  std::string to_string() const;  // "[[0,1],[0,0]]"

 private:
  Field field_;
  int rows_;
  int cols_;
  std::vector<Rat> e_;
};

// Reduced row-echelon form with zero rows dropped: the canonical basis matrix
// of the row space. Two matrices span the same row space iff their canonical
// forms are equal (including the 0-row matrix for the zero space).
ExactMatrix row_space_canonical(const ExactMatrix& m);

// Vertical concatenation (same field and column count).
ExactMatrix stack_rows(const ExactMatrix& top, const ExactMatrix& bottom);

// Gaussian binomial coefficient [n choose k]_q, exact.
Int gaussian_binomial(int n, int k, const Int& q);

// Number of subspaces with S <= F <= U and dim F = m:
// gaussian_binomial(dim U - dim S, m - dim S, p). Zero when m is out of range.
Int subspace_interval_count(int dim_s, int dim_u, int m, const Int& p);

// All k-dimensional subspaces of field^n as canonical row-basis matrices,
// enumerated by pivot-column pattern (lexicographic) and free entries
// (odometer order): deterministic, duplicate-free. Prime fields only
// (RangeError over QQ). Throws ResourceLimit if the subspace count exceeds
// `budget` (0 = global enumeration budget).
std::vector<ExactMatrix> all_subspaces(const Field& field, int n, int k,
                                       std::uint64_t budget = 0);

// All F with rowspace(S) <= F <= rowspace(U) and dim F = m, canonical bases.
// S and U are canonical row-basis matrices over the same prime field with
// rowspace(S) <= rowspace(U) (checked).
std::vector<ExactMatrix> subspaces_between(const ExactMatrix& S, const ExactMatrix& U,
                                           int m, std::uint64_t budget = 0);

}  // namespace locmod
