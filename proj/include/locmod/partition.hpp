#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace locmod {

// A partition: weakly decreasing sequence of positive integers. The empty
// partition is allowed. Canonical form stores no trailing zeros, so value
// equality is equality of canonical forms. Operations that need a fixed
// length (dominance, pairing with 2-rho) zero-pad internally.
class Partition {
 public:
  Partition() = default;
  // Accepts a weakly decreasing sequence of nonnegative entries; trailing
  // zeros are trimmed. Throws RangeError otherwise.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long long size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  // 0-based, zero-padded beyond the last part.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[i] : 0;
  }

  bool operator==(const Partition&) const = default;
  // Lexicographic on the parts vector. Descending-lex refines dominance, so
  // sorting with operator> lists dominance-larger partitions first.
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }
  bool operator>(const Partition& o) const { return o.parts_ < parts_; }

  std::string to_string() const;  // "[2,1,1]"; "[]" for empty

 private:
  std::vector<int> parts_;
  long long size_ = 0;
};

// Conjugate (transpose of the Young diagram): dual(p)_k = #{i : p_i >= k}.
Partition dual(const Partition& p);

// Dominance order: all prefix sums of a are <= those of b (zero-padded).
// Throws SizeMismatch if |a| != |b|.
bool dominance_leq(const Partition& a, const Partition& b);

// All partitions of r with at most d parts, each part <= e, sorted descending
// lexicographically (a dominance-compatible total order).
// Throws RangeError if r < 0, e < 1, d < 1, or r > e*d.
std::vector<Partition> enumerate_strata(int r, int e, int d);

// (e^c, f) where r = c*e + f, 0 <= f < e: the dominance-maximal partition of
// r with parts <= e.
Partition s_max(int r, int e);
// dual(s_max(r,e)) = ((c+1)^f, c^(e-f)).
Partition r_min(int r, int e);
// ((u+1)^j, u^(d-j)) where r = u*d + j: the dominance-minimal partition of r
// with at most d parts.
Partition s_min(int r, int d);

// <s, 2*rho> = sum_i s_i * (d+1-2i) with i = 1..d and s zero-padded.
// Throws RangeError if s has more than d parts.
long long affine_orbit_dim(const Partition& s, int d);

// d*r - e*c^2 - (2c+1)*f with r = c*e + f, 0 <= f < e.
// Throws RangeError unless 0 <= r <= e*d.
long long special_fiber_dim(int r, int e, int d);

// sum_i r_i * (d - r_i). Throws RangeError if some part exceeds d.
long long generic_fiber_dim(const Partition& rvec, int d);

// |s|^2 - sum_i dual(s)_i^2.
long long nilpotent_orbit_dim(const Partition& s);

// Number of semistandard Young tableaux of the given shape and content
// (backtracking enumeration). Throws SizeMismatch if sizes differ.
long long kostka_number(const Partition& shape, const Partition& content);

// Kostka-Foulkes polynomial as coefficient vector: result[k] is the
// coefficient of q^k; an empty vector is the zero polynomial.
//
// Convention (the charge statistic of Lascoux-Schutzenberger): the reading
// word of a tableau takes rows top to bottom, each row right to left. For a
// word of standard content, letter 1 has index 0 and letter k+1 has the index
// of letter k, plus one if k+1 sits to the left of k; charge is the index
// sum. For general (partition) content, standard subwords are extracted by
// scanning left to right cyclically (leftmost 1, then the first 2 after it,
// wrapping around), and their charges add. Under this
// convention the polynomial evaluates at q=1 to the Kostka number, is monic,
// and has degree n(content) - n(shape) where n(p) = sum (i-1)*p_i.
std::vector<long long> kostka_foulkes(const Partition& shape, const Partition& content);

// r! / ((c+1)!)^f / (c!)^(e-f) with r = c*e + f: the multinomial coefficient
// of r over the parts of r_min(r,e). Exact; throws RangeError if the value
// does not fit in 64 bits (r <= 20 always fits).
std::uint64_t coinvariant_dim_formula(int r, int e);

}  // namespace locmod
