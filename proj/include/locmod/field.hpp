#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "locmod/errors.hpp"

namespace locmod {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact coefficient field: the rationals, or a prime field F_p with p < 2^31.
//
// Elements are carried as Rat values. Prime-field elements are kept in
// canonical residue form: an integer in [0, p) with denominator 1. All
// operations assume canonical inputs and produce canonical outputs; canon()
// brings an arbitrary Rat into canonical form.
class Field {
 public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  // RangeError unless p is prime and p < 2^31.
  static Field prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  // 0 for the rationals, p for F_p.
  std::uint32_t characteristic() const { return p_; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  // Canonical representative. For F_p this evaluates num * den^{-1} mod p and
  // throws RangeError when the denominator is divisible by p.
  Rat canon(const Rat& x) const;

  Rat add(const Rat& a, const Rat& b) const;
  Rat sub(const Rat& a, const Rat& b) const;
  Rat mul(const Rat& a, const Rat& b) const;
  Rat neg(const Rat& a) const;
  Rat inv(const Rat& a) const;  // RangeError on zero
  Rat div(const Rat& a, const Rat& b) const;
  static bool is_zero(const Rat& a) { return a.is_zero(); }

  std::string to_string() const;  // "QQ" or "GF(p)"
  // Accepts exactly the to_string() forms; ParseError otherwise.
  static Field from_string(const std::string& s);

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

}  // namespace locmod
