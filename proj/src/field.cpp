#include "locmod/field.hpp"

#include <cstdlib>

namespace locmod {
namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::int64_t invmod_i64(std::int64_t a, std::int64_t p) {
  // extended Euclid; pre: 0 < a < p
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  std::int64_t inv = old_s % p;
  if (inv < 0) inv += p;
  return inv;
}

std::int64_t residue_of(const Rat& x) {
  // pre: x canonical for some F_p (integer in [0, p))
  return boost::multiprecision::numerator(x).convert_to<std::int64_t>();
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin: bases 2,3,5,7 decide primality below 3.2e9.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31))
    throw RangeError("field characteristic must be < 2^31, got " + std::to_string(p));
  if (!is_prime_u32(p))
    throw RangeError("field characteristic must be prime, got " + std::to_string(p));
  return Field(Kind::Prime, p);
}

Rat Field::canon(const Rat& x) const {
  if (kind_ == Kind::Rationals) return x;
  const std::int64_t p = p_;
  Int num_big = boost::multiprecision::numerator(x) % p;
  Int den_big = boost::multiprecision::denominator(x) % p;
  std::int64_t n = num_big.convert_to<std::int64_t>();
  std::int64_t d = den_big.convert_to<std::int64_t>();
  if (n < 0) n += p;
  if (d < 0) d += p;
  if (d == 0)
    throw RangeError("denominator is not invertible modulo " + std::to_string(p_));
  if (d != 1) n = static_cast<std::int64_t>(mulmod_u64(n, invmod_i64(d, p), p));
  return Rat(n);
}

Rat Field::add(const Rat& a, const Rat& b) const {
  if (kind_ == Kind::Rationals) return a + b;
  std::int64_t s = residue_of(a) + residue_of(b);
  const std::int64_t p = p_;
  if (s >= p) s -= p;
  return Rat(s);
}

Rat Field::sub(const Rat& a, const Rat& b) const {
  if (kind_ == Kind::Rationals) return a - b;
  std::int64_t s = residue_of(a) - residue_of(b);
  if (s < 0) s += p_;
  return Rat(s);
}

Rat Field::mul(const Rat& a, const Rat& b) const {
  if (kind_ == Kind::Rationals) return a * b;
  return Rat(residue_of(a) * residue_of(b) % p_);
}

Rat Field::neg(const Rat& a) const {
  if (kind_ == Kind::Rationals) return -a;
  std::int64_t v = residue_of(a);
  return v == 0 ? Rat(0) : Rat(p_ - v);
}

Rat Field::inv(const Rat& a) const {
  if (is_zero(a)) throw RangeError("division by zero in " + to_string());
  if (kind_ == Kind::Rationals) return 1 / a;
  return Rat(invmod_i64(residue_of(a), p_));
}

Rat Field::div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

std::string Field::to_string() const {
  return kind_ == Kind::Rationals ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Field Field::from_string(const std::string& s) {
  if (s == "QQ") return rationals();
  if (s.size() > 4 && s.compare(0, 3, "GF(") == 0 && s.back() == ')') {
    const std::string digits = s.substr(3, s.size() - 4);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      errno = 0;
      char* end = nullptr;
      unsigned long long v = std::strtoull(digits.c_str(), &end, 10);
      if (errno == 0 && end && *end == '\0' && v < (1ull << 31))
        return prime(static_cast<std::uint32_t>(v));
    }
  }
  throw ParseError("unrecognized field '" + s + "' (expected QQ or GF(p))");
}

}  // namespace locmod
