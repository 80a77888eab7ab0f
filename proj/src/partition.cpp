#include "locmod/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "locmod/errors.hpp"

namespace locmod {

using boost::multiprecision::cpp_int;

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw RangeError("partition parts must be nonnegative");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw RangeError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition dual(const Partition& p) {
  std::vector<int> t;
  const int top = p.part(0);
  t.reserve(top);
  for (int k = 1; k <= top; ++k) {
    int count = 0;
    for (int x : p.parts())
      if (x >= k) ++count;
    t.push_back(count);
  }
  return Partition(std::move(t));
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw SizeMismatch("dominance requires equal sizes");
  const int len = std::max(a.length(), b.length());
  long long pa = 0, pb = 0;
  for (int i = 0; i < len; ++i) {
    pa += a.part(i);
    pb += b.part(i);
    if (pa > pb) return false;
  }
  return true;
}

namespace {

void strata_rec(int remaining, int max_part, int slots, std::vector<int>& acc,
                std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  if (slots == 0) return;
  const int hi = std::min(max_part, remaining);
  // Largest first part first: output is descending-lexicographic.
  for (int x = hi; x >= 1; --x) {
    if (static_cast<long long>(x) * slots < remaining) break;
    acc.push_back(x);
    strata_rec(remaining - x, x, slots - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_strata(int r, int e, int d) {
  if (r < 0 || e < 1 || d < 1) throw RangeError("enumerate_strata: bad arguments");
  if (static_cast<long long>(e) * d < r)
    throw RangeError("enumerate_strata: r exceeds e*d");
  std::vector<Partition> out;
  std::vector<int> acc;
  strata_rec(r, e, d, acc, out);
  return out;
}

Partition s_max(int r, int e) {
  if (r < 0 || e < 1) throw RangeError("s_max: bad arguments");
  const int c = r / e, f = r % e;
  std::vector<int> parts(c, e);
  if (f > 0) parts.push_back(f);
  return Partition(std::move(parts));
}

Partition r_min(int r, int e) { return dual(s_max(r, e)); }

Partition s_min(int r, int d) {
  if (r < 0 || d < 1) throw RangeError("s_min: bad arguments");
  const int u = r / d, j = r % d;
  std::vector<int> parts;
  parts.insert(parts.end(), j, u + 1);
  parts.insert(parts.end(), d - j, u);
  return Partition(std::move(parts));
}

long long affine_orbit_dim(const Partition& s, int d) {
  if (s.length() > d) throw RangeError("affine_orbit_dim: more than d parts");
  long long acc = 0;
  for (int i = 1; i <= d; ++i) acc += static_cast<long long>(s.part(i - 1)) * (d + 1 - 2 * i);
  return acc;
}

long long special_fiber_dim(int r, int e, int d) {
  if (r < 0 || e < 1 || d < 1 || static_cast<long long>(e) * d < r)
    throw RangeError("special_fiber_dim: need 0 <= r <= e*d");
  const long long c = r / e, f = r % e;
  return static_cast<long long>(d) * r - e * c * c - (2 * c + 1) * f;
}

long long generic_fiber_dim(const Partition& rvec, int d) {
  long long acc = 0;
  for (int x : rvec.parts()) {
    if (x > d) throw RangeError("generic_fiber_dim: part exceeds d");
    acc += static_cast<long long>(x) * (d - x);
  }
  return acc;
}

long long nilpotent_orbit_dim(const Partition& s) {
  long long acc = s.size() * s.size();
  const Partition t = dual(s);
  for (int x : t.parts()) acc -= static_cast<long long>(x) * x;
  return acc;
}

namespace {

// Cells of the shape in row-major order; backtracking fill. `visit` is called
// once per complete semistandard filling with the tableau rows.
struct SsytEnumerator {
  const std::vector<int>& shape;
  const std::vector<int>& content;  // capacity per letter (1-based letters)
  std::vector<std::vector<int>> rows;
  std::vector<int> used;

  template <typename Visit>
  void run(Visit&& visit) {
    rows.assign(shape.size(), {});
    for (std::size_t i = 0; i < shape.size(); ++i) rows[i].assign(shape[i], 0);
    used.assign(content.size() + 1, 0);
    fill(0, 0, visit);
  }

  template <typename Visit>
  void fill(std::size_t i, int j, Visit&& visit) {
    if (i == shape.size()) {
      visit(rows);
      return;
    }
    if (j == shape[i]) {
      fill(i + 1, 0, visit);
      return;
    }
    const int lo_row = j > 0 ? rows[i][j - 1] : 1;           // weakly increasing rows
    const int lo_col = i > 0 ? rows[i - 1][j] + 1 : 1;        // strictly increasing columns
    for (int v = std::max(lo_row, lo_col); v <= static_cast<int>(content.size()); ++v) {
      if (used[v] >= content[v - 1]) continue;
      rows[i][j] = v;
      ++used[v];
      fill(i, j + 1, visit);
      --used[v];
    }
    rows[i][j] = 0;
  }
};

// Charge of a word of standard content 1..n (each letter once).
long long standard_charge(const std::vector<int>& w) {
  if (w.empty()) return 0;
  const int n = static_cast<int>(w.size());
  std::vector<int> pos(n + 1, -1);
  for (int i = 0; i < n; ++i) pos[w[i]] = i;
  long long total = 0, idx = 0;
  for (int k = 2; k <= n; ++k) {
    if (pos[k] < pos[k - 1]) ++idx;
    total += idx;
  }
  return total;
}

// Charge of a word with partition content: extract standard subwords (the
// leftmost 1, then the first 2 to its right scanning cyclically, and so on)
// and add their charges. This extraction keeps the generating polynomial
// monic of degree n(content) - n(shape).
long long charge(std::vector<int> w) {
  long long total = 0;
  while (!w.empty()) {
    const int m = static_cast<int>(w.size());
    int letters = *std::max_element(w.begin(), w.end());
    std::vector<char> taken(m, 0);
    int cursor = 0;
    for (int k = 1; k <= letters; ++k) {
      int found = -1;
      for (int step = 0; step < m; ++step) {
        const int p = (cursor + step) % m;
        if (!taken[p] && w[p] == k) {
          found = p;
          break;
        }
      }
      // Content is a partition, so letters 1..letters all occur.
      taken[found] = 1;
      cursor = (found + 1) % m;
    }
    std::vector<int> sub, rest;
    sub.reserve(letters);
    rest.reserve(m - letters);
    for (int p = 0; p < m; ++p)
      (taken[p] ? sub : rest).push_back(w[p]);
    total += standard_charge(sub);
    w = std::move(rest);
  }
  return total;
}

std::vector<int> reading_word(const std::vector<std::vector<int>>& rows) {
  std::vector<int> w;
  for (const auto& row : rows)
    for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
  return w;
}

}  // namespace

long long kostka_number(const Partition& shape, const Partition& content) {
  if (shape.size() != content.size())
    throw SizeMismatch("kostka_number requires equal sizes");
  if (shape.empty()) return 1;
  long long count = 0;
  SsytEnumerator en{shape.parts(), content.parts(), {}, {}};
  en.run([&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

std::vector<long long> kostka_foulkes(const Partition& shape, const Partition& content) {
  if (shape.size() != content.size())
    throw SizeMismatch("kostka_foulkes requires equal sizes");
  std::vector<long long> coeffs;
  if (shape.empty()) return {1};
  SsytEnumerator en{shape.parts(), content.parts(), {}, {}};
  en.run([&](const std::vector<std::vector<int>>& rows) {
    const long long c = charge(reading_word(rows));
    if (static_cast<long long>(coeffs.size()) <= c) coeffs.resize(c + 1, 0);
    ++coeffs[c];
  });
  return coeffs;
}

std::uint64_t coinvariant_dim_formula(int r, int e) {
  if (r < 0 || e < 1) throw RangeError("coinvariant_dim_formula: bad arguments");
  const int c = r / e, f = r % e;
  auto factorial = [](int n) {
    cpp_int acc = 1;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
  };
  cpp_int num = factorial(r);
  cpp_int den = 1;
  for (int i = 0; i < f; ++i) den *= factorial(c + 1);
  for (int i = 0; i < e - f; ++i) den *= factorial(c);
  const cpp_int q = num / den;
  if (q > std::numeric_limits<std::uint64_t>::max())
    throw RangeError("coinvariant_dim_formula: value exceeds 64 bits");
  return static_cast<std::uint64_t>(q);
}

}  // namespace locmod
