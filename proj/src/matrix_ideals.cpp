#include "locmod/matrix_ideals.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace locmod {

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw RangeError("matrix dimensions must be positive");
  e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
            Polynomial::zero(ring_));
}

PolyMatrix PolyMatrix::identity(RingPtr ring, int n) {
  PolyMatrix m(std::move(ring), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(m.ring_, Rat(1));
  return m;
}

Polynomial& PolyMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw RangeError("matrix index out of range");
  return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
            static_cast<std::size_t>(j)];
}

const Polynomial& PolyMatrix::at(int i, int j) const {
  return const_cast<PolyMatrix*>(this)->at(i, j);
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  require_same_ring(ring_, o.ring_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix shapes differ");
  PolyMatrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  require_same_ring(ring_, o.ring_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix shapes differ");
  PolyMatrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  require_same_ring(ring_, o.ring_);
  if (cols_ != o.rows_) throw SizeMismatch("matrix shapes are not composable");
  PolyMatrix out(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      Polynomial acc = Polynomial::zero(ring_);
      for (int k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
      out.at(i, j) = std::move(acc);
    }
  return out;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& c) const {
  require_same_ring(ring_, c.ring());
  PolyMatrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * c;
  return out;
}

PolyMatrix PolyMatrix::pow(int k) const {
  if (rows_ != cols_) throw RangeError("matrix power requires a square matrix");
  if (k < 0) throw RangeError("negative matrix power");
  PolyMatrix result = identity(ring_, rows_);
  for (int i = 0; i < k; ++i) result = result * *this;
  return result;
}

std::vector<Polynomial> PolyMatrix::entries() const { return e_; }

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return same_ring(ring_, o.ring_) && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Polynomial submatrix_det(const PolyMatrix& M, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw SizeMismatch("determinant requires a square selection");
  const std::size_t n = rows.size();
  if (n == 0) return Polynomial::constant(M.ring(), Rat(1));
  if (n == 1) return M.at(rows[0], cols[0]);
  Polynomial acc = Polynomial::zero(M.ring());
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  std::vector<int> sub_cols;
  sub_cols.reserve(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial& pivot = M.at(rows[0], cols[j]);
    if (pivot.is_zero()) continue;
    sub_cols.clear();
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    Polynomial term = pivot * submatrix_det(M, sub_rows, sub_cols);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

RingPtr matrix_ring(Field field, int r) {
  if (r < 1 || r > 9) throw RangeError("matrix ring size must be between 1 and 9");
  std::vector<std::string> vars;
  vars.reserve(static_cast<std::size_t>(r) * static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) vars.push_back("a" + std::to_string(i) + std::to_string(j));
  return make_ring(field, std::move(vars));
}

RingPtr diagonal_ring(Field field, int r) {
  if (r < 1) throw RangeError("diagonal ring size must be positive");
  std::vector<std::string> vars;
  vars.reserve(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) vars.push_back("X" + std::to_string(i));
  return make_ring(field, std::move(vars));
}

namespace {

// Matrix size r when `ring` is matrix_ring(field, r), otherwise 0.
int matrix_ring_size(const RingPtr& ring) {
  const int n = ring->nvars();
  int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r < 1 || r > 9 || r * r != n) return 0;
  int k = 0;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j, ++k)
      if (ring->vars[static_cast<std::size_t>(k)] != "a" + std::to_string(i) + std::to_string(j))
        return 0;
  return r;
}

std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int pos, int next) -> void {
    if (pos == k) {
      out.push_back(cur);
      return;
    }
    for (int i = next; i <= n - (k - pos); ++i) {
      cur[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

PolyMatrix generic_matrix(const RingPtr& ring) {
  const int r = matrix_ring_size(ring);
  if (r == 0) throw ContextMismatch("ring is not a generic matrix ring");
  PolyMatrix A(ring, r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) A.at(i, j) = Polynomial::variable(ring, i * r + j);
  return A;
}

std::vector<Polynomial> char_poly_coeffs(const PolyMatrix& A) {
  if (A.rows() != A.cols()) throw RangeError("characteristic polynomial of a non-square matrix");
  const int r = A.rows();
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(r));
  for (int h = 1; h <= r; ++h) {
    Polynomial sigma = Polynomial::zero(A.ring());
    for (const auto& s : subsets_lex(r, h)) sigma = sigma + submatrix_det(A, s, s);
    out.push_back(std::move(sigma));
  }
  return out;
}

PolyMatrix wedge_power(const PolyMatrix& M, int t) {
  if (M.rows() != M.cols()) throw RangeError("exterior power of a non-square matrix");
  const int r = M.rows();
  if (t < 1 || t > r) throw RangeError("exterior power degree out of range");
  const auto subs = subsets_lex(r, t);
  const int n = static_cast<int>(subs.size());
  PolyMatrix out(M.ring(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.at(i, j) = submatrix_det(M, subs[static_cast<std::size_t>(i)],
                                   subs[static_cast<std::size_t>(j)]);
  return out;
}

PolyMatrix S_operator(const PolyMatrix& A, int t, int h) {
  if (A.rows() != A.cols()) throw RangeError("operator requires a square matrix");
  const int r = A.rows();
  if (t < 1 || t > r || h < 0) throw RangeError("operator indices out of range");
  std::vector<PolyMatrix> pw;
  pw.reserve(static_cast<std::size_t>(h) + 1);
  pw.push_back(PolyMatrix::identity(A.ring(), r));
  for (int k = 1; k <= h; ++k) pw.push_back(pw.back() * A);

  const auto subs = subsets_lex(r, t);
  const int n = static_cast<int>(subs.size());
  PolyMatrix out(A.ring(), n, n);

  // enumerate the exponent tuples (h_1, ..., h_t), sum h, in lexicographic order
  std::vector<int> comp(static_cast<std::size_t>(t), 0);
  auto emit = [&](const std::vector<int>& hs) {
    for (int sidx = 0; sidx < n; ++sidx) {
      const auto& S = subs[static_cast<std::size_t>(sidx)];
      // column j of C is A^{h_j} applied to basis vector S[j]
      PolyMatrix C(A.ring(), r, t);
      for (int j = 0; j < t; ++j) {
        const PolyMatrix& P = pw[static_cast<std::size_t>(hs[static_cast<std::size_t>(j)])];
        for (int i = 0; i < r; ++i) C.at(i, j) = P.at(i, S[static_cast<std::size_t>(j)]);
      }
      std::vector<int> all_cols(static_cast<std::size_t>(t));
      for (int j = 0; j < t; ++j) all_cols[static_cast<std::size_t>(j)] = j;
      for (int tidx = 0; tidx < n; ++tidx) {
        const Polynomial d = submatrix_det(C, subs[static_cast<std::size_t>(tidx)], all_cols);
        if (!d.is_zero()) out.at(tidx, sidx) = out.at(tidx, sidx) + d;
      }
    }
  };
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == t - 1) {
      comp[static_cast<std::size_t>(pos)] = rest;
      emit(comp);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      comp[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, h);
  return out;
}

PolyMatrix F_operator(const PolyMatrix& A, int t, int h) {
  if (A.rows() != A.cols()) throw RangeError("operator requires a square matrix");
  if (t < 1 || t > A.rows() || h < 0) throw RangeError("operator indices out of range");
  const std::vector<Polynomial> sigma = char_poly_coeffs(A);
  PolyMatrix out = S_operator(A, t, h);
  for (int i = 1; i <= h && i <= A.rows(); ++i) {  // sigma_i = 0 for i > r
    const Polynomial& si = sigma[static_cast<std::size_t>(i - 1)];
    PolyMatrix term = S_operator(A, t, h - i).scaled(si);
    out = (i % 2 == 1) ? out - term : out + term;
  }
  return out;
}

namespace {

std::string entry_label(const std::string& prefix, int i, int j) {
  return prefix + " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void append_matrix(std::vector<AnnotatedGenerator>& out, const PolyMatrix& M,
                   const std::string& prefix) {
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) out.push_back({M.at(i, j), entry_label(prefix, i, j)});
}

AnnotatedIdeal finish(RingPtr ring, std::vector<AnnotatedGenerator> raw) {
  std::set<std::string> seen;
  std::vector<AnnotatedGenerator> kept;
  for (AnnotatedGenerator& g : raw) {
    if (g.poly.is_zero()) continue;
    if (!seen.insert(g.poly.to_string()).second) continue;
    kept.push_back(std::move(g));
  }
  std::vector<Polynomial> polys;
  polys.reserve(kept.size());
  for (const AnnotatedGenerator& g : kept) polys.push_back(g.poly);
  Ideal ideal(ring, std::move(polys));
  return AnnotatedIdeal{std::move(ring), std::move(kept), std::move(ideal)};
}

void append_sigma(std::vector<AnnotatedGenerator>& out, const std::vector<Polynomial>& sigma) {
  for (std::size_t h = 0; h < sigma.size(); ++h)
    out.push_back({sigma[h], "sigma_" + std::to_string(h + 1)});
}

}  // namespace

AnnotatedIdeal naive_special_ideal(int r, int e, const Field& field) {
  if (e < 1) throw RangeError("nilpotency exponent must be positive");
  const RingPtr ring = matrix_ring(field, r);
  const PolyMatrix A = generic_matrix(ring);
  std::vector<AnnotatedGenerator> gens;
  append_matrix(gens, A.pow(e), "A^" + std::to_string(e));
  append_sigma(gens, char_poly_coeffs(A));
  return finish(ring, std::move(gens));
}

AnnotatedIdeal dcp_special_ideal(int r, const Partition& rvec, const Field& field) {
  if (r < 1) throw RangeError("matrix size must be positive");
  if (rvec.size() != r) throw RangeError("multiplicity vector must sum to the matrix size");
  const int e = rvec.length();
  const RingPtr ring = matrix_ring(field, r);
  const PolyMatrix A = generic_matrix(ring);
  std::vector<PolyMatrix> pw;
  pw.reserve(static_cast<std::size_t>(e) + 1);
  pw.push_back(PolyMatrix::identity(ring, r));
  for (int k = 1; k <= e; ++k) pw.push_back(pw.back() * A);

  std::vector<AnnotatedGenerator> gens;
  int nk = 0;
  for (int k = 0; k <= e; ++k) {
    if (k > 0) nk += rvec.part(k - 1);
    const int m = r - nk + 1;
    for (int t = 1; t <= std::min(m, r); ++t) {
      const int h = m - t;
      const PolyMatrix block =
          S_operator(A, t, h) * wedge_power(pw[static_cast<std::size_t>(k)], t);
      const std::string prefix =
          "k=" + std::to_string(k) + ",t=" + std::to_string(t) + ",h=" + std::to_string(h);
      append_matrix(gens, block, prefix);
    }
  }
  return finish(ring, std::move(gens));
}

AnnotatedIdeal dcp_generic_ideal(const std::vector<EigenvalueDatum>& eig, const Field& field) {
  if (eig.empty()) throw RangeError("eigenvalue data must be nonempty");
  const int e = static_cast<int>(eig.size());
  int r = 0;
  std::vector<Rat> values;
  for (const EigenvalueDatum& d : eig) {
    if (d.multiplicity < 1) throw RangeError("eigenvalue multiplicities must be positive");
    r += d.multiplicity;
    values.push_back(field.canon(d.value));
  }
  for (int i = 0; i < e; ++i)
    for (int j = i + 1; j < e; ++j)
      if (values[static_cast<std::size_t>(i)] == values[static_cast<std::size_t>(j)])
        throw DistinctnessError("eigenvalues collide in " + field.to_string());

  const RingPtr ring = matrix_ring(field, r);
  const PolyMatrix A = generic_matrix(ring);
  std::vector<AnnotatedGenerator> gens;

  // sigma_h(A) minus the elementary symmetric function of the eigenvalue multiset
  std::vector<Rat> es(static_cast<std::size_t>(r) + 1, Rat(0));
  es[0] = Rat(1);
  for (int i = 0; i < e; ++i)
    for (int c = 0; c < eig[static_cast<std::size_t>(i)].multiplicity; ++c)
      for (int h = r; h >= 1; --h)
        es[static_cast<std::size_t>(h)] =
            field.add(es[static_cast<std::size_t>(h)],
                      field.mul(values[static_cast<std::size_t>(i)],
                                es[static_cast<std::size_t>(h - 1)]));
  const std::vector<Polynomial> sigma = char_poly_coeffs(A);
  for (int h = 1; h <= r; ++h)
    gens.push_back({sigma[static_cast<std::size_t>(h - 1)] -
                        Polynomial::constant(ring, es[static_cast<std::size_t>(h)]),
                    "sigma_" + std::to_string(h)});

  // shifted matrices A - a_i * I
  std::vector<PolyMatrix> shifted;
  for (int i = 0; i < e; ++i) {
    PolyMatrix B = A - PolyMatrix::identity(ring, r).scaled(
                           Polynomial::constant(ring, values[static_cast<std::size_t>(i)]));
    shifted.push_back(std::move(B));
  }

  // all tuples f with 0 <= f(i) <= r_i, odometer order (last index fastest)
  std::vector<int> f(static_cast<std::size_t>(e), 0);
  while (true) {
    int excluded = 0;
    for (int i = 0; i < e; ++i)
      if (f[static_cast<std::size_t>(i)] > 0) excluded += eig[static_cast<std::size_t>(i)].multiplicity;
    const int m = r - excluded + 1;
    PolyMatrix Q = PolyMatrix::identity(ring, r);
    for (int i = 0; i < e; ++i)
      for (int c = 0; c < f[static_cast<std::size_t>(i)]; ++c)
        Q = Q * shifted[static_cast<std::size_t>(i)];
    // Alternating coefficients for this block: elementary symmetric functions
    // of the eigenvalues NOT touched by f (those with f(i) = 0, counted with
    // full multiplicity). On the image of wedge_power(Q_f, t) the operator
    // sum_i (-1)^i w_i S^t_{h-i} acts on an eigenbasis wedge v_I by the
    // z^h-coefficient of prod_{j in surviving \ I} (1 - lambda_j z), a
    // polynomial of degree (r - excluded) - t; hence the block vanishes on
    // diagonalizable matrices with the prescribed spectrum exactly in the
    // range t + h = r - excluded + 1 used here.
    std::vector<Rat> w(static_cast<std::size_t>(r) + 1, Rat(0));
    w[0] = Rat(1);
    for (int i = 0; i < e; ++i) {
      if (f[static_cast<std::size_t>(i)] != 0) continue;
      for (int c = 0; c < eig[static_cast<std::size_t>(i)].multiplicity; ++c)
        for (int h = r; h >= 1; --h)
          w[static_cast<std::size_t>(h)] =
              field.add(w[static_cast<std::size_t>(h)],
                        field.mul(values[static_cast<std::size_t>(i)],
                                  w[static_cast<std::size_t>(h - 1)]));
    }
    std::ostringstream ftag;
    ftag << "f=(";
    for (int i = 0; i < e; ++i) ftag << (i ? "," : "") << f[static_cast<std::size_t>(i)];
    ftag << ")";
    for (int t = 1; t <= std::min(m, r); ++t) {
      const int h = m - t;
      PolyMatrix op = S_operator(A, t, h);
      for (int i = 1; i <= h; ++i) {
        const Rat& wi = w[static_cast<std::size_t>(i)];
        if (Field::is_zero(wi)) continue;
        PolyMatrix term =
            S_operator(A, t, h - i).scaled(Polynomial::constant(ring, wi));
        op = (i % 2 == 1) ? op - term : op + term;
      }
      const PolyMatrix block = op * wedge_power(Q, t);
      const std::string prefix =
          ftag.str() + ",t=" + std::to_string(t) + ",h=" + std::to_string(h);
      append_matrix(gens, block, prefix);
    }
    int pos = e - 1;
    while (pos >= 0 &&
           f[static_cast<std::size_t>(pos)] == eig[static_cast<std::size_t>(pos)].multiplicity) {
      f[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++f[static_cast<std::size_t>(pos)];
  }
  return finish(ring, std::move(gens));
}

AnnotatedIdeal e2_ideal(int r1, int r2, const Field& field) {
  if (r2 < 0 || r1 < r2) throw RangeError("parts must satisfy r1 >= r2 >= 0");
  const int r = r1 + r2;
  if (r < 1) throw RangeError("matrix size must be positive");
  const RingPtr ring = matrix_ring(field, r);
  const PolyMatrix A = generic_matrix(ring);
  std::vector<AnnotatedGenerator> gens;
  append_matrix(gens, A.pow(2), "A^2");
  const auto subs = subsets_lex(r, r2 + 1);
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j) {
      std::ostringstream label;
      label << "minor rows=(";
      for (std::size_t k = 0; k < subs[i].size(); ++k) label << (k ? "," : "") << subs[i][k] + 1;
      label << ") cols=(";
      for (std::size_t k = 0; k < subs[j].size(); ++k) label << (k ? "," : "") << subs[j][k] + 1;
      label << ")";
      gens.push_back({submatrix_det(A, subs[i], subs[j]), label.str()});
    }
  append_sigma(gens, char_poly_coeffs(A));
  return finish(ring, std::move(gens));
}

Ideal diagonal_restriction(const Ideal& I) {
  const int r = matrix_ring_size(I.ring());
  if (r == 0) throw ContextMismatch("ideal does not live in a generic matrix ring");
  const RingPtr X = diagonal_ring(I.ring()->field, r);
  std::map<int, Polynomial> assign;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      assign.emplace(i * r + j,
                     i == j ? Polynomial::variable(X, i) : Polynomial::zero(X));
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(g.substitute(assign));
  return Ideal(X, std::move(gens));
}

}  // namespace locmod
