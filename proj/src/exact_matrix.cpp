#include "locmod/exact_matrix.hpp"

#include <sstream>

#include "locmod/budget.hpp"
#include "locmod/errors.hpp"

namespace locmod {

ExactMatrix::ExactMatrix(Field field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw RangeError("matrix dimensions must be nonnegative");
  e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rat(0));
}

ExactMatrix ExactMatrix::identity(const Field& field, int n) {
  ExactMatrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rat(1));
  return m;
}

const Rat& ExactMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw RangeError("matrix index out of range");
  return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
            static_cast<std::size_t>(j)];
}

void ExactMatrix::set(int i, int j, const Rat& v) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw RangeError("matrix index out of range");
  e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
     static_cast<std::size_t>(j)] = field_.canon(v);
}

namespace {
void require_field(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field() != b.field()) throw ContextMismatch("matrices lie over different fields");
}
}  // namespace

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  require_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix shapes differ");
  ExactMatrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = field_.add(e_[k], o.e_[k]);
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  require_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix shapes differ");
  ExactMatrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = field_.sub(e_[k], o.e_[k]);
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  require_field(*this, o);
  if (cols_ != o.rows_) throw SizeMismatch("matrix shapes are not composable");
  ExactMatrix out(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      Rat acc(0);
      for (int k = 0; k < cols_; ++k)
        acc = field_.add(acc, field_.mul(at(i, k), o.at(k, j)));
      out.e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(o.cols_) +
             static_cast<std::size_t>(j)] = acc;
    }
  return out;
}

ExactMatrix ExactMatrix::pow(int k) const {
  if (rows_ != cols_) throw RangeError("matrix power requires a square matrix");
  if (k < 0) throw RangeError("negative matrix power");
  ExactMatrix result = identity(field_, rows_);
  for (int i = 0; i < k; ++i) result = result * *this;
  return result;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool ExactMatrix::is_zero() const {
  for (const Rat& v : e_)
    if (!Field::is_zero(v)) return false;
  return true;
}

namespace {

// In-place Gauss-Jordan on `m` (and mirrored on `aug` when given); returns
// the pivot columns. Leaves m in reduced row echelon form.
std::vector<int> rref_in_place(const Field& F, std::vector<std::vector<Rat>>& m,
                               std::vector<std::vector<Rat>>* aug) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int i = row; i < rows; ++i)
      if (!Field::is_zero(m[i][col])) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[row], m[pr]);
    if (aug) std::swap((*aug)[row], (*aug)[pr]);
    const Rat inv = F.inv(m[row][col]);
    for (int j = 0; j < cols; ++j) m[row][j] = F.mul(m[row][j], inv);
    if (aug)
      for (Rat& v : (*aug)[row]) v = F.mul(v, inv);
    for (int i = 0; i < rows; ++i) {
      if (i == row || Field::is_zero(m[i][col])) continue;
      const Rat c = m[i][col];
      for (int j = 0; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(c, m[row][j]));
      if (aug)
        for (std::size_t j = 0; j < (*aug)[i].size(); ++j)
          (*aug)[i][j] = F.sub((*aug)[i][j], F.mul(c, (*aug)[row][j]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rat>> to_grid(const ExactMatrix& m) {
  std::vector<std::vector<Rat>> g(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    g[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) g[static_cast<std::size_t>(i)].push_back(m.at(i, j));
  }
  return g;
}

}  // namespace

int ExactMatrix::rank() const {
  auto g = to_grid(*this);
  return static_cast<int>(rref_in_place(field_, g, nullptr).size());
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
  if (rows_ != cols_) throw RangeError("inverse requires a square matrix");
  auto g = to_grid(*this);
  auto id = to_grid(identity(field_, rows_));
  const auto pivots = rref_in_place(field_, g, &id);
  if (static_cast<int>(pivots.size()) != rows_) return std::nullopt;
  ExactMatrix out(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      out.set(i, j, id[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "," : "") << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

ExactMatrix row_space_canonical(const ExactMatrix& m) {
  auto g = to_grid(m);
  const auto pivots = rref_in_place(m.field(), g, nullptr);
  const int r = static_cast<int>(pivots.size());
  ExactMatrix out(m.field(), r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j)
      out.set(i, j, g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return out;
}

ExactMatrix stack_rows(const ExactMatrix& top, const ExactMatrix& bottom) {
  require_field(top, bottom);
  if (top.cols() != bottom.cols()) throw SizeMismatch("column counts differ");
  ExactMatrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) out.set(i, j, top.at(i, j));
  for (int i = 0; i < bottom.rows(); ++i)
    for (int j = 0; j < bottom.cols(); ++j) out.set(top.rows() + i, j, bottom.at(i, j));
  return out;
}

Int gaussian_binomial(int n, int k, const Int& q) {
  if (n < 0 || k < 0) throw RangeError("gaussian binomial needs nonnegative arguments");
  if (q < 2) throw RangeError("gaussian binomial base must be at least 2");
  if (k > n) return 0;
  // prod_{i=1..k} (q^(n-k+i) - 1) / (q^i - 1), kept integral by running in
  // the numerator-first order with exact division at each step
  Int num(1), den(1);
  for (int i = 1; i <= k; ++i) {
    num *= boost::multiprecision::pow(q, static_cast<unsigned>(n - k + i)) - 1;
    den *= boost::multiprecision::pow(q, static_cast<unsigned>(i)) - 1;
  }
  return num / den;
}

Int subspace_interval_count(int dim_s, int dim_u, int m, const Int& p) {
  if (m < dim_s || m > dim_u) return 0;
  return gaussian_binomial(dim_u - dim_s, m - dim_s, p);
}

std::vector<ExactMatrix> all_subspaces(const Field& field, int n, int k,
                                       std::uint64_t budget) {
  if (field.kind() != Field::Kind::Prime)
    throw RangeError("subspace enumeration requires a finite field");
  if (n < 0 || k < 0 || k > n) throw RangeError("subspace dimension out of range");
  if (budget == 0) budget = global_budgets().enumeration;
  const Int p(field.characteristic());
  const Int total = gaussian_binomial(n, k, p);
  if (total > Int(budget)) {
    const Int capped = total > Int(UINT64_MAX) ? Int(UINT64_MAX) : total;
    throw BudgetExceeded("subspace enumeration budget exhausted", budget,
                         capped.convert_to<std::uint64_t>());
  }

  std::vector<ExactMatrix> out;
  const long long pc = field.characteristic();

  // choose pivot columns j_0 < ... < j_{k-1}; free entries sit at (i, j) with
  // j > j_i and j not a pivot column
  std::vector<int> piv(static_cast<std::size_t>(k));
  auto emit_for_pivots = [&]() {
    std::vector<char> is_piv(static_cast<std::size_t>(n), 0);
    for (int j : piv) is_piv[static_cast<std::size_t>(j)] = 1;
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < k; ++i)
      for (int j = piv[static_cast<std::size_t>(i)] + 1; j < n; ++j)
        if (!is_piv[static_cast<std::size_t>(j)]) free_pos.push_back({i, j});
    std::vector<long long> vals(free_pos.size(), 0);
    while (true) {
      ExactMatrix m(field, k, n);
      for (int i = 0; i < k; ++i) m.set(i, piv[static_cast<std::size_t>(i)], Rat(1));
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        m.set(free_pos[t].first, free_pos[t].second, Rat(vals[t]));
      out.push_back(std::move(m));
      std::size_t pos = 0;
      while (pos < vals.size() && vals[pos] == pc - 1) vals[pos++] = 0;
      if (pos == vals.size()) break;
      ++vals[pos];
    }
  };
  auto rec = [&](auto&& self, int idx, int next) -> void {
    if (idx == k) {
      emit_for_pivots();
      return;
    }
    for (int j = next; j <= n - (k - idx); ++j) {
      piv[static_cast<std::size_t>(idx)] = j;
      self(self, idx + 1, j + 1);
    }
  };
  if (k == 0) {
    out.push_back(ExactMatrix(field, 0, n));
  } else {
    rec(rec, 0, 0);
  }
  return out;
}

std::vector<ExactMatrix> subspaces_between(const ExactMatrix& S, const ExactMatrix& U,
                                           int m, std::uint64_t budget) {
  require_field(S, U);
  if (S.cols() != U.cols()) throw SizeMismatch("ambient dimensions differ");
  const int s = S.rows();
  const int u = U.rows();
  if (row_space_canonical(stack_rows(U, S)).rows() != u)
    throw RangeError("lower subspace is not contained in the upper one");
  if (m < s || m > u) return {};

  // a complement of S inside U: U-rows that extend the S-basis
  ExactMatrix ext = S;
  std::vector<int> comp_rows;
  for (int i = 0; i < u && ext.rows() < u; ++i) {
    ExactMatrix cand(U.field(), 1, U.cols());
    for (int j = 0; j < U.cols(); ++j) cand.set(0, j, U.at(i, j));
    ExactMatrix trial = row_space_canonical(stack_rows(ext, cand));
    if (trial.rows() > ext.rows()) {
      ext = std::move(trial);
      comp_rows.push_back(i);
    }
  }

  std::vector<ExactMatrix> out;
  for (const ExactMatrix& T : all_subspaces(U.field(), u - s, m - s, budget)) {
    // lift: rows of T give coefficients on the complement rows
    ExactMatrix lifted(U.field(), T.rows(), U.cols());
    for (int i = 0; i < T.rows(); ++i)
      for (int j = 0; j < U.cols(); ++j) {
        Rat acc(0);
        for (int c = 0; c < u - s; ++c)
          acc = U.field().add(
              acc, U.field().mul(T.at(i, c), U.at(comp_rows[static_cast<std::size_t>(c)], j)));
        lifted.set(i, j, acc);
      }
    out.push_back(row_space_canonical(stack_rows(S, lifted)));
  }
  return out;
}

}  // namespace locmod
