#include "pgsem/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pgsem::linalg {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<RationalVector>& cols, std::size_t height) {
  Matrix m(height, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != height) throw std::invalid_argument("from_columns: column height mismatch");
    for (std::size_t r = 0; r < height; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::ket(std::span<const Rational> v) {
  Matrix m(v.size(), 1);
  for (std::size_t r = 0; r < v.size(); ++r) m(r, 0) = v[r];
  return m;
}

RationalVector Matrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector Matrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalVector Matrix::diagonal_entries() const {
  RationalVector v(std::min(rows_, cols_));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)(i, i);
  return v;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalVector Matrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

Rational Matrix::trace() const {
  if (!square()) throw std::invalid_argument("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && sgn((*this)(r, c)) != 0) return false;
  return square();
}

bool Matrix::is_symmetric() const { return square() && *this == transposed(); }

bool Matrix::is_idempotent() const { return square() && (*this) * (*this) == *this; }

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) p(i, j) += aik * b(k, j);
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: dimension mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c).get_str();
    }
  }
  os << "]";
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

RationalVector kron(std::span<const Rational> a, std::span<const Rational> b) {
  RationalVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Echelon rref(Matrix m) {
  Echelon e;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = 0; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= factor * m(lead_row, k);
    }
    e.pivots.push_back(c);
    ++lead_row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::vector<RationalVector> kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) throw std::invalid_argument("Subspace::span: vector of wrong dimension");
  Echelon e = rref(Matrix::from_rows(vectors));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    RationalVector e(ambient_dim);
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  return span(ambient_dim, rows);
}

Subspace Subspace::column_space(const Matrix& m) {
  std::vector<RationalVector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return span(m.rows(), cols);
}

Subspace Subspace::kernel(const Matrix& m) { return span(m.cols(), kernel_basis(m)); }

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("Subspace::contains: vector of wrong dimension");
  std::vector<RationalVector> rows = basis_;
  rows.emplace_back(v.begin(), v.end());
  return span(dim_, rows).dimension() == dimension();
}

Subspace Subspace::orthocomplement() const {
  if (basis_.empty()) return whole(dim_);
  return span(dim_, kernel_basis(Matrix::from_rows(basis_)));
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("Subspace::sum: ambient dimension mismatch");
  std::vector<RationalVector> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(dim_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("Subspace::intersect: ambient dimension mismatch");
  return orthocomplement().sum(other.orthocomplement()).orthocomplement();
}

Matrix Subspace::projector() const {
  if (basis_.empty()) return Matrix::zero(dim_, dim_);
  Matrix b = Matrix::from_columns(basis_, dim_);
  Matrix bt = b.transposed();
  auto gram_inv = inverse(bt * b);
  if (!gram_inv) throw std::logic_error("Subspace::projector: singular Gram matrix");
  return b * (*gram_inv) * bt;
}

RationalVector primitive_direction(RationalVector v) {
  mpz_class lcm_den = 1;
  for (const auto& q : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  mpz_class g = 0;
  for (auto& q : v) {
    q *= lcm_den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  }
  if (g == 0) return v;
  auto first = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
  if (sgn(*first) < 0) g = -g;
  for (auto& q : v) q /= g;
  return v;
}

std::vector<RationalVector> Subspace::orthogonal_basis() const {
  std::vector<RationalVector> out;
  for (const auto& b : basis_) {
    RationalVector v = b;
    for (const auto& u : out) {
      const Rational coeff = dot(v, u) / dot(u, u);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= coeff * u[i];
    }
    out.push_back(primitive_direction(std::move(v)));
  }
  return out;
}

}  // namespace pgsem::linalg
