#pragma once

// Exact rational linear algebra: dense matrices, reduced row echelon form,
// kernels, and subspaces with a canonical representative. Used by the
// concept-logic module for projector ranges and by the vector model for
// Kronecker products.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgsem/rational.hpp"

namespace pgsem::linalg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(std::span<const Rational> entries);
  static Matrix from_rows(const std::vector<RationalVector>& rows);
  static Matrix from_columns(const std::vector<RationalVector>& cols, std::size_t height);
  /// Column vector |v>, the map from the unit space onto v.
  static Matrix ket(std::span<const Rational> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;
  RationalVector diagonal_entries() const;
  Matrix transposed() const;
  RationalVector apply(std::span<const Rational> x) const;
  Rational trace() const;

  bool is_diagonal() const;
  bool is_symmetric() const;
  bool is_idempotent() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
/// Kronecker product of coordinate vectors, left factor slow.
RationalVector kron(std::span<const Rational> a, std::span<const Rational> b);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to reduced row echelon form.
Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of { x : m x = 0 }, one vector per free column of rref(m), with the
/// free variable set to 1.
std::vector<RationalVector> kernel_basis(const Matrix& m);

/// A linear subspace of Q^n, stored as the nonzero rows of the reduced row
/// echelon form of any spanning set. Two subspaces are equal iff their
/// stored bases are equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : dim_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors);
  static Subspace whole(std::size_t ambient_dim);
  static Subspace column_space(const Matrix& m);
  static Subspace kernel(const Matrix& m);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }
  bool contains(std::span<const Rational> v) const;

  Subspace orthocomplement() const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Orthogonal projector onto this subspace, B (B^T B)^-1 B^T.
  Matrix projector() const;
  /// Pairwise orthogonal (unnormalised) basis by exact Gram-Schmidt on the
  /// canonical basis; each vector scaled so its first nonzero entry is
  /// positive and its entries are coprime integers.
  std::vector<RationalVector> orthogonal_basis() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t dim_;
  std::vector<RationalVector> basis_;
};

/// Scales v to coprime integer entries with a positive leading entry.
RationalVector primitive_direction(RationalVector v);

}  // namespace pgsem::linalg
