#pragma once

// Connectives on concept vectors. The algebraic ones act coordinatewise on
// scalars, vectors and diagonal operators; the geometric ones act on
// projectors through their ranges.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pgsem/linalg.hpp"
#include "pgsem/rational.hpp"
#include "pgsem/vecmodel.hpp"

namespace pgsem::conceptlogic {

using vecmodel::ConceptVector;

/// A diagonal operator D_X, stored by its diagonal.
class DiagOp {
 public:
  DiagOp() = default;
  explicit DiagOp(RationalVector d) : d_(std::move(d)) {}

  std::size_t size() const { return d_.size(); }
  const RationalVector& entries() const { return d_; }
  linalg::Matrix matrix() const { return linalg::Matrix::diagonal(d_); }
  /// D_X ∘ D_Y.
  DiagOp compose(const DiagOp& other) const;
  /// D_X |Y⟩.
  ConceptVector apply(const ConceptVector& y) const;
  bool is_projector() const;

  friend bool operator==(const DiagOp&, const DiagOp&) = default;

 private:
  RationalVector d_;
};

DiagOp diag_of(const ConceptVector& x);
ConceptVector vector_of(const DiagOp& d);
bool is_boolean(const ConceptVector& x);

Rational alg_neg(const Rational& a);
Rational alg_and(const Rational& a, const Rational& b);
Rational alg_or(const Rational& a, const Rational& b);
Rational alg_imp(const Rational& a, const Rational& b);

/// Coordinatewise; throw std::invalid_argument on length mismatch.
ConceptVector alg_neg(const ConceptVector& x);
ConceptVector alg_and(const ConceptVector& x, const ConceptVector& y);
ConceptVector alg_or(const ConceptVector& x, const ConceptVector& y);
ConceptVector alg_imp(const ConceptVector& x, const ConceptVector& y);

DiagOp alg_neg(const DiagOp& d);
DiagOp alg_and(const DiagOp& d, const DiagOp& e);
DiagOp alg_or(const DiagOp& d, const DiagOp& e);
DiagOp alg_imp(const DiagOp& d, const DiagOp& e);

/// D -> E = 1. Throws std::invalid_argument for entries outside [0,1].
bool algebraic_consequence(const DiagOp& d, const DiagOp& e);
/// D <= E entrywise. Same precondition.
bool probabilistic_consequence(const DiagOp& d, const DiagOp& e);

class NotIdempotent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A square rational matrix with P∘P = P.
class Projector {
 public:
  /// Throws NotIdempotent.
  explicit Projector(linalg::Matrix m);
  /// Diagonal projector keeping the marked coordinates.
  static Projector diagonal(const std::vector<bool>& kept);
  /// Orthogonal projector onto s.
  static Projector onto(const linalg::Subspace& s);
  static Projector identity(std::size_t n) { return Projector(linalg::Matrix::identity(n)); }

  std::size_t size() const { return m_.rows(); }
  const linalg::Matrix& matrix() const { return m_; }
  linalg::Subspace range() const { return linalg::Subspace::column_space(m_); }

  friend bool operator==(const Projector&, const Projector&) = default;

 private:
  linalg::Matrix m_;
};

/// Orthogonal projectors onto: range(p)^⊥, range(p) ∩ range(q),
/// range(p) + range(q), and { x : q p x = p x }.
Projector geo_neg(const Projector& p);
Projector geo_and(const Projector& p, const Projector& q);
Projector geo_or(const Projector& p, const Projector& q);
Projector geo_imp(const Projector& p, const Projector& q);

/// p => q is the identity.
bool geometric_consequence(const Projector& p, const Projector& q);

/// An orthogonal basis of common eigenvectors, built from range(p), then
/// range(q) ∩ ker p, then ker q ∩ ker p (roles swapped when q => p).
/// Returns nullopt when neither is a geometric consequence of the other
/// or when the result fails verification.
std::optional<std::vector<RationalVector>> simultaneous_eigenbasis(const Projector& p, const Projector& q);

/// Eigenvalues of m along each basis vector, or nullopt if some basis
/// vector is not an eigenvector.
std::optional<RationalVector> eigenvalues_in(const linalg::Matrix& m, const std::vector<RationalVector>& basis);

}  // namespace pgsem::conceptlogic
