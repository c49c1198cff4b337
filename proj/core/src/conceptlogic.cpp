#include "pgsem/conceptlogic.hpp"

#include <string>

namespace pgsem::conceptlogic {

using linalg::Matrix;
using linalg::Subspace;

namespace {

void same_length(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("operands of length " + std::to_string(a) + " and " + std::to_string(b));
}

template <class F>
RationalVector zip(const RationalVector& x, const RationalVector& y, F f) {
  same_length(x.size(), y.size());
  RationalVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = f(x[i], y[i]);
  return z;
}

void unit_entries(const DiagOp& d) {
  if (!all_in_unit_interval(d.entries()))
    throw std::invalid_argument("consequence relations need diagonal entries in [0,1]");
}

}  // namespace

DiagOp DiagOp::compose(const DiagOp& other) const { return DiagOp(vecmodel::pointwise(d_, other.d_)); }
ConceptVector DiagOp::apply(const ConceptVector& y) const { return vecmodel::pointwise(d_, y); }

bool DiagOp::is_projector() const {
  for (const auto& a : d_)
    if (!is_zero_or_one(a)) return false;
  return true;
}

DiagOp diag_of(const ConceptVector& x) { return DiagOp(x); }
ConceptVector vector_of(const DiagOp& d) { return d.entries(); }

bool is_boolean(const ConceptVector& x) {
  for (const auto& a : x)
    if (!is_zero_or_one(a)) return false;
  return true;
}

Rational alg_neg(const Rational& a) { return 1 - a; }
Rational alg_and(const Rational& a, const Rational& b) { return a * b; }
Rational alg_or(const Rational& a, const Rational& b) { return a + b - a * b; }
Rational alg_imp(const Rational& a, const Rational& b) { return 1 - a + a * b; }

ConceptVector alg_neg(const ConceptVector& x) {
  ConceptVector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = alg_neg(x[i]);
  return y;
}

ConceptVector alg_and(const ConceptVector& x, const ConceptVector& y) {
  return zip(x, y, [](const Rational& a, const Rational& b) { return alg_and(a, b); });
}
ConceptVector alg_or(const ConceptVector& x, const ConceptVector& y) {
  return zip(x, y, [](const Rational& a, const Rational& b) { return alg_or(a, b); });
}
ConceptVector alg_imp(const ConceptVector& x, const ConceptVector& y) {
  return zip(x, y, [](const Rational& a, const Rational& b) { return alg_imp(a, b); });
}

DiagOp alg_neg(const DiagOp& d) { return DiagOp(alg_neg(d.entries())); }
DiagOp alg_and(const DiagOp& d, const DiagOp& e) { return DiagOp(alg_and(d.entries(), e.entries())); }
DiagOp alg_or(const DiagOp& d, const DiagOp& e) { return DiagOp(alg_or(d.entries(), e.entries())); }
DiagOp alg_imp(const DiagOp& d, const DiagOp& e) { return DiagOp(alg_imp(d.entries(), e.entries())); }

bool algebraic_consequence(const DiagOp& d, const DiagOp& e) {
  unit_entries(d);
  unit_entries(e);
  return alg_imp(d, e).entries() == vecmodel::ones(d.size());
}

bool probabilistic_consequence(const DiagOp& d, const DiagOp& e) {
  unit_entries(d);
  unit_entries(e);
  same_length(d.size(), e.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.entries()[i] > e.entries()[i]) return false;
  return true;
}

Projector::Projector(Matrix m) : m_(std::move(m)) {
  if (!m_.square()) throw NotIdempotent("a projector must be square");
  if (!m_.is_idempotent()) throw NotIdempotent("matrix is not idempotent");
}

Projector Projector::diagonal(const std::vector<bool>& kept) {
  RationalVector d;
  for (bool k : kept) d.emplace_back(k ? 1 : 0);
  return Projector(Matrix::diagonal(d));
}

Projector Projector::onto(const Subspace& s) { return Projector(s.projector()); }

Projector geo_neg(const Projector& p) { return Projector::onto(p.range().orthocomplement()); }

Projector geo_and(const Projector& p, const Projector& q) {
  same_length(p.size(), q.size());
  return Projector::onto(p.range().intersect(q.range()));
}

Projector geo_or(const Projector& p, const Projector& q) {
  same_length(p.size(), q.size());
  return Projector::onto(p.range().sum(q.range()));
}

Projector geo_imp(const Projector& p, const Projector& q) {
  same_length(p.size(), q.size());
  return Projector::onto(Subspace::kernel(q.matrix() * p.matrix() - p.matrix()));
}

bool geometric_consequence(const Projector& p, const Projector& q) {
  return geo_imp(p, q) == Projector::identity(p.size());
}

std::optional<RationalVector> eigenvalues_in(const Matrix& m, const std::vector<RationalVector>& basis) {
  RationalVector out;
  for (const auto& v : basis) {
    const auto mv = m.apply(v);
    std::size_t k = 0;
    while (k < v.size() && v[k] == 0) ++k;
    if (k == v.size()) return std::nullopt;
    const Rational lambda = mv[k] / v[k];
    for (std::size_t i = 0; i < v.size(); ++i)
      if (mv[i] != lambda * v[i]) return std::nullopt;
    out.push_back(lambda);
  }
  return out;
}

std::optional<std::vector<RationalVector>> simultaneous_eigenbasis(const Projector& p, const Projector& q) {
  const Projector* inner = &p;
  const Projector* outer = &q;
  if (!geometric_consequence(p, q)) {
    if (!geometric_consequence(q, p)) return std::nullopt;
    std::swap(inner, outer);
  }
  const std::size_t n = p.size();
  const Subspace ker_inner = Subspace::kernel(inner->matrix());
  const Subspace ker_outer = Subspace::kernel(outer->matrix());
  std::vector<RationalVector> basis;
  for (const auto& part : {inner->range(), outer->range().intersect(ker_inner), ker_outer.intersect(ker_inner)})
    for (auto& v : part.orthogonal_basis()) basis.push_back(std::move(v));
  if (basis.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (linalg::dot(basis[i], basis[j]) != 0) return std::nullopt;
  if (!eigenvalues_in(p.matrix(), basis) || !eigenvalues_in(q.matrix(), basis)) return std::nullopt;
  return basis;
}

}  // namespace pgsem::conceptlogic
