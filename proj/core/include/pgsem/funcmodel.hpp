#pragma once

// The logical functional model: entity space V_A, the two-dimensional truth
// space S with basis {⊤, ⊥}, predicates, projectors, the logical
// connectives, and evaluation of normal meaning graphs.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pgsem/pregroup/diagram.hpp"
#include "pgsem/rational.hpp"
#include "pgsem/world.hpp"

namespace pgsem::funcmodel {

enum class TruthValue { Zero, Top, Bot };

/// α⊤ + β⊥.
struct SVector {
  Rational top = 0;
  Rational bot = 0;

  static SVector T() { return {1, 0}; }
  static SVector F() { return {0, 1}; }
  friend bool operator==(const SVector&, const SVector&) = default;
};

SVector operator+(const SVector& a, const SVector& b);
SVector operator*(const Rational& k, const SVector& v);
SVector to_svector(TruthValue v);

/// An element of S⊗S in the basis ⊤⊗⊤, ⊤⊗⊥, ⊥⊗⊤, ⊥⊗⊥.
struct SPair {
  Rational tt = 0, tb = 0, bt = 0, bb = 0;
  friend bool operator==(const SPair&, const SPair&) = default;
};

SPair tensor(const SVector& u, const SVector& v);

enum class TruthClass { True, False, Mixed, Mute };
std::string_view to_string(TruthClass c);

struct TruthState {
  TruthClass tag = TruthClass::Mute;
  SVector witness;
};

std::string to_string(const SVector& v);

using EntityVector = RationalVector;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A linear map V_A -> S with p(a) in {0, ⊤, ⊥}, stored by value.
class Predicate {
 public:
  Predicate() = default;
  explicit Predicate(std::vector<TruthValue> values) : values_(std::move(values)) {}

  /// ⊤ on members, ⊥ elsewhere.
  static Predicate from_indicator(const std::vector<bool>& members);
  static Predicate constant(std::size_t n, TruthValue v) { return Predicate(std::vector<TruthValue>(n, v)); }

  std::size_t size() const { return values_.size(); }
  TruthValue operator()(std::size_t i) const { return values_.at(i); }
  const std::vector<TruthValue>& values() const { return values_; }
  /// No entity is mapped to 0.
  bool on_A() const;
  /// Entities mapped to ⊤.
  std::vector<bool> support() const;

  friend bool operator==(const Predicate&, const Predicate&) = default;

 private:
  std::vector<TruthValue> values_;
};

/// A ↦ a if kept, else 0.
struct ProjectorOnA {
  std::vector<bool> kept;

  EntityVector apply(const EntityVector& x) const;
  friend bool operator==(const ProjectorOnA&, const ProjectorOnA&) = default;
};

/// A linear map V_A ⊗ V_A -> S, by value on basis pairs (row-major).
class BinaryPredicate {
 public:
  BinaryPredicate() = default;
  BinaryPredicate(std::size_t n, std::vector<TruthValue> values);
  static BinaryPredicate from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const { return n_; }
  TruthValue operator()(std::size_t i, std::size_t j) const { return values_.at(i * n_ + j); }
  std::vector<bool> support() const;

 private:
  std::size_t n_ = 0;
  std::vector<TruthValue> values_;
};

EntityVector indicator(const std::vector<bool>& members);

/// Σ x_i p(a_i).
SVector apply_predicate(const Predicate& p, const EntityVector& x);
/// Σ x_i y_j R(a_i, a_j).
SVector apply_relation(const BinaryPredicate& r, const EntityVector& x, const EntityVector& y);

TruthState truth_class(const SVector& v);

SVector connective_not(const SVector& v);
SVector connective_and(const SPair& z);
SVector connective_or(const SPair& z);
SVector connective_ifthen(const SPair& z);

enum class Connective { Not, And, Or, IfThen };
std::string_view to_string(Connective c);
/// Throws std::invalid_argument for other names.
Connective parse_connective(std::string_view name);
SVector apply_binary(Connective c, const SPair& z);

/// ⟨p, q⟩ = (p ⊗ q) ∘ d_A, as the value a ↦ p(a) ⊗ q(a) on each entity.
std::vector<SPair> pair(const Predicate& p, const Predicate& q);

/// not ∘ p.
Predicate negate(const Predicate& p);
/// c ∘ ⟨p, q⟩ for a binary connective c.
Predicate combine(Connective c, const Predicate& p, const Predicate& q);

/// ifthen ∘ ⟨p, q⟩ = true. Both predicates must be on A.
bool logical_consequence(const Predicate& p, const Predicate& q);

struct FundamentalResult {
  TruthState by_counting;        // truth_class(p(X))
  TruthClass by_quantifiers;     // ∀/∃ over the support of X
  std::vector<std::size_t> top_witnesses;
  std::vector<std::size_t> bot_witnesses;

  bool agree() const { return by_counting.tag == by_quantifiers; }
};

/// Classifies p on X both ways. Requires X ≠ 0 with nonnegative
/// coefficients and p on A; throws std::invalid_argument otherwise.
FundamentalResult fundamental_check(const Predicate& p, const EntityVector& x);

using Value = std::variant<EntityVector, SVector>;
std::string to_string(const Value& v, const EntitySpace& space);

class UnboundWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Word bindings resolved against a world: predicate and projector and
/// vector bindings name attributes, relation bindings name relations.
/// F(in_ab) and identity bindings are identities.
class FunctionalModel {
 public:
  explicit FunctionalModel(World world) : world_(std::move(world)) {}

  const World& world() const { return world_; }
  const EntitySpace& space() const { return world_.space; }

  Predicate predicate(const std::string& name) const;
  ProjectorOnA projector(const std::string& name) const;
  EntityVector vector(const std::string& name) const;
  BinaryPredicate relation(const std::string& name) const;

 private:
  World world_;
};

/// Evaluates a normal graph I -> b by composing the bound maps along each
/// wire. Throws UnboundWord, DimensionMismatch, or std::invalid_argument
/// for graphs that are not closed.
Value eval_functional(const FunctionalModel& m, const pregroup::MeaningGraph& g);

}  // namespace pgsem::funcmodel
