#pragma once

// The one-object compact closed category V_⊙ whose composition and tensor
// are both the pointwise product, vector models over it, the Fact 1
// construction on A⊗A⊗A, and the tensor embeddings for transitive verbs.

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgsem/linalg.hpp"
#include "pgsem/pregroup/reduction.hpp"
#include "pgsem/pregroup/types.hpp"
#include "pgsem/rational.hpp"

namespace pgsem::vecmodel {

using ConceptVector = RationalVector;

/// Coordinatewise product. Throws std::invalid_argument on length mismatch.
ConceptVector pointwise(const ConceptVector& u, const ConceptVector& v);
/// The unit 1⃗ of ⊙.
ConceptVector ones(std::size_t dim);
ConceptVector zeros(std::size_t dim);
/// u_1 ⊙ ... ⊙ u_k, 1⃗ for k = 0.
ConceptVector product(const std::vector<ConceptVector>& us, std::size_t dim);

class UnboundEntry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// M: (word, type) -> concept vector. The type is part of the key because
/// the reduction selects which entry of a word is used.
class VectorModel {
 public:
  VectorModel() = default;
  explicit VectorModel(std::vector<std::string> basis) : basis_(std::move(basis)) {}
  explicit VectorModel(std::size_t dim);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }

  void bind(const std::string& word, const pregroup::Type& type, ConceptVector v);
  bool contains(const std::string& word, const pregroup::Type& type) const;
  /// Throws UnboundEntry.
  const ConceptVector& at(const std::string& word, const pregroup::Type& type) const;
  const std::map<std::pair<std::string, std::string>, ConceptVector>& entries() const { return m_; }

  /// {"basis": ["c1", ...], "entries": [{"word", "type", "vector": ["1/5", ...]}]}
  static VectorModel parse_json(std::string_view text, const pregroup::Poset& poset);

 private:
  std::vector<std::string> basis_;
  std::map<std::pair<std::string, std::string>, ConceptVector> m_;
};

/// M(w_1:T_1) ⊙ ... ⊙ M(w_n:T_n). The reduction only has to fit the
/// types; its own image is 1⃗.
ConceptVector eval_vector_model(const VectorModel& m, const std::vector<std::pair<std::string, pregroup::Type>>& words,
                                const pregroup::Reduction& r, const pregroup::Poset& poset);

struct LawCheck {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first counterexample
};

/// Monoid, bifunctor and compact-closure laws of V_⊙ on the sample.
std::vector<LawCheck> vmodel_category_laws(const std::vector<ConceptVector>& sample);

struct Fact1Witness {
  std::size_t dim = 0;
  linalg::Matrix f;  // (1⊗η)∘(ε⊗1) on A⊗A⊗A
  RationalVector witness;  // a1⊗a2⊗a1
  RationalVector image;
  std::vector<RationalVector> kernel;
};

/// Throws std::invalid_argument for dim < 2.
Fact1Witness fact1_demo(std::size_t dim);

/// Basis vector a_{i}⊗a_{j}⊗... in the Kronecker order.
RationalVector basis_tensor(std::size_t dim, const std::vector<std::size_t>& indices);

/// v⊗1⃗ and 1⃗⊗w on V⊗V, left factor slow.
ConceptVector embed_subject(const ConceptVector& v);
ConceptVector embed_object(const ConceptVector& w);

}  // namespace pgsem::vecmodel
