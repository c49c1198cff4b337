#pragma once

// The bridge J_C from the functional model to concept vectors: partitions
// of the entity set, block weights and the density operator D_μ,
// conditional-probability coordinates, the concept space generated by
// primitive attributes, and the induced vector model M_C = J_C ∘ F.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgsem/conceptlogic.hpp"
#include "pgsem/funcmodel.hpp"
#include "pgsem/pregroup/lexicon.hpp"
#include "pgsem/pregroup/meaning.hpp"
#include "pgsem/vecmodel.hpp"

namespace pgsem::interp {

using funcmodel::Predicate;
using vecmodel::ConceptVector;

class PartitionError : public std::invalid_argument {
 public:
  PartitionError(const std::string& what, std::vector<std::size_t> gaps, std::vector<std::size_t> overlaps)
      : std::invalid_argument(what), gaps_(std::move(gaps)), overlaps_(std::move(overlaps)) {}
  /// Entities in no block, and entities in more than one.
  const std::vector<std::size_t>& gaps() const { return gaps_; }
  const std::vector<std::size_t>& overlaps() const { return overlaps_; }

 private:
  std::vector<std::size_t> gaps_;
  std::vector<std::size_t> overlaps_;
};

class EmptyBlock : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PartitionScheme {
 public:
  PartitionScheme() = default;

  /// Blocks must be disjoint and cover 0..n-1. Empty blocks are refused
  /// unless allow_empty is set (diagnostic schemes only).
  static PartitionScheme from_blocks(std::size_t n, std::vector<std::vector<std::size_t>> blocks,
                                     std::vector<std::string> labels = {}, bool allow_empty = false);
  /// C_j = { a : q_j(a) = ⊤ }. Throws PartitionError naming the
  /// entities with zero or several true predicates.
  static PartitionScheme build(const std::vector<Predicate>& preds, std::vector<std::string> labels = {});
  static PartitionScheme singletons(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t k() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size(std::size_t j) const { return blocks_.at(j).size(); }
  std::vector<std::size_t> sizes() const;
  /// μ_j = m_j / n.
  RationalVector weights() const;
  /// D_μ.
  conceptlogic::DiagOp density() const;
  std::size_t block_of(std::size_t entity) const { return owner_.at(entity); }
  bool has_empty_block() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> owner_;
};

/// α_j = |support ∩ C_j| / m_j, 0 for an empty block.
ConceptVector interpret(const std::vector<bool>& support, const PartitionScheme& scheme);
/// J_C(p) for a predicate on A; throws std::invalid_argument otherwise.
ConceptVector interpret(const Predicate& p, const PartitionScheme& scheme);
/// J_C of a Boolean entity vector; throws for non 0/1 coordinates.
ConceptVector interpret(const funcmodel::EntityVector& x, const PartitionScheme& scheme);
/// J over the product partition {C_j × C_l}, coordinates in Kronecker order.
ConceptVector interpret(const funcmodel::BinaryPredicate& r, const PartitionScheme& scheme);

/// Σ_j α_j μ_j.
Rational state_probability(const PartitionScheme& scheme, const ConceptVector& v);

bool constant_on(const Predicate& p, const std::vector<std::size_t>& block);

/// Blocks on which neither p nor q is constant.
std::vector<std::size_t> lemma1_failing_blocks(const Predicate& p, const Predicate& q, const PartitionScheme& scheme);

/// True iff p or q is constant on every block. When it is, the three
/// connective equalities are checked and a violation throws
/// std::logic_error. Throws EmptyBlock.
bool lemma1_check(const Predicate& p, const Predicate& q, const PartitionScheme& scheme);

/// J_C(not ∘ p) = ¬J_C(p); defined for schemes with empty blocks too.
bool preserves_negation(const Predicate& p, const PartitionScheme& scheme);

struct Theorem1Report {
  bool negation = false;
  bool reflection_premise = false;  // J(p) -> J(q) = 1⃗
  bool reflection = true;           // premise implies ifthen∘⟨p,q⟩ = true
  bool connective_premise = false;  // one J is an algebraic consequence of the other
  bool connectives = true;          // premise implies the four equalities

  bool passed() const { return negation && reflection && connectives; }
};

/// Throws EmptyBlock, or std::invalid_argument for predicates not on A.
Theorem1Report theorem1_suite(const Predicate& p, const Predicate& q, const PartitionScheme& scheme);

struct ConceptSpaceGen {
  std::vector<std::string> primitives;
  /// All 2^d sign patterns, "present" before "absent" in each position.
  std::vector<std::vector<bool>> patterns;
  std::vector<std::vector<std::size_t>> blocks;
  /// Indices of the nonempty blocks, in pattern order.
  std::vector<std::size_t> retained;

  std::string pattern_text(std::size_t i) const;
  /// The partition over the retained blocks, labelled c1, c2, ...
  PartitionScheme working() const;
  /// All 2^d blocks, empty ones included.
  PartitionScheme full() const;
};

/// Throws std::invalid_argument when a primitive is not on A.
ConceptSpaceGen generate_concept_space(std::size_t n, const std::vector<Predicate>& primitives,
                                       const std::vector<std::string>& names);

/// The concept space of the world's declared primitives.
ConceptSpaceGen concept_space_of(const World& w);

/// M_C, with the `not` word kept aside. It acts by ¬ on the ⊙-product
/// instead of as a vector.
struct InducedModel {
  vecmodel::VectorModel model;
  PartitionScheme scheme;
  std::set<std::pair<std::string, std::string>> negations;

  bool is_negation(const pregroup::LexiconEntry& e) const;
};

/// M_C(word:T) = J_C(F(word:T)). Identity bindings and `and` give 1⃗,
/// `not` becomes a negation word, other connectives are refused. Nouns
/// whose type has a subject or object role are embedded in V⊗V.
InducedModel build_MC(const funcmodel::FunctionalModel& f, const pregroup::Lexicon& lexicon,
                      const PartitionScheme& scheme);

struct MCResult {
  ConceptVector value;
  std::vector<std::string> trace;
};

/// ⊙ of the word vectors, then ¬ once per negation word.
MCResult eval_MC(const InducedModel& mc, const std::vector<const pregroup::LexiconEntry*>& words);

enum class Verdict { Equal, ExplainedDivergence, Error };
std::string_view to_string(Verdict v);

struct Comparison {
  Verdict verdict = Verdict::Error;
  bool sentence = false;
  MCResult product;
  /// Noun phrases: J_C(F(...)) and the coordinates where it differs.
  ConceptVector j_of_f;
  std::vector<std::size_t> differing;
  /// Sentences: the truth class of F and the class read off the product
  /// (1⃗ true, 0⃗ false, anything else mixed).
  funcmodel::TruthClass f_class = funcmodel::TruthClass::Mute;
  funcmodel::TruthClass m_class = funcmodel::TruthClass::Mute;
  /// Blocks on which two or more property words are non-constant.
  std::vector<std::size_t> failing_blocks;
  std::string note;
};

funcmodel::TruthClass class_of_concept(const ConceptVector& v);

Comparison compare_models(const funcmodel::FunctionalModel& f, const InducedModel& mc,
                          const std::vector<const pregroup::LexiconEntry*>& words, const funcmodel::Value& fvalue);

}  // namespace pgsem::interp
