#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgsem/pregroup/types.hpp"

namespace pgsem::pregroup {

enum class BindingKind { Predicate, Relation, Projector, Vector, Logical, Identity };

std::string_view to_string(BindingKind k);
BindingKind parse_binding_kind(std::string_view s);

struct Binding {
  BindingKind kind = BindingKind::Identity;
  std::string name;

  friend bool operator==(const Binding&, const Binding&) = default;
};

struct LexiconEntry {
  std::string word;
  Type type;
  Binding binding;
  /// Position of the output factor when the type has several even
  /// factors; empty when the even factor is unique.
  std::optional<std::size_t> head;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

/// The basic morphism created by a lexicon entry, together with the
/// wiring of its name I -> T: head inputs are linked to the head factor
/// through the box, every other even factor is fed by exactly one odd
/// factor through an identity or an inclusion in_{ab}.
struct LexicalMorphism {
  std::vector<BasicType> inputs;
  BasicType output;
  std::string label;

  std::size_t head = 0;
  std::vector<std::size_t> input_positions;
  std::vector<std::pair<std::size_t, std::size_t>> overlinks;  // (odd source, even sink)

  std::size_t arity() const { return inputs.size(); }
};

/// Throws std::invalid_argument when the type has no even factor, several
/// even factors and no head, or when the head wiring is not unique.
LexicalMorphism lexical_morphism(const LexiconEntry& entry, const Poset& poset);

/// Arity the binding kind demands of the lexical morphism, checked at load
/// time. Logical bindings: not = 1, and/or/ifthen = 2.
std::size_t binding_arity(const Binding& b);

class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(std::vector<LexiconEntry> entries, const Poset& poset);

  /// Tab- or whitespace-separated lines: word, type, kind, name, and an
  /// optional 1-based head position. The type column uses tabs when it
  /// contains spaces; `#` comments and blank lines are skipped.
  static Lexicon parse_tsv(std::string_view text, const Poset& poset);
  /// Array of {"word","type","kind","name"[, "head"]} objects.
  static Lexicon parse_json(std::string_view text, const Poset& poset);
  /// Chooses the format from the extension (.json, otherwise TSV).
  static Lexicon load(const std::string& path, const Poset& poset);

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::vector<const LexiconEntry*> lookup(std::string_view word) const;
  const LexicalMorphism& morphism(const LexiconEntry& e) const;

 private:
  std::vector<LexiconEntry> entries_;
  std::vector<LexicalMorphism> morphisms_;
};

}  // namespace pgsem::pregroup
