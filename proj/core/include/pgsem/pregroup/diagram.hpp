#pragma once

// String diagrams of the free compact closed category over a poset, kept as
// graphs: boundary ports, boxes for lexical morphisms, and wires labelled by
// the chain of basic morphisms met along the way. Composition glues two
// diagrams along the shared boundary and traces wires through it, which is
// exactly the yanking rewrite; normalization then folds nullary and unary
// boxes into wire labels, leaving a graph in which every path has length 1.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "pgsem/pregroup/lexicon.hpp"
#include "pgsem/pregroup/reduction.hpp"
#include "pgsem/pregroup/types.hpp"

namespace pgsem::pregroup {

struct Label {
  enum class Kind { Word, Inclusion };

  Kind kind = Kind::Word;
  std::string name;
  Binding binding;        // Word labels
  BasicType from, to;     // Inclusion labels, in_{from,to}

  static Label word(std::string name, Binding b) { return Label{Kind::Word, std::move(name), std::move(b), {}, {}}; }
  static Label inclusion(BasicType a, BasicType b) { return Label{Kind::Inclusion, {}, {}, std::move(a), std::move(b)}; }

  std::string text() const;

  friend bool operator==(const Label&, const Label&) = default;
};

/// Labels in the order they are applied. Adjacent inclusions compose and
/// in_{a,a} disappears.
using LabelChain = std::vector<Label>;
LabelChain simplify(LabelChain chain);
/// "not ∘ are ∘ blue", last-applied first.
std::string chain_text(const LabelChain& chain);

enum class PortKind { Top, Bottom, BoxIn, BoxOut, Unit };

struct Port {
  PortKind kind = PortKind::Unit;
  std::size_t index = 0;  // boundary position or box id
  std::size_t slot = 0;   // input slot of a BoxIn port

  friend bool operator==(const Port&, const Port&) = default;
  friend auto operator<=>(const Port&, const Port&) = default;
};

struct Wire {
  Port source;
  Port sink;
  LabelChain labels;

  friend bool operator==(const Wire&, const Wire&) = default;
};

struct Box {
  Label label;
  std::vector<BasicType> inputs;
  BasicType output;

  std::size_t arity() const { return inputs.size(); }
  friend bool operator==(const Box&, const Box&) = default;
};

/// A morphism top -> bottom. On the top boundary even factors emit a wire
/// and odd factors absorb one; on the bottom boundary it is the reverse.
class Diagram {
 public:
  Type top;
  Type bottom;
  std::vector<Box> boxes;
  std::vector<Wire> wires;
  std::vector<LabelChain> loops;

  static Diagram identity(const Type& t);
  /// s t -> I for a contractible pair.
  static Diagram counit(const SimpleType& s, const SimpleType& t, const Poset& poset);
  /// I -> s t, where s.z = t.z + 1 and the odd factor's base is below the
  /// even factor's base.
  static Diagram unit(const SimpleType& s, const SimpleType& t, const Poset& poset);
  /// The name I -> T of a lexical morphism.
  static Diagram name(const LexicalMorphism& m, const Type& t, const Binding& binding);
  /// The reduction T -> target as cups plus one through-wire.
  static Diagram reduction(const Type& flat, const Reduction& r);

  /// Folds nullary and unary boxes into wire labels and puts wires and
  /// loops in canonical order.
  Diagram normalized() const;
  bool is_normal() const;

  std::string to_string() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram tensor(const Diagram& a, const Diagram& b);
/// g ∘ f; requires f.bottom == g.top.
Diagram compose(const Diagram& g, const Diagram& f);

std::string to_string(const Port& p);

using MeaningGraph = Diagram;

/// r ∘ (name_1 ⊗ ... ⊗ name_n), normalized. Throws std::invalid_argument
/// for boxes of arity above 2 or a reduction that does not fit the types.
MeaningGraph meaning_expression(const std::vector<const LexiconEntry*>& words, const Lexicon& lexicon,
                                const Reduction& r, const Poset& poset);

}  // namespace pgsem::pregroup
