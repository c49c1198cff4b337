#include "pgsem/interp.hpp"

#include <algorithm>
#include <limits>

namespace pgsem::interp {

using funcmodel::TruthClass;
using funcmodel::TruthValue;
using pregroup::BindingKind;

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto i : v) s += (s.empty() ? "" : ", ") + std::string("a") + std::to_string(i + 1);
  return s;
}

}  // namespace

PartitionScheme PartitionScheme::from_blocks(std::size_t n, std::vector<std::vector<std::size_t>> blocks,
                                             std::vector<std::string> labels, bool allow_empty) {
  PartitionScheme s;
  s.n_ = n;
  s.owner_.assign(n, kNone);
  std::vector<std::size_t> overlaps;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].empty() && !allow_empty) throw EmptyBlock("block " + std::to_string(j + 1) + " is empty");
    for (auto a : blocks[j]) {
      if (a >= n) throw std::invalid_argument("block member out of range");
      if (s.owner_[a] != kNone) overlaps.push_back(a);
      s.owner_[a] = j;
    }
  }
  std::vector<std::size_t> gaps;
  for (std::size_t a = 0; a < n; ++a)
    if (s.owner_[a] == kNone) gaps.push_back(a);
  if (!gaps.empty() || !overlaps.empty()) {
    std::string msg = "blocks do not partition the entities";
    if (!gaps.empty()) msg += "; uncovered: " + join_indices(gaps);
    if (!overlaps.empty()) msg += "; in several blocks: " + join_indices(overlaps);
    throw PartitionError(msg, std::move(gaps), std::move(overlaps));
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  s.blocks_ = std::move(blocks);
  if (labels.empty())
    for (std::size_t j = 0; j < s.blocks_.size(); ++j) labels.push_back("c" + std::to_string(j + 1));
  if (labels.size() != s.blocks_.size()) throw std::invalid_argument("one label per block is required");
  s.labels_ = std::move(labels);
  return s;
}

PartitionScheme PartitionScheme::build(const std::vector<Predicate>& preds, std::vector<std::string> labels) {
  if (preds.empty()) throw std::invalid_argument("a partition needs at least one predicate");
  const std::size_t n = preds.front().size();
  std::vector<std::vector<std::size_t>> blocks(preds.size());
  for (std::size_t j = 0; j < preds.size(); ++j) {
    if (preds[j].size() != n) throw funcmodel::DimensionMismatch("partitioning predicates differ in dimension");
    for (std::size_t a = 0; a < n; ++a)
      if (preds[j](a) == TruthValue::Top) blocks[j].push_back(a);
  }
  return from_blocks(n, std::move(blocks), std::move(labels), true);
}

PartitionScheme PartitionScheme::singletons(std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t a = 0; a < n; ++a) blocks.push_back({a});
  return from_blocks(n, std::move(blocks));
}

std::vector<std::size_t> PartitionScheme::sizes() const {
  std::vector<std::size_t> m;
  for (const auto& b : blocks_) m.push_back(b.size());
  return m;
}

RationalVector PartitionScheme::weights() const {
  RationalVector mu;
  for (const auto& b : blocks_) mu.push_back(Rational(static_cast<long>(b.size()), static_cast<long>(n_)));
  for (auto& x : mu) x.canonicalize();
  return mu;
}

conceptlogic::DiagOp PartitionScheme::density() const { return conceptlogic::DiagOp(weights()); }

bool PartitionScheme::has_empty_block() const {
  return std::any_of(blocks_.begin(), blocks_.end(), [](const auto& b) { return b.empty(); });
}

ConceptVector interpret(const std::vector<bool>& support, const PartitionScheme& scheme) {
  if (support.size() != scheme.n()) throw funcmodel::DimensionMismatch("support and partition differ in size");
  ConceptVector v;
  for (const auto& b : scheme.blocks()) {
    if (b.empty()) {
      v.emplace_back(0);
      continue;
    }
    long count = 0;
    for (auto a : b) count += support[a] ? 1 : 0;
    Rational alpha(count, static_cast<long>(b.size()));
    alpha.canonicalize();
    v.push_back(alpha);
  }
  return v;
}

ConceptVector interpret(const Predicate& p, const PartitionScheme& scheme) {
  if (!p.on_A()) throw std::invalid_argument("J_C needs a predicate on A");
  return interpret(p.support(), scheme);
}

ConceptVector interpret(const funcmodel::EntityVector& x, const PartitionScheme& scheme) {
  std::vector<bool> support;
  for (const auto& c : x) {
    if (!is_zero_or_one(c)) throw std::invalid_argument("J_C of a vector needs a Boolean vector");
    support.push_back(c == 1);
  }
  return interpret(support, scheme);
}

ConceptVector interpret(const funcmodel::BinaryPredicate& r, const PartitionScheme& scheme) {
  if (r.size() != scheme.n()) throw funcmodel::DimensionMismatch("relation and partition differ in size");
  ConceptVector v;
  for (const auto& bj : scheme.blocks()) {
    for (const auto& bl : scheme.blocks()) {
      if (bj.empty() || bl.empty()) {
        v.emplace_back(0);
        continue;
      }
      long count = 0;
      for (auto x : bj)
        for (auto y : bl) count += r(x, y) == TruthValue::Top ? 1 : 0;
      Rational alpha(count, static_cast<long>(bj.size() * bl.size()));
      alpha.canonicalize();
      v.push_back(alpha);
    }
  }
  return v;
}

Rational state_probability(const PartitionScheme& scheme, const ConceptVector& v) {
  if (v.size() != scheme.k()) throw funcmodel::DimensionMismatch("vector and partition differ in size");
  const auto mu = scheme.weights();
  Rational s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) s += v[j] * mu[j];
  return s;
}

bool constant_on(const Predicate& p, const std::vector<std::size_t>& block) {
  for (auto a : block)
    if (p(a) != p(block.front())) return false;
  return true;
}

std::vector<std::size_t> lemma1_failing_blocks(const Predicate& p, const Predicate& q, const PartitionScheme& scheme) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < scheme.k(); ++j)
    if (!constant_on(p, scheme.blocks()[j]) && !constant_on(q, scheme.blocks()[j])) out.push_back(j);
  return out;
}

namespace {

void require_nonempty(const PartitionScheme& scheme) {
  if (scheme.has_empty_block()) throw EmptyBlock("the partition has an empty block");
}

}  // namespace

bool lemma1_check(const Predicate& p, const Predicate& q, const PartitionScheme& scheme) {
  require_nonempty(scheme);
  if (!lemma1_failing_blocks(p, q, scheme).empty()) return false;
  using funcmodel::Connective;
  const auto jp = interpret(p, scheme);
  const auto jq = interpret(q, scheme);
  if (interpret(combine(Connective::And, p, q), scheme) != conceptlogic::alg_and(jp, jq) ||
      interpret(combine(Connective::Or, p, q), scheme) != conceptlogic::alg_or(jp, jq) ||
      interpret(combine(Connective::IfThen, p, q), scheme) != conceptlogic::alg_imp(jp, jq))
    throw std::logic_error("J_C fails to preserve a connective although p or q is constant on every block");
  return true;
}

bool preserves_negation(const Predicate& p, const PartitionScheme& scheme) {
  return interpret(funcmodel::negate(p), scheme) == conceptlogic::alg_neg(interpret(p, scheme));
}

Theorem1Report theorem1_suite(const Predicate& p, const Predicate& q, const PartitionScheme& scheme) {
  require_nonempty(scheme);
  using funcmodel::Connective;
  Theorem1Report r;
  const auto jp = interpret(p, scheme);
  const auto jq = interpret(q, scheme);
  r.negation = preserves_negation(p, scheme);
  r.reflection_premise = conceptlogic::alg_imp(jp, jq) == vecmodel::ones(scheme.k());
  if (r.reflection_premise) r.reflection = funcmodel::logical_consequence(p, q);
  const conceptlogic::DiagOp dp(jp), dq(jq);
  r.connective_premise = conceptlogic::algebraic_consequence(dp, dq) || conceptlogic::algebraic_consequence(dq, dp);
  if (r.connective_premise)
    r.connectives = conceptlogic::alg_and(jp, jq) == interpret(combine(Connective::And, p, q), scheme) &&
                    conceptlogic::alg_or(jp, jq) == interpret(combine(Connective::Or, p, q), scheme) &&
                    conceptlogic::alg_imp(jp, jq) == interpret(combine(Connective::IfThen, p, q), scheme) &&
                    conceptlogic::alg_imp(jq, jp) == interpret(combine(Connective::IfThen, q, p), scheme);
  return r;
}

std::string ConceptSpaceGen::pattern_text(std::size_t i) const {
  std::string s;
  for (std::size_t b = 0; b < primitives.size(); ++b) {
    if (b) s += ' ';
    s += (patterns.at(i)[b] ? "" : "¬") + primitives[b];
  }
  return s;
}

PartitionScheme ConceptSpaceGen::working() const {
  std::vector<std::vector<std::size_t>> kept;
  for (auto i : retained) kept.push_back(blocks[i]);
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return PartitionScheme::from_blocks(n, std::move(kept));
}

PartitionScheme ConceptSpaceGen::full() const {
  std::vector<std::string> labels;
  std::size_t n = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    labels.push_back(pattern_text(i));
    n += blocks[i].size();
  }
  return PartitionScheme::from_blocks(n, blocks, std::move(labels), true);
}

ConceptSpaceGen generate_concept_space(std::size_t n, const std::vector<Predicate>& primitives,
                                       const std::vector<std::string>& names) {
  if (primitives.empty()) throw std::invalid_argument("the concept space needs at least one primitive");
  if (names.size() != primitives.size()) throw std::invalid_argument("one name per primitive is required");
  const std::size_t d = primitives.size();
  if (d >= 8 * sizeof(std::size_t) - 1) throw std::invalid_argument("too many primitives");
  for (std::size_t i = 0; i < d; ++i) {
    if (primitives[i].size() != n) throw funcmodel::DimensionMismatch("primitive '" + names[i] + "' has wrong size");
    if (!primitives[i].on_A()) throw std::invalid_argument("primitive '" + names[i] + "' is not a predicate on A");
  }
  ConceptSpaceGen g;
  g.primitives = names;
  const std::size_t count = std::size_t{1} << d;
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<bool> pattern(d);
    for (std::size_t i = 0; i < d; ++i) pattern[i] = ((t >> (d - 1 - i)) & 1U) == 0;
    g.patterns.push_back(std::move(pattern));
  }
  g.blocks.assign(count, {});
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t t = 0;
    for (std::size_t i = 0; i < d; ++i) t = (t << 1) | (primitives[i](a) == TruthValue::Top ? 0U : 1U);
    g.blocks[t].push_back(a);
  }
  for (std::size_t t = 0; t < count; ++t)
    if (!g.blocks[t].empty()) g.retained.push_back(t);
  return g;
}

ConceptSpaceGen concept_space_of(const World& w) {
  if (w.primitives.empty()) throw std::invalid_argument("the world declares no primitives");
  std::vector<Predicate> prims;
  for (const auto& name : w.primitives) prims.push_back(Predicate::from_indicator(w.attribute(name)));
  return generate_concept_space(w.space.size(), prims, w.primitives);
}

bool InducedModel::is_negation(const pregroup::LexiconEntry& e) const {
  return negations.contains({e.word, pregroup::to_string(e.type)});
}

InducedModel build_MC(const funcmodel::FunctionalModel& f, const pregroup::Lexicon& lexicon,
                      const PartitionScheme& scheme) {
  const auto& entries = lexicon.entries();
  const bool tensor = std::any_of(entries.begin(), entries.end(),
                                  [](const auto& e) { return e.binding.kind == BindingKind::Relation; });
  std::vector<std::string> basis = scheme.labels();
  if (tensor) {
    std::vector<std::string> pairs;
    for (const auto& a : basis)
      for (const auto& b : basis) pairs.push_back(a + "⊗" + b);
    basis = std::move(pairs);
  }
  InducedModel mc{vecmodel::VectorModel(std::move(basis)), scheme, {}};
  const auto& roles = f.world().roles;
  for (const auto& e : entries) {
    const auto& b = e.binding;
    const std::string where = "'" + e.word + ": " + pregroup::to_string(e.type) + "'";
    ConceptVector v;
    switch (b.kind) {
      case BindingKind::Vector: {
        v = interpret(f.vector(b.name), scheme);
        if (tensor) {
          auto role = roles.find(lexicon.morphism(e).output);
          if (role == roles.end()) throw std::invalid_argument(where + " has no subject or object role");
          v = role->second == TensorRole::Subject ? vecmodel::embed_subject(v) : vecmodel::embed_object(v);
        }
        break;
      }
      case BindingKind::Predicate:
      case BindingKind::Projector:
        if (tensor) throw std::invalid_argument(where + ": unary property words are not supported next to relations");
        v = interpret(f.world().attribute(b.name), scheme);
        break;
      case BindingKind::Relation:
        v = interpret(f.relation(b.name), scheme);
        break;
      case BindingKind::Identity:
        v = vecmodel::ones(mc.model.dim());
        break;
      case BindingKind::Logical:
        if (b.name == "not") {
          mc.negations.insert({e.word, pregroup::to_string(e.type)});
          continue;
        }
        if (b.name != "and")
          throw std::invalid_argument(where + ": the connective '" + b.name + "' has no concept-vector image");
        v = vecmodel::ones(mc.model.dim());
        break;
    }
    mc.model.bind(e.word, e.type, std::move(v));
  }
  return mc;
}

MCResult eval_MC(const InducedModel& mc, const std::vector<const pregroup::LexiconEntry*>& words) {
  MCResult r;
  std::vector<ConceptVector> vs;
  std::vector<std::string> negs;
  std::string factors;
  for (const auto* w : words) {
    if (mc.is_negation(*w)) {
      negs.push_back(w->word);
      continue;
    }
    vs.push_back(mc.model.at(w->word, w->type));
    factors += (factors.empty() ? "" : " ⊙ ") + std::string("M(") + w->word + ")";
  }
  r.value = vecmodel::product(vs, mc.model.dim());
  r.trace.push_back(factors.empty() ? "1⃗" : factors);
  for (const auto& n : negs) {
    r.value = conceptlogic::alg_neg(r.value);
    r.trace.push_back("¬ for '" + n + "'");
  }
  return r;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::ExplainedDivergence: return "explained-divergence";
    case Verdict::Error: return "error";
  }
  return "?";
}

TruthClass class_of_concept(const ConceptVector& v) {
  if (v == vecmodel::ones(v.size())) return TruthClass::True;
  if (v == vecmodel::zeros(v.size())) return TruthClass::False;
  return TruthClass::Mixed;
}

Comparison compare_models(const funcmodel::FunctionalModel& f, const InducedModel& mc,
                          const std::vector<const pregroup::LexiconEntry*>& words, const funcmodel::Value& fvalue) {
  Comparison c;
  c.product = eval_MC(mc, words);
  const auto& scheme = mc.scheme;

  if (c.product.value.size() == scheme.k()) {
    std::vector<Predicate> props;
    for (const auto* w : words) {
      const auto k = w->binding.kind;
      if (k == BindingKind::Vector || k == BindingKind::Predicate || k == BindingKind::Projector)
        props.push_back(Predicate::from_indicator(f.world().attribute(w->binding.name)));
    }
    for (std::size_t j = 0; j < scheme.k(); ++j) {
      std::size_t varying = 0;
      for (const auto& p : props) varying += constant_on(p, scheme.blocks()[j]) ? 0 : 1;
      if (varying >= 2) c.failing_blocks.push_back(j);
    }
  }

  if (const auto* s = std::get_if<funcmodel::SVector>(&fvalue)) {
    c.sentence = true;
    c.f_class = funcmodel::truth_class(*s).tag;
    c.m_class = class_of_concept(c.product.value);
    if (c.f_class == c.m_class) c.verdict = Verdict::Equal;
    else if (!c.failing_blocks.empty()) c.verdict = Verdict::ExplainedDivergence;
    else c.note = "truth classes differ with no block where two properties vary to account for it";
    return c;
  }

  const auto& x = std::get<funcmodel::EntityVector>(fvalue);
  if (c.product.value.size() != scheme.k()) {
    c.note = "noun phrase in a tensor model";
    return c;
  }
  try {
    c.j_of_f = interpret(x, scheme);
  } catch (const std::invalid_argument& e) {
    c.note = e.what();
    return c;
  }
  for (std::size_t j = 0; j < scheme.k(); ++j)
    if (c.j_of_f[j] != c.product.value[j]) c.differing.push_back(j);
  if (c.differing.empty()) {
    c.verdict = Verdict::Equal;
  } else if (std::all_of(c.differing.begin(), c.differing.end(), [&](std::size_t j) {
               return std::find(c.failing_blocks.begin(), c.failing_blocks.end(), j) != c.failing_blocks.end();
             })) {
    c.verdict = Verdict::ExplainedDivergence;
  } else {
    c.note = "J_C(F) and the product differ outside the blocks where two properties vary";
  }
  return c;
}

}  // namespace pgsem::interp
