#include "pgsem/funcmodel.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace pgsem::funcmodel {

using pregroup::BindingKind;
using pregroup::Label;
using pregroup::PortKind;

SVector operator+(const SVector& a, const SVector& b) { return {a.top + b.top, a.bot + b.bot}; }
SVector operator*(const Rational& k, const SVector& v) { return {k * v.top, k * v.bot}; }

SVector to_svector(TruthValue v) {
  switch (v) {
    case TruthValue::Top: return SVector::T();
    case TruthValue::Bot: return SVector::F();
    case TruthValue::Zero: break;
  }
  return {};
}

SPair tensor(const SVector& u, const SVector& v) {
  return {u.top * v.top, u.top * v.bot, u.bot * v.top, u.bot * v.bot};
}

std::string_view to_string(TruthClass c) {
  switch (c) {
    case TruthClass::True: return "true";
    case TruthClass::False: return "false";
    case TruthClass::Mixed: return "mixed";
    case TruthClass::Mute: return "mute";
  }
  return "?";
}

std::string to_string(const SVector& v) {
  return pgsem::to_string(v.top) + "·⊤ + " + pgsem::to_string(v.bot) + "·⊥";
}

Predicate Predicate::from_indicator(const std::vector<bool>& members) {
  std::vector<TruthValue> v;
  v.reserve(members.size());
  for (bool m : members) v.push_back(m ? TruthValue::Top : TruthValue::Bot);
  return Predicate(std::move(v));
}

bool Predicate::on_A() const {
  return std::none_of(values_.begin(), values_.end(), [](TruthValue v) { return v == TruthValue::Zero; });
}

std::vector<bool> Predicate::support() const {
  std::vector<bool> s;
  s.reserve(values_.size());
  for (auto v : values_) s.push_back(v == TruthValue::Top);
  return s;
}

EntityVector ProjectorOnA::apply(const EntityVector& x) const {
  if (x.size() != kept.size()) throw DimensionMismatch("projector and vector have different dimensions");
  EntityVector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = kept[i] ? x[i] : Rational(0);
  return y;
}

BinaryPredicate::BinaryPredicate(std::size_t n, std::vector<TruthValue> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != n * n) throw DimensionMismatch("binary predicate needs n*n values");
}

BinaryPredicate BinaryPredicate::from_pairs(std::size_t n,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<TruthValue> v(n * n, TruthValue::Bot);
  for (const auto& [i, j] : pairs) v.at(i * n + j) = TruthValue::Top;
  return BinaryPredicate(n, std::move(v));
}

std::vector<bool> BinaryPredicate::support() const {
  std::vector<bool> s;
  for (auto v : values_) s.push_back(v == TruthValue::Top);
  return s;
}

EntityVector indicator(const std::vector<bool>& members) {
  EntityVector x;
  x.reserve(members.size());
  for (bool m : members) x.emplace_back(m ? 1 : 0);
  return x;
}

SVector apply_predicate(const Predicate& p, const EntityVector& x) {
  if (p.size() != x.size()) throw DimensionMismatch("predicate and vector have different dimensions");
  SVector out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (p(i) == TruthValue::Top) out.top += x[i];
    else if (p(i) == TruthValue::Bot) out.bot += x[i];
  }
  return out;
}

SVector apply_relation(const BinaryPredicate& r, const EntityVector& x, const EntityVector& y) {
  if (r.size() != x.size() || r.size() != y.size())
    throw DimensionMismatch("relation and vectors have different dimensions");
  SVector out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      const Rational w = x[i] * y[j];
      if (r(i, j) == TruthValue::Top) out.top += w;
      else if (r(i, j) == TruthValue::Bot) out.bot += w;
    }
  }
  return out;
}

TruthState truth_class(const SVector& v) {
  TruthClass c;
  if (v.top != 0 && v.bot != 0) c = TruthClass::Mixed;
  else if (v.top != 0) c = TruthClass::True;
  else if (v.bot != 0) c = TruthClass::False;
  else c = TruthClass::Mute;
  return {c, v};
}

SVector connective_not(const SVector& v) { return {v.bot, v.top}; }
SVector connective_and(const SPair& z) { return {z.tt, z.tb + z.bt + z.bb}; }
SVector connective_or(const SPair& z) { return {z.tt + z.tb + z.bt, z.bb}; }
SVector connective_ifthen(const SPair& z) { return {z.tt + z.bt + z.bb, z.tb}; }

std::string_view to_string(Connective c) {
  switch (c) {
    case Connective::Not: return "not";
    case Connective::And: return "and";
    case Connective::Or: return "or";
    case Connective::IfThen: return "ifthen";
  }
  return "?";
}

Connective parse_connective(std::string_view name) {
  for (auto c : {Connective::Not, Connective::And, Connective::Or, Connective::IfThen})
    if (to_string(c) == name) return c;
  throw std::invalid_argument("unknown connective '" + std::string(name) + "'");
}

SVector apply_binary(Connective c, const SPair& z) {
  switch (c) {
    case Connective::And: return connective_and(z);
    case Connective::Or: return connective_or(z);
    case Connective::IfThen: return connective_ifthen(z);
    case Connective::Not: break;
  }
  throw std::invalid_argument("not is unary");
}

std::vector<SPair> pair(const Predicate& p, const Predicate& q) {
  if (p.size() != q.size()) throw DimensionMismatch("paired predicates have different dimensions");
  std::vector<SPair> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(tensor(to_svector(p(i)), to_svector(q(i))));
  return out;
}

namespace {

// Reads a per-entity S-vector back as a predicate value; the connectives
// send basis tensors to basis vectors, so nothing else can occur.
TruthValue as_value(const SVector& v) {
  if (v == SVector::T()) return TruthValue::Top;
  if (v == SVector::F()) return TruthValue::Bot;
  if (v == SVector{}) return TruthValue::Zero;
  throw std::logic_error("connective produced a non-basis value on an entity");
}

}  // namespace

Predicate negate(const Predicate& p) {
  std::vector<TruthValue> v;
  v.reserve(p.size());
  for (auto x : p.values()) v.push_back(as_value(connective_not(to_svector(x))));
  return Predicate(std::move(v));
}

Predicate combine(Connective c, const Predicate& p, const Predicate& q) {
  std::vector<TruthValue> v;
  for (const auto& z : pair(p, q)) v.push_back(as_value(apply_binary(c, z)));
  return Predicate(std::move(v));
}

bool logical_consequence(const Predicate& p, const Predicate& q) {
  if (!p.on_A() || !q.on_A()) throw std::invalid_argument("logical consequence needs predicates on A");
  return combine(Connective::IfThen, p, q) == Predicate::constant(p.size(), TruthValue::Top);
}

FundamentalResult fundamental_check(const Predicate& p, const EntityVector& x) {
  if (!p.on_A()) throw std::invalid_argument("fundamental property needs a predicate on A");
  if (p.size() != x.size()) throw DimensionMismatch("predicate and vector have different dimensions");
  bool nonzero = false;
  for (const auto& c : x) {
    if (c < 0) throw std::invalid_argument("fundamental property needs nonnegative coefficients");
    nonzero = nonzero || c != 0;
  }
  if (!nonzero) throw std::invalid_argument("fundamental property needs X != 0");
  FundamentalResult r;
  r.by_counting = truth_class(apply_predicate(p, x));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    (p(i) == TruthValue::Top ? r.top_witnesses : r.bot_witnesses).push_back(i);
  }
  if (r.bot_witnesses.empty()) r.by_quantifiers = TruthClass::True;
  else if (r.top_witnesses.empty()) r.by_quantifiers = TruthClass::False;
  else r.by_quantifiers = TruthClass::Mixed;
  return r;
}

std::string to_string(const Value& v, const EntitySpace& space) {
  if (const auto* s = std::get_if<SVector>(&v)) return to_string(*s);
  const auto& x = std::get<EntityVector>(v);
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (x[i] != 1) out += pgsem::to_string(x[i]) + "·";
    out += i < space.size() ? space.name(i) : "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

Predicate FunctionalModel::predicate(const std::string& name) const {
  auto it = world_.attributes.find(name);
  if (it == world_.attributes.end()) throw UnboundWord("no attribute '" + name + "' for a predicate binding");
  return Predicate::from_indicator(it->second);
}

ProjectorOnA FunctionalModel::projector(const std::string& name) const {
  auto it = world_.attributes.find(name);
  if (it == world_.attributes.end()) throw UnboundWord("no attribute '" + name + "' for a projector binding");
  return ProjectorOnA{it->second};
}

EntityVector FunctionalModel::vector(const std::string& name) const {
  auto it = world_.attributes.find(name);
  if (it == world_.attributes.end()) throw UnboundWord("no attribute '" + name + "' for a vector binding");
  return indicator(it->second);
}

BinaryPredicate FunctionalModel::relation(const std::string& name) const {
  auto it = world_.relations.find(name);
  if (it == world_.relations.end()) throw UnboundWord("no relation '" + name + "' for a relation binding");
  return BinaryPredicate::from_pairs(world_.space.size(), it->second);
}

namespace {

class Evaluator {
 public:
  Evaluator(const FunctionalModel& m, const pregroup::MeaningGraph& g) : m_(m), g_(g) {}

  Value wire_into(const pregroup::Port& sink) {
    auto it = std::find_if(g_.wires.begin(), g_.wires.end(), [&](const auto& w) { return w.sink == sink; });
    if (it == g_.wires.end()) throw std::invalid_argument("graph has no wire into " + pregroup::to_string(sink));
    return along(*it);
  }

 private:
  Value along(const pregroup::Wire& w) {
    std::size_t first = 0;
    std::optional<Value> v;
    switch (w.source.kind) {
      case PortKind::Unit:
        if (w.labels.empty() || w.labels.front().kind != Label::Kind::Word ||
            w.labels.front().binding.kind != BindingKind::Vector)
          throw std::invalid_argument("a wire from I must start at a noun vector");
        v = m_.vector(w.labels.front().binding.name);
        first = 1;
        break;
      case PortKind::BoxOut:
        v = box(w.source.index);
        break;
      default:
        throw std::invalid_argument("meaning graph is not closed: wire starts at " + pregroup::to_string(w.source));
    }
    for (std::size_t i = first; i < w.labels.size(); ++i) v = apply(w.labels[i], std::move(*v));
    return std::move(*v);
  }

  Value box(std::size_t id) {
    const auto& b = g_.boxes.at(id);
    Value x = wire_into(pregroup::Port{PortKind::BoxIn, id, 0});
    Value y = wire_into(pregroup::Port{PortKind::BoxIn, id, 1});
    const auto& bind = b.label.binding;
    if (bind.kind == BindingKind::Relation)
      return apply_relation(m_.relation(bind.name), entity(x, b.label), entity(y, b.label));
    if (bind.kind == BindingKind::Logical)
      return apply_binary(parse_connective(bind.name), tensor(truth(x, b.label), truth(y, b.label)));
    throw std::invalid_argument("binary box '" + b.label.text() + "' needs a relation or connective binding");
  }

  Value apply(const Label& l, Value v) {
    if (l.kind == Label::Kind::Inclusion) return v;
    const auto& b = l.binding;
    switch (b.kind) {
      case BindingKind::Identity: return v;
      case BindingKind::Predicate: return apply_predicate(m_.predicate(b.name), entity(v, l));
      case BindingKind::Projector: return m_.projector(b.name).apply(entity(v, l));
      case BindingKind::Logical:
        if (parse_connective(b.name) != Connective::Not)
          throw std::invalid_argument("connective '" + b.name + "' used as a unary map");
        return connective_not(truth(v, l));
      case BindingKind::Vector:
      case BindingKind::Relation: break;
    }
    throw std::invalid_argument("label '" + l.text() + "' cannot be applied inside a chain");
  }

  static const EntityVector& entity(const Value& v, const Label& l) {
    if (const auto* x = std::get_if<EntityVector>(&v)) return *x;
    throw DimensionMismatch("'" + l.text() + "' expects an entity vector, got a truth value");
  }
  static const SVector& truth(const Value& v, const Label& l) {
    if (const auto* x = std::get_if<SVector>(&v)) return *x;
    throw DimensionMismatch("'" + l.text() + "' expects a truth value, got an entity vector");
  }

  const FunctionalModel& m_;
  const pregroup::MeaningGraph& g_;
};

}  // namespace

Value eval_functional(const FunctionalModel& m, const pregroup::MeaningGraph& g) {
  if (!g.top.is_unit() || g.bottom.size() != 1)
    throw std::invalid_argument("evaluation needs a closed meaning I -> b");
  if (!g.loops.empty()) throw std::invalid_argument("meaning graph contains closed loops");
  return Evaluator(m, g).wire_into(pregroup::Port{PortKind::Bottom, 0, 0});
}

}  // namespace pgsem::funcmodel
