#include "pgsem/pregroup/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pgsem::pregroup {

std::string Label::text() const {
  if (kind == Kind::Word) return name;
  return "in_{" + from + "," + to + "}";
}

LabelChain simplify(LabelChain chain) {
  LabelChain out;
  for (auto& l : chain) {
    if (l.kind == Label::Kind::Inclusion && !out.empty() && out.back().kind == Label::Kind::Inclusion &&
        out.back().to == l.from) {
      out.back().to = l.to;
    } else {
      out.push_back(std::move(l));
    }
    if (out.back().kind == Label::Kind::Inclusion && out.back().from == out.back().to) out.pop_back();
  }
  return out;
}

std::string chain_text(const LabelChain& chain) {
  if (chain.empty()) return "1";
  std::string out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    if (!out.empty()) out += " ∘ ";
    out += it->text();
  }
  return out;
}

std::string to_string(const Port& p) {
  switch (p.kind) {
    case PortKind::Top: return "top[" + std::to_string(p.index + 1) + "]";
    case PortKind::Bottom: return "bottom[" + std::to_string(p.index + 1) + "]";
    case PortKind::BoxIn: return "box" + std::to_string(p.index + 1) + ".in" + std::to_string(p.slot + 1);
    case PortKind::BoxOut: return "box" + std::to_string(p.index + 1) + ".out";
    case PortKind::Unit: return "I";
  }
  return "?";
}

namespace {

LabelChain inclusion_chain(const BasicType& a, const BasicType& b) {
  if (a == b) return {};
  return {Label::inclusion(a, b)};
}

LabelChain concat(LabelChain a, const LabelChain& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Port shift(Port p, std::size_t top, std::size_t bottom, std::size_t boxes) {
  switch (p.kind) {
    case PortKind::Top: p.index += top; break;
    case PortKind::Bottom: p.index += bottom; break;
    case PortKind::BoxIn:
    case PortKind::BoxOut: p.index += boxes; break;
    case PortKind::Unit: break;
  }
  return p;
}

bool wire_less(const Wire& a, const Wire& b) {
  if (a.source != b.source) return a.source < b.source;
  if (a.sink != b.sink) return a.sink < b.sink;
  return chain_text(a.labels) < chain_text(b.labels);
}

}  // namespace

Diagram Diagram::identity(const Type& t) {
  Diagram d;
  d.top = t;
  d.bottom = t;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Port top{PortKind::Top, i, 0};
    const Port bottom{PortKind::Bottom, i, 0};
    if (is_even(t.factors[i]))
      d.wires.push_back({top, bottom, {}});
    else
      d.wires.push_back({bottom, top, {}});
  }
  return d;
}

Diagram Diagram::counit(const SimpleType& s, const SimpleType& t, const Poset& poset) {
  if (!contractible(s, t, poset))
    throw std::invalid_argument("no counit " + pregroup::to_string(s) + " " + pregroup::to_string(t) + " -> I");
  Diagram d;
  d.top.factors = {s, t};
  const std::size_t even = is_even(s) ? 0 : 1;
  const std::size_t odd = 1 - even;
  d.wires.push_back({Port{PortKind::Top, even, 0}, Port{PortKind::Top, odd, 0},
                     inclusion_chain(d.top.factors[even].base, d.top.factors[odd].base)});
  return d;
}

Diagram Diagram::unit(const SimpleType& s, const SimpleType& t, const Poset& poset) {
  const std::size_t even = is_even(s) ? 0 : 1;
  const std::size_t odd = 1 - even;
  const SimpleType* f[2] = {&s, &t};
  if (s.z != t.z + 1 || !poset.leq(f[odd]->base, f[even]->base))
    throw std::invalid_argument("no unit I -> " + pregroup::to_string(s) + " " + pregroup::to_string(t));
  Diagram d;
  d.bottom.factors = {s, t};
  d.wires.push_back({Port{PortKind::Bottom, odd, 0}, Port{PortKind::Bottom, even, 0},
                     inclusion_chain(f[odd]->base, f[even]->base)});
  return d;
}

Diagram Diagram::name(const LexicalMorphism& m, const Type& t, const Binding& binding) {
  Diagram d;
  d.bottom = t;
  d.boxes.push_back(Box{Label::word(m.label, binding), m.inputs, m.output});
  for (std::size_t k = 0; k < m.input_positions.size(); ++k)
    d.wires.push_back({Port{PortKind::Bottom, m.input_positions[k], 0}, Port{PortKind::BoxIn, 0, k}, {}});
  d.wires.push_back({Port{PortKind::BoxOut, 0, 0}, Port{PortKind::Bottom, m.head, 0}, {}});
  for (const auto& [o, e] : m.overlinks)
    d.wires.push_back({Port{PortKind::Bottom, o, 0}, Port{PortKind::Bottom, e, 0},
                       inclusion_chain(t.factors[o].base, t.factors[e].base)});
  return d;
}

Diagram Diagram::reduction(const Type& flat, const Reduction& r) {
  Diagram d;
  d.top = flat;
  d.bottom.factors = {SimpleType{r.target, 0}};
  for (const auto& [i, j] : r.links) {
    const std::size_t even = is_even(flat.factors[i]) ? i : j;
    const std::size_t odd = even == i ? j : i;
    d.wires.push_back({Port{PortKind::Top, even, 0}, Port{PortKind::Top, odd, 0},
                       inclusion_chain(flat.factors[even].base, flat.factors[odd].base)});
  }
  d.wires.push_back({Port{PortKind::Top, r.survivor, 0}, Port{PortKind::Bottom, 0, 0},
                     inclusion_chain(flat.factors[r.survivor].base, r.target)});
  return d;
}

Diagram tensor(const Diagram& a, const Diagram& b) {
  Diagram d = a;
  d.top = a.top * b.top;
  d.bottom = a.bottom * b.bottom;
  d.boxes.insert(d.boxes.end(), b.boxes.begin(), b.boxes.end());
  for (const auto& w : b.wires)
    d.wires.push_back({shift(w.source, a.top.size(), a.bottom.size(), a.boxes.size()),
                       shift(w.sink, a.top.size(), a.bottom.size(), a.boxes.size()), w.labels});
  d.loops.insert(d.loops.end(), b.loops.begin(), b.loops.end());
  return d;
}

Diagram compose(const Diagram& g, const Diagram& f) {
  if (!(f.bottom == g.top))
    throw std::invalid_argument("cannot compose: codomain " + to_string(f.bottom) + " differs from domain " +
                                to_string(g.top));
  // Segments of both diagrams, with shared boundary ports marked as middle.
  struct End {
    Port port;
    bool middle = false;
  };
  struct Segment {
    End source, sink;
    const LabelChain* labels;
  };
  std::vector<Segment> segs;
  auto from_f = [&](const Port& p) {
    if (p.kind == PortKind::Bottom) return End{Port{PortKind::Unit, p.index, 0}, true};
    return End{p, false};
  };
  auto from_g = [&](const Port& p) {
    if (p.kind == PortKind::Top) return End{Port{PortKind::Unit, p.index, 0}, true};
    return End{shift(p, 0, 0, f.boxes.size()), false};
  };
  for (const auto& w : f.wires) segs.push_back({from_f(w.source), from_f(w.sink), &w.labels});
  for (const auto& w : g.wires) segs.push_back({from_g(w.source), from_g(w.sink), &w.labels});

  std::map<std::size_t, std::size_t> leaving;  // middle position -> segment whose source it is
  for (std::size_t i = 0; i < segs.size(); ++i)
    if (segs[i].source.middle) leaving[segs[i].source.port.index] = i;

  Diagram d;
  d.top = f.top;
  d.bottom = g.bottom;
  d.boxes = f.boxes;
  d.boxes.insert(d.boxes.end(), g.boxes.begin(), g.boxes.end());
  d.loops = f.loops;
  d.loops.insert(d.loops.end(), g.loops.begin(), g.loops.end());

  std::vector<bool> used(segs.size(), false);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].source.middle) continue;
    used[i] = true;
    LabelChain labels = *segs[i].labels;
    std::size_t cur = i;
    while (segs[cur].sink.middle) {
      cur = leaving.at(segs[cur].sink.port.index);
      used[cur] = true;
      labels = concat(std::move(labels), *segs[cur].labels);
    }
    d.wires.push_back({segs[i].source.port, segs[cur].sink.port, simplify(std::move(labels))});
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (used[i]) continue;
    LabelChain labels;
    std::size_t cur = i;
    do {
      used[cur] = true;
      labels = concat(std::move(labels), *segs[cur].labels);
      cur = leaving.at(segs[cur].sink.port.index);
    } while (cur != i);
    d.loops.push_back(simplify(std::move(labels)));
  }
  return d;
}

Diagram Diagram::normalized() const {
  Diagram d = *this;
  for (;;) {
    auto it = std::find_if(d.boxes.begin(), d.boxes.end(), [](const Box& b) { return b.arity() < 2; });
    if (it == d.boxes.end()) break;
    const std::size_t id = static_cast<std::size_t>(it - d.boxes.begin());
    const Box box = *it;
    auto out = std::find_if(d.wires.begin(), d.wires.end(),
                            [&](const Wire& w) { return w.source == Port{PortKind::BoxOut, id, 0}; });
    if (box.arity() == 0) {
      out->source = Port{PortKind::Unit, 0, 0};
      out->labels.insert(out->labels.begin(), box.label);
    } else {
      auto in = std::find_if(d.wires.begin(), d.wires.end(),
                             [&](const Wire& w) { return w.sink == Port{PortKind::BoxIn, id, 0}; });
      if (in == out) {
        LabelChain labels = in->labels;
        labels.push_back(box.label);
        d.loops.push_back(std::move(labels));
        d.wires.erase(in);
      } else {
        in->labels.push_back(box.label);
        in->labels.insert(in->labels.end(), out->labels.begin(), out->labels.end());
        in->sink = out->sink;
        d.wires.erase(out);
      }
    }
    d.boxes.erase(d.boxes.begin() + static_cast<std::ptrdiff_t>(id));
    for (auto& w : d.wires)
      for (Port* p : {&w.source, &w.sink})
        if ((p->kind == PortKind::BoxIn || p->kind == PortKind::BoxOut) && p->index > id) --p->index;
  }
  for (auto& w : d.wires) w.labels = simplify(std::move(w.labels));
  for (auto& l : d.loops) l = simplify(std::move(l));
  std::sort(d.wires.begin(), d.wires.end(), wire_less);
  std::sort(d.loops.begin(), d.loops.end(),
            [](const LabelChain& a, const LabelChain& b) { return chain_text(a) < chain_text(b); });
  return d;
}

bool Diagram::is_normal() const {
  for (const auto& b : boxes)
    if (b.arity() < 2) return false;
  for (const auto& w : wires)
    if (!(simplify(w.labels) == w.labels)) return false;
  return std::is_sorted(wires.begin(), wires.end(), wire_less);
}

std::string Diagram::to_string() const {
  std::ostringstream os;
  os << pregroup::to_string(top) << (top.is_unit() ? "I" : "") << " -> " << pregroup::to_string(bottom)
     << (bottom.is_unit() ? "I" : "") << "\n";
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    os << "  box" << i + 1 << " " << boxes[i].label.text() << " :";
    for (const auto& in : boxes[i].inputs) os << " " << in;
    os << " -> " << boxes[i].output << "\n";
  }
  for (const auto& w : wires)
    os << "  " << pregroup::to_string(w.source) << " -> " << pregroup::to_string(w.sink) << " : "
       << chain_text(w.labels) << "\n";
  for (const auto& l : loops) os << "  loop : " << chain_text(l) << "\n";
  return os.str();
}

MeaningGraph meaning_expression(const std::vector<const LexiconEntry*>& words, const Lexicon& lexicon,
                                const Reduction& r, const Poset& poset) {
  Diagram names;
  std::vector<Type> types;
  for (const auto* w : words) {
    const auto& m = lexicon.morphism(*w);
    if (m.arity() > 2)
      throw std::invalid_argument("word '" + w->word + "' has a lexical morphism of arity " +
                                  std::to_string(m.arity()) + "; only arities 0, 1 and 2 are supported");
    names = tensor(names, Diagram::name(m, w->type, w->binding));
    types.push_back(w->type);
  }
  const Type flat = concatenate(types);
  std::string why;
  if (!validate(r, flat, poset, &why)) throw std::invalid_argument("reduction does not fit the words: " + why);
  return compose(Diagram::reduction(flat, r), names).normalized();
}

}  // namespace pgsem::pregroup
