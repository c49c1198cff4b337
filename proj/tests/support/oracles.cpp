#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace pgsem::oracle {

using pregroup::BasicType;
using pregroup::Poset;
using pregroup::Reduction;
using pregroup::SimpleType;
using pregroup::Type;

namespace {

bool cancels(const SimpleType& a, const SimpleType& b, const Poset& poset) {
  if (b.z != a.z + 1) return false;
  const bool even = a.z % 2 == 0;
  return even ? poset.leq(a.base, b.base) : poset.leq(b.base, a.base);
}

bool crosses(const std::pair<std::size_t, std::size_t>& x, const std::pair<std::size_t, std::size_t>& y) {
  return (x.first < y.first && y.first < x.second && x.second < y.second) ||
         (y.first < x.first && x.first < y.second && y.second < x.second);
}

void matchings(std::vector<std::size_t> rest, std::vector<std::pair<std::size_t, std::size_t>>& cur,
               const std::function<void()>& emit) {
  if (rest.empty()) {
    emit();
    return;
  }
  const auto first = rest.front();
  for (std::size_t k = 1; k < rest.size(); ++k) {
    auto next = rest;
    next.erase(next.begin() + static_cast<long>(k));
    next.erase(next.begin());
    cur.emplace_back(first, rest[k]);
    matchings(next, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Reduction> brute_force_reductions(const Type& flat, const BasicType& target, const Poset& poset) {
  std::vector<Reduction> out;
  const auto& f = flat.factors;
  for (std::size_t s = 0; s < f.size(); ++s) {
    if (f[s].z != 0 || !poset.leq(f[s].base, target)) continue;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (i != s) rest.push_back(i);
    if (rest.size() % 2) continue;
    std::vector<std::pair<std::size_t, std::size_t>> cur;
    matchings(rest, cur, [&] {
      for (const auto& [i, j] : cur) {
        if (!cancels(f[i], f[j], poset)) return;
        if (i < s && s < j) return;
      }
      for (std::size_t a = 0; a < cur.size(); ++a)
        for (std::size_t b = a + 1; b < cur.size(); ++b)
          if (crosses(cur[a], cur[b])) return;
      Reduction r;
      r.links = cur;
      std::sort(r.links.begin(), r.links.end());
      r.survivor = s;
      r.target = target;
      out.push_back(std::move(r));
    });
  }
  std::sort(out.begin(), out.end(), [](const Reduction& a, const Reduction& b) {
    return a.links != b.links ? a.links < b.links : a.survivor < b.survivor;
  });
  return out;
}

namespace {

// Dense tensor with one labelled index per simple type of the sentence.
struct Tensor {
  std::vector<std::size_t> labels;
  std::vector<std::size_t> dims;
  std::vector<Rational> data;

  std::size_t volume() const {
    std::size_t v = 1;
    for (auto d : dims) v *= d;
    return v;
  }
  std::vector<std::size_t> unflatten(std::size_t flat) const {
    std::vector<std::size_t> idx(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
      idx[k] = flat % dims[k];
      flat /= dims[k];
    }
    return idx;
  }
};

std::size_t flatten(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
  std::size_t f = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) f = f * dims[k] + idx[k];
  return f;
}

// Sums over every linked pair whose ends both occur in a or b.
Tensor contract(const Tensor& a, const Tensor& b, const std::vector<std::pair<std::size_t, std::size_t>>& links) {
  std::vector<std::size_t> labels = a.labels;
  labels.insert(labels.end(), b.labels.begin(), b.labels.end());
  std::vector<std::size_t> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  std::map<std::size_t, std::size_t> where;
  for (std::size_t k = 0; k < labels.size(); ++k) where[labels[k]] = k;

  std::vector<std::pair<std::size_t, std::size_t>> summed;
  std::vector<bool> bound(labels.size(), false);
  for (const auto& [i, j] : links)
    if (where.contains(i) && where.contains(j)) {
      summed.emplace_back(where[i], where[j]);
      bound[where[i]] = bound[where[j]] = true;
    }
  Tensor out;
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (!bound[k]) {
      out.labels.push_back(labels[k]);
      out.dims.push_back(dims[k]);
    }
  out.data.assign(out.volume(), Rational(0));

  const auto nonzero = [](const Tensor& t) {
    std::vector<std::pair<std::vector<std::size_t>, const Rational*>> nz;
    for (std::size_t f = 0; f < t.data.size(); ++f)
      if (t.data[f] != 0) nz.emplace_back(t.unflatten(f), &t.data[f]);
    return nz;
  };
  const auto na = nonzero(a), nb = nonzero(b);
  std::vector<std::size_t> idx(labels.size()), free_idx;
  for (const auto& [ia, va] : na)
    for (const auto& [ib, vb] : nb) {
      std::copy(ia.begin(), ia.end(), idx.begin());
      std::copy(ib.begin(), ib.end(), idx.begin() + static_cast<long>(ia.size()));
      bool ok = true;
      for (const auto& [x, y] : summed) ok = ok && idx[x] == idx[y];
      if (!ok) continue;
      free_idx.clear();
      for (std::size_t k = 0; k < labels.size(); ++k)
        if (!bound[k]) free_idx.push_back(idx[k]);
      out.data[flatten(free_idx, out.dims)] += *va * *vb;
    }
  return out;
}

// Truth index 0 is ⊤, 1 is ⊥.
std::size_t truth(bool top) { return top ? 0 : 1; }

Rational box_entry(const World& w, const pregroup::Binding& b, std::size_t out, const std::vector<std::size_t>& in) {
  using pregroup::BindingKind;
  switch (b.kind) {
    case BindingKind::Vector:
      return w.attribute(b.name)[out] ? 1 : 0;
    case BindingKind::Predicate:
      return out == truth(w.attribute(b.name)[in[0]]) ? 1 : 0;
    case BindingKind::Projector:
      return out == in[0] && w.attribute(b.name)[out] ? 1 : 0;
    case BindingKind::Identity:
      return out == in[0] ? 1 : 0;
    case BindingKind::Relation: {
      const auto& pairs = w.relations.at(b.name);
      const bool hit = std::find(pairs.begin(), pairs.end(), std::make_pair(in[0], in[1])) != pairs.end();
      return out == truth(hit) ? 1 : 0;
    }
    case BindingKind::Logical: {
      if (b.name == "not") return out == 1 - in[0] ? 1 : 0;
      const bool u = in[0] == 0, v = in[1] == 0;
      if (b.name == "and") return out == truth(u && v) ? 1 : 0;
      if (b.name == "or") return out == truth(u || v) ? 1 : 0;
      if (b.name == "ifthen") return out == truth(!u || v) ? 1 : 0;
      throw std::invalid_argument("unknown connective " + b.name);
    }
  }
  return 0;
}

std::size_t space_dim(const World& w, const BasicType& base) {
  const auto it = w.spaces.find(base);
  if (it == w.spaces.end()) throw std::invalid_argument("no space declared for " + base);
  return it->second == SpaceKind::Truth ? 2 : w.space.size();
}

Tensor word_tensor(const World& w, const pregroup::Lexicon& lex, const pregroup::LexiconEntry& e, std::size_t offset) {
  const auto& m = lex.morphism(e);
  Tensor t;
  for (std::size_t i = 0; i < e.type.size(); ++i) {
    t.labels.push_back(offset + i);
    t.dims.push_back(space_dim(w, e.type.factors[i].base));
  }
  t.data.assign(t.volume(), Rational(0));
  std::vector<std::size_t> in(m.input_positions.size());
  for (std::size_t f = 0; f < t.data.size(); ++f) {
    const auto idx = t.unflatten(f);
    bool ok = true;
    for (const auto& [odd, even] : m.overlinks) ok = ok && idx[odd] == idx[even];
    if (!ok) continue;
    for (std::size_t k = 0; k < in.size(); ++k) in[k] = idx[m.input_positions[k]];
    t.data[f] = box_entry(w, e.binding, idx[m.head], in);
  }
  return t;
}

}  // namespace

funcmodel::Value dense_eval(const World& world, const pregroup::Lexicon& lexicon,
                            const std::vector<const pregroup::LexiconEntry*>& words, const Reduction& r) {
  Tensor acc;
  acc.data = {Rational(1)};
  std::size_t offset = 0;
  BasicType survivor_base;
  for (const auto* e : words) {
    if (r.survivor >= offset && r.survivor < offset + e->type.size())
      survivor_base = e->type.factors[r.survivor - offset].base;
    acc = contract(acc, word_tensor(world, lexicon, *e, offset), r.links);
    offset += e->type.size();
  }
  if (acc.labels.size() != 1 || acc.labels[0] != r.survivor)
    throw std::logic_error("contraction left " + std::to_string(acc.labels.size()) + " open indices");
  if (world.spaces.at(survivor_base) == SpaceKind::Truth) return funcmodel::SVector{acc.data[0], acc.data[1]};
  return funcmodel::EntityVector(acc.data);
}

std::vector<Sentence> fixture_sentences() {
  return {
      {"chips", "no triangles are blue"}, {"chips", "no squares are red"},  {"chips", "no circles are yellow"},
      {"chips", "triangles are red"},     {"chips", "triangles are yellow"}, {"chips", "squares are blue"},
      {"chips", "circles are yellow"},    {"chips", "new squares"},          {"chips", "new triangles"},
      {"chips", "new circles"},           {"chips", "new squares are blue"}, {"chips", "new triangles are red"},
      {"chips", "triangle is red"},       {"chips", "no circle is blue"},    {"chips", "new square"},
      {"zoo", "cats chase dogs"},         {"zoo", "dogs chase cats"},        {"zoo", "cats chase cats"},
      {"zoo", "dogs chase dogs"},
  };
}

}  // namespace pgsem::oracle
