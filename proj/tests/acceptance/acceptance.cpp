// Acceptance criteria AC1-AC10, one line each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "pgsem/conceptlogic.hpp"
#include "pgsem/fixtures.hpp"
#include "pgsem/interp.hpp"
#include "pgsem/laws.hpp"
#include "pgsem/pregroup/diagram.hpp"
#include "pgsem/pregroup/meaning.hpp"
#include "pgsem/random.hpp"
#include "pgsem/vecmodel.hpp"

using namespace pgsem;
using funcmodel::SVector;
using vecmodel::ConceptVector;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

std::string text(const ConceptVector& v) { return to_string(std::span<const Rational>(v)); }

struct Chips {
  fixtures::Grammar g = fixtures::load(fixtures::chips());
  funcmodel::FunctionalModel f{g.world};
  interp::PartitionScheme scheme = interp::concept_space_of(g.world).working();

  pregroup::Parse parse(const std::string& s, const std::string& target) const {
    const auto ps = pregroup::parse_sentence(pregroup::tokenize(s), g.lexicon, g.poset, target);
    if (ps.size() != 1) throw std::runtime_error("'" + s + "' has " + std::to_string(ps.size()) + " parses");
    return ps[0];
  }
  funcmodel::Value eval(const std::string& s, const std::string& target) const {
    return funcmodel::eval_functional(f, pregroup::meaning_of(parse(s, target), g.lexicon, g.poset));
  }
  ConceptVector J(const std::string& attr) const { return interp::interpret(g.world.attribute(attr), scheme); }
  ConceptVector JF(const std::string& phrase) const {
    return interp::interpret(std::get<funcmodel::EntityVector>(eval(phrase, "n2")), scheme);
  }
};

bool suite_passes(const std::vector<laws::Result>& rs, Outcome& o) {
  for (const auto& r : rs) o.expect(r.passed, r.suite + ": " + r.name + ": " + r.detail);
  return o.ok;
}

const laws::Result* find(const std::vector<laws::Result>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return &r;
  return nullptr;
}

Outcome ac1() {
  Outcome o;
  const Chips c;
  const auto& sp = c.f.space();
  o.expect(funcmodel::to_string(c.eval("new squares", "n2"), sp) == "a11 + a12 + a13 + a14 + a15 + a20", "new squares");
  o.expect(funcmodel::to_string(c.eval("new triangles", "n2"), sp) == "a5 + a7 + a8 + a9 + a10", "new triangles");
  o.expect(funcmodel::to_string(c.eval("new circles", "n2"), sp) == "a25 + a30", "new circles");
  const auto no_blue = std::get<SVector>(c.eval("no triangles are blue", "s"));
  o.expect(no_blue == SVector{10, 0}, "no triangles are blue = " + to_string(no_blue));
  o.expect(funcmodel::truth_class(no_blue).tag == funcmodel::TruthClass::True, "not classified true");
  const auto tri = c.f.vector("triangle");
  o.expect(funcmodel::apply_predicate(c.f.predicate("red"), tri) == SVector{9, 1}, "red triangles");
  o.expect(funcmodel::apply_predicate(c.f.predicate("yellow"), tri) == SVector{4, 6}, "yellow triangles");
  o.expect(std::get<SVector>(c.eval("triangles are red", "s")) == SVector{9, 1}, "triangles are red");
  o.expect(std::get<SVector>(c.eval("triangles are yellow", "s")) == SVector{4, 6}, "triangles are yellow");
  return o;
}

Outcome ac2() {
  Outcome o;
  const Chips c;
  o.expect(c.scheme.sizes() == std::vector<std::size_t>{5, 8, 6, 2, 9}, "block sizes");
  const auto k = [&](const std::string& attr, std::size_t block) {
    std::size_t n = 0;
    for (auto a : c.scheme.blocks()[block]) n += c.g.world.attribute(attr)[a] ? 1 : 0;
    return n;
  };
  o.expect(k("square", 0) == 5 && k("square", 1) == 5, "square counts");
  o.expect(k("circle", 3) == 1 && k("circle", 4) == 9, "circle counts");
  o.expect(k("triangle", 2) == 6 && k("triangle", 1) == 3 && k("triangle", 3) == 1, "triangle counts");
  o.expect(c.J("square") == ConceptVector{1, q(5, 8), 0, 0, 0}, "square = " + text(c.J("square")));
  o.expect(c.J("triangle") == ConceptVector{0, q(3, 8), 1, q(1, 2), 0}, "triangle = " + text(c.J("triangle")));
  o.expect(c.J("circle") == ConceptVector{0, 0, 0, q(1, 2), 1}, "circle = " + text(c.J("circle")));
  return o;
}

Outcome ac3() {
  Outcome o;
  const Chips c;
  const auto nw = c.J("new");
  o.expect(nw == ConceptVector{q(1, 5), 1, q(1, 6), q(1, 2), q(2, 9)}, "J(new) = " + text(nw));
  const auto sq = c.JF("new squares");
  o.expect(sq == ConceptVector{q(1, 5), q(5, 8), 0, 0, 0}, "J(F(new squares)) = " + text(sq));
  o.expect(sq == vecmodel::pointwise(nw, c.J("square")), "new squares product differs");
  const auto tri = c.JF("new triangles");
  const auto prod = vecmodel::pointwise(nw, c.J("triangle"));
  o.expect(tri == ConceptVector{0, q(3, 8), q(1, 6), q(1, 2), 0}, "J(F(new triangles)) = " + text(tri));
  o.expect(prod == ConceptVector{0, q(3, 8), q(1, 6), q(1, 4), 0}, "product = " + text(prod));
  std::vector<std::size_t> diff;
  for (std::size_t j = 0; j < tri.size(); ++j)
    if (tri[j] != prod[j]) diff.push_back(j);
  o.expect(diff == std::vector<std::size_t>{3}, "divergence not confined to c4");
  const auto mc = interp::build_MC(c.f, c.g.lexicon, c.scheme);
  const auto p = c.parse("new triangles", "n2");
  const auto cmp = interp::compare_models(c.f, mc, p.words, c.eval("new triangles", "n2"));
  o.expect(cmp.verdict == interp::Verdict::ExplainedDivergence && cmp.failing_blocks == std::vector<std::size_t>{3},
           "comparison does not explain the divergence at c4");
  return o;
}

Outcome ac4() {
  Outcome o;
  using namespace pregroup;
  const Chips c;
  const auto p = c.parse("no triangles are blue", "s");
  o.expect(p.reduction.links == std::vector<std::pair<std::size_t, std::size_t>>{{1, 6}, {2, 5}, {3, 4}, {7, 10}, {8, 9}} &&
               p.reduction.survivor == 0,
           "reduction " + to_string(p.reduction));
  const auto m = meaning_of(p, c.g.lexicon, c.g.poset);
  o.expect(m.is_normal() && m.boxes.empty() && m.wires.size() == 1, "meaning graph is not a single wire");
  if (m.wires.size() == 1)
    o.expect(chain_text(m.wires[0].labels) == "not ∘ are ∘ blue ∘ in_{c2,n} ∘ triangles",
             "chain " + chain_text(m.wires[0].labels));
  for (const auto& a : c.g.poset.elements()) {
    const SimpleType s{a, 0};
    const Type one{{s}};
    const auto r = adjoint(s, Side::Right), l = adjoint(s, Side::Left);
    const auto id = Diagram::identity(one).normalized();
    const auto right = compose(tensor(Diagram::counit(s, r, c.g.poset), Diagram::identity(one)),
                               tensor(Diagram::identity(one), Diagram::unit(r, s, c.g.poset)));
    const auto left = compose(tensor(Diagram::identity(one), Diagram::counit(l, s, c.g.poset)),
                              tensor(Diagram::unit(s, l, c.g.poset), Diagram::identity(one)));
    o.expect(right.normalized() == id && left.normalized() == id, "yanking fails on " + a);
    const Type three{{s, r, s}};
    const auto cap_cup = compose(tensor(Diagram::identity(one), Diagram::unit(r, s, c.g.poset)),
                                 tensor(Diagram::counit(s, r, c.g.poset), Diagram::identity(one)));
    o.expect(cap_cup.normalized() != Diagram::identity(three).normalized(), "cap over cup equals identity on " + a);
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto w = vecmodel::fact1_demo(d);
    o.expect(w.witness == vecmodel::basis_tensor(d, {0, 1, 0}), "witness");
    o.expect(w.f.apply(w.witness) == vecmodel::zeros(d * d * d), "nonzero image at dim " + std::to_string(d));
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  auto rng = random::stream(kSeed, "acceptance/vmodel");
  std::vector<ConceptVector> sample;
  for (int i = 0; i < 100; ++i) sample.push_back(random::any_vector(rng, 4));
  const auto laws = vecmodel::vmodel_category_laws(sample);
  o.expect(laws.size() >= 5, "too few laws");
  for (const auto& l : laws) o.expect(l.passed && l.cases >= 100, l.name + ": " + l.detail);
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto rs = laws::run_suite("conceptlogic", {kSeed, 1000});
  suite_passes(rs, o);
  const auto at_least = [&](const std::string& name, std::size_t n) {
    const auto* r = find(rs, name);
    o.expect(r && r->cases >= n, "missing or short check: " + name);
  };
  at_least("operators match vectors", 1000);
  at_least("composition is the product", 1000);
  at_least("closure on the unit interval", 1000);
  at_least("implication is one exactly at the corners", 81);
  at_least("commuting projectors exhaustive", 1);
  return o;
}

Outcome ac8() {
  Outcome o;
  const auto rs = laws::run_suite("theorem1", {kSeed, 1000});
  suite_passes(rs, o);
  const auto* r = find(rs, "random triples");
  o.expect(r && r->cases >= 1000, "random triples");
  o.expect(find(rs, "constant blocks preserve connectives") != nullptr, "exhaustive check missing");
  o.expect(find(rs, "singletons are an isomorphism") != nullptr, "singleton check missing");
  return o;
}

Outcome ac9() {
  Outcome o;
  const auto rs = laws::run_suite("transitive", {kSeed, 1000});
  suite_passes(rs, o);
  const auto* r = find(rs, "embeddings multiply to the tensor");
  o.expect(r && r->cases >= 100, "embedding pairs");

  const auto g = fixtures::load(fixtures::zoo());
  const auto scheme = interp::concept_space_of(g.world).working();
  const auto k = scheme.k();
  const auto cats = interp::interpret(g.world.attribute("cat"), scheme);
  const auto dogs = interp::interpret(g.world.attribute("dog"), scheme);
  auto rng = random::stream(kSeed, "acceptance/verb");
  ConceptVector verb;
  bool symmetric = true;
  while (symmetric) {
    verb = random::unit_vector(rng, k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) symmetric = symmetric && verb[i * k + j] == verb[j * k + i];
  }
  const auto say = [&](const ConceptVector& s, const ConceptVector& ob) {
    return vecmodel::product({vecmodel::embed_subject(s), verb, vecmodel::embed_object(ob)}, k * k);
  };
  o.expect(say(cats, dogs) != say(dogs, cats), "cats chase dogs = dogs chase cats");
  return o;
}

Outcome ac10() {
  Outcome o;
  for (const auto& s : oracle::fixture_sentences()) {
    const auto g = fixtures::load(s.fixture == "zoo" ? fixtures::zoo() : fixtures::chips());
    const funcmodel::FunctionalModel f(g.world);
    const auto tokens = pregroup::tokenize(s.text);
    const auto ps = pregroup::parse_sentence(tokens, g.lexicon, g.poset, pregroup::default_target(tokens, g.lexicon, g.poset));
    o.expect(!ps.empty(), "no parse for " + s.text);
    for (const auto& p : ps) {
      const auto graph = funcmodel::eval_functional(f, pregroup::meaning_of(p, g.lexicon, g.poset));
      o.expect(graph == oracle::dense_eval(g.world, g.lexicon, p.words, p.reduction), "dense disagrees on " + s.text);
    }
  }

  const pregroup::Poset single({"a"}, {});
  std::size_t strings = 0;
  for (std::size_t len = 1; len <= 8; ++len) {
    const int zmax = len <= 7 ? 2 : 1;
    const std::size_t base = static_cast<std::size_t>(2 * zmax + 1);
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= base;
    for (std::size_t code = 0; code < total; ++code) {
      pregroup::Type t;
      for (std::size_t i = 0, c = code; i < len; ++i, c /= base)
        t.factors.push_back({"a", static_cast<int>(c % base) - zmax});
      ++strings;
      if (pregroup::find_reductions(t, "a", single) != oracle::brute_force_reductions(t, "a", single)) {
        o.expect(false, "reduction search differs on " + pregroup::to_string(t));
        return o;
      }
    }
  }
  const auto chips = fixtures::load(fixtures::chips());
  auto rng = random::stream(kSeed, "acceptance/reductions");
  for (int i = 0; i < 3000; ++i) {
    const auto& el = chips.poset.elements();
    const auto t = i % 2 ? random::type(rng, chips.poset, 8, 2)
                         : random::reducible(rng, chips.poset, el[random::uniform(rng, 0, el.size() - 1)],
                                             random::uniform(rng, 0, 3));
    for (const auto& target : el)
      if (pregroup::find_reductions(t, target, chips.poset) != oracle::brute_force_reductions(t, target, chips.poset)) {
        o.expect(false, "reduction search differs on " + pregroup::to_string(t) + " -> " + target);
        return o;
      }
  }
  o.detail = std::to_string(strings) + " exhaustive strings, 3000 random";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* what;
    std::function<Outcome()> run;
    double limit_s;
  };
  const std::vector<Criterion> all{
      {"AC1", "chips functional values", ac1, 1.0},
      {"AC2", "block sizes, counts and shape vectors", ac2, 0},
      {"AC3", "J values and the localized divergence", ac3, 0},
      {"AC4", "parser chain, yanking, cap over cup", ac4, 0},
      {"AC5", "zigzag annihilates a1⊗a2⊗a1 for dims 2-6", ac5, 0},
      {"AC6", "pointwise category laws on 100 vectors", ac6, 0},
      {"AC7", "concept-logic suite", ac7, 0},
      {"AC8", "interpretation theorem suite", ac8, 60.0},
      {"AC9", "transitive fragment", ac9, 0},
      {"AC10", "oracle cross-checks", ac10, 0},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      if (o.ok) o.detail = "over the time limit";
      o.ok = false;
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << c.id << (o.ok ? " PASS " : " FAIL ") << c.what << " [" << timing << "]";
    if (!o.detail.empty()) std::cout << " " << o.detail;
    std::cout << std::endl;
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
