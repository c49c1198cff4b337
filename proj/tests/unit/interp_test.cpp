#include <gtest/gtest.h>

#include "pgsem/fixtures.hpp"
#include "pgsem/interp.hpp"
#include "pgsem/pregroup/meaning.hpp"
#include "oracles.hpp"

using namespace pgsem;
using namespace pgsem::interp;
using funcmodel::Predicate;
using funcmodel::TruthValue;

namespace {

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

struct Chips {
  fixtures::Grammar g = fixtures::load(fixtures::chips());
  funcmodel::FunctionalModel f{g.world};
  ConceptSpaceGen gen = concept_space_of(g.world);
  PartitionScheme scheme = gen.working();

  // J by direct counting, without interpret().
  ConceptVector J(const std::string& attr) const {
    ConceptVector v;
    for (const auto& block : scheme.blocks()) {
      long k = 0;
      for (auto a : block) k += g.world.attribute(attr)[a] ? 1 : 0;
      v.push_back(q(k, static_cast<long>(block.size())));
    }
    return v;
  }
};

}  // namespace

TEST(Interp, ChipsConceptSpace) {
  const Chips c;
  EXPECT_EQ(c.gen.patterns.size(), 8U);
  EXPECT_EQ(c.gen.retained.size(), 5U);
  EXPECT_EQ(c.scheme.sizes(), (std::vector<std::size_t>{5, 8, 6, 2, 9}));
  EXPECT_EQ(c.scheme.labels(), (std::vector<std::string>{"c1", "c2", "c3", "c4", "c5"}));
  EXPECT_EQ(c.gen.pattern_text(c.gen.retained[0]), "blue red ¬yellow");
  EXPECT_EQ(c.scheme.weights(), (RationalVector{q(1, 6), q(4, 15), q(1, 5), q(1, 15), q(3, 10)}));
  EXPECT_EQ(c.gen.full().k(), 8U);
  EXPECT_TRUE(c.gen.full().has_empty_block());
}

TEST(Interp, ShapeAndNewVectors) {
  const Chips c;
  for (const auto* a : {"square", "triangle", "circle", "new", "blue", "red"})
    EXPECT_EQ(interpret(c.g.world.attribute(a), c.scheme), c.J(a)) << a;
  EXPECT_EQ(c.J("square"), (ConceptVector{1, q(5, 8), 0, 0, 0}));
  EXPECT_EQ(c.J("triangle"), (ConceptVector{0, q(3, 8), 1, q(1, 2), 0}));
  EXPECT_EQ(c.J("circle"), (ConceptVector{0, 0, 0, q(1, 2), 1}));
  EXPECT_EQ(c.J("new"), (ConceptVector{q(1, 5), 1, q(1, 6), q(1, 2), q(2, 9)}));
}

TEST(Interp, StateProbabilityIsTheFraction) {
  const Chips c;
  EXPECT_EQ(state_probability(c.scheme, c.J("new")), q(13, 30));
  EXPECT_EQ(state_probability(c.scheme, c.J("square")), q(1, 3));
  EXPECT_EQ(c.scheme.density().entries(), c.scheme.weights());
}

TEST(Interp, TriangleIsOrthogonalToBlueBlocks) {
  const Chips c;
  const auto tri = c.J("triangle");
  for (std::size_t j = 0; j < c.gen.retained.size(); ++j)
    if (c.gen.patterns[c.gen.retained[j]][0]) {
      EXPECT_EQ(tri[j], 0) << j;
    }
}

TEST(Interp, NewTrianglesFailAtOneBlock) {
  const Chips c;
  const auto p = Predicate::from_indicator(c.g.world.attribute("new"));
  const auto t = Predicate::from_indicator(c.g.world.attribute("triangle"));
  EXPECT_EQ(lemma1_failing_blocks(p, t, c.scheme), (std::vector<std::size_t>{3}));
  EXPECT_FALSE(lemma1_check(p, t, c.scheme));
  const auto s = Predicate::from_indicator(c.g.world.attribute("square"));
  EXPECT_TRUE(lemma1_check(p, s, c.scheme));
}

TEST(Interp, PartitionErrorsNameEntities) {
  const auto a = Predicate({TruthValue::Top, TruthValue::Top, TruthValue::Bot});
  const auto b = Predicate({TruthValue::Bot, TruthValue::Top, TruthValue::Bot});
  try {
    PartitionScheme::build({a, b});
    FAIL();
  } catch (const PartitionError& e) {
    EXPECT_EQ(e.gaps(), (std::vector<std::size_t>{2}));
    EXPECT_EQ(e.overlaps(), (std::vector<std::size_t>{1}));
  }
  EXPECT_THROW(PartitionScheme::from_blocks(3, {{0, 1}}), PartitionError);
  EXPECT_THROW(PartitionScheme::from_blocks(2, {{0, 1}, {}}), EmptyBlock);
  const auto e = PartitionScheme::from_blocks(2, {{0, 1}, {}}, {}, true);
  EXPECT_THROW(theorem1_suite(a, a, e), EmptyBlock);
}

TEST(Interp, NegationNeedsNonemptyBlocks) {
  const auto p = Predicate::constant(2, TruthValue::Top);
  EXPECT_FALSE(preserves_negation(p, PartitionScheme::from_blocks(2, {{0, 1}, {}}, {}, true)));
  EXPECT_TRUE(preserves_negation(p, PartitionScheme::from_blocks(2, {{0, 1}})));
}

TEST(Interp, SingletonsGiveIndicators) {
  const auto s = PartitionScheme::singletons(3);
  const Predicate p({TruthValue::Top, TruthValue::Bot, TruthValue::Top});
  EXPECT_EQ(interpret(p, s), (ConceptVector{1, 0, 1}));
  EXPECT_THROW(interpret(Predicate({TruthValue::Top, TruthValue::Zero, TruthValue::Top}), s), std::invalid_argument);
  EXPECT_THROW(interpret(funcmodel::EntityVector{1, 2, 0}, s), std::invalid_argument);
}

TEST(Interp, RelationOverProductBlocks) {
  const auto g = fixtures::load(fixtures::zoo());
  const funcmodel::FunctionalModel f(g.world);
  const auto s = PartitionScheme::from_blocks(5, {{0, 1}, {2, 3, 4}});
  const auto j = interpret(f.relation("chase"), s);
  // cats x cats, cats x dogs, dogs x cats, dogs x dogs
  EXPECT_EQ(j, (ConceptVector{0, q(1, 6), q(4, 6), 0}));
}

TEST(Interp, InducedModelSentences) {
  const Chips c;
  const auto mc = build_MC(c.f, c.g.lexicon, c.scheme);
  const auto run = [&](const std::string& text, const std::string& target) {
    const auto ps = pregroup::parse_sentence(pregroup::tokenize(text), c.g.lexicon, c.g.poset, target, 1);
    const auto v = funcmodel::eval_functional(c.f, pregroup::meaning_of(ps.at(0), c.g.lexicon, c.g.poset));
    return compare_models(c.f, mc, ps.at(0).words, v);
  };
  const auto no_blue = run("no triangles are blue", "s");
  EXPECT_EQ(no_blue.verdict, Verdict::Equal);
  EXPECT_EQ(no_blue.product.value, vecmodel::ones(5));
  EXPECT_EQ(no_blue.product.trace.size(), 2U);

  const auto sq = run("new squares", "n2");
  EXPECT_EQ(sq.verdict, Verdict::Equal);
  EXPECT_EQ(sq.product.value, (ConceptVector{q(1, 5), q(5, 8), 0, 0, 0}));

  const auto tri = run("new triangles", "n2");
  EXPECT_EQ(tri.verdict, Verdict::ExplainedDivergence);
  EXPECT_EQ(tri.product.value, (ConceptVector{0, q(3, 8), q(1, 6), q(1, 4), 0}));
  EXPECT_EQ(tri.j_of_f, (ConceptVector{0, q(3, 8), q(1, 6), q(1, 2), 0}));
  EXPECT_EQ(tri.differing, (std::vector<std::size_t>{3}));
  EXPECT_EQ(tri.failing_blocks, (std::vector<std::size_t>{3}));

  // The quantified "false" is not representable as 0⃗ here.
  EXPECT_EQ(run("no squares are red", "s").verdict, Verdict::Error);
}

TEST(Interp, StringExtensionUnderTheConditions) {
  const Chips c;
  const auto mc = build_MC(c.f, c.g.lexicon, c.scheme);
  for (const auto& s : oracle::fixture_sentences()) {
    if (s.fixture != "chips") continue;
    const auto tokens = pregroup::tokenize(s.text);
    const auto ps = pregroup::parse_sentence(tokens, c.g.lexicon, c.g.poset,
                                             pregroup::default_target(tokens, c.g.lexicon, c.g.poset), 1);
    const auto v = funcmodel::eval_functional(c.f, pregroup::meaning_of(ps.at(0), c.g.lexicon, c.g.poset));
    const auto* x = std::get_if<funcmodel::EntityVector>(&v);
    if (!x) continue;
    const auto cmp = compare_models(c.f, mc, ps[0].words, v);
    if (cmp.failing_blocks.empty()) EXPECT_EQ(cmp.product.value, interpret(*x, c.scheme)) << s.text;
    else EXPECT_EQ(cmp.verdict, Verdict::ExplainedDivergence) << s.text;
  }
}

TEST(Interp, InducedModelRefusesDisjunction) {
  const Chips c;
  const auto lex = pregroup::Lexicon::parse_tsv("or\ts^r s s^l\tlogical\tor\n", c.g.poset);
  EXPECT_THROW(build_MC(c.f, lex, c.scheme), std::invalid_argument);
}

TEST(Interp, TensorModeForTransitiveVerbs) {
  const auto g = fixtures::load(fixtures::zoo());
  const funcmodel::FunctionalModel f(g.world);
  const auto scheme = concept_space_of(g.world).working();
  const auto mc = build_MC(f, g.lexicon, scheme);
  EXPECT_EQ(mc.model.dim(), scheme.k() * scheme.k());
  const auto cats = interpret(g.world.attribute("cat"), scheme);
  const auto sub = mc.model.at("cats", pregroup::parse_type("n_sub", g.poset));
  EXPECT_EQ(sub, vecmodel::embed_subject(cats));
  const auto ob = mc.model.at("cats", pregroup::parse_type("n_ob", g.poset));
  EXPECT_EQ(ob, vecmodel::embed_object(cats));
}

TEST(Interp, ClassOfConcept) {
  EXPECT_EQ(class_of_concept({1, 1}), funcmodel::TruthClass::True);
  EXPECT_EQ(class_of_concept({0, 0}), funcmodel::TruthClass::False);
  EXPECT_EQ(class_of_concept({1, 0}), funcmodel::TruthClass::Mixed);
}
