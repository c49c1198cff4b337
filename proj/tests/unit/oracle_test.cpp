#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgsem/fixtures.hpp"
#include "pgsem/pregroup/meaning.hpp"

using namespace pgsem;

TEST(Oracle, DenseContractionAgreesWithGraphEvaluation) {
  for (const auto& s : oracle::fixture_sentences()) {
    const auto g = fixtures::load(s.fixture == "zoo" ? fixtures::zoo() : fixtures::chips());
    const funcmodel::FunctionalModel f(g.world);
    const auto tokens = pregroup::tokenize(s.text);
    const auto target = pregroup::default_target(tokens, g.lexicon, g.poset);
    const auto ps = pregroup::parse_sentence(tokens, g.lexicon, g.poset, target);
    ASSERT_FALSE(ps.empty()) << s.text;
    for (const auto& p : ps) {
      const auto graph = funcmodel::eval_functional(f, pregroup::meaning_of(p, g.lexicon, g.poset));
      const auto dense = oracle::dense_eval(g.world, g.lexicon, p.words, p.reduction);
      EXPECT_EQ(funcmodel::to_string(graph, f.space()), funcmodel::to_string(dense, f.space())) << s.text;
      EXPECT_EQ(graph, dense) << s.text;
    }
  }
}

TEST(Oracle, BruteForceFindsTheFixedReduction) {
  const auto g = fixtures::load(fixtures::chips());
  const auto ps = pregroup::parse_sentence(pregroup::tokenize("no triangles are blue"), g.lexicon, g.poset, "s");
  ASSERT_EQ(ps.size(), 1U);
  const auto brute = oracle::brute_force_reductions(ps[0].flat(), "s", g.poset);
  ASSERT_EQ(brute.size(), 1U);
  EXPECT_EQ(brute[0], ps[0].reduction);
}
