#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgsem/fixtures.hpp"
#include "pgsem/pregroup/meaning.hpp"
#include "pgsem/random.hpp"

using namespace pgsem;
using namespace pgsem::pregroup;

namespace {
using Links = std::vector<std::pair<std::size_t, std::size_t>>;
}

TEST(Reduction, NoTrianglesAreBlue) {
  const auto g = fixtures::load(fixtures::chips());
  const auto ps = parse_sentence(tokenize("No triangles are blue."), g.lexicon, g.poset, "s");
  ASSERT_EQ(ps.size(), 1U);
  const auto& r = ps[0].reduction;
  EXPECT_EQ(r.links, (Links{{1, 6}, {2, 5}, {3, 4}, {7, 10}, {8, 9}}));
  EXPECT_EQ(r.survivor, 0U);
  EXPECT_EQ(to_string(r), "links (2,7) (3,6) (4,5) (8,11) (9,10) survivor 1 -> s");
  EXPECT_TRUE(validate(r, ps[0].flat(), g.poset));
}

TEST(Reduction, SingleWordToItsOwnType) {
  const auto g = fixtures::load(fixtures::chips());
  const auto ps = parse_sentence({"triangles"}, g.lexicon, g.poset, "c2");
  ASSERT_EQ(ps.size(), 1U);
  EXPECT_TRUE(ps[0].reduction.links.empty());
  EXPECT_EQ(parse_sentence({"triangles"}, g.lexicon, g.poset, "n").size(), 1U);
  EXPECT_TRUE(parse_sentence({"triangles"}, g.lexicon, g.poset, "s").empty());
}

TEST(Reduction, UngrammaticalAndUnknown) {
  const auto g = fixtures::load(fixtures::chips());
  EXPECT_TRUE(parse_sentence({"blue", "no"}, g.lexicon, g.poset, "s").empty());
  EXPECT_EQ(default_target({"blue", "no"}, g.lexicon, g.poset), "");
  EXPECT_THROW(parse_sentence({"purple"}, g.lexicon, g.poset, "s"), UnknownWord);
  EXPECT_EQ(default_target({"new", "squares"}, g.lexicon, g.poset), "n2");
}

TEST(Reduction, AmbiguousStringListsEveryReduction) {
  const Poset p({"a"}, {});
  const auto t = parse_type("a^ll a^l a a^l a", p);
  const auto rs = find_reductions(t, "a", p);
  ASSERT_EQ(rs.size(), 2U);
  EXPECT_EQ(rs[0].links, (Links{{0, 1}, {3, 4}}));
  EXPECT_EQ(rs[0].survivor, 2U);
  EXPECT_EQ(rs[1].links, (Links{{0, 3}, {1, 2}}));
  EXPECT_EQ(rs[1].survivor, 4U);
  EXPECT_EQ(find_reductions(t, "a", p, 1).size(), 1U);
}

TEST(Reduction, ValidateRejectsBrokenReductions) {
  const Poset p({"a"}, {});
  const auto t = parse_type("a a^r a a^l a", p);
  Reduction good{{{0, 1}, {3, 4}}, 2, "a"};
  EXPECT_TRUE(validate(good, t, p));
  std::string why;
  EXPECT_FALSE(validate(Reduction{{{0, 1}}, 2, "a"}, t, p, &why));
  EXPECT_FALSE(why.empty());
  EXPECT_FALSE(validate(Reduction{{{0, 3}, {1, 4}}, 2, "a"}, t, p));
  EXPECT_FALSE(validate(Reduction{{{1, 2}, {3, 4}}, 0, "a"}, t, p));
  EXPECT_FALSE(validate(Reduction{{{0, 1}, {3, 4}}, 2, "b"}, t, p));
}

TEST(Reduction, MatchesBruteForceOnShortStrings) {
  const auto g = fixtures::load(fixtures::chips());
  const Poset single({"a"}, {});
  auto rng = random::stream(11, "brute force");
  std::size_t nonempty = 0;
  for (int i = 0; i < 600; ++i) {
    const auto& p = i % 2 ? g.poset : single;
    const auto& el = p.elements();
    const auto t = i % 3 ? random::reducible(rng, p, el[random::uniform(rng, 0, el.size() - 1)], random::uniform(rng, 0, 3))
                         : random::type(rng, p, 8, 2);
    for (const auto& target : el) {
      const auto expect = oracle::brute_force_reductions(t, target, p);
      EXPECT_EQ(find_reductions(t, target, p), expect) << to_string(t) << " -> " << target;
      nonempty += !expect.empty();
    }
  }
  EXPECT_GT(nonempty, 100U);
}

TEST(Reduction, RenderLinksDrawsOneArcPerLink) {
  const Poset p({"a"}, {});
  const auto t = parse_type("a a^r a", p);
  const auto text = render_links(Reduction{{{0, 1}}, 2, "a"}, t);
  EXPECT_NE(text.find("a a^r a"), std::string::npos);
  EXPECT_NE(text.find("\\_"), std::string::npos);
}
