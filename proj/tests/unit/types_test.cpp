#include <gtest/gtest.h>

#include "pgsem/fixtures.hpp"
#include "pgsem/pregroup/types.hpp"
#include "pgsem/random.hpp"

using namespace pgsem;
using namespace pgsem::pregroup;

namespace {
Poset chips_poset() { return Poset::parse(fixtures::chips().poset); }
}  // namespace

TEST(Poset, ClosureOfDeclaredChains) {
  const auto p = chips_poset();
  EXPECT_TRUE(p.leq("c2", "n"));
  EXPECT_TRUE(p.leq("c2", "c2"));
  EXPECT_TRUE(p.leq("gp", "s"));
  EXPECT_FALSE(p.leq("n", "c2"));
  EXPECT_FALSE(p.leq("c1", "n2"));
  EXPECT_EQ(p.elements().size(), 7U);
}

TEST(Poset, RejectsCycles) {
  EXPECT_THROW(Poset::parse("a <= b\nb <= a\n"), std::invalid_argument);
  EXPECT_NO_THROW(Poset::parse("# comment\na\n\nb <= c # trailing\n"));
}

TEST(Type, ParseAndPrint) {
  const auto p = chips_poset();
  const auto t = parse_type("s s^l n2 c2^l n^rr gp^ll", p);
  ASSERT_EQ(t.size(), 6U);
  EXPECT_EQ(t.factors[1], (SimpleType{"s", -1}));
  EXPECT_EQ(t.factors[4], (SimpleType{"n", 2}));
  EXPECT_EQ(t.factors[5], (SimpleType{"gp", -2}));
  EXPECT_EQ(to_string(t), "s s^l n2 c2^l n^rr gp^ll");
  EXPECT_TRUE(parse_type("", p).is_unit());
}

TEST(Type, ParseErrors) {
  const auto p = chips_poset();
  EXPECT_THROW(parse_type("x", p), std::invalid_argument);
  EXPECT_THROW(parse_type("s^q", p), std::invalid_argument);
  EXPECT_THROW(parse_type("s^lr", p), std::invalid_argument);
}

TEST(Type, RoundTripProperty) {
  const auto p = chips_poset();
  auto rng = random::stream(3, "types");
  for (int i = 0; i < 500; ++i) {
    const auto t = random::type(rng, p, 6, 4);
    EXPECT_EQ(parse_type(to_string(t), p), t);
  }
}

TEST(Type, AdjointsAndJuxtaposition) {
  const SimpleType a{"n", 0};
  EXPECT_EQ(adjoint(a, Side::Right), (SimpleType{"n", 1}));
  EXPECT_EQ(adjoint(adjoint(a, Side::Left), Side::Right), a);
  const Type x{{a}}, y{{{"s", 0}}};
  EXPECT_EQ((x * y).size(), 2U);
  EXPECT_TRUE(is_even(SimpleType{"n", -2}));
  EXPECT_FALSE(is_even(SimpleType{"n", -1}));
}

TEST(Type, GeneralisedContractions) {
  const auto p = chips_poset();
  EXPECT_TRUE(contractible({"n", 0}, {"n", 1}, p));
  EXPECT_TRUE(contractible({"n", -1}, {"n", 0}, p));
  EXPECT_TRUE(contractible({"c2", 0}, {"n2", 1}, p));
  EXPECT_FALSE(contractible({"n2", 0}, {"c2", 1}, p));
  EXPECT_TRUE(contractible({"n2", -1}, {"c2", 0}, p));
  EXPECT_FALSE(contractible({"c2", -1}, {"n2", 0}, p));
  EXPECT_FALSE(contractible({"n", 1}, {"n", 0}, p));
  EXPECT_TRUE(contractible({"n", 1}, {"n", 2}, p));
}
