#include <gtest/gtest.h>

#include "pgsem/fixtures.hpp"
#include "pgsem/world.hpp"

using namespace pgsem;

TEST(World, ChipsFixture) {
  const auto w = World::parse_json(fixtures::chips().world);
  EXPECT_EQ(w.space.size(), 30U);
  EXPECT_EQ(w.space.name(0), "a1");
  EXPECT_EQ(w.space.index_of("a30"), 29U);
  const auto& nw = w.attribute("new");
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < nw.size(); ++i)
    if (nw[i]) members.push_back(i + 1);
  EXPECT_EQ(members, (std::vector<std::size_t>{5, 7, 8, 9, 10, 11, 12, 13, 14, 15, 20, 25, 30}));
  EXPECT_EQ(w.primitives, (std::vector<std::string>{"blue", "red", "yellow"}));
  EXPECT_EQ(w.spaces.at("s"), SpaceKind::Truth);
  EXPECT_EQ(w.spaces.at("c2"), SpaceKind::Entity);
}

TEST(World, NamedEntitiesRelationsAndRoles) {
  const auto w = World::parse_json(fixtures::zoo().world);
  EXPECT_EQ(w.space.size(), 5U);
  const auto& chase = w.relations.at("chase");
  EXPECT_EQ(chase.size(), 5U);
  EXPECT_EQ(chase.front(), std::make_pair(w.space.index_of("rex"), w.space.index_of("tom")));
  EXPECT_EQ(w.roles.at("n_sub"), TensorRole::Subject);
  EXPECT_EQ(w.roles.at("n_ob"), TensorRole::Object);
}

TEST(World, Errors) {
  EXPECT_THROW(World::parse_json(R"({"entities": ["x", "x"]})"), std::invalid_argument);
  EXPECT_THROW(World::parse_json(R"({"entities": ["x"], "attributes": {"p": ["y"]}})"), std::exception);
  EXPECT_THROW(World::parse_json(R"({"entities": ["x"], "attributes": {"p": [2]}})"), std::exception);
  EXPECT_THROW(World::parse_json("not json"), std::exception);
  const auto w = World::parse_json(R"({"entities": ["x"]})");
  EXPECT_THROW(w.attribute("p"), std::exception);
  EXPECT_THROW(w.space.index_of("y"), std::out_of_range);
}
