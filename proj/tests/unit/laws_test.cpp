#include <gtest/gtest.h>

#include "pgsem/laws.hpp"

using namespace pgsem;

class LawSuite : public ::testing::TestWithParam<std::string> {};

TEST_P(LawSuite, PassesOnASmallSample) {
  const auto results = laws::run_suite(GetParam(), {99, 60});
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) {
    EXPECT_EQ(r.suite, GetParam());
    EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    EXPECT_GT(r.cases, 0U) << r.name;
  }
}

INSTANTIATE_TEST_SUITE_P(All, LawSuite, ::testing::ValuesIn(laws::suite_names()));

TEST(Laws, DeterministicForAFixedSeed) {
  const auto a = laws::run_suite("funcmodel", {5, 40});
  const auto b = laws::run_suite("funcmodel", {5, 40});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].cases, b[i].cases);
    EXPECT_EQ(a[i].detail, b[i].detail);
  }
}

TEST(Laws, UnknownSuite) { EXPECT_THROW(laws::run_suite("nosuch", {}), std::invalid_argument); }
