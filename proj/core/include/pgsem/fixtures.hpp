#pragma once

// Built-in worlds, compiled from data/ so that the chips example runs with
// no files at hand.

#include <string>
#include <string_view>
#include <vector>

#include "pgsem/pregroup/lexicon.hpp"
#include "pgsem/pregroup/types.hpp"
#include "pgsem/world.hpp"

namespace pgsem::fixtures {

struct Sources {
  std::string_view world;
  std::string_view lexicon;
  std::string_view poset;
};

/// Thirty chips in three shapes and three colours.
Sources chips();
/// Cats, dogs and who chases whom, for the transitive fragment.
Sources zoo();

struct Grammar {
  pregroup::Poset poset;
  pregroup::Lexicon lexicon;
  World world;
};

Grammar load(const Sources& s);

struct GoldenCheck {
  std::string name;
  std::string expected;
  std::string actual;

  bool ok() const { return expected == actual; }
};

/// Recomputes the worked chips numbers (sentence values, block sizes,
/// shape counts and vectors, J values and ⊙ products) and pairs each with
/// its expected rendering.
std::vector<GoldenCheck> chips_golden();

}  // namespace pgsem::fixtures
