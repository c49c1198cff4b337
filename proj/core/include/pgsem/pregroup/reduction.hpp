#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pgsem/pregroup/types.hpp"

namespace pgsem::pregroup {

/// A reduction T1...Tn -> target, given as a planar set of contraction
/// links over the concatenated simple-type string and one surviving
/// position. Positions are 0-based.
struct Reduction {
  std::vector<std::pair<std::size_t, std::size_t>> links;  // sorted, i < j
  std::size_t survivor = 0;
  BasicType target;

  friend bool operator==(const Reduction&, const Reduction&) = default;
};

Type concatenate(std::span<const Type> types);

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// All reductions of the string to `target`, at most `limit` of them,
/// ordered lexicographically by link list (leftmost link first), then by
/// survivor.
std::vector<Reduction> find_reductions(const Type& flat, const BasicType& target, const Poset& poset,
                                       std::size_t limit = kNoLimit);
std::vector<Reduction> find_reductions(std::span<const Type> types, const BasicType& target, const Poset& poset,
                                       std::size_t limit = kNoLimit);

/// Checks disjointness, planarity, contractibility, coverage and the
/// survivor rule. On failure writes a reason to `why` when given.
bool validate(const Reduction& r, const Type& flat, const Poset& poset, std::string* why = nullptr);

/// One-line rendering, e.g. "links (2,7) (3,6) survivor 1 -> s" (1-based).
std::string to_string(const Reduction& r);

/// Arc diagram of the links under the type string.
std::string render_links(const Reduction& r, const Type& flat);

}  // namespace pgsem::pregroup
