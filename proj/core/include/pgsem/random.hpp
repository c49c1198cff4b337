#pragma once

// Seeded generators for the property suites. Everything is driven by a
// std::mt19937_64 so runs are reproducible from a single seed.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "pgsem/funcmodel.hpp"
#include "pgsem/interp.hpp"
#include "pgsem/pregroup/types.hpp"
#include "pgsem/rational.hpp"

namespace pgsem::random {

using Rng = std::mt19937_64;

/// An independent stream for a named check, so results do not depend on
/// the order checks run in.
Rng stream(std::uint64_t seed, std::string_view name);

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
bool coin(Rng& rng);

/// p/q with 1 <= q <= max_den and 0 <= p <= q.
Rational unit_rational(Rng& rng, int max_den = 12);
/// p/q with |p| <= max_num.
Rational any_rational(Rng& rng, int max_num = 20, int max_den = 12);

RationalVector unit_vector(Rng& rng, std::size_t n, int max_den = 12);
RationalVector any_vector(Rng& rng, std::size_t n, int max_num = 20, int max_den = 12);
RationalVector boolean_vector(Rng& rng, std::size_t n);
/// Nonnegative coefficients, at least one nonzero.
RationalVector nonnegative_vector(Rng& rng, std::size_t n, int max_den = 6);

std::vector<bool> subset(Rng& rng, std::size_t n);
funcmodel::Predicate predicate_on_A(Rng& rng, std::size_t n);
/// May map entities to 0.
funcmodel::Predicate predicate(Rng& rng, std::size_t n);
/// k nonempty blocks; requires 1 <= k <= n.
interp::PartitionScheme partition(Rng& rng, std::size_t n, std::size_t k);

/// A type over the poset's elements with |z| <= max_z.
pregroup::Type type(Rng& rng, const pregroup::Poset& poset, std::size_t max_len, int max_z = 2);

/// The target with `pairs` contractible pairs inserted at random places,
/// so the result always reduces to the target.
pregroup::Type reducible(Rng& rng, const pregroup::Poset& poset, const pregroup::BasicType& target,
                         std::size_t pairs, int max_z = 2);

}  // namespace pgsem::random
