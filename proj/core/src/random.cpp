#include "pgsem/random.hpp"

#include <algorithm>
#include <string>

namespace pgsem::random {

Rng stream(std::uint64_t seed, std::string_view name) {
  // FNV-1a, so streams are the same on every platform.
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ULL;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return Rng(seq);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

Rational unit_rational(Rng& rng, int max_den) {
  const int q = std::uniform_int_distribution<int>(1, max_den)(rng);
  const int p = std::uniform_int_distribution<int>(0, q)(rng);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational any_rational(Rng& rng, int max_num, int max_den) {
  const int q = std::uniform_int_distribution<int>(1, max_den)(rng);
  const int p = std::uniform_int_distribution<int>(-max_num, max_num)(rng);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

RationalVector unit_vector(Rng& rng, std::size_t n, int max_den) {
  RationalVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(unit_rational(rng, max_den));
  return v;
}

RationalVector any_vector(Rng& rng, std::size_t n, int max_num, int max_den) {
  RationalVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(any_rational(rng, max_num, max_den));
  return v;
}

RationalVector boolean_vector(Rng& rng, std::size_t n) {
  RationalVector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(coin(rng) ? 1 : 0);
  return v;
}

RationalVector nonnegative_vector(Rng& rng, std::size_t n, int max_den) {
  RationalVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(coin(rng) ? Rational(0) : unit_rational(rng, max_den) * 3);
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) v[uniform(rng, 0, n - 1)] = 1;
  return v;
}

std::vector<bool> subset(Rng& rng, std::size_t n) {
  std::vector<bool> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = coin(rng);
  return s;
}

funcmodel::Predicate predicate_on_A(Rng& rng, std::size_t n) {
  return funcmodel::Predicate::from_indicator(subset(rng, n));
}

funcmodel::Predicate predicate(Rng& rng, std::size_t n) {
  using funcmodel::TruthValue;
  std::vector<TruthValue> v;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = uniform(rng, 0, 2);
    v.push_back(r == 0 ? TruthValue::Zero : r == 1 ? TruthValue::Top : TruthValue::Bot);
  }
  return funcmodel::Predicate(std::move(v));
}

interp::PartitionScheme partition(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<std::size_t>> blocks(k);
  for (std::size_t j = 0; j < k; ++j) blocks[j].push_back(perm[j]);
  for (std::size_t i = k; i < n; ++i) blocks[uniform(rng, 0, k - 1)].push_back(perm[i]);
  return interp::PartitionScheme::from_blocks(n, std::move(blocks));
}

pregroup::Type type(Rng& rng, const pregroup::Poset& poset, std::size_t max_len, int max_z) {
  pregroup::Type t;
  const auto& el = poset.elements();
  const std::size_t len = uniform(rng, 0, max_len);
  for (std::size_t i = 0; i < len; ++i)
    t.factors.push_back({el[uniform(rng, 0, el.size() - 1)], std::uniform_int_distribution<int>(-max_z, max_z)(rng)});
  return t;
}

pregroup::Type reducible(Rng& rng, const pregroup::Poset& poset, const pregroup::BasicType& target,
                         std::size_t pairs, int max_z) {
  const auto& el = poset.elements();
  pregroup::Type t{{{target, 0}}};
  for (std::size_t k = 0; k < pairs; ++k) {
    const int z = std::uniform_int_distribution<int>(-max_z, max_z - 1)(rng);
    const auto& a = el[uniform(rng, 0, el.size() - 1)];
    std::vector<pregroup::BasicType> partners;
    for (const auto& b : el)
      if (z % 2 == 0 ? poset.leq(a, b) : poset.leq(b, a)) partners.push_back(b);
    const auto& b = partners[uniform(rng, 0, partners.size() - 1)];
    const auto at = static_cast<long>(uniform(rng, 0, t.size()));
    t.factors.insert(t.factors.begin() + at, {pregroup::SimpleType{a, z}, pregroup::SimpleType{b, z + 1}});
  }
  return t;
}

}  // namespace pgsem::random
