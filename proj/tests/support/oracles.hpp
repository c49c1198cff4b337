#pragma once

// Reference implementations the tests compare the library against. They
// share data types with the library but none of its algorithms.

#include <string>
#include <vector>

#include "pgsem/funcmodel.hpp"
#include "pgsem/pregroup/lexicon.hpp"
#include "pgsem/pregroup/reduction.hpp"

namespace pgsem::oracle {

/// Every perfect matching of all positions but one, filtered down to the
/// planar, contractible ones with a valid survivor. Sorted like
/// find_reductions. Exponential; meant for short strings.
std::vector<pregroup::Reduction> brute_force_reductions(const pregroup::Type& flat, const pregroup::BasicType& target,
                                                        const pregroup::Poset& poset);

/// Evaluates the sentence by building one dense tensor per word (indices
/// = the factors of its type, inclusions read as identities) and summing
/// over every link of the reduction. Truth-typed results come back as an
/// SVector, entity-typed ones as an EntityVector.
funcmodel::Value dense_eval(const World& world, const pregroup::Lexicon& lexicon,
                            const std::vector<const pregroup::LexiconEntry*>& words, const pregroup::Reduction& r);

struct Sentence {
  std::string fixture;  // "chips" or "zoo"
  std::string text;
};

/// The sentences both models are checked on.
std::vector<Sentence> fixture_sentences();

}  // namespace pgsem::oracle
