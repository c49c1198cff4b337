#pragma once

// Sentence-level parsing: tokens -> lexicon entries -> reductions.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pgsem/pregroup/diagram.hpp"
#include "pgsem/pregroup/lexicon.hpp"
#include "pgsem/pregroup/reduction.hpp"

namespace pgsem::pregroup {

class UnknownWord : public std::invalid_argument {
 public:
  explicit UnknownWord(const std::string& word) : std::invalid_argument("unknown word '" + word + "'"), word_(word) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

struct Parse {
  std::vector<const LexiconEntry*> words;
  Reduction reduction;

  Type flat() const;
};

/// Lower-cases and splits on whitespace; surrounding punctuation is dropped.
std::vector<std::string> tokenize(std::string_view sentence);

/// Every choice of lexicon entries (first word varying slowest) combined
/// with every reduction to `target`, at most `limit` in total. Throws
/// UnknownWord for a token with no entry.
std::vector<Parse> parse_sentence(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                                  const Poset& poset, const BasicType& target, std::size_t limit = kNoLimit);

/// The target used when none is given: s if the poset declares it and the
/// sentence reduces to it, else the first declared basic type that works.
/// Returns an empty string when the sentence reduces to nothing.
BasicType default_target(const std::vector<std::string>& tokens, const Lexicon& lexicon, const Poset& poset);

MeaningGraph meaning_of(const Parse& p, const Lexicon& lexicon, const Poset& poset);

}  // namespace pgsem::pregroup
