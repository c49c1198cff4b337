#include "pgsem/pregroup/meaning.hpp"

#include <cctype>
#include <sstream>

namespace pgsem::pregroup {

Type Parse::flat() const {
  Type t;
  for (const auto* w : words) t = t * w->type;
  return t;
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  std::istringstream is{std::string(sentence)};
  for (std::string tok; is >> tok;) {
    std::string w;
    for (unsigned char c : tok)
      if (std::isalnum(c) || c == '_' || c == '-' || c == '\'') w += static_cast<char>(std::tolower(c));
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

std::vector<Parse> parse_sentence(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                                  const Poset& poset, const BasicType& target, std::size_t limit) {
  std::vector<std::vector<const LexiconEntry*>> choices;
  for (const auto& t : tokens) {
    auto c = lexicon.lookup(t);
    if (c.empty()) throw UnknownWord(t);
    choices.push_back(std::move(c));
  }
  std::vector<Parse> out;
  std::vector<std::size_t> pick(tokens.size(), 0);
  while (out.size() < limit) {
    Parse base;
    for (std::size_t i = 0; i < tokens.size(); ++i) base.words.push_back(choices[i][pick[i]]);
    for (auto& r : find_reductions(base.flat(), target, poset, limit - out.size())) {
      Parse p = base;
      p.reduction = std::move(r);
      out.push_back(std::move(p));
    }
    // Odometer with the last word varying fastest.
    std::size_t i = tokens.size();
    while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

BasicType default_target(const std::vector<std::string>& tokens, const Lexicon& lexicon, const Poset& poset) {
  std::vector<BasicType> candidates;
  if (poset.contains("s")) candidates.push_back("s");
  for (const auto& b : poset.elements())
    if (b != "s") candidates.push_back(b);
  for (const auto& b : candidates)
    if (!parse_sentence(tokens, lexicon, poset, b, 1).empty()) return b;
  return {};
}

MeaningGraph meaning_of(const Parse& p, const Lexicon& lexicon, const Poset& poset) {
  return meaning_expression(p.words, lexicon, p.reduction, poset);
}

}  // namespace pgsem::pregroup
