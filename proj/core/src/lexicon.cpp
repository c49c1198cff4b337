#include "pgsem/pregroup/lexicon.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pgsem::pregroup {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.push_back(trim(std::string_view(line).substr(start, tab == std::string::npos ? std::string::npos : tab - start)));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

bool crosses(std::pair<std::size_t, std::size_t> a, std::pair<std::size_t, std::size_t> b) {
  if (a.first > b.first) std::swap(a, b);
  return a.first < b.first && b.first < a.second && a.second < b.second;
}

std::pair<std::size_t, std::size_t> arc(std::size_t x, std::size_t y) { return {std::min(x, y), std::max(x, y)}; }

// The exponent an odd factor at `o` needs to be adjoint to the even factor
// at `e`: x^r sits to the left of x, x^l to the right.
bool adjacent_exponent(const SimpleType& odd, std::size_t o, const SimpleType& even, std::size_t e) {
  return o < e ? odd.z == even.z + 1 : odd.z == even.z - 1;
}

}  // namespace

std::string_view to_string(BindingKind k) {
  switch (k) {
    case BindingKind::Predicate: return "predicate";
    case BindingKind::Relation: return "relation";
    case BindingKind::Projector: return "projector";
    case BindingKind::Vector: return "vector";
    case BindingKind::Logical: return "logical";
    case BindingKind::Identity: return "identity";
  }
  return "?";
}

BindingKind parse_binding_kind(std::string_view s) {
  for (auto k : {BindingKind::Predicate, BindingKind::Relation, BindingKind::Projector, BindingKind::Vector,
                 BindingKind::Logical, BindingKind::Identity})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown binding kind '" + std::string(s) + "'");
}

std::size_t binding_arity(const Binding& b) {
  switch (b.kind) {
    case BindingKind::Vector: return 0;
    case BindingKind::Predicate:
    case BindingKind::Projector:
    case BindingKind::Identity: return 1;
    case BindingKind::Relation: return 2;
    case BindingKind::Logical:
      if (b.name == "not") return 1;
      if (b.name == "and" || b.name == "or" || b.name == "ifthen") return 2;
      throw std::invalid_argument("unknown logical connective '" + b.name + "'");
  }
  return 0;
}

LexicalMorphism lexical_morphism(const LexiconEntry& entry, const Poset& poset) {
  const auto& f = entry.type.factors;
  const std::string where = "entry '" + entry.word + ": " + to_string(entry.type) + "'";
  std::vector<std::size_t> evens, odds;
  for (std::size_t i = 0; i < f.size(); ++i) (is_even(f[i]) ? evens : odds).push_back(i);
  if (evens.empty()) throw std::invalid_argument(where + " has no even factor to serve as output");

  std::size_t head = evens.front();
  if (entry.head) {
    head = *entry.head;
    if (head >= f.size() || !is_even(f[head]))
      throw std::invalid_argument(where + ": head position " + std::to_string(head + 1) + " is not an even factor");
  } else if (evens.size() > 1) {
    throw std::invalid_argument(where + " has " + std::to_string(evens.size()) +
                                " even factors; give the output position in the head column");
  }

  std::vector<std::size_t> others;
  for (auto e : evens)
    if (e != head) others.push_back(e);

  std::vector<LexicalMorphism> solutions;
  std::vector<bool> used(f.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> over;

  auto finish = [&] {
    LexicalMorphism m;
    m.head = head;
    m.output = f[head].base;
    m.overlinks = over;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (const auto& [o, e] : over) arcs.push_back(arc(o, e));
    for (auto o : odds) {
      if (used[o]) continue;
      if (!adjacent_exponent(f[o], o, f[head], head)) return;
      m.input_positions.push_back(o);
      m.inputs.push_back(f[o].base);
      arcs.push_back(arc(o, head));
    }
    for (std::size_t a = 0; a < arcs.size(); ++a)
      for (std::size_t b = a + 1; b < arcs.size(); ++b)
        if (crosses(arcs[a], arcs[b])) return;
    solutions.push_back(std::move(m));
  };

  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == others.size()) {
      finish();
      return;
    }
    const auto e = others[k];
    for (auto o : odds) {
      if (used[o] || !adjacent_exponent(f[o], o, f[e], e) || !poset.leq(f[o].base, f[e].base)) continue;
      used[o] = true;
      over.emplace_back(o, e);
      self(self, k + 1);
      over.pop_back();
      used[o] = false;
    }
  };
  search(search, 0);

  if (solutions.empty()) throw std::invalid_argument(where + ": no planar wiring of the even factors exists");
  if (solutions.size() > 1) throw std::invalid_argument(where + ": wiring of the even factors is ambiguous");
  auto m = std::move(solutions.front());
  m.label = entry.binding.kind == BindingKind::Logical ? entry.binding.name : entry.word;
  return m;
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries, const Poset& poset) : entries_(std::move(entries)) {
  morphisms_.reserve(entries_.size());
  for (const auto& e : entries_) {
    auto m = lexical_morphism(e, poset);
    const auto want = binding_arity(e.binding);
    if (m.arity() != want)
      throw std::invalid_argument("entry '" + e.word + ": " + to_string(e.type) + "' has arity " +
                                  std::to_string(m.arity()) + " but a " + std::string(to_string(e.binding.kind)) +
                                  " binding needs " + std::to_string(want));
    morphisms_.push_back(std::move(m));
  }
}

Lexicon Lexicon::parse_tsv(std::string_view text, const Poset& poset) {
  std::vector<LexiconEntry> entries;
  std::istringstream is{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto cols = split_tabs(line);
    if (cols.size() < 4 || cols.size() > 5)
      throw std::invalid_argument("lexicon line " + std::to_string(line_no) +
                                  ": expected 4 or 5 tab-separated columns (word, type, kind, name[, head])");
    if (line_no == 1 && cols[0] == "word") continue;
    LexiconEntry e;
    e.word = cols[0];
    e.type = parse_type(cols[1], poset);
    e.binding = Binding{parse_binding_kind(cols[2]), cols[3]};
    if (cols.size() == 5 && !cols[4].empty()) {
      const int h = std::stoi(cols[4]);
      if (h < 1) throw std::invalid_argument("lexicon line " + std::to_string(line_no) + ": head is 1-based");
      e.head = static_cast<std::size_t>(h - 1);
    }
    entries.push_back(std::move(e));
  }
  return Lexicon(std::move(entries), poset);
}

Lexicon Lexicon::parse_json(std::string_view text, const Poset& poset) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("lexicon JSON must be an array of entries");
  std::vector<LexiconEntry> entries;
  for (const auto& j : doc) {
    LexiconEntry e;
    e.word = j.at("word").get<std::string>();
    e.type = parse_type(j.at("type").get<std::string>(), poset);
    e.binding = Binding{parse_binding_kind(j.at("kind").get<std::string>()), j.at("name").get<std::string>()};
    if (j.contains("head")) {
      const int h = j.at("head").get<int>();
      if (h < 1) throw std::invalid_argument("lexicon entry '" + e.word + "': head is 1-based");
      e.head = static_cast<std::size_t>(h - 1);
    }
    entries.push_back(std::move(e));
  }
  return Lexicon(std::move(entries), poset);
}

Lexicon Lexicon::load(const std::string& path, const Poset& poset) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) return parse_json(ss.str(), poset);
  return parse_tsv(ss.str(), poset);
}

std::vector<const LexiconEntry*> Lexicon::lookup(std::string_view word) const {
  std::vector<const LexiconEntry*> out;
  for (const auto& e : entries_)
    if (e.word == word) out.push_back(&e);
  return out;
}

const LexicalMorphism& Lexicon::morphism(const LexiconEntry& e) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (&entries_[i] == &e) return morphisms_[i];
  throw std::out_of_range("entry does not belong to this lexicon");
}

}  // namespace pgsem::pregroup
