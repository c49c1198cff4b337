#include "pgsem/fixtures.hpp"

#include <stdexcept>

#include "pgsem/funcmodel.hpp"
#include "pgsem/interp.hpp"
#include "pgsem/pregroup/meaning.hpp"

namespace pgsem::fixtures {

Grammar load(const Sources& s) {
  auto poset = pregroup::Poset::parse(s.poset);
  auto lexicon = pregroup::Lexicon::parse_tsv(s.lexicon, poset);
  return Grammar{std::move(poset), std::move(lexicon), World::parse_json(s.world)};
}

namespace {

funcmodel::Value evaluate(const Grammar& g, const funcmodel::FunctionalModel& f, const std::string& sentence,
                          const std::string& target) {
  const auto parses = pregroup::parse_sentence(pregroup::tokenize(sentence), g.lexicon, g.poset, target, 1);
  if (parses.empty()) throw std::runtime_error("'" + sentence + "' does not reduce to " + target);
  return funcmodel::eval_functional(f, pregroup::meaning_of(parses.front(), g.lexicon, g.poset));
}

}  // namespace

std::vector<GoldenCheck> chips_golden() {
  const auto g = load(chips());
  const funcmodel::FunctionalModel f(g.world);
  const auto& space = f.space();
  std::vector<GoldenCheck> out;
  auto add = [&](std::string name, std::string expected, std::string actual) {
    out.push_back({std::move(name), std::move(expected), std::move(actual)});
  };
  auto value = [&](const std::string& sentence, const std::string& target) {
    return funcmodel::to_string(evaluate(g, f, sentence, target), space);
  };

  add("F(new squares)", "a11 + a12 + a13 + a14 + a15 + a20", value("new squares", "n2"));
  add("F(new triangles)", "a5 + a7 + a8 + a9 + a10", value("new triangles", "n2"));
  add("F(new circles)", "a25 + a30", value("new circles", "n2"));
  const auto no_blue = evaluate(g, f, "no triangles are blue", "s");
  add("F(no triangles are blue)", "10·⊤ + 0·⊥", funcmodel::to_string(no_blue, space));
  add("class(no triangles are blue)", "true",
      std::string(funcmodel::to_string(funcmodel::truth_class(std::get<funcmodel::SVector>(no_blue)).tag)));
  const auto tri = f.vector("triangle");
  add("red(triangles)", "9·⊤ + 1·⊥", funcmodel::to_string(funcmodel::apply_predicate(f.predicate("red"), tri)));
  add("yellow(triangles)", "4·⊤ + 6·⊥",
      funcmodel::to_string(funcmodel::apply_predicate(f.predicate("yellow"), tri)));

  const auto scheme = interp::concept_space_of(g.world).working();
  std::string m;
  for (auto x : scheme.sizes()) m += (m.empty() ? "" : ", ") + std::to_string(x);
  add("block sizes m", "(5, 8, 6, 2, 9)", "(" + m + ")");

  auto count = [&](const std::string& attr, std::size_t block) {
    const auto& ind = g.world.attribute(attr);
    std::size_t k = 0;
    for (auto a : scheme.blocks().at(block)) k += ind[a] ? 1 : 0;
    return std::to_string(k);
  };
  add("k_s1", "5", count("square", 0));
  add("k_s2", "5", count("square", 1));
  add("k_c4", "1", count("circle", 3));
  add("k_c5", "9", count("circle", 4));
  add("k_t3", "6", count("triangle", 2));
  add("k_t2", "3", count("triangle", 1));
  add("k_t4", "1", count("triangle", 3));

  auto J = [&](const std::string& attr) { return interp::interpret(g.world.attribute(attr), scheme); };
  add("J(square)", "(1, 5/8, 0, 0, 0)", to_string(J("square")));
  add("J(triangle)", "(0, 3/8, 1, 1/2, 0)", to_string(J("triangle")));
  add("J(circle)", "(0, 0, 0, 1/2, 1)", to_string(J("circle")));
  add("J(new)", "(1/5, 1, 1/6, 1/2, 2/9)", to_string(J("new")));

  auto J_of_F = [&](const std::string& phrase) {
    return to_string(interp::interpret(std::get<funcmodel::EntityVector>(evaluate(g, f, phrase, "n2")), scheme));
  };
  add("J(F(new squares))", "(1/5, 5/8, 0, 0, 0)", J_of_F("new squares"));
  add("J(new) ⊙ J(square)", "(1/5, 5/8, 0, 0, 0)", to_string(vecmodel::pointwise(J("new"), J("square"))));
  add("J(F(new triangles))", "(0, 3/8, 1/6, 1/2, 0)", J_of_F("new triangles"));
  add("J(new) ⊙ J(triangle)", "(0, 3/8, 1/6, 1/4, 0)", to_string(vecmodel::pointwise(J("new"), J("triangle"))));

  const auto failing = interp::lemma1_failing_blocks(funcmodel::Predicate::from_indicator(g.world.attribute("new")),
                                                     funcmodel::Predicate::from_indicator(g.world.attribute("triangle")),
                                                     scheme);
  std::string blocks;
  for (auto j : failing) blocks += (blocks.empty() ? "" : ", ") + scheme.labels()[j];
  add("blocks where new and triangle both vary", "c4", blocks);
  add("P(new)", "13/30", to_string(interp::state_probability(scheme, J("new"))));
  add("P(square)", "1/3", to_string(interp::state_probability(scheme, J("square"))));
  return out;
}

}  // namespace pgsem::fixtures
