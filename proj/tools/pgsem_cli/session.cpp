#include "session.hpp"

#include <fstream>
#include <sstream>

#include "pgsem/rational.hpp"
#include "pgsem/world.hpp"

namespace pgsem::cli {

using nlohmann::ordered_json;

namespace {

std::string read_or(const std::string& path, std::string_view fallback, const char* what) {
  if (path.empty()) return std::string(fallback);
  std::ifstream in(path);
  if (!in) throw Failure{kUsage, std::string("cannot read ") + what + " file '" + path + "'"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string binding_text(const pregroup::Binding& b) {
  return std::string(pregroup::to_string(b.kind)) + " " + b.name;
}

std::string block_label(const interp::PartitionScheme& s, std::size_t j) {
  return j < s.labels().size() ? s.labels()[j] : "c" + std::to_string(j + 1);
}

}  // namespace

Session::Session(const Inputs& in) : f_(World{}) {
  const auto chips = fixtures::chips();
  const auto poset_text = read_or(in.poset, chips.poset, "poset");
  const auto lexicon_text = read_or(in.lexicon, chips.lexicon, "lexicon");
  const auto world_text = read_or(in.world, chips.world, "world");
  try {
    poset_ = pregroup::Poset::parse(poset_text);
    lexicon_ = in.lexicon.ends_with(".json") ? pregroup::Lexicon::parse_json(lexicon_text, poset_)
                                             : pregroup::Lexicon::parse_tsv(lexicon_text, poset_);
    f_ = funcmodel::FunctionalModel(World::parse_json(world_text));
  } catch (const std::exception& e) {
    throw Failure{kUsage, std::string("invalid input: ") + e.what()};
  }
  try {
    scheme_ = interp::concept_space_of(f_.world()).working();
    mc_ = interp::build_MC(f_, lexicon_, scheme_);
  } catch (const std::exception& e) {
    mc_error_ = e.what();
  }
}

std::vector<pregroup::Parse> Session::parses(const std::string& sentence, const std::string& target) const {
  const auto tokens = pregroup::tokenize(sentence);
  if (tokens.empty()) throw Failure{kUsage, "empty sentence"};
  try {
    const auto t = target.empty() ? pregroup::default_target(tokens, lexicon_, poset_) : target;
    if (t.empty()) throw Failure{kParse, "no reduction: '" + sentence + "' is not grammatical"};
    if (!poset_.contains(t)) throw Failure{kUsage, "unknown target type '" + t + "'"};
    auto ps = pregroup::parse_sentence(tokens, lexicon_, poset_, t);
    if (ps.empty()) throw Failure{kParse, "no reduction of '" + sentence + "' to " + t};
    return ps;
  } catch (const pregroup::UnknownWord& e) {
    throw Failure{kParse, e.what()};
  }
}

std::string vector_text(const RationalVector& v) { return to_string(std::span<const Rational>(v)); }

ordered_json vector_json(const RationalVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

ordered_json parse_report(const Session& s, const std::string& sentence, const std::string& target) {
  const auto ps = s.parses(sentence, target);
  ordered_json out;
  out["sentence"] = sentence;
  out["target"] = ps.front().reduction.target;
  out["parses"] = ordered_json::array();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto& p = ps[i];
    ordered_json j;
    j["index"] = i;
    j["words"] = ordered_json::array();
    for (const auto* w : p.words)
      j["words"].push_back({{"word", w->word}, {"type", pregroup::to_string(w->type)}, {"binding", binding_text(w->binding)}});
    j["type"] = pregroup::to_string(p.flat());
    j["reduction"] = pregroup::to_string(p.reduction);
    j["links"] = pregroup::render_links(p.reduction, p.flat());
    try {
      j["meaning"] = pregroup::meaning_of(p, s.lexicon(), s.poset()).to_string();
    } catch (const std::exception& e) {
      j["meaning_error"] = e.what();
    }
    out["parses"].push_back(std::move(j));
  }
  return out;
}

std::string render_parse_report(const ordered_json& r) {
  std::ostringstream os;
  const auto& parses = r["parses"];
  os << "sentence: " << r["sentence"].get<std::string>() << "\n";
  os << parses.size() << " reduction" << (parses.size() == 1 ? "" : "s") << " to "
     << r["target"].get<std::string>() << "\n";
  for (const auto& p : parses) {
    os << "\n[" << p["index"].get<std::size_t>() << "] " << p["reduction"].get<std::string>() << "\n";
    for (const auto& w : p["words"])
      os << "    " << w["word"].get<std::string>() << " : " << w["type"].get<std::string>() << "  ("
         << w["binding"].get<std::string>() << ")\n";
    os << p["links"].get<std::string>();
    if (p.contains("meaning")) os << "meaning graph:\n" << p["meaning"].get<std::string>();
    else os << "meaning graph unavailable: " << p["meaning_error"].get<std::string>() << "\n";
  }
  return os.str();
}

ordered_json eval_report(const Session& s, const std::string& sentence, const std::string& target,
                         std::size_t reduction) {
  const auto ps = s.parses(sentence, target);
  if (reduction >= ps.size())
    throw Failure{kUsage, "reduction index " + std::to_string(reduction) + " out of range (" +
                              std::to_string(ps.size()) + " found)"};
  const auto& p = ps[reduction];
  const auto& space = s.functional().space();

  ordered_json out;
  out["sentence"] = sentence;
  out["reduction"] = {{"index", reduction}, {"of", ps.size()}, {"text", pregroup::to_string(p.reduction)}};

  funcmodel::Value fv;
  try {
    fv = funcmodel::eval_functional(s.functional(), pregroup::meaning_of(p, s.lexicon(), s.poset()));
  } catch (const std::exception& e) {
    throw Failure{kEval, std::string("functional model: ") + e.what()};
  }
  ordered_json f;
  f["value"] = funcmodel::to_string(fv, space);
  if (const auto* sv = std::get_if<funcmodel::SVector>(&fv)) {
    f["top"] = to_string(sv->top);
    f["bot"] = to_string(sv->bot);
    f["class"] = std::string(funcmodel::to_string(funcmodel::truth_class(*sv).tag));
  } else {
    f["vector"] = vector_json(std::get<funcmodel::EntityVector>(fv));
  }
  out["F"] = f;

  ordered_json words = ordered_json::array();
  const auto& mc = s.induced();
  for (const auto* w : p.words) {
    ordered_json j{{"word", w->word}, {"type", pregroup::to_string(w->type)}, {"binding", binding_text(w->binding)}};
    if (!mc) j["M_C"] = nullptr;
    else if (mc->is_negation(*w)) j["M_C"] = "¬";
    else if (mc->model.contains(w->word, w->type)) j["M_C"] = vector_json(mc->model.at(w->word, w->type));
    else j["M_C"] = nullptr;
    words.push_back(std::move(j));
  }
  out["words"] = words;

  if (!mc) {
    out["M_C"] = {{"error", s.induced_error()}};
    out["verdict"] = "error";
    return out;
  }
  interp::Comparison c;
  try {
    c = interp::compare_models(s.functional(), *mc, p.words, fv);
  } catch (const std::exception& e) {
    throw Failure{kEval, std::string("induced model: ") + e.what()};
  }
  ordered_json m;
  m["product"] = vector_json(c.product.value);
  m["trace"] = c.product.trace;
  const auto& scheme = mc->scheme;
  m["basis"] = scheme.labels();
  if (c.product.value.size() == scheme.k()) {
    const auto pr = interp::state_probability(scheme, c.product.value);
    m["probability"] = to_string(pr);
    m["probability_decimal"] = to_decimal(pr);
  }
  out["M_C"] = m;

  ordered_json cmp;
  if (c.sentence) {
    cmp["F_class"] = std::string(funcmodel::to_string(c.f_class));
    cmp["M_C_class"] = std::string(funcmodel::to_string(c.m_class));
  } else if (!c.j_of_f.empty()) {
    cmp["J_of_F"] = vector_json(c.j_of_f);
    ordered_json diff = ordered_json::array();
    for (auto j : c.differing)
      diff.push_back({{"block", block_label(scheme, j)},
                      {"J_of_F", to_string(c.j_of_f[j])},
                      {"product", to_string(c.product.value[j])}});
    cmp["differing"] = diff;
  }
  ordered_json failing = ordered_json::array();
  for (auto j : c.failing_blocks) failing.push_back(block_label(scheme, j));
  cmp["lemma1_failing_blocks"] = failing;
  if (!c.note.empty()) cmp["note"] = c.note;
  out["comparison"] = cmp;
  out["verdict"] = std::string(interp::to_string(c.verdict));
  return out;
}

std::string render_eval_report(const ordered_json& r) {
  std::ostringstream os;
  const auto str = [](const ordered_json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); };
  const auto vec = [](const ordered_json& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].get<std::string>();
    return s + ")";
  };
  os << "sentence:  " << str(r["sentence"]) << "\n";
  os << "reduction: [" << r["reduction"]["index"].get<std::size_t>() << " of " << r["reduction"]["of"].get<std::size_t>()
     << "] " << str(r["reduction"]["text"]) << "\n\n";

  os << "word-by-word\n";
  for (const auto& w : r["words"]) {
    os << "  " << str(w["word"]) << " : " << str(w["type"]) << "  (" << str(w["binding"]) << ")";
    if (w["M_C"].is_array()) os << "  M_C = " << vec(w["M_C"]);
    else if (w["M_C"].is_string()) os << "  M_C: " << str(w["M_C"]) << " (operator)";
    os << "\n";
  }

  const auto& f = r["F"];
  os << "\nF:   " << str(f["value"]);
  if (f.contains("class")) os << "  [" << str(f["class"]) << "]";
  os << "\n";

  const auto& m = r["M_C"];
  if (m.contains("error")) {
    os << "M_C: unavailable: " << str(m["error"]) << "\n";
  } else {
    os << "M_C: " << vec(m["product"]);
    if (m.contains("probability"))
      os << "  P = " << str(m["probability"]) << " (" << str(m["probability_decimal"]) << ")";
    os << "\n";
    for (const auto& t : m["trace"]) os << "     " << str(t) << "\n";
  }

  if (r.contains("comparison")) {
    const auto& c = r["comparison"];
    if (c.contains("F_class")) os << "classes: F " << str(c["F_class"]) << ", M_C " << str(c["M_C_class"]) << "\n";
    if (c.contains("J_of_F")) os << "J_C(F): " << vec(c["J_of_F"]) << "\n";
    if (c.contains("differing"))
      for (const auto& d : c["differing"])
        os << "  differs at " << str(d["block"]) << ": " << str(d["J_of_F"]) << " vs " << str(d["product"]) << "\n";
    if (!c["lemma1_failing_blocks"].empty()) {
      os << "blocks where two properties vary:";
      for (const auto& b : c["lemma1_failing_blocks"]) os << " " << str(b);
      os << "\n";
    }
    if (c.contains("note")) os << "note: " << str(c["note"]) << "\n";
  }
  os << "verdict: " << str(r["verdict"]) << "\n";
  return os.str();
}

}  // namespace pgsem::cli
