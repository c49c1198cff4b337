#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgsem/fixtures.hpp"
#include "pgsem/funcmodel.hpp"
#include "pgsem/interp.hpp"
#include "pgsem/pregroup/meaning.hpp"

namespace pgsem::cli {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kEval = 3, kLaw = 4 };

/// Thrown with the exit code the failure maps to.
struct Failure {
  Exit code;
  std::string message;
};

struct Inputs {
  std::string world, lexicon, poset;  // empty: embedded chips fixture
};

class Session {
 public:
  explicit Session(const Inputs& in);

  const pregroup::Poset& poset() const { return poset_; }
  const pregroup::Lexicon& lexicon() const { return lexicon_; }
  const funcmodel::FunctionalModel& functional() const { return f_; }
  const interp::PartitionScheme& scheme() const { return scheme_; }
  /// Empty when the lexicon has words build_MC refuses; the reason is kept.
  const std::optional<interp::InducedModel>& induced() const { return mc_; }
  const std::string& induced_error() const { return mc_error_; }

  /// Throws Failure(kParse) for unknown words and ungrammatical input.
  std::vector<pregroup::Parse> parses(const std::string& sentence, const std::string& target) const;

 private:
  pregroup::Poset poset_;
  pregroup::Lexicon lexicon_;
  funcmodel::FunctionalModel f_;
  interp::PartitionScheme scheme_;
  std::optional<interp::InducedModel> mc_;
  std::string mc_error_;
};

std::string vector_text(const RationalVector& v);
nlohmann::ordered_json vector_json(const RationalVector& v);

nlohmann::ordered_json parse_report(const Session& s, const std::string& sentence, const std::string& target);
std::string render_parse_report(const nlohmann::ordered_json& report);

/// An error verdict is part of the report, not a failure.
nlohmann::ordered_json eval_report(const Session& s, const std::string& sentence, const std::string& target,
                                   std::size_t reduction);
std::string render_eval_report(const nlohmann::ordered_json& report);

}  // namespace pgsem::cli
