#pragma once

// Executable law suites over all modules. Each check draws from its own
// seeded stream and checks run concurrently; results are reported sorted
// by name so the output does not depend on scheduling.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pgsem::laws {

struct Options {
  std::uint64_t seed = 20240601;
  std::size_t iters = 1000;
};

struct Result {
  std::string suite;
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;
};

/// pregroup, funcmodel, vmodel, conceptlogic, theorem1, transitive.
std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite.
std::vector<Result> run_suite(std::string_view suite, const Options& opts);
std::vector<Result> run_all(const Options& opts);

}  // namespace pgsem::laws
