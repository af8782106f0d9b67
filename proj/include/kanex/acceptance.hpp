#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kanex {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  std::uint32_t characteristic = 32003;
};

// Runs the ten acceptance criteria, printing one pass/fail line per criterion
// to log. Returns the per-criterion results.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& log);

}  // namespace kanex
