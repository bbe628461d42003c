#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace quatmt::selftest {

// One named invariant check. Runs a randomized verification driven entirely
// by the seed and reports failures on the log stream.
struct Check {
  std::string name;
  std::function<bool(std::uint64_t seed, std::ostream& log)> run;
};

// The full invariant suite, one check per library property.
const std::vector<Check>& all_checks();

// Runs every check, printing one PASS/FAIL line each; returns the number of
// failures.
int run_checks(const std::vector<Check>& checks, std::uint64_t seed,
               std::ostream& out);

}  // namespace quatmt::selftest
