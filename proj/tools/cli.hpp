#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "barbell/hexagon.hpp"

namespace barbell::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kInvariant = 3 };

struct SelfcheckOptions {
  std::int64_t kmax = 12;
  RelatorSource relators = hexagon_relator;  // swapped out by fault-injection tests
};

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

// Runs every invariant in order, stopping at the first failure.
std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& opts);

// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const SelfcheckOptions& selfcheck_defaults = {});

std::string format_structure(const QuotientStructure& q);

}  // namespace barbell::cli
