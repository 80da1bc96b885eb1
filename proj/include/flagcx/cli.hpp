#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "flagcx/gtangent.hpp"
#include "flagcx/sampling.hpp"

namespace flagcx {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInvariant = 2, kExitTheorem = 3 };

// "c,nc,g" (also complex/noncomplex/general), one token per M-class in class order.
Combination parse_combination(const TangentModel& model, std::string_view text);
// "c:b:c;nc:a:x[:y];sym:x;..." one entry per M-class; throws ParseError / InvariantViolation.
std::vector<GcsBlock> parse_blocks(const TangentModel& model, std::string_view text);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagcx
