#pragma once

#include "common.hpp"

#include <iosfwd>

namespace synthts::cli {

void cmd_generate(const RunContext& ctx, std::ostream& out);
void cmd_perturb(const RunContext& ctx, std::ostream& out);
void cmd_analyze(const RunContext& ctx, std::ostream& out);
void cmd_vre(const RunContext& ctx, std::ostream& out);

}  // namespace synthts::cli
