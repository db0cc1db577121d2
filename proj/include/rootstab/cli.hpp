#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rootstab {

/// Full command dispatch: parses args (without the program name), runs one
/// command, renders the result document to `out`. Structured errors go to
/// `err` with a nonzero return. Deterministic output for fixed inputs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rootstab
