#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "eqc/jsonio.hpp"

namespace eqc {

// Dispatch a parsed CLI request ("<module> <op>" plus the JSON payload) to
// the corresponding library operation.  Deterministic: equal inputs produce
// equal JSON.
jsonio::json run_command(const std::string& command,
                         const jsonio::json& payload);

// Full command-line entry point (flags, payload loading, envelope and exit
// codes: 0 success, 2 validation error, 3 cap exceeded).  `stdin_data`
// substitutes for the process stdin so tests stay hermetic.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, const std::string& stdin_data = "");

}  // namespace eqc
