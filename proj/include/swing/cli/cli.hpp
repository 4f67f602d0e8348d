#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "swing/cli/report.hpp"

namespace swing {

// Runs one subcommand (args exclude the program name). Exit status: 0 on
// success, 2 on domain/truncation errors (error JSON on `out`), 1 on usage
// errors.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Arguments that reproduce a report from its embedded "config" object.
std::vector<std::string> arguments_from_config(const Json& config);

}  // namespace swing
