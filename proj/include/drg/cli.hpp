#pragma once

#include "drg/enumerate.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace drg {

// Stable JSON renderings: insertion-ordered fields, exact values as strings.
std::string report_json(const FeasibilityReport& rep, int indent = 2);
std::string record_json(const FeasibilityReport& rep);  // single line, for streams

// Runs one subcommand.  Exit status: 0 no failure, 1 failure, 2 usage or
// parse error, 3 indeterminate.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drg
