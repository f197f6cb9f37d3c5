#pragma once

// Command-line surface: gen, analyze, factor, spectrum, compose, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage or format error.

#include <iosfwd>
#include <string>
#include <vector>

namespace hermop {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace hermop
