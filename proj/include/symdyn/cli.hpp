#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace symdyn {

// Exit codes: 0 yes/success, 1 no, 2 unknown, 64 usage, 65 data.
struct CommandResult {
  int exit_code{0};
  nlohmann::json output;
  std::string diagnostics;
};

CommandResult dispatch(const std::vector<std::string>& args);

// Parses argv, prints the JSON result, returns the exit code.
int run_cli(int argc, char** argv);

}  // namespace symdyn
