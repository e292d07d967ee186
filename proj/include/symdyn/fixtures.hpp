#pragma once

#include <string>
#include <vector>

#include "symdyn/int_matrix.hpp"

namespace symdyn::fixtures {

// Built-in matrices addressable by name (CLI: @name). Names are stable
// identifiers used throughout the test suites.
const std::vector<std::string>& names();
bool has(const std::string& name);
IntMatrix get(const std::string& name);

}  // namespace symdyn::fixtures
