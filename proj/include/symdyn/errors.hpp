#pragma once

#include <stdexcept>
#include <string>

namespace symdyn {

// Thrown when an operation requires square or shape-compatible input.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown on malformed or out-of-contract input data (parse failures,
// negative entries in adjacency roles, words outside a language, ...).
class DataError : public std::invalid_argument {
 public:
  explicit DataError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a classifier's theorem hypotheses are not met
// (e.g. reducible or permutation input to the flow classifier).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a split specification is not a valid partition.
class SpecError : public std::invalid_argument {
 public:
  explicit SpecError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace symdyn
