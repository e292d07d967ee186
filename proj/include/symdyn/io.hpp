#pragma once

#include <string>

#include <json.hpp>

#include "symdyn/int_matrix.hpp"
#include "symdyn/zlinalg.hpp"

namespace symdyn {

enum class MatrixRole {
  adjacency,  // square not required here, but entries must be nonnegative
  witness,    // rectangular, nonnegative
  any         // arbitrary integer entries
};

// Large integers are serialized as decimal strings when they do not fit in
// a JSON number; both forms are accepted on input.
nlohmann::json mpz_to_json(const mpz_class& x);
mpz_class mpz_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntMatrix& m);

// Accepts {"rows": [[...]]} JSON or the whitespace format
// "R C\n<R lines of C integers>". Rejects negative entries unless the role
// allows them; errors carry line/column where available.
IntMatrix parse_matrix_text(const std::string& text, MatrixRole role);
IntMatrix parse_matrix_file(const std::string& path, MatrixRole role);

nlohmann::json group_to_json(const FGAbelianGroup& g);
FGAbelianGroup group_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);

}  // namespace symdyn
