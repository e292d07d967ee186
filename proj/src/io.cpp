#include "symdyn/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace symdyn {

nlohmann::json mpz_to_json(const mpz_class& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

mpz_class mpz_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw DataError("not an integer literal: " + j.get<std::string>());
    }
  }
  throw DataError("expected an integer or decimal string, got " + j.dump());
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(mpz_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"rows", rows}};
}

namespace {

IntMatrix matrix_from_json(const nlohmann::json& j, MatrixRole role) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
    throw DataError("matrix JSON must be an object with a nonempty \"rows\" array");
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& jr : j["rows"]) {
    if (!jr.is_array()) throw DataError("matrix rows must be arrays");
    std::vector<mpz_class> row;
    for (const auto& je : jr) row.push_back(mpz_from_json(je));
    rows.push_back(std::move(row));
  }
  auto m = IntMatrix::from_rows(std::move(rows));
  if (role != MatrixRole::any && !m.is_nonnegative())
    throw DataError("negative entry rejected for a nonnegative matrix role");
  return m;
}

IntMatrix matrix_from_whitespace(const std::string& text, MatrixRole role) {
  std::istringstream in(text);
  std::size_t r = 0, c = 0;
  if (!(in >> r >> c) || r == 0 || c == 0)
    throw DataError("whitespace matrix format: line 1 must be \"R C\" with positive counts");
  std::vector<std::vector<mpz_class>> rows(r, std::vector<mpz_class>(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      std::string tok;
      if (!(in >> tok))
        throw DataError("whitespace matrix format: missing entry at line " + std::to_string(i + 2) +
                        ", column " + std::to_string(j + 1));
      try {
        rows[i][j] = mpz_class(tok);
      } catch (const std::invalid_argument&) {
        throw DataError("whitespace matrix format: bad integer \"" + tok + "\" at line " +
                        std::to_string(i + 2) + ", column " + std::to_string(j + 1));
      }
      if (role != MatrixRole::any && rows[i][j] < 0)
        throw DataError("negative entry at line " + std::to_string(i + 2) + ", column " +
                        std::to_string(j + 1) + " rejected for a nonnegative matrix role");
    }
  std::string trailing;
  if (in >> trailing) throw DataError("whitespace matrix format: trailing content \"" + trailing + "\"");
  return IntMatrix::from_rows(std::move(rows));
}

}  // namespace

IntMatrix parse_matrix_text(const std::string& text, MatrixRole role) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw DataError("empty matrix input");
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError(std::string("matrix JSON parse error: ") + e.what());
    }
    return matrix_from_json(j, role);
  }
  return matrix_from_whitespace(text, role);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntMatrix parse_matrix_file(const std::string& path, MatrixRole role) {
  return parse_matrix_text(read_file(path), role);
}

nlohmann::json group_to_json(const FGAbelianGroup& g) {
  nlohmann::json j;
  j["torsion"] = nlohmann::json::array();
  for (const auto& d : g.torsion) j["torsion"].push_back(mpz_to_json(d));
  j["free_rank"] = g.free_rank;
  if (g.distinguished) {
    j["distinguished"] = nlohmann::json::array();
    for (const auto& x : *g.distinguished) j["distinguished"].push_back(mpz_to_json(x));
  } else {
    j["distinguished"] = nullptr;
  }
  return j;
}

FGAbelianGroup group_from_json(const nlohmann::json& j) {
  FGAbelianGroup g;
  if (!j.is_object() || !j.contains("torsion") || !j.contains("free_rank"))
    throw DataError("group JSON must contain \"torsion\" and \"free_rank\"");
  for (const auto& je : j["torsion"]) {
    mpz_class d = mpz_from_json(je);
    if (d <= 1) throw DataError("torsion factors must be > 1");
    if (!g.torsion.empty() && d % g.torsion.back() != 0)
      throw DataError("torsion factors must form a divisibility chain");
    g.torsion.push_back(d);
  }
  g.free_rank = j["free_rank"].get<std::size_t>();
  if (j.contains("distinguished") && !j["distinguished"].is_null()) {
    std::vector<mpz_class> coords;
    for (const auto& je : j["distinguished"]) coords.push_back(mpz_from_json(je));
    if (coords.size() != g.torsion.size() + g.free_rank)
      throw DataError("distinguished element has wrong coordinate count");
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), coords[i].get_mpz_t(), g.torsion[i].get_mpz_t());
      coords[i] = r;
    }
    g.distinguished = std::move(coords);
  }
  return g;
}

}  // namespace symdyn
