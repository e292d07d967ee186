#include "symdyn/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "symdyn/io.hpp"

namespace symdyn {

namespace {

// Vertices that carry a right-infinite path (out-degrees never die).
std::vector<char> live_vertices(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<char> live(n, 1);
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!live[i]) continue;
      bool has_out = false;
      for (std::size_t j = 0; j < n; ++j)
        if (live[j] && a.at(i, j) > 0) has_out = true;
      if (!has_out) {
        live[i] = 0;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return live;
}

}  // namespace

EdgeShift EdgeShift::canonical(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("edge shift requires a square matrix");
  if (!a.is_nonnegative()) throw DataError("edge shift requires a nonnegative matrix");
  EdgeShift s;
  s.matrix = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (mpz_class t = 0; t < a.at(i, j); ++t)
        s.symbols.push_back(
            {i, j, "e" + std::to_string(i) + "_" + std::to_string(j) + "_" + t.get_str()});
  if (s.symbols.empty()) throw DataError("edge shift of the zero matrix is empty");
  return s;
}

EdgeShift EdgeShift::with_symbols(const IntMatrix& a, std::vector<EdgeSymbol> symbols) {
  auto s = canonical(a);
  // validate the custom symbol list against the matrix
  IntMatrix counts(a.rows(), a.cols());
  std::set<std::string> names;
  for (const auto& sym : symbols) {
    if (sym.from >= a.rows() || sym.to >= a.cols()) throw DataError("edge endpoint out of range");
    if (!names.insert(sym.name).second) throw DataError("repeated edge name: " + sym.name);
    counts.at(sym.from, sym.to) += 1;
  }
  if (counts != a) throw DataError("edge list does not match the adjacency matrix");
  s.symbols = std::move(symbols);
  return s;
}

int EdgeShift::symbol_index(const std::string& name) const {
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i].name == name) return static_cast<int>(i);
  throw DataError("unknown edge symbol: " + name);
}

std::vector<std::vector<int>> EdgeShift::words(std::size_t length) const {
  // Only edges between live vertices occur in the one-sided shift.
  auto live = live_vertices(matrix);
  std::vector<int> usable;
  for (std::size_t s = 0; s < symbols.size(); ++s)
    if (live[symbols[s].from] && live[symbols[s].to]) usable.push_back(static_cast<int>(s));
  std::vector<std::vector<int>> out;
  if (length == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur;
  std::function<void()> rec = [&]() {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (int s : usable) {
      if (!cur.empty() && !composable(cur.back(), s)) continue;
      cur.push_back(s);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<int> apply_block_map(const BlockMap& m, const EdgeShift& source,
                                 const std::vector<int>& w) {
  if (w.size() < m.window) throw DataError("word shorter than the block-map window");
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!source.composable(w[i], w[i + 1])) throw DataError("word is not allowed in the source");
  std::vector<int> out;
  for (std::size_t i = 0; i + m.window <= w.size(); ++i) {
    std::vector<int> block(w.begin() + i, w.begin() + i + m.window);
    auto it = m.table.find(block);
    if (it == m.table.end()) throw DataError("block map table is missing an allowed block");
    out.push_back(it->second);
  }
  return out;
}

std::vector<int> apply_block_map_full(const BlockMap& m, const std::vector<int>& w) {
  if (w.size() + m.delay < m.window) throw DataError("word shorter than the block-map window");
  std::vector<int> out;
  for (unsigned i = 0; i < m.delay; ++i) {
    std::size_t prefix = i + m.window - m.delay;
    if (m.boundary.size() <= i) throw DataError("missing boundary table");
    std::vector<int> block(w.begin(), w.begin() + std::min<std::size_t>(prefix, w.size()));
    auto it = m.boundary[i].find(block);
    if (it == m.boundary[i].end()) throw DataError("boundary table is missing a block");
    out.push_back(it->second);
  }
  for (std::size_t i = 0; i + m.window <= w.size(); ++i) {
    std::vector<int> block(w.begin() + i, w.begin() + i + m.window);
    auto it = m.table.find(block);
    if (it == m.table.end()) throw DataError("block map table is missing an allowed block");
    out.push_back(it->second);
  }
  return out;
}

namespace {

bool word_allowed(const EdgeShift& s, const std::vector<int>& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!s.composable(w[i], w[i + 1])) return false;
  return true;
}

std::string word_names(const EdgeShift& s, const std::vector<int>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += s.symbols[w[i]].name;
  }
  return out;
}

}  // namespace

Verdict verify_conjugacy(const BlockMap& m, const EdgeShift& a, const EdgeShift& b,
                         std::size_t L) {
  if (L < m.window) throw DataError("bound must be at least the window size");
  const std::size_t out_len = L - m.window + 1;
  auto source_words = a.words(L);
  std::map<std::vector<int>, std::vector<int>> image_to_prefix;
  std::set<std::vector<int>> images;
  for (const auto& w : source_words) {
    std::vector<int> img;
    try {
      img = apply_block_map(m, a, w);
    } catch (const DataError& e) {
      return Verdict::no({{"reason", "table_incomplete"},
                          {"word", word_names(a, w)},
                          {"detail", e.what()}});
    }
    if (!word_allowed(b, img))
      return Verdict::no(
          {{"reason", "image_not_allowed"}, {"word", word_names(a, w)}, {"image", word_names(b, img)}});
    std::vector<int> prefix(w.begin(), w.begin() + out_len);
    auto [it, fresh] = image_to_prefix.emplace(img, prefix);
    if (!fresh && it->second != prefix)
      return Verdict::no({{"reason", "injectivity"},
                          {"word", word_names(a, w)},
                          {"image", word_names(b, img)}});
    images.insert(img);
  }
  for (const auto& v : b.words(out_len)) {
    if (!images.count(v))
      return Verdict::no({{"reason", "surjectivity"}, {"missing_image", word_names(b, v)}});
  }
  return Verdict::yes({{"bound", L}});
}

namespace {

// sigma^{delta+1} h(x) = sigma^delta h(sigma x) compared at the word level.
std::optional<nlohmann::json> check_shift_identity(const BlockMap& m, const EdgeShift& a,
                                                   unsigned delta,
                                                   const std::vector<std::vector<int>>& words) {
  for (const auto& w : words) {
    auto lhs_full = apply_block_map_full(m, w);
    std::vector<int> shifted(w.begin() + 1, w.end());
    auto rhs_full = apply_block_map_full(m, shifted);
    // lhs: drop delta+1 symbols; rhs: drop delta symbols
    if (lhs_full.size() <= delta + 1 || rhs_full.size() <= delta) continue;
    std::size_t n = std::min(lhs_full.size() - delta - 1, rhs_full.size() - delta);
    for (std::size_t i = 0; i < n; ++i) {
      if (lhs_full[delta + 1 + i] != rhs_full[delta + i]) {
        return nlohmann::json{{"reason", "shift_identity"},
                              {"delay", delta},
                              {"word", word_names(a, w)},
                              {"position", i}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict verify_eventual_conjugacy_map(const BlockMap& m, const BlockMap& inverse,
                                      const EdgeShift& a, const EdgeShift& b, std::size_t L) {
  const std::size_t len_a = L + m.delay + m.window;
  const std::size_t len_b = L + inverse.delay + inverse.window;
  auto words_a = a.words(len_a);
  auto words_b = b.words(len_b);

  // forward images allowed
  for (const auto& w : words_a) {
    std::vector<int> img;
    try {
      img = apply_block_map_full(m, w);
    } catch (const DataError& e) {
      return Verdict::no({{"reason", "table_incomplete"}, {"word", word_names(a, w)}, {"detail", e.what()}});
    }
    if (!word_allowed(b, img))
      return Verdict::no({{"reason", "image_not_allowed"}, {"word", word_names(a, w)}});
  }
  for (const auto& w : words_b) {
    std::vector<int> img;
    try {
      img = apply_block_map_full(inverse, w);
    } catch (const DataError& e) {
      return Verdict::no(
          {{"reason", "inverse_table_incomplete"}, {"word", word_names(b, w)}, {"detail", e.what()}});
    }
    if (!word_allowed(a, img))
      return Verdict::no({{"reason", "inverse_image_not_allowed"}, {"word", word_names(b, w)}});
  }

  if (auto bad = check_shift_identity(m, a, m.delay, words_a)) return Verdict::no(*bad);
  if (auto bad = check_shift_identity(inverse, b, inverse.delay, words_b))
    return Verdict::no(*bad);

  // two-sided composition: h' . h = id and h . h' = id on word overlaps
  for (const auto& w : words_a) {
    auto img = apply_block_map_full(m, w);
    if (img.size() < inverse.window) continue;
    auto back = apply_block_map_full(inverse, img);
    std::size_t n = std::min(back.size(), w.size());
    for (std::size_t i = 0; i < n; ++i)
      if (back[i] != w[i])
        return Verdict::no({{"reason", "composition"},
                            {"word", word_names(a, w)},
                            {"position", i}});
  }
  for (const auto& w : words_b) {
    auto img = apply_block_map_full(inverse, w);
    if (img.size() < m.window) continue;
    auto back = apply_block_map_full(m, img);
    std::size_t n = std::min(back.size(), w.size());
    for (std::size_t i = 0; i < n; ++i)
      if (back[i] != w[i])
        return Verdict::no({{"reason", "inverse_composition"},
                            {"word", word_names(b, w)},
                            {"position", i}});
  }
  return Verdict::yes({{"bound", L}, {"delay", m.delay}, {"inverse_delay", inverse.delay}});
}

Verdict search_conjugacy(const EdgeShift& a, const EdgeShift& b, unsigned k_max, std::size_t L) {
  for (unsigned k = 1; k <= k_max; ++k) {
    auto blocks = a.words(k);
    if (blocks.empty()) continue;
    // order blocks so consecutive constraints bind early
    std::map<std::vector<int>, std::size_t> block_index;
    for (std::size_t i = 0; i < blocks.size(); ++i) block_index[blocks[i]] = i;
    // overlap pairs from allowed (k+1)-words
    std::vector<std::vector<std::pair<std::size_t, bool>>> constraints(blocks.size());
    for (const auto& w : a.words(k + 1)) {
      std::vector<int> b1(w.begin(), w.end() - 1), b2(w.begin() + 1, w.end());
      std::size_t i1 = block_index[b1], i2 = block_index[b2];
      constraints[i2].push_back({i1, true});   // i1 precedes i2
      constraints[i1].push_back({i2, false});  // i2 follows i1
    }
    std::vector<long> img(blocks.size(), -1);
    BlockMap candidate;
    candidate.window = k;
    std::function<bool(std::size_t)> assign = [&](std::size_t idx) -> bool {
      if (idx == blocks.size()) {
        candidate.table.clear();
        for (std::size_t i = 0; i < blocks.size(); ++i) candidate.table[blocks[i]] = img[i];
        return verify_conjugacy(candidate, a, b, L).is_yes();
      }
      for (std::size_t t = 0; t < b.symbols.size(); ++t) {
        bool ok = true;
        for (const auto& [other, precedes] : constraints[idx]) {
          if (img[other] < 0) continue;
          if (precedes) {
            if (!b.composable(img[other], static_cast<int>(t))) ok = false;
          } else {
            if (!b.composable(static_cast<int>(t), img[other])) ok = false;
          }
          if (!ok) break;
        }
        if (!ok) continue;
        img[idx] = static_cast<long>(t);
        if (assign(idx + 1)) return true;
        img[idx] = -1;
      }
      return false;
    };
    if (assign(0)) {
      return Verdict::yes({{"window", k},
                           {"map", block_map_to_json(candidate, a, b)},
                           {"bound", L}});
    }
  }
  return Verdict::unknown("no block map with window <= " + std::to_string(k_max) +
                          " verifies at bound " + std::to_string(L));
}

nlohmann::json edge_shift_to_json(const EdgeShift& s) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : s.symbols)
    edges.push_back({{"name", e.name}, {"from", e.from}, {"to", e.to}});
  return edges;
}

nlohmann::json block_map_to_json(const BlockMap& m, const EdgeShift& source,
                                 const EdgeShift& target) {
  nlohmann::json j;
  j["window"] = m.window;
  j["delay"] = m.delay;
  j["source_edges"] = edge_shift_to_json(source);
  j["target_edges"] = edge_shift_to_json(target);
  nlohmann::json table = nlohmann::json::object();
  for (const auto& [block, out] : m.table) {
    std::string key;
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) key += ',';
      key += source.symbols[block[i]].name;
    }
    table[key] = target.symbols[out].name;
  }
  j["table"] = table;
  nlohmann::json boundary = nlohmann::json::array();
  for (const auto& bt : m.boundary) {
    nlohmann::json one = nlohmann::json::object();
    for (const auto& [block, out] : bt) {
      std::string key;
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) key += ',';
        key += source.symbols[block[i]].name;
      }
      one[key] = target.symbols[out].name;
    }
    boundary.push_back(one);
  }
  j["boundary"] = boundary;
  return j;
}

BlockMap block_map_from_json(const nlohmann::json& j, const EdgeShift& source,
                             const EdgeShift& target) {
  BlockMap m;
  if (!j.contains("window")) throw DataError("block map JSON needs a \"window\"");
  m.window = j["window"].get<unsigned>();
  if (m.window == 0) throw DataError("window must be positive");
  m.delay = j.value("delay", 0u);
  auto parse_block = [&](const std::string& key) {
    std::vector<int> block;
    std::string tok;
    std::istringstream in(key);
    while (std::getline(in, tok, ','))
      if (!tok.empty()) block.push_back(source.symbol_index(tok));
    return block;
  };
  if (!j.contains("table") || !j["table"].is_object())
    throw DataError("block map JSON needs a \"table\" object");
  for (const auto& [key, val] : j["table"].items()) {
    auto block = parse_block(key);
    if (block.size() != m.window) throw DataError("table key \"" + key + "\" has wrong length");
    m.table[block] = target.symbol_index(val.get<std::string>());
  }
  if (j.contains("boundary")) {
    for (const auto& bt : j["boundary"]) {
      std::map<std::vector<int>, int> one;
      for (const auto& [key, val] : bt.items())
        one[parse_block(key)] = target.symbol_index(val.get<std::string>());
      m.boundary.push_back(std::move(one));
    }
  }
  if (m.boundary.size() < m.delay) throw DataError("delay requires one boundary table per position");
  return m;
}

}  // namespace symdyn
