#include <doctest.h>

#include <algorithm>

#include "symdyn/fixtures.hpp"
#include "symdyn/sofic.hpp"
#include "test_util.hpp"

using namespace symdyn;

TEST_SUITE_BEGIN("sofic");

namespace {

bool contains_word(const std::set<Word>& lang, const std::string& w) {
  Word word;
  for (char c : w) word.push_back(std::string(1, c));
  return lang.count(word) > 0;
}

LabelledGraph full_shift_ef() {
  return LabelledGraph{1, {"e", "f"}, {{0, 0, "e"}, {0, 0, "f"}}};
}

}  // namespace

TEST_CASE("language: the even shift up to length 4") {
  auto lang = language(preset_graph("even-shift"), 4);
  CHECK(contains_word(lang, "1001"));
  CHECK(contains_word(lang, "0011"));
  CHECK(contains_word(lang, "0000"));
  CHECK_FALSE(contains_word(lang, "101"));
  CHECK_FALSE(contains_word(lang, "1011"));
  CHECK_FALSE(contains_word(lang, "0101"));
}

TEST_CASE("language: length zero is just the empty word") {
  auto lang = language(preset_graph("even-shift"), 0);
  CHECK(lang.size() == 1);
  CHECK(lang.count(Word{}) == 1);
}

TEST_CASE("language: full 2-shift has all seven short words") {
  auto lang = language(full_shift_ef(), 2);
  CHECK(lang.size() == 7);  // empty, e, f, ee, ef, fe, ff
}

TEST_CASE("essential part drops stranded vertices") {
  LabelledGraph g{3, {"a"}, {{0, 0, "a"}, {0, 1, "a"}}};  // vertex 1 has no out, 2 isolated
  auto ess = essential_part(g);
  CHECK(ess.vertices == 1);
  CHECK(ess.edges.size() == 1);
}

TEST_CASE("empty essential part: language collapses, covers refuse") {
  LabelledGraph dead{2, {"a"}, {{0, 1, "a"}}};
  auto lang = language(dead, 4);
  CHECK(lang.size() == 1);  // only the empty word
  CHECK_THROWS_AS(krieger_cover(dead), DataError);
}

TEST_CASE("krieger cover: even shift reproduces the three-state graph") {
  auto cover = krieger_cover(preset_graph("even-shift"));
  CHECK(cover.cover.vertices == 3);
  CHECK(cover.cover.edges.size() == 5);
  LabelledGraph expected{3,
                         {"0", "1"},
                         {{0, 0, "1"}, {0, 1, "0"}, {0, 2, "1"}, {1, 0, "0"}, {2, 2, "0"}}};
  CHECK(labelled_graph_isomorphic(cover.cover, expected));
}

TEST_CASE("krieger cover: full shift collapses to one state") {
  auto cover = krieger_cover(preset_graph("full:2"));
  CHECK(cover.cover.vertices == 1);
  CHECK(cover.cover.edges.size() == 2);
}

TEST_CASE("krieger cover: regression state count for the odd-shift presentation") {
  auto cover = krieger_cover(preset_graph("odd-shift"));
  CHECK(cover.cover.vertices == 3);
  for (std::size_t len = 0; len <= 8; ++len)
    CHECK(language(cover.cover, len) == language(preset_graph("odd-shift"), len));
}

TEST_CASE("fischer cover: even shift reproduces the two-state graph") {
  auto cover = fischer_cover(preset_graph("even-shift"));
  CHECK(cover.cover.vertices == 2);
  CHECK(labelled_graph_isomorphic(cover.cover, preset_graph("even-shift")));
}

TEST_CASE("fischer cover: full shift and odd shift") {
  CHECK(fischer_cover(preset_graph("full:2")).cover.vertices == 1);
  auto odd = fischer_cover(preset_graph("odd-shift"));
  CHECK(odd.cover.vertices == 2);
  CHECK(language(odd.cover, 8) == language(preset_graph("odd-shift"), 8));
}

TEST_CASE("fischer cover: requires an irreducible shift") {
  LabelledGraph two_loops{2, {"a", "b"}, {{0, 0, "a"}, {1, 1, "b"}}};
  CHECK_FALSE(sofic_irreducible(two_loops));
  CHECK_THROWS_AS(fischer_cover(two_loops), PreconditionError);
  CHECK(sofic_irreducible(preset_graph("even-shift")));
  CHECK(sofic_irreducible(preset_graph("odd-shift")));
}

TEST_CASE("synchronization: the even shift") {
  auto even = preset_graph("even-shift");
  CHECK(is_intrinsically_synchronizing(even, word_from_string(even, "1")).is_yes());
  CHECK(is_intrinsically_synchronizing(even, word_from_string(even, "0011")).is_yes());

  auto v = is_intrinsically_synchronizing(even, word_from_string(even, "000"));
  REQUIRE(v.is_no());
  auto nu = word_from_string(even, v.obstruction["nu"].get<std::string>());
  auto om = word_from_string(even, v.obstruction["omega"].get<std::string>());
  CHECK(confirms_not_synchronizing(even, word_from_string(even, "000"), nu, om));

  // the documented counterexample pair also confirms
  CHECK(confirms_not_synchronizing(even, word_from_string(even, "000"),
                                   word_from_string(even, "01"), word_from_string(even, "10")));
}

TEST_CASE("synchronization: empty word on the full shift") {
  auto full = preset_graph("full:2");
  CHECK(is_intrinsically_synchronizing(full, {}).is_yes());
  auto even = preset_graph("even-shift");
  CHECK(is_intrinsically_synchronizing(even, {}).is_no());
}

TEST_CASE("synchronization: rejects words outside the language") {
  auto even = preset_graph("even-shift");
  CHECK_THROWS_AS(is_intrinsically_synchronizing(even, word_from_string(even, "101")), DataError);
}

TEST_CASE("property: covers present the same language") {
  std::vector<LabelledGraph> catalogue{preset_graph("even-shift"), preset_graph("odd-shift"),
                                       preset_graph("full:2"), preset_graph("golden-mean"),
                                       full_shift_ef()};
  for (const auto& g : catalogue) {
    auto k = krieger_cover(g);
    for (std::size_t len = 0; len <= 8; ++len) CHECK(language(k.cover, len) == language(g, len));
    if (sofic_irreducible(g)) {
      auto f = fischer_cover(g);
      for (std::size_t len = 0; len <= 8; ++len) CHECK(language(f.cover, len) == language(g, len));
    }
  }
}

TEST_CASE("property: fischer states are a subset of krieger states") {
  for (const char* name : {"even-shift", "odd-shift", "full:2", "golden-mean"}) {
    auto k = krieger_cover(preset_graph(name));
    auto f = fischer_cover(preset_graph(name));
    for (const auto& st : f.states)
      CHECK(std::find(k.states.begin(), k.states.end(), st) != k.states.end());
  }
}

TEST_CASE("property: the krieger cover is left-resolving") {
  // at most one incoming edge per (state, label); the left Krieger graph of
  // the even shift is not right-resolving, which the first check witnesses
  auto cover = krieger_cover(preset_graph("even-shift")).cover;
  std::map<std::pair<std::size_t, std::string>, int> out_count;
  for (const auto& e : cover.edges) ++out_count[{e.from, e.label}];
  bool right_resolving = true;
  for (const auto& [k, c] : out_count)
    if (c > 1) right_resolving = false;
  CHECK_FALSE(right_resolving);

  for (const char* name : {"even-shift", "odd-shift", "full:2", "golden-mean"}) {
    auto c = krieger_cover(preset_graph(name)).cover;
    std::map<std::pair<std::size_t, std::string>, int> in_count;
    for (const auto& e : c.edges) ++in_count[{e.to, e.label}];
    for (const auto& [k, cnt] : in_count) CHECK(cnt == 1);
  }
}

TEST_CASE("property: SFT presentations with distinct labels are their own fischer cover") {
  std::mt19937 rng(4444);
  int done = 0;
  while (done < 40) {
    auto a = testutil::random_adjacency(rng, 3, 2);
    auto g = from_matrix_distinct_labels(a);
    if (!sofic_irreducible(g)) continue;
    auto f = fischer_cover(g);
    CHECK(labelled_graph_isomorphic(f.cover, essential_part(g)));
    ++done;
  }
}

TEST_CASE("property: covers do not depend on the presentation") {
  auto even = preset_graph("even-shift");
  auto k0 = krieger_cover(even);
  auto f0 = fischer_cover(even);

  // two disjoint copies present the same shift
  LabelledGraph doubled{4,
                        {"0", "1"},
                        {{0, 0, "1"}, {0, 1, "0"}, {1, 0, "0"},
                         {2, 2, "1"}, {2, 3, "0"}, {3, 2, "0"}}};
  REQUIRE(language(doubled, 8) == language(even, 8));
  CHECK(sofic_irreducible(doubled));
  CHECK(labelled_graph_isomorphic(krieger_cover(doubled).cover, k0.cover));
  CHECK(labelled_graph_isomorphic(fischer_cover(doubled).cover, f0.cover));

  // a redundant, non-right-resolving presentation (extra 1-cycle)
  LabelledGraph redundant{3,
                          {"0", "1"},
                          {{0, 0, "1"}, {0, 1, "0"}, {1, 0, "0"}, {0, 2, "1"}, {2, 0, "1"}}};
  REQUIRE(language(redundant, 8) == language(even, 8));
  CHECK(labelled_graph_isomorphic(krieger_cover(redundant).cover, k0.cover));
  CHECK(labelled_graph_isomorphic(fischer_cover(redundant).cover, f0.cover));
}

TEST_CASE("property: taking the cover is idempotent up to isomorphism") {
  for (const char* name : {"even-shift", "odd-shift", "full:2", "golden-mean"}) {
    auto k = krieger_cover(preset_graph(name));
    CHECK(labelled_graph_isomorphic(krieger_cover(k.cover).cover, k.cover));
    auto f = fischer_cover(preset_graph(name));
    CHECK(labelled_graph_isomorphic(fischer_cover(f.cover).cover, f.cover));
  }
}

TEST_SUITE_END();
