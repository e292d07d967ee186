#include <doctest.h>

#include "symdyn/fixtures.hpp"
#include "symdyn/williams.hpp"
#include "symdyn/witnesses.hpp"
#include "symdyn/zlinalg.hpp"
#include "test_util.hpp"

using namespace symdyn;

TEST_SUITE_BEGIN("williams");

TEST_CASE("total amalgamation: frozen examples") {
  auto c = fixtures::get("ex4.1-C");
  auto trace = total_amalgamation(c);
  CHECK(trace.final_matrix == IntMatrix::from_ints({{1, 1}, {2, 0}}));
  CHECK(trace.steps.size() == 1);
  CHECK(trace.partition == std::vector<std::size_t>{0, 0, 1});

  auto b = fixtures::get("ex3.1-B");
  CHECK(total_amalgamation(b).final_matrix == b);

  auto partner = fixtures::get("ex6.4-B-k1");
  CHECK(total_amalgamation(partner).final_matrix == IntMatrix::from_ints({{4}}));
}

TEST_CASE("permutation equivalence") {
  auto a = IntMatrix::from_ints({{1, 1}, {2, 0}});
  auto id = permutation_equivalent(a, a);
  REQUIRE(id.has_value());
  CHECK(*id == std::vector<std::size_t>{0, 1});

  auto swapped = IntMatrix::from_ints({{0, 2}, {1, 1}});
  auto p = permutation_equivalent(a, swapped);
  REQUIRE(p.has_value());
  CHECK(a.permuted(*p) == swapped);

  CHECK_FALSE(permutation_equivalent(a, IntMatrix::identity(3)).has_value());
}

TEST_CASE("one-sided conjugacy decisions") {
  CHECK(decide_one_sided_conjugacy(fixtures::get("ex4.1-A"), fixtures::get("ex4.1-C")).is_yes());
  CHECK(decide_one_sided_conjugacy(fixtures::get("ex3.1-A"), fixtures::get("ex3.1-B")).is_no());
  CHECK(decide_one_sided_conjugacy(fixtures::get("ex6.4-k1"), IntMatrix::from_ints({{4}})).is_no());
}

TEST_CASE("out-split reproduces the three-vertex graph and its witness") {
  auto a = fixtures::get("ex4.1-A");
  SplitSpec spec{0, {{0}, {1}}};
  auto res = out_split(a, spec);
  CHECK(res.matrix == fixtures::get("ex4.1-C"));
  CHECK(verify_elementary_sse(a, res.matrix, {res.witness_r, res.witness_s}).is_yes());
}

TEST_CASE("in-split reproduces the three-vertex graph and its witness") {
  auto a = fixtures::get("ex3.1-A");
  SplitSpec spec{0, {{0, 2}, {1}}};
  auto res = in_split(a, spec);
  CHECK(res.matrix == fixtures::get("ex3.1-B"));
  CHECK(verify_elementary_sse(res.matrix, a, {res.witness_r, res.witness_s}).is_yes());
}

TEST_CASE("single-block split leaves the matrix unchanged") {
  auto a = fixtures::get("ex3.1-A");
  CHECK(out_split(a, {0, {{0, 1}}}).matrix == a);
  CHECK(in_split(a, {0, {{0, 1, 2}}}).matrix == a);
}

TEST_CASE("split specs are validated") {
  auto a = fixtures::get("ex3.1-A");
  CHECK_THROWS_AS(out_split(a, {0, {{0}, {}}}), SpecError);
  CHECK_THROWS_AS(out_split(a, {0, {{0}}}), SpecError);        // not covering
  CHECK_THROWS_AS(out_split(a, {0, {{0}, {0, 1}}}), SpecError);  // repeated
  CHECK_THROWS_AS(out_split(a, {5, {{0}}}), SpecError);
}

TEST_CASE("symbol expansion") {
  auto two = IntMatrix::from_ints({{2}});
  auto expanded = symbol_expand(two, 0, 0);
  CHECK(expanded == fixtures::get("golden-mean"));
  CHECK(det_id_minus(two) == det_id_minus(expanded));

  CHECK(symbol_expand(IntMatrix::from_ints({{1}}), 0, 0) == IntMatrix::from_ints({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(symbol_expand(fixtures::get("ex3.1-A"), 1, 1), DataError);
}

TEST_CASE("property: amalgamation is order-independent up to permutation") {
  std::mt19937 rng(111);
  for (int it = 0; it < 200; ++it) {
    auto a = testutil::random_adjacency(rng, 6, 3);
    auto canonical = total_amalgamation(a);
    auto shuffled = total_amalgamation(a, [&](const auto& classes) {
      std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
      return pick(rng);
    });
    CHECK(permutation_equivalent(canonical.final_matrix, shuffled.final_matrix).has_value());
  }
}

TEST_CASE("property: the trace partition reproduces the final matrix") {
  std::mt19937 rng(1212);
  for (int it = 0; it < 200; ++it) {
    auto a = testutil::random_adjacency(rng, 6, 3);
    auto trace = total_amalgamation(a);
    const auto& part = trace.partition;
    const auto& fin = trace.final_matrix;
    // no two identical columns remain
    for (std::size_t j1 = 0; j1 < fin.cols(); ++j1)
      for (std::size_t j2 = j1 + 1; j2 < fin.cols(); ++j2) {
        bool same = true;
        for (std::size_t i = 0; i < fin.rows(); ++i)
          if (fin.at(i, j1) != fin.at(i, j2)) same = false;
        CHECK_FALSE(same);
      }
    // summed rows against any column representative give the final entries
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t c = 0; c < fin.rows(); ++c) {
        mpz_class sum(0);
        for (std::size_t i = 0; i < a.rows(); ++i)
          if (part[i] == c) sum += a.at(i, j);
        CHECK(sum == fin.at(c, part[j]));
      }
  }
}

TEST_CASE("property: amalgamation is idempotent") {
  std::mt19937 rng(222);
  for (int it = 0; it < 200; ++it) {
    auto a = testutil::random_adjacency(rng, 6, 3);
    auto final1 = total_amalgamation(a).final_matrix;
    auto again = total_amalgamation(final1);
    CHECK(again.final_matrix == final1);
    CHECK(again.steps.empty());
  }
}

namespace {

SplitSpec random_out_split_spec(std::mt19937& rng, const IntMatrix& a) {
  std::uniform_int_distribution<std::size_t> vx(0, a.rows() - 1);
  std::size_t v = vx(rng);
  mpz_class deg(0);
  for (std::size_t j = 0; j < a.cols(); ++j) deg += a.at(v, j);
  std::size_t d = deg.get_ui();
  std::uniform_int_distribution<std::size_t> nblocks(1, d);
  std::size_t p = nblocks(rng);
  SplitSpec spec{v, std::vector<std::vector<std::size_t>>(p)};
  for (std::size_t e = 0; e < d; ++e) {
    std::uniform_int_distribution<std::size_t> bd(0, p - 1);
    spec.blocks[e < p ? e : bd(rng)].push_back(e);  // keep every block nonempty
  }
  return spec;
}

}  // namespace

TEST_CASE("property: out-splits produce one-sided conjugate matrices") {
  std::mt19937 rng(333);
  int done = 0;
  while (done < 200) {
    auto a = testutil::random_adjacency(rng, 4, 2);
    auto spec = random_out_split_spec(rng, a);
    auto res = out_split(a, spec);
    CHECK(decide_one_sided_conjugacy(a, res.matrix).is_yes());
    ++done;
  }
}

TEST_CASE("property: the conjugacy decision is an equivalence relation") {
  std::mt19937 rng(444);
  std::vector<IntMatrix> sample;
  for (int i = 0; i < 8; ++i) sample.push_back(testutil::random_adjacency(rng, 3, 2));
  // seed the sample with known conjugate pairs
  sample.push_back(fixtures::get("ex4.1-A"));
  sample.push_back(fixtures::get("ex4.1-C"));
  for (const auto& a : sample) CHECK(decide_one_sided_conjugacy(a, a).is_yes());
  for (const auto& a : sample)
    for (const auto& b : sample)
      CHECK(decide_one_sided_conjugacy(a, b).is_yes() ==
            decide_one_sided_conjugacy(b, a).is_yes());
  for (const auto& a : sample)
    for (const auto& b : sample)
      for (const auto& c : sample) {
        if (decide_one_sided_conjugacy(a, b).is_yes() &&
            decide_one_sided_conjugacy(b, c).is_yes())
          CHECK(decide_one_sided_conjugacy(a, c).is_yes());
      }
}

TEST_CASE("property: symbol expansion preserves the flow data, not entropy") {
  std::mt19937 rng(555);
  for (int it = 0; it < 200; ++it) {
    auto a = testutil::random_adjacency(rng, 5, 3);
    // expand the first present edge
    std::size_t i = 0, j = 0;
    bool found = false;
    for (i = 0; i < a.rows() && !found; ++i)
      for (j = 0; j < a.cols(); ++j)
        if (a.at(i, j) > 0) {
          found = true;
          break;
        }
    --i;
    auto e = symbol_expand(a, i, j);
    CHECK(det_id_minus(e) == det_id_minus(a));
    CHECK(bowen_franks(e).same_abstract_group(bowen_franks(a)));
  }
  // entropy genuinely changes across the expansion of the full 2-shift
  auto two = IntMatrix::from_ints({{2}});
  auto gm = symbol_expand(two, 0, 0);
  CHECK(entropy(two).value == doctest::Approx(std::log(2.0)));
  CHECK(entropy(gm).value == doctest::Approx(0.4812118250596035).epsilon(1e-9));
  CHECK(std::abs(entropy(two).value - entropy(gm).value) > 0.2);
}

TEST_SUITE_END();
