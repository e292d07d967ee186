#include <doctest.h>

#include "symdyn/fixtures.hpp"
#include "symdyn/io.hpp"
#include "symdyn/williams.hpp"
#include "symdyn/witnesses.hpp"
#include "symdyn/zlinalg.hpp"
#include "test_util.hpp"

using namespace symdyn;

TEST_SUITE_BEGIN("witnesses");

namespace {

IntMatrix split_pair_small() { return fixtures::get("ex3.1-A"); }
IntMatrix split_pair_large() { return fixtures::get("ex3.1-B"); }

ElementarySSEWitness corrected_witness() {
  return {IntMatrix::from_ints({{1, 0}, {1, 0}, {0, 1}}),
          IntMatrix::from_ints({{1, 0, 1}, {1, 1, 0}})};
}

}  // namespace

TEST_CASE("elementary SSE: the corrected in-split witness verifies") {
  auto v = verify_elementary_sse(split_pair_large(), split_pair_small(), corrected_witness());
  CHECK(v.is_yes());
}

TEST_CASE("elementary SSE: the printed witness fails with a located mismatch") {
  ElementarySSEWitness printed{IntMatrix::from_ints({{1, 0}, {1, 0}, {1, 1}}),
                               IntMatrix::from_ints({{1, 0, 1}, {0, 1, 0}})};
  auto v = verify_elementary_sse(split_pair_large(), split_pair_small(), printed);
  CHECK(v.is_no());
  CHECK(v.obstruction["equation"] == "A = R.S");
  CHECK(v.obstruction["row"].get<std::size_t>() == 2);  // third row is (1,1,1), not (1,1,0)
}

TEST_CASE("elementary SSE: identity witness on equal matrices") {
  auto a = fixtures::get("ex3.1-A");
  CHECK(verify_elementary_sse(a, a, {a, IntMatrix::identity(2)}).is_yes());
}

TEST_CASE("elementary SSE: shape mismatch raises a structured error") {
  auto a = fixtures::get("ex3.1-A");
  CHECK_THROWS_AS(
      verify_elementary_sse(a, IntMatrix::identity(3), {a, IntMatrix::identity(2)}),
      DimensionError);
}

TEST_CASE("SSE chain: singleton, round trip, corruption") {
  auto a = split_pair_small();
  auto b = split_pair_large();
  CHECK(verify_sse_chain({a}, {}).is_yes());

  // round trip a - b - a with the same witness in both orientations
  auto w = corrected_witness();
  auto v = verify_sse_chain({a, b, a}, {w, w});
  CHECK(v.is_yes());

  auto corrupted = w;
  corrupted.R.at(0, 0) = 5;
  auto bad = verify_sse_chain({a, b, a}, {w, corrupted});
  CHECK(bad.is_no());
  CHECK(bad.obstruction["broken_link"].get<std::size_t>() == 1);
}

TEST_CASE("shift equivalence: the lag-3 data verifies, the lag-2 variant fails") {
  auto a = fixtures::get("ex3.5-A-k3");
  auto b = fixtures::get("ex3.5-B-k3");
  SEWitness w{IntMatrix::from_ints({{8, 3}, {1, 16}}), IntMatrix::from_ints({{2, 3}, {1, 1}}), 3};
  CHECK(verify_shift_equivalence(a, b, w).is_yes());

  w.lag = 2;
  auto v = verify_shift_equivalence(a, b, w);
  CHECK(v.is_no());
  CHECK(v.obstruction["equation"] == "A^l = R.S");
}

TEST_CASE("shift equivalence: an elementary witness reused at lag 1") {
  auto res = out_split(fixtures::get("ex4.1-A"), {0, {{0}, {1}}});
  SEWitness w{res.witness_r, res.witness_s, 1};
  CHECK(verify_shift_equivalence(fixtures::get("ex4.1-A"), res.matrix, w).is_yes());
}

TEST_CASE("balanced SSE: printed witnesses of the amalgamation family") {
  for (long k = 1; k <= 3; ++k) {
    auto a = fixtures::get("ex6.4-k" + std::to_string(k));
    auto b = fixtures::get("ex6.4-B-k" + std::to_string(k));
    BalancedWitness w{IntMatrix::from_ints({{1, 0}, {0, 1}, {0, 1}}),
                      IntMatrix::from_ints({{2 * k, 0, 4 * k}, {k, 2 * k, 0}}),
                      IntMatrix::from_ints({{2 * k, 2 * k, 2 * k}, {k, k, k}})};
    CHECK(verify_balanced(a, b, w).is_yes());
  }
}

TEST_CASE("balanced SSE: derived witness for the four-edge pair") {
  auto a = fixtures::get("ex5.2-A");
  auto b = fixtures::get("ex5.2-B");
  BalancedWitness w{IntMatrix::from_ints({{1, 0}, {0, 1}, {0, 1}}),
                    IntMatrix::from_ints({{0, 2, 2}, {1, 0, 0}}),
                    IntMatrix::from_ints({{0, 3, 1}, {1, 0, 0}})};
  CHECK(verify_balanced(a, b, w).is_yes());
  // both products R.S equal [[0,4],[1,0]]
  CHECK(w.R1 * w.S == IntMatrix::from_ints({{0, 4}, {1, 0}}));
  CHECK(w.R2 * w.S == IntMatrix::from_ints({{0, 4}, {1, 0}}));
}

TEST_CASE("balanced SSE: equal connecting matrices force equal inputs") {
  auto a = fixtures::get("ex5.2-A");
  BalancedWitness w{IntMatrix::from_ints({{1, 0}, {0, 1}, {0, 1}}),
                    IntMatrix::from_ints({{0, 2, 2}, {1, 0, 0}}),
                    IntMatrix::from_ints({{0, 2, 2}, {1, 0, 0}})};
  CHECK(verify_balanced(a, a, w).is_yes());
  CHECK(verify_balanced(a, fixtures::get("ex5.2-B"), w).is_no());
}

TEST_CASE("balanced chain: family member to its full-shift amalgamation") {
  auto a = fixtures::get("ex6.4-k1");
  auto mid = fixtures::get("ex6.4-B-k1");
  auto full = IntMatrix::from_ints({{4}});
  BalancedChainLink l1;
  l1.kind = BalancedChainLink::Kind::balanced;
  l1.balanced = BalancedWitness{IntMatrix::from_ints({{1, 0}, {0, 1}, {0, 1}}),
                                IntMatrix::from_ints({{2, 0, 4}, {1, 2, 0}}),
                                IntMatrix::from_ints({{2, 2, 2}, {1, 1, 1}})};
  BalancedChainLink l2;
  l2.kind = BalancedChainLink::Kind::amalgamation;
  CHECK(verify_balanced_chain({a, mid, full}, {l1, l2}).is_yes());
}

TEST_CASE("search: recovers the corrected in-split witness") {
  auto v = search_elementary(split_pair_large(), split_pair_small(), SearchBounds{2, 1});
  REQUIRE(v.is_yes());
  auto r = parse_matrix_text(v.certificate["R"].dump(), MatrixRole::witness);
  auto s = parse_matrix_text(v.certificate["S"].dump(), MatrixRole::witness);
  CHECK(verify_elementary_sse(split_pair_large(), split_pair_small(), {r, s}).is_yes());
}

TEST_CASE("search: trivial self-pair") {
  auto a = fixtures::get("ex3.5-A-k4");
  CHECK(search_elementary(a, a, SearchBounds{1, 1}).is_yes());
  CHECK(search_balanced(a, a, SearchBounds{1, 1}).is_yes());
}

TEST_CASE("search: bound exhaustion reports unknown, never no") {
  auto a = fixtures::get("ex3.5-A-k4");
  auto b = fixtures::get("ex3.5-B-k4");
  auto e = search_elementary(a, b, SearchBounds{2, 2});
  CHECK(e.is_unknown());
  auto bal = search_balanced(a, b, SearchBounds{1, 2});
  CHECK(bal.is_unknown());
}

TEST_CASE("property: split witnesses always verify") {
  std::mt19937 rng(777);
  for (int it = 0; it < 200; ++it) {
    auto a = testutil::random_adjacency(rng, 4, 3);
    std::uniform_int_distribution<std::size_t> vx(0, a.rows() - 1);
    std::size_t v = vx(rng);
    bool do_out = (it % 2 == 0);
    mpz_class deg(0);
    for (std::size_t j = 0; j < a.rows(); ++j) deg += do_out ? a.at(v, j) : a.at(j, v);
    std::size_t d = deg.get_ui();
    std::uniform_int_distribution<std::size_t> nb(1, d);
    std::size_t p = nb(rng);
    SplitSpec spec{v, std::vector<std::vector<std::size_t>>(p)};
    for (std::size_t e = 0; e < d; ++e) {
      std::uniform_int_distribution<std::size_t> bd(0, p - 1);
      spec.blocks[e < p ? e : bd(rng)].push_back(e);
    }
    if (do_out) {
      auto res = out_split(a, spec);
      CHECK(verify_elementary_sse(a, res.matrix, {res.witness_r, res.witness_s}).is_yes());
      SEWitness se{res.witness_r, res.witness_s, 1};
      CHECK(verify_shift_equivalence(a, res.matrix, se).is_yes());
    } else {
      auto res = in_split(a, spec);
      CHECK(verify_elementary_sse(res.matrix, a, {res.witness_r, res.witness_s}).is_yes());
      SEWitness se{res.witness_r, res.witness_s, 1};
      CHECK(verify_shift_equivalence(res.matrix, a, se).is_yes());
    }
  }
}

TEST_CASE("property: witnesses survive simultaneous relabeling") {
  std::mt19937 rng(888);
  for (int it = 0; it < 100; ++it) {
    auto a = testutil::random_adjacency(rng, 4, 2);
    std::size_t v = 0;
    mpz_class deg(0);
    for (std::size_t j = 0; j < a.rows(); ++j) deg += a.at(v, j);
    SplitSpec spec{v, {}};
    for (std::size_t e = 0; e < deg.get_ui(); ++e) spec.blocks.push_back({e});
    auto res = out_split(a, spec);

    auto pa = testutil::random_permutation(rng, a.rows());
    auto pb = testutil::random_permutation(rng, res.matrix.rows());
    // conjugated witness: R' = Pa R Pb^T, S' = Pb S Pa^T
    IntMatrix paM(a.rows(), a.rows()), pbM(res.matrix.rows(), res.matrix.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) paM.at(pa[i], i) = 1;
    for (std::size_t i = 0; i < res.matrix.rows(); ++i) pbM.at(pb[i], i) = 1;
    ElementarySSEWitness w{paM * res.witness_r * pbM.transpose(),
                           pbM * res.witness_s * paM.transpose()};
    CHECK(verify_elementary_sse(a.permuted(pa), res.matrix.permuted(pb), w).is_yes());
  }
}

TEST_CASE("property: accepted shift equivalences preserve the flow data") {
  auto a = fixtures::get("ex3.5-A-k3");
  auto b = fixtures::get("ex3.5-B-k3");
  SEWitness w{IntMatrix::from_ints({{8, 3}, {1, 16}}), IntMatrix::from_ints({{2, 3}, {1, 1}}), 3};
  REQUIRE(verify_shift_equivalence(a, b, w).is_yes());
  CHECK(bowen_franks(a).same_abstract_group(bowen_franks(b)));
  CHECK(det_id_minus(a) == det_id_minus(b));

  auto ka = fixtures::get("kim-roush-A");
  auto kb = fixtures::get("kim-roush-B");
  CHECK(bowen_franks(ka).same_abstract_group(bowen_franks(kb)));
  CHECK(det_id_minus(ka) == det_id_minus(kb));
}

TEST_SUITE_END();
