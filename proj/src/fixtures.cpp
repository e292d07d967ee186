#include "symdyn/fixtures.hpp"

#include <map>

#include "symdyn/errors.hpp"

namespace symdyn::fixtures {

namespace {

IntMatrix family_3x3(long k) {
  return IntMatrix::from_ints({{2 * k, 0, 4 * k}, {k, 2 * k, 0}, {k, 2 * k, 0}});
}

IntMatrix family_3x3_partner(long k) {
  return IntMatrix::from_ints({{2 * k, 2 * k, 2 * k}, {k, k, k}, {k, k, k}});
}

const std::map<std::string, IntMatrix>& registry() {
  static const std::map<std::string, IntMatrix> reg = [] {
    std::map<std::string, IntMatrix> r;
    r.emplace("full-1", IntMatrix::from_ints({{1}}));
    r.emplace("full-2", IntMatrix::from_ints({{2}}));
    r.emplace("full-3", IntMatrix::from_ints({{3}}));
    r.emplace("full-4", IntMatrix::from_ints({{4}}));
    r.emplace("full-8", IntMatrix::from_ints({{8}}));
    r.emplace("full-12", IntMatrix::from_ints({{12}}));
    r.emplace("golden-mean", IntMatrix::from_ints({{1, 1}, {1, 0}}));
    r.emplace("ex3.1-A", IntMatrix::from_ints({{1, 1}, {2, 0}}));
    r.emplace("ex3.1-B", IntMatrix::from_ints({{1, 0, 1}, {1, 0, 1}, {1, 1, 0}}));
    r.emplace("ex4.1-A", IntMatrix::from_ints({{1, 1}, {2, 0}}));
    r.emplace("ex4.1-C", IntMatrix::from_ints({{1, 1, 0}, {0, 0, 1}, {2, 2, 0}}));
    r.emplace("ex3.5-A-k3", IntMatrix::from_ints({{1, 3}, {2, 1}}));
    r.emplace("ex3.5-B-k3", IntMatrix::from_ints({{1, 6}, {1, 1}}));
    r.emplace("ex3.5-A-k4", IntMatrix::from_ints({{1, 4}, {3, 1}}));
    r.emplace("ex3.5-B-k4", IntMatrix::from_ints({{1, 12}, {1, 1}}));
    r.emplace("ex5.2-A", IntMatrix::from_ints({{0, 2, 2}, {1, 0, 0}, {1, 0, 0}}));
    r.emplace("ex5.2-B", IntMatrix::from_ints({{0, 3, 1}, {1, 0, 0}, {1, 0, 0}}));
    r.emplace("ex6.2-A", IntMatrix::from_ints({{0, 2}, {2, 0}}));
    r.emplace("ex6.2-B", IntMatrix::from_ints({{2, 0}, {0, 2}}));
    r.emplace("ex6.4-k1", family_3x3(1));
    r.emplace("ex6.4-k2", family_3x3(2));
    r.emplace("ex6.4-k3", family_3x3(3));
    r.emplace("ex6.4-B-k1", family_3x3_partner(1));
    r.emplace("ex6.4-B-k2", family_3x3_partner(2));
    r.emplace("ex6.4-B-k3", family_3x3_partner(3));
    r.emplace("kim-roush-A", IntMatrix::from_ints({{0, 0, 1, 1, 3, 0, 0},
                                                   {1, 0, 0, 0, 3, 0, 0},
                                                   {0, 1, 0, 0, 3, 0, 0},
                                                   {0, 0, 1, 0, 3, 0, 0},
                                                   {0, 0, 0, 0, 0, 0, 1},
                                                   {1, 1, 1, 1, 10, 0, 0},
                                                   {1, 1, 1, 1, 0, 1, 0}}));
    r.emplace("kim-roush-B", IntMatrix::from_ints({{0, 0, 1, 1, 3, 0, 0},
                                                   {1, 0, 0, 0, 0, 0, 0},
                                                   {0, 1, 0, 0, 0, 0, 0},
                                                   {0, 0, 1, 0, 0, 0, 0},
                                                   {0, 0, 0, 0, 0, 0, 1},
                                                   {4, 5, 6, 3, 10, 0, 0},
                                                   {4, 5, 6, 3, 0, 1, 0}}));
    r.emplace("ashley", IntMatrix::from_ints({{1, 0, 1, 0, 0, 0, 0, 0},
                                              {1, 1, 0, 0, 0, 0, 0, 0},
                                              {0, 0, 0, 0, 1, 1, 0, 0},
                                              {0, 1, 0, 0, 0, 0, 0, 1},
                                              {0, 0, 0, 1, 0, 0, 1, 0},
                                              {0, 0, 0, 1, 1, 0, 0, 0},
                                              {0, 0, 1, 0, 0, 0, 0, 1},
                                              {0, 0, 0, 0, 0, 1, 1, 0}}));
    r.emplace("rourke-A", IntMatrix::from_ints({{1, 2, 1}, {1, 1, 0}, {1, 0, 1}}));
    r.emplace("rourke-B", IntMatrix::from_ints({{1, 0, 1, 0, 1},
                                                {0, 1, 1, 1, 0},
                                                {1, 1, 1, 0, 0},
                                                {1, 0, 0, 0, 1},
                                                {0, 1, 0, 1, 0}}));
    r.emplace("cuntz-splice", IntMatrix::from_ints({{2, 1, 0}, {1, 1, 1}, {0, 1, 1}}));
    r.emplace("ex8.7-A", IntMatrix::from_ints({{1, 1, 1}, {1, 1, 1}, {1, 0, 0}}));
    r.emplace("ex8.7-B", IntMatrix::from_ints({{1, 1, 1}, {1, 1, 0}, {1, 1, 0}}));
    r.emplace("ex8.7-base", IntMatrix::from_ints({{1, 2}, {1, 1}}));
    return r;
  }();
  return reg;
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> v;
    for (const auto& [k, m] : registry()) v.push_back(k);
    return v;
  }();
  return all;
}

bool has(const std::string& name) { return registry().count(name) > 0; }

IntMatrix get(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw DataError("unknown fixture: " + name);
  return it->second;
}

}  // namespace symdyn::fixtures
