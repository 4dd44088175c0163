#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "leapfrog/oracle.hpp"
#include "leapfrog/poset.hpp"
#include "oracles.hpp"

using namespace leapfrog;
using namespace leapfrog::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("build_poset closes a chain") {
  Poset p = chain3();
  CHECK(p.size() == 3);
  CHECK(p.less(ElementId{"a"}, ElementId{"c"}));
  CHECK_FALSE(p.less(ElementId{"c"}, ElementId{"a"}));
  CHECK(p.relation_count() == 3);
}

TEST_CASE("build_poset singleton and empty") {
  Poset one = make({"a"}, {});
  CHECK(one.size() == 1);
  CHECK(one.relation_count() == 0);
  Poset none = build_poset({}, {});
  CHECK(none.size() == 0);
}

TEST_CASE("build_poset errors") {
  CHECK(code_of([] { make({"a", "a"}, {}); }) == ErrorCode::DuplicateElement);
  CHECK(code_of([] { make({"a", ""}, {}); }) == ErrorCode::EmptyElement);
  CHECK(code_of([] { make({"a", "b"}, {{"a", "c"}}); }) == ErrorCode::UnknownElement);
  CHECK(code_of([] { make({"a", "b"}, {{"b", "b"}}); }) == ErrorCode::ReflexivePair);

  SUBCASE("cycle carries a witness path") {
    try {
      make({"a", "b"}, {{"a", "b"}, {"b", "a"}});
      FAIL("expected CycleDetected");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CycleDetected);
      CHECK(std::string(e.what()).find("a -> b -> a") != std::string::npos);
    }
  }
  SUBCASE("longer cycle witness is a shortest cycle") {
    try {
      make({"p", "q", "r", "s"}, {{"p", "q"}, {"q", "r"}, {"r", "p"}, {"r", "s"}});
      FAIL("expected CycleDetected");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("p -> q -> r -> p") != std::string::npos);
    }
  }
  SUBCASE("unknown element location names the relation side") {
    try {
      make({"a", "b"}, {{"a", "b"}, {"b", "zz"}});
      FAIL("expected UnknownElement");
    } catch (const Error& e) {
      CHECK(e.location() == "/relations/1/1");
    }
  }
}

TEST_CASE("less and incomparable queries") {
  Poset c = chain3();
  CHECK(c.less(ElementId{"a"}, ElementId{"c"}));
  CHECK_FALSE(c.less(ElementId{"c"}, ElementId{"a"}));
  Poset anti = antichain3();
  CHECK_FALSE(anti.less(ElementId{"a"}, ElementId{"b"}));

  Poset d = diamond();
  CHECK(d.incomparable(ElementId{"x"}, ElementId{"y"}));
  CHECK_FALSE(d.incomparable(ElementId{"0"}, ElementId{"1"}));
  CHECK_FALSE(d.incomparable(ElementId{"x"}, ElementId{"x"}));
  CHECK(code_of([&] { d.less(ElementId{"q"}, ElementId{"x"}); }) == ErrorCode::UnknownElement);
}

TEST_CASE("transitive_reduction examples") {
  Poset c = chain3();
  CHECK(transitive_reduction(c) == std::vector<IndexPair>{{0, 1}, {1, 2}});
  Poset d = diamond();
  // elements 0, x, y, 1 at positions 0..3
  CHECK(transitive_reduction(d) == std::vector<IndexPair>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(transitive_reduction(antichain3()).empty());
}

TEST_CASE("closure matches DFS reachability on random generating sets") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 9;
    std::vector<ElementId> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back({"v" + std::to_string(i)});
    // Edges only go forward in a hidden ranking, so the input is acyclic.
    std::vector<ElementIndex> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[i] = static_cast<ElementIndex>(i);
    std::shuffle(rank.begin(), rank.end(), rng);
    std::vector<IndexPair> edges;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (rng() % 4 == 0) edges.push_back({rank[a], rank[b]});
      }
    }
    Poset p = build_poset_indexed(names, edges);
    auto reach = oracle::closure_by_dfs(n, edges);
    for (ElementIndex x = 0; x < n; ++x) {
      for (ElementIndex y = 0; y < n; ++y) REQUIRE(p.less(x, y) == reach[x][y]);
    }
  }
}

TEST_CASE("poset invariants hold on every enumerated poset") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Poset& p : enumerate_labeled_posets(n)) {
      for (ElementIndex x = 0; x < n; ++x) {
        CHECK_FALSE(p.less(x, x));
        for (ElementIndex y = 0; y < n; ++y) {
          int holds = int(p.less(x, y)) + int(p.less(y, x)) + int(p.incomparable(x, y)) + int(x == y);
          REQUIRE(holds == 1);
          for (ElementIndex z = 0; z < n; ++z) {
            if (p.less(x, y) && p.less(y, z)) REQUIRE(p.less(x, z));
          }
        }
      }
      // Closure of the reduction reproduces the poset.
      Poset again = build_poset_indexed(p.elements(), transitive_reduction(p));
      REQUIRE(again == p);
    }
  }
}

TEST_CASE("build_poset is deterministic") {
  Poset a = make({"z", "m", "a"}, {{"z", "m"}, {"m", "a"}});
  Poset b = make({"z", "m", "a"}, {{"z", "m"}, {"m", "a"}});
  CHECK(a == b);
  CHECK(a.elements() == ids({"z", "m", "a"}));
}
