#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "leapfrog/analysis.hpp"
#include "leapfrog/oracle.hpp"
#include "leapfrog/workbench.hpp"
#include "oracles.hpp"

using namespace leapfrog;
using namespace leapfrog::testing;

TEST_CASE("fence_exists examples") {
  Poset p = pair_plus_isolated();
  CHECK(fence_exists(p, arr(p, {"a", "c", "b"}), at(p, "a"), at(p, "b")));
  Poset c = chain3();
  CHECK_FALSE(fence_exists(c, arr(c, {"a", "b", "c"}), at(c, "a"), at(c, "c")));
  Poset d = diamond();
  CHECK_FALSE(fence_exists(d, arr(d, {"0", "x", "y", "1"}), at(d, "0"), at(d, "1")));
}

TEST_CASE("fence queries reject pairs out of order") {
  Poset c = chain3();
  try {
    fence_exists(c, arr(c, {"a", "b", "c"}), at(c, "c"), at(c, "a"));
    FAIL("expected OrderViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderViolation);
  }
  CHECK_THROWS_AS(classify_pair(c, arr(c, {"a", "b", "c"}), at(c, "a"), at(c, "a")), Error);
  CHECK_THROWS_AS(find_fence(c, arr(c, {"a", "b", "c"}), 0, 7), Error);
}

TEST_CASE("find_fence examples") {
  Poset p = pair_plus_isolated();
  auto cert = find_fence(p, arr(p, {"a", "c", "b"}), at(p, "a"), at(p, "b"));
  REQUIRE(cert);
  CHECK(cert->chain == std::vector<ElementIndex>{at(p, "a"), at(p, "c"), at(p, "b")});

  Poset d = diamond();
  auto direct = find_fence(d, arr(d, {"0", "x", "y", "1"}), at(d, "x"), at(d, "y"));
  REQUIRE(direct);
  CHECK(direct->chain == std::vector<ElementIndex>{at(d, "x"), at(d, "y")});

  Poset c = chain3();
  CHECK_FALSE(find_fence(c, arr(c, {"a", "b", "c"}), at(c, "a"), at(c, "b")));
}

TEST_CASE("find_fence prefers the earliest shortest chain") {
  // a < b; c and d both incomparable to a and b: two shortest fences.
  Poset p = make({"a", "b", "c", "d"}, {{"a", "b"}});
  auto cert = find_fence(p, arr(p, {"a", "c", "d", "b"}), at(p, "a"), at(p, "b"));
  REQUIRE(cert);
  CHECK(cert->chain == std::vector<ElementIndex>{at(p, "a"), at(p, "c"), at(p, "b")});
}

TEST_CASE("classify_pair examples") {
  Poset c = chain3();
  CHECK(std::holds_alternative<PreservedByOrder>(classify_pair(c, arr(c, {"c", "b", "a"}), at(c, "c"), at(c, "a"))));
  CHECK(std::holds_alternative<Reversed>(classify_pair(c, arr(c, {"a", "b", "c"}), at(c, "a"), at(c, "b"))));
  Poset p = pair_plus_isolated();
  auto outcome = classify_pair(p, arr(p, {"a", "c", "b"}), at(p, "a"), at(p, "b"));
  REQUIRE(std::holds_alternative<PreservedByFence>(outcome));
  CHECK(std::get<PreservedByFence>(outcome).certificate.chain ==
        std::vector<ElementIndex>{at(p, "a"), at(p, "c"), at(p, "b")});
}

TEST_CASE("critical_pairs examples") {
  Poset c = chain3();
  CHECK(critical_pairs(c, arr(c, {"a", "b", "c"})) ==
        std::vector<IndexPair>{{at(c, "a"), at(c, "b")}, {at(c, "a"), at(c, "c")}, {at(c, "b"), at(c, "c")}});
  Poset p = pair_plus_isolated();
  CHECK(critical_pairs(p, arr(p, {"a", "c", "b"})).empty());
  Poset anti = antichain3();
  CHECK(critical_pairs(anti, arr(anti, {"b", "a", "c"})).empty());
}

TEST_CASE("predict_terminal and predict_swap_count examples") {
  Poset c = chain3();
  CHECK(predict_terminal(c, arr(c, {"a", "b", "c"})) == arr(c, {"c", "b", "a"}));

  Poset d = diamond();
  const Arrangement start = arr(d, {"0", "x", "y", "1"});
  auto runs = oracle::all_maximal_runs(d, start.order);
  REQUIRE(runs.size() == 1);
  CHECK(runs.begin()->first == arr(d, {"1", "x", "y", "0"}).order);
  CHECK(runs.begin()->second == std::set<std::size_t>{5});
  CHECK(predict_terminal(d, start) == arr(d, {"1", "x", "y", "0"}));
  CHECK(predict_swap_count(d, start) == 5);

  Poset p = pair_plus_isolated();
  const Arrangement acb = arr(p, {"a", "c", "b"});
  CHECK(is_terminal(p, acb));
  CHECK(predict_terminal(p, acb) == acb);

  Poset ten = gen_named_poset(ChainSpec{10});
  CHECK(predict_swap_count(ten, identity_arrangement(ten)) == 45);
  Poset anti = gen_named_poset(AntichainSpec{6});
  CHECK(predict_swap_count(anti, gen_random_arrangement(anti, 4)) == 0);
}

namespace {

template <typename Fn>
void for_each_small_instance(Fn&& fn) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Poset& p : enumerate_labeled_posets(n)) {
      Arrangement a = identity_arrangement(p);
      do {
        fn(p, a);
      } while (std::next_permutation(a.order.begin(), a.order.end()));
    }
  }
}

}  // namespace

TEST_CASE("fence search agrees with subset enumeration") {
  for_each_small_instance([](const Poset& p, const Arrangement& a) {
    FenceTable table(p, a);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        const bool expected = oracle::fence_by_subsets(p, a.order, i, j);
        REQUIRE(table.fence(i, j) == expected);
        auto cert = find_fence(p, a, a[i], a[j]);
        REQUIRE(cert.has_value() == expected);
        if (cert) REQUIRE(certificate_valid(p, a, *cert, a[i], a[j]));
      }
    }
  });
  // Larger random instances, where subset enumeration is still cheap.
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Poset p = gen_random_poset(10, 0.35, seed);
    Arrangement a = gen_random_arrangement(p, seed);
    FenceTable table(p, a);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        REQUIRE(table.fence(i, j) == oracle::fence_by_subsets(p, a.order, i, j));
      }
    }
  }
}

TEST_CASE("prediction matches every maximal run on all small instances") {
  for_each_small_instance([](const Poset& p, const Arrangement& a) {
    auto runs = oracle::all_maximal_runs(p, a.order);
    REQUIRE(runs.size() == 1);
    REQUIRE(runs.begin()->first == predict_terminal(p, a).order);
    REQUIRE(runs.begin()->second == std::set<std::size_t>{predict_swap_count(p, a)});
  });
}

TEST_CASE("terminality is the absence of critical pairs") {
  for_each_small_instance([](const Poset& p, const Arrangement& a) {
    REQUIRE(is_terminal(p, a) == critical_pairs(p, a).empty());
  });
}

TEST_CASE("pairwise verdicts match the predicted terminal") {
  for_each_small_instance([](const Poset& p, const Arrangement& a) {
    const Arrangement t = predict_terminal(p, a);
    std::vector<std::size_t> pos(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) pos[t[i]] = i;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        const bool reversed = std::holds_alternative<Reversed>(classify_pair(p, a, a[i], a[j]));
        REQUIRE(reversed == (pos[a[i]] > pos[a[j]]));
      }
    }
  });
}

TEST_CASE("fence status is invariant along runs") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Poset p = gen_random_poset(7, 0.3, seed);
    SwapTrace t = run_to_terminal(p, gen_random_arrangement(p, seed), RandomChoice{seed});
    Arrangement cur = t.initial;
    for (const SwapEvent& ev : t.events) {
      Arrangement next = apply_swap(p, cur, ev.index);
      for (std::size_t i = 0; i < cur.size(); ++i) {
        for (std::size_t j = i + 1; j < cur.size(); ++j) {
          if (i == ev.index && j == ev.index + 1) continue;
          // Any pair other than the swapped one keeps its relative order.
          REQUIRE(fence_exists(p, cur, cur[i], cur[j]) == fence_exists(p, next, cur[i], cur[j]));
        }
      }
      cur = next;
    }
  }
}
