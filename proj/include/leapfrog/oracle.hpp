#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "leapfrog/engine.hpp"
#include "leapfrog/poset.hpp"

namespace leapfrog {

inline constexpr std::size_t kDefaultNodeLimit = 50'000;
inline constexpr std::size_t kMaxEnumeratedPosetSize = 4;

/// Every arrangement reachable from `arr` (including `arr`), found by
/// breadth-first search. Throws LimitExceeded once more than `node_limit`
/// distinct arrangements would be stored.
std::set<Arrangement> reachable_set(const Poset& poset, const Arrangement& arr,
                                    std::size_t node_limit = kDefaultNodeLimit);

struct ConfluenceReport {
  std::size_t reachable_count = 0;
  std::set<Arrangement> terminals;
  /// Lengths of all maximal swap sequences from the start.
  std::set<std::size_t> swap_count_set;
  Arrangement predicted_terminal;
  std::size_t predicted_count = 0;
  bool confluent = false;
  bool agrees = false;
};

/// Exhaustive check that exactly one terminal arrangement is reachable and
/// that it, and the swap count, match the analytic prediction. BFS depth is
/// asserted to be path independent (InternalInconsistency otherwise), so the
/// maximal sequence lengths are the depths of the terminals.
ConfluenceReport check_confluence(const Poset& poset, const Arrangement& arr,
                                  std::size_t node_limit = kDefaultNodeLimit);

/// All strict partial orders on labels e1..en, each once, in a fixed order.
/// Throws UnsupportedSize for n > 4.
std::vector<Poset> enumerate_labeled_posets(std::size_t n);

}  // namespace leapfrog
