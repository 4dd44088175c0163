#include "leapfrog/oracle.hpp"

#include <deque>
#include <string>
#include <unordered_map>

#include "leapfrog/analysis.hpp"

namespace leapfrog {

namespace {

struct ArrangementHash {
  std::size_t operator()(const Arrangement& a) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (ElementIndex e : a.order) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using DepthMap = std::unordered_map<Arrangement, std::size_t, ArrangementHash>;

DepthMap explore(const Poset& poset, const Arrangement& start, std::size_t node_limit) {
  validate_arrangement(poset, start);
  DepthMap depth;
  depth.emplace(start, 0);
  std::deque<Arrangement> frontier{start};
  while (!frontier.empty()) {
    Arrangement cur = std::move(frontier.front());
    frontier.pop_front();
    const std::size_t d = depth.at(cur);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!poset.less(cur[i], cur[i + 1])) continue;
      Arrangement next = cur;
      std::swap(next.order[i], next.order[i + 1]);
      auto it = depth.find(next);
      if (it != depth.end()) {
        if (it->second != d + 1) {
          throw Error(ErrorCode::InternalInconsistency, "arrangement reached at depths " +
                                                            std::to_string(it->second) + " and " +
                                                            std::to_string(d + 1));
        }
        continue;
      }
      if (depth.size() >= node_limit) {
        throw Error(ErrorCode::LimitExceeded, "more than " + std::to_string(node_limit) + " reachable arrangements");
      }
      depth.emplace(next, d + 1);
      frontier.push_back(std::move(next));
    }
  }
  return depth;
}

}  // namespace

std::set<Arrangement> reachable_set(const Poset& poset, const Arrangement& arr, std::size_t node_limit) {
  std::set<Arrangement> out;
  for (auto& [a, d] : explore(poset, arr, node_limit)) out.insert(a);
  return out;
}

ConfluenceReport check_confluence(const Poset& poset, const Arrangement& arr, std::size_t node_limit) {
  auto depth = explore(poset, arr, node_limit);
  ConfluenceReport report;
  report.reachable_count = depth.size();
  for (const auto& [a, d] : depth) {
    if (is_terminal(poset, a)) {
      report.terminals.insert(a);
      report.swap_count_set.insert(d);
    }
  }
  report.predicted_terminal = predict_terminal(poset, arr);
  report.predicted_count = predict_swap_count(poset, arr);
  report.confluent = report.terminals.size() == 1;
  report.agrees = report.confluent && *report.terminals.begin() == report.predicted_terminal &&
                  report.swap_count_set.size() == 1 && *report.swap_count_set.begin() == report.predicted_count;
  return report;
}

std::vector<Poset> enumerate_labeled_posets(std::size_t n) {
  if (n > kMaxEnumeratedPosetSize) {
    throw Error(ErrorCode::UnsupportedSize, "n = " + std::to_string(n) + " exceeds " +
                                                std::to_string(kMaxEnumeratedPosetSize));
  }
  std::vector<ElementId> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back({"e" + std::to_string(i)});

  std::vector<IndexPair> slots;
  for (ElementIndex i = 0; i < n; ++i) {
    for (ElementIndex j = i + 1; j < n; ++j) slots.push_back({i, j});
  }
  std::size_t total = 1;
  for (std::size_t k = 0; k < slots.size(); ++k) total *= 3;

  std::vector<Poset> out;
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t code = 0; code < total; ++code) {
    // Each unordered slot is unrelated (0), i < j (1), or j < i (2).
    std::fill(rel.begin(), rel.end(), 0);
    std::vector<IndexPair> pairs;
    std::size_t c = code;
    for (auto [i, j] : slots) {
      switch (c % 3) {
        case 1: rel[i * n + j] = 1; pairs.push_back({i, j}); break;
        case 2: rel[j * n + i] = 1; pairs.push_back({j, i}); break;
        default: break;
      }
      c /= 3;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a) {
      for (std::size_t b = 0; b < n && transitive; ++b) {
        if (!rel[a * n + b]) continue;
        for (std::size_t d = 0; d < n; ++d) {
          if (rel[b * n + d] && !rel[a * n + d]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (transitive) out.push_back(build_poset_indexed(names, pairs));
  }
  return out;
}

}  // namespace leapfrog
