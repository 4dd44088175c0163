#include "leapfrog/poset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace leapfrog {

namespace {

std::string element_location(std::size_t i) { return "/elements/" + std::to_string(i); }
std::string relation_location(std::size_t r, int side) {
  return "/relations/" + std::to_string(r) + "/" + std::to_string(side);
}

// Shortest cycle through `start` in the direct (unclosed) relation graph.
std::vector<ElementIndex> cycle_witness(std::size_t n, const std::vector<std::vector<ElementIndex>>& succ,
                                        ElementIndex start) {
  std::vector<std::int64_t> parent(n, -1);
  std::deque<ElementIndex> queue;
  for (ElementIndex s : succ[start]) {
    if (parent[s] != -1) continue;
    parent[s] = start;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    ElementIndex v = queue.front();
    queue.pop_front();
    if (v == start) break;
    for (ElementIndex w : succ[v]) {
      if (parent[w] != -1) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  std::vector<ElementIndex> path{start};
  for (ElementIndex v = static_cast<ElementIndex>(parent[start]); v != start;
       v = static_cast<ElementIndex>(parent[v])) {
    path.push_back(v);
  }
  path.push_back(start);
  std::reverse(path.begin(), path.end());
  return path;
}

std::unordered_map<std::string, ElementIndex> index_elements(const std::vector<ElementId>& elements) {
  std::unordered_map<std::string, ElementIndex> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& tok = elements[i].token;
    if (tok.empty()) throw Error(ErrorCode::EmptyElement, "element label must be nonempty", element_location(i));
    if (!index.emplace(tok, static_cast<ElementIndex>(i)).second) {
      throw Error(ErrorCode::DuplicateElement, "'" + tok + "'", element_location(i));
    }
  }
  return index;
}

}  // namespace

ElementIndex Poset::index_of(const ElementId& id) const {
  auto it = index_.find(id.token);
  if (it == index_.end()) throw Error(ErrorCode::UnknownElement, "'" + id.token + "'");
  return it->second;
}

std::size_t Poset::relation_count() const noexcept {
  return static_cast<std::size_t>(std::count(less_.begin(), less_.end(), std::uint8_t{1}));
}

Poset build_poset_indexed(std::vector<ElementId> elements, const std::vector<IndexPair>& relations) {
  Poset p;
  const std::size_t n = elements.size();
  p.index_ = index_elements(elements);
  p.names_ = std::move(elements);
  p.less_.assign(n * n, 0);
  std::vector<std::vector<ElementIndex>> succ(n);
  for (std::size_t r = 0; r < relations.size(); ++r) {
    auto [a, b] = relations[r];
    if (a >= n) throw Error(ErrorCode::UnknownElement, "index " + std::to_string(a), relation_location(r, 0));
    if (b >= n) throw Error(ErrorCode::UnknownElement, "index " + std::to_string(b), relation_location(r, 1));
    if (a == b) throw Error(ErrorCode::ReflexivePair, "'" + p.names_[a].token + "'", "/relations/" + std::to_string(r));
    if (!p.less_[a * n + b]) succ[a].push_back(b);
    p.less_[a * n + b] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.less_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (p.less_[k * n + j]) p.less_[i * n + j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.less_[i * n + i]) continue;
    auto path = cycle_witness(n, succ, static_cast<ElementIndex>(i));
    std::string text;
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (k) text += " -> ";
      text += p.names_[path[k]].token;
    }
    throw Error(ErrorCode::CycleDetected, text);
  }
  return p;
}

Poset build_poset(std::vector<ElementId> elements, const std::vector<Relation>& relations) {
  const auto lookup = index_elements(elements);
  std::vector<IndexPair> pairs;
  pairs.reserve(relations.size());
  for (std::size_t r = 0; r < relations.size(); ++r) {
    auto resolve = [&](const ElementId& id, int side) {
      auto it = lookup.find(id.token);
      if (it == lookup.end()) throw Error(ErrorCode::UnknownElement, "'" + id.token + "'", relation_location(r, side));
      return it->second;
    };
    ElementIndex a = resolve(relations[r].first, 0);
    ElementIndex b = resolve(relations[r].second, 1);
    pairs.push_back({a, b});
  }
  return build_poset_indexed(std::move(elements), pairs);
}

std::vector<IndexPair> transitive_reduction(const Poset& poset) {
  const auto n = static_cast<ElementIndex>(poset.size());
  std::vector<IndexPair> covers;
  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex b = 0; b < n; ++b) {
      if (!poset.less(a, b)) continue;
      bool covered = true;
      for (ElementIndex z = 0; z < n && covered; ++z) {
        if (poset.less(a, z) && poset.less(z, b)) covered = false;
      }
      if (covered) covers.push_back({a, b});
    }
  }
  return covers;
}

}  // namespace leapfrog
