#include "leapfrog/analysis.hpp"

#include <algorithm>
#include <deque>

namespace leapfrog {

namespace {

std::vector<std::size_t> positions_of(const Arrangement& arr) {
  std::vector<std::size_t> pos(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) pos[arr[i]] = i;
  return pos;
}

std::pair<std::size_t, std::size_t> ordered_positions(const Poset& poset, const Arrangement& arr, ElementIndex x,
                                                      ElementIndex y) {
  validate_arrangement(poset, arr);
  if (x >= poset.size()) throw Error(ErrorCode::UnknownElement, "index " + std::to_string(x));
  if (y >= poset.size()) throw Error(ErrorCode::UnknownElement, "index " + std::to_string(y));
  auto pos = positions_of(arr);
  if (pos[x] >= pos[y]) {
    throw Error(ErrorCode::OrderViolation,
                "'" + poset.element(x).token + "' does not precede '" + poset.element(y).token + "'");
  }
  return {pos[x], pos[y]};
}

}  // namespace

bool certificate_valid(const Poset& poset, const Arrangement& arr, const FenceCertificate& cert, ElementIndex x,
                       ElementIndex y) {
  const auto& z = cert.chain;
  if (z.size() < 2 || z.front() != x || z.back() != y) return false;
  for (ElementIndex e : z) {
    if (e >= poset.size()) return false;
  }
  auto pos = positions_of(arr);
  for (std::size_t a = 0; a + 1 < z.size(); ++a) {
    if (pos[z[a]] >= pos[z[a + 1]]) return false;
    if (!poset.incomparable(z[a], z[a + 1])) return false;
  }
  return true;
}

FenceTable::FenceTable(const Poset& poset, const Arrangement& arr) : n_(arr.size()), reach_(n_ * n_, 0) {
  validate_arrangement(poset, arr);
  // reach(p, q): some position r in [p, q) with r == p or reach(p, r), and
  // arr[r] || arr[q].
  for (std::size_t p = 0; p < n_; ++p) {
    for (std::size_t q = p + 1; q < n_; ++q) {
      bool hit = poset.incomparable(arr[p], arr[q]);
      for (std::size_t r = p + 1; r < q && !hit; ++r) {
        hit = reach_[p * n_ + r] && poset.incomparable(arr[r], arr[q]);
      }
      reach_[p * n_ + q] = hit;
    }
  }
}

bool fence_exists(const Poset& poset, const Arrangement& arr, ElementIndex x, ElementIndex y) {
  return find_fence(poset, arr, x, y).has_value();
}

std::optional<FenceCertificate> find_fence(const Poset& poset, const Arrangement& arr, ElementIndex x,
                                           ElementIndex y) {
  auto [px, py] = ordered_positions(poset, arr, x, y);
  const std::size_t none = arr.size();
  std::vector<std::size_t> parent(arr.size(), none);
  std::deque<std::size_t> queue{px};
  parent[px] = px;
  while (!queue.empty() && parent[py] == none) {
    std::size_t p = queue.front();
    queue.pop_front();
    for (std::size_t q = p + 1; q <= py; ++q) {
      if (parent[q] != none || !poset.incomparable(arr[p], arr[q])) continue;
      parent[q] = p;
      queue.push_back(q);
    }
  }
  if (parent[py] == none) return std::nullopt;
  FenceCertificate cert;
  for (std::size_t p = py; p != px; p = parent[p]) cert.chain.push_back(arr[p]);
  cert.chain.push_back(arr[px]);
  std::reverse(cert.chain.begin(), cert.chain.end());
  return cert;
}

PairOutcome classify_pair(const Poset& poset, const Arrangement& arr, ElementIndex x, ElementIndex y) {
  ordered_positions(poset, arr, x, y);
  if (poset.less(y, x)) return PreservedByOrder{};
  if (auto cert = find_fence(poset, arr, x, y)) return PreservedByFence{std::move(*cert)};
  return Reversed{};
}

std::vector<IndexPair> critical_pairs(const Poset& poset, const Arrangement& arr) {
  FenceTable table(poset, arr);
  std::vector<IndexPair> out;
  for (std::size_t p = 0; p < arr.size(); ++p) {
    for (std::size_t q = p + 1; q < arr.size(); ++q) {
      if (poset.less(arr[p], arr[q]) && !table.fence(p, q)) out.push_back({arr[p], arr[q]});
    }
  }
  return out;
}

Arrangement predict_terminal(const Poset& poset, const Arrangement& arr) {
  FenceTable table(poset, arr);
  const std::size_t n = arr.size();
  // rank[e] = number of elements that end up before e.
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const bool reversed = poset.less(arr[p], arr[q]) && !table.fence(p, q);
      ++rank[reversed ? arr[p] : arr[q]];
    }
  }
  Arrangement out;
  out.order.assign(n, static_cast<ElementIndex>(n));
  for (ElementIndex e = 0; e < n; ++e) {
    if (rank[e] >= n || out.order[rank[e]] != n) {
      throw Error(ErrorCode::InternalInconsistency, "pairwise final-order verdicts are not a total order");
    }
    out.order[rank[e]] = e;
  }
  return out;
}

std::size_t predict_swap_count(const Poset& poset, const Arrangement& arr) {
  return critical_pairs(poset, arr).size();
}

}  // namespace leapfrog
