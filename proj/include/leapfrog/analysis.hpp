#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "leapfrog/engine.hpp"
#include "leapfrog/poset.hpp"

namespace leapfrog {

/// A subsequence x = z1, ..., zk = y (k >= 2) of a reference arrangement in
/// which each consecutive pair is incomparable. Its existence pins the
/// relative order of x and y under every sequence of swaps.
struct FenceCertificate {
  std::vector<ElementIndex> chain;

  friend bool operator==(const FenceCertificate&, const FenceCertificate&) = default;
};

/// True iff `cert` is a valid (x,y)-fence in `arr`.
bool certificate_valid(const Poset& poset, const Arrangement& arr, const FenceCertificate& cert, ElementIndex x,
                       ElementIndex y);

struct PreservedByOrder {};
struct PreservedByFence {
  FenceCertificate certificate;
};
struct Reversed {};
using PairOutcome = std::variant<PreservedByOrder, PreservedByFence, Reversed>;

/// Reachability in the position graph of `arr`: fence(p, q) for p < q holds
/// iff an (arr[p], arr[q])-fence exists. Built in O(n^3) and reused by the
/// whole-arrangement queries below.
class FenceTable {
 public:
  FenceTable(const Poset& poset, const Arrangement& arr);

  bool fence(std::size_t p, std::size_t q) const noexcept { return reach_[p * n_ + q] != 0; }
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> reach_;
};

/// Errors: UnknownElement (via index_of), OrderViolation when x does not
/// precede y, ArrangementMismatch.
bool fence_exists(const Poset& poset, const Arrangement& arr, ElementIndex x, ElementIndex y);

/// Shortest fence. Breadth-first over positions, successors expanded in
/// ascending position order; the first path found is returned.
std::optional<FenceCertificate> find_fence(const Poset& poset, const Arrangement& arr, ElementIndex x, ElementIndex y);

/// y < x is checked first, then fence search (an incomparable pair yields
/// the two-element certificate); otherwise the pair is critical.
PairOutcome classify_pair(const Poset& poset, const Arrangement& arr, ElementIndex x, ElementIndex y);

/// Pairs (x, y) with x < y, x before y in `arr`, and no (x,y)-fence. Ordered
/// by position of x, then of y.
std::vector<IndexPair> critical_pairs(const Poset& poset, const Arrangement& arr);

/// The unique terminal arrangement reachable from `arr`, computed without
/// simulation. Throws InternalInconsistency if the pairwise verdicts do not
/// form a total order.
Arrangement predict_terminal(const Poset& poset, const Arrangement& arr);

/// Number of critical pairs, which is the length of every maximal run.
std::size_t predict_swap_count(const Poset& poset, const Arrangement& arr);

}  // namespace leapfrog
