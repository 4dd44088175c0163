#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "leapfrog/poset.hpp"

namespace leapfrog {

/// An ordering of every poset element exactly once, stored as element
/// positions of the owning poset.
struct Arrangement {
  std::vector<ElementIndex> order;

  std::size_t size() const noexcept { return order.size(); }
  ElementIndex operator[](std::size_t i) const { return order[i]; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;
  friend auto operator<=>(const Arrangement&, const Arrangement&) = default;
};

/// Resolves labels to an arrangement; throws ArrangementMismatch unless the
/// labels are a permutation of the poset's elements.
Arrangement arrangement_from_names(const Poset& poset, const std::vector<ElementId>& names);
std::vector<ElementId> arrangement_names(const Poset& poset, const Arrangement& arr);
/// The poset's element list order (e1, e2, ...).
Arrangement identity_arrangement(const Poset& poset);
/// Throws ArrangementMismatch unless `arr` is a permutation of 0..n-1.
void validate_arrangement(const Poset& poset, const Arrangement& arr);

/// One permissible swap, recorded with the pair as it stood before swapping.
struct SwapEvent {
  std::size_t step = 0;
  std::size_t index = 0;
  ElementIndex left = 0;
  ElementIndex right = 0;

  friend bool operator==(const SwapEvent&, const SwapEvent&) = default;
};

struct SwapTrace {
  Arrangement initial;
  std::vector<SwapEvent> events;
  Arrangement final;

  std::size_t swap_count() const noexcept { return events.size(); }
};

struct Leftmost {};
struct Rightmost {};
/// Uniform choice among the current permissible swaps. Draws come from
/// std::mt19937_64 seeded with `seed`, reduced to a bounded index by
/// rejection sampling, so a seed always replays the same run.
struct RandomChoice {
  std::uint64_t seed = 0;
};
using Strategy = std::variant<Leftmost, Rightmost, RandomChoice>;

/// Ascending positions i with arr[i] < arr[i+1].
std::vector<std::size_t> permissible_swaps(const Poset& poset, const Arrangement& arr);

/// Exchanges positions i and i+1. Throws IndexOutOfRange or NotPermissible.
Arrangement apply_swap(const Poset& poset, const Arrangement& arr, std::size_t i);

bool is_terminal(const Poset& poset, const Arrangement& arr);

/// Swaps until no swap is permissible. The trace's `final` is the terminal
/// arrangement.
SwapTrace run_to_terminal(const Poset& poset, const Arrangement& arr, const Strategy& strategy = Leftmost{});

/// Re-applies the events from `trace.initial`; returns the arrangement
/// reached. Throws NotPermissible if an event does not match the state.
Arrangement replay(const Poset& poset, const SwapTrace& trace);

}  // namespace leapfrog
