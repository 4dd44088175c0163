#include "leapfrog/engine.hpp"

#include <numeric>
#include <random>

#include "random.hpp"

namespace leapfrog {

Arrangement arrangement_from_names(const Poset& poset, const std::vector<ElementId>& names) {
  if (names.size() != poset.size()) {
    throw Error(ErrorCode::ArrangementMismatch, "expected " + std::to_string(poset.size()) + " elements, got " +
                                                    std::to_string(names.size()));
  }
  Arrangement arr;
  arr.order.reserve(names.size());
  std::vector<bool> seen(poset.size(), false);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!poset.contains(names[i])) {
      throw Error(ErrorCode::ArrangementMismatch, "unknown element '" + names[i].token + "'", std::to_string(i));
    }
    ElementIndex e = poset.index_of(names[i]);
    if (seen[e]) {
      throw Error(ErrorCode::ArrangementMismatch, "element '" + names[i].token + "' listed twice", std::to_string(i));
    }
    seen[e] = true;
    arr.order.push_back(e);
  }
  return arr;
}

std::vector<ElementId> arrangement_names(const Poset& poset, const Arrangement& arr) {
  std::vector<ElementId> out;
  out.reserve(arr.size());
  for (ElementIndex e : arr.order) out.push_back(poset.element(e));
  return out;
}

Arrangement identity_arrangement(const Poset& poset) {
  Arrangement arr;
  arr.order.resize(poset.size());
  std::iota(arr.order.begin(), arr.order.end(), ElementIndex{0});
  return arr;
}

void validate_arrangement(const Poset& poset, const Arrangement& arr) {
  if (arr.size() != poset.size()) {
    throw Error(ErrorCode::ArrangementMismatch,
                "expected " + std::to_string(poset.size()) + " elements, got " + std::to_string(arr.size()));
  }
  std::vector<bool> seen(poset.size(), false);
  for (ElementIndex e : arr.order) {
    if (e >= poset.size() || seen[e]) {
      throw Error(ErrorCode::ArrangementMismatch, "not a permutation of the poset's elements");
    }
    seen[e] = true;
  }
}

namespace {

std::vector<std::size_t> ascending_positions(const Poset& poset, const Arrangement& arr) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < arr.size(); ++i) {
    if (poset.less(arr[i], arr[i + 1])) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> permissible_swaps(const Poset& poset, const Arrangement& arr) {
  validate_arrangement(poset, arr);
  return ascending_positions(poset, arr);
}

Arrangement apply_swap(const Poset& poset, const Arrangement& arr, std::size_t i) {
  validate_arrangement(poset, arr);
  if (i + 1 >= arr.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "swap index " + std::to_string(i) + " for " +
                                                std::to_string(arr.size()) + " elements");
  }
  if (!poset.less(arr[i], arr[i + 1])) {
    throw Error(ErrorCode::NotPermissible, "'" + poset.element(arr[i]).token + "' does not precede '" +
                                               poset.element(arr[i + 1]).token + "'",
                std::to_string(i));
  }
  Arrangement out = arr;
  std::swap(out.order[i], out.order[i + 1]);
  return out;
}

bool is_terminal(const Poset& poset, const Arrangement& arr) {
  validate_arrangement(poset, arr);
  return ascending_positions(poset, arr).empty();
}

SwapTrace run_to_terminal(const Poset& poset, const Arrangement& arr, const Strategy& strategy) {
  validate_arrangement(poset, arr);
  SwapTrace trace{arr, {}, arr};
  Arrangement& cur = trace.final;
  std::mt19937_64 rng(std::holds_alternative<RandomChoice>(strategy) ? std::get<RandomChoice>(strategy).seed : 0);

  for (;;) {
    auto moves = ascending_positions(poset, cur);
    if (moves.empty()) break;
    std::size_t i = 0;
    if (std::holds_alternative<Leftmost>(strategy)) {
      i = moves.front();
    } else if (std::holds_alternative<Rightmost>(strategy)) {
      i = moves.back();
    } else {
      i = moves[detail::uniform_below(rng, moves.size())];
    }
    trace.events.push_back({trace.events.size(), i, cur[i], cur[i + 1]});
    std::swap(cur.order[i], cur.order[i + 1]);
  }
  return trace;
}

Arrangement replay(const Poset& poset, const SwapTrace& trace) {
  Arrangement cur = trace.initial;
  for (const SwapEvent& ev : trace.events) {
    if (ev.index + 1 >= cur.size() || cur[ev.index] != ev.left || cur[ev.index + 1] != ev.right) {
      throw Error(ErrorCode::NotPermissible, "event does not match the replayed state", "step " + std::to_string(ev.step));
    }
    cur = apply_swap(poset, cur, ev.index);
  }
  return cur;
}

}  // namespace leapfrog
