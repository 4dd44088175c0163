#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "leapfrog/error.hpp"

namespace leapfrog {

/// Text label of a poset element. Identity is exact byte equality.
struct ElementId {
  std::string token;

  friend bool operator==(const ElementId&, const ElementId&) = default;
  friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

/// Position of an element in its poset's element list.
using ElementIndex = std::uint32_t;

/// Strict relation pair: `first` precedes `second` (first < second).
struct Relation {
  ElementId first;
  ElementId second;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct IndexPair {
  ElementIndex first;
  ElementIndex second;

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// A finite strict partial order. Immutable after construction; the relation
/// is stored transitively closed, so `less` and `incomparable` are O(1).
class Poset {
 public:
  Poset() = default;

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<ElementId>& elements() const noexcept { return names_; }
  const ElementId& element(ElementIndex i) const { return names_.at(i); }

  /// Throws UnknownElement.
  ElementIndex index_of(const ElementId& id) const;
  bool contains(const ElementId& id) const { return index_.contains(id.token); }

  bool less(ElementIndex x, ElementIndex y) const noexcept { return less_[x * names_.size() + y] != 0; }
  bool comparable(ElementIndex x, ElementIndex y) const noexcept { return less(x, y) || less(y, x); }
  /// False for x == y: incomparability is only defined for distinct elements.
  bool incomparable(ElementIndex x, ElementIndex y) const noexcept { return x != y && !comparable(x, y); }

  bool less(const ElementId& x, const ElementId& y) const { return less(index_of(x), index_of(y)); }
  bool incomparable(const ElementId& x, const ElementId& y) const {
    return incomparable(index_of(x), index_of(y));
  }

  /// Number of pairs in the closed relation.
  std::size_t relation_count() const noexcept;

  friend bool operator==(const Poset& a, const Poset& b) { return a.names_ == b.names_ && a.less_ == b.less_; }

 private:
  friend Poset build_poset(std::vector<ElementId> elements, const std::vector<Relation>& relations);
  friend Poset build_poset_indexed(std::vector<ElementId> elements, const std::vector<IndexPair>& relations);

  std::vector<ElementId> names_;
  std::unordered_map<std::string, ElementIndex> index_;
  std::vector<std::uint8_t> less_;  // row-major n x n
};

/// Validates the input and closes the relation transitively. Relations may
/// be covers or any generating set. Errors: EmptyElement, DuplicateElement,
/// UnknownElement, ReflexivePair, CycleDetected (message carries the witness
/// path, e.g. "a -> b -> a").
Poset build_poset(std::vector<ElementId> elements, const std::vector<Relation>& relations);

/// Same as build_poset with relation endpoints given as element positions.
Poset build_poset_indexed(std::vector<ElementId> elements, const std::vector<IndexPair>& relations);

/// Cover relations of the poset, ordered by (first, second) element position.
std::vector<IndexPair> transitive_reduction(const Poset& poset);

}  // namespace leapfrog
