#pragma once

#include <string>
#include <vector>

#include "leapfrog/engine.hpp"
#include "leapfrog/poset.hpp"

namespace leapfrog::testing {

inline std::vector<ElementId> ids(std::initializer_list<const char*> names) {
  std::vector<ElementId> out;
  for (const char* n : names) out.push_back({n});
  return out;
}

inline Poset make(std::initializer_list<const char*> elements,
                  std::initializer_list<std::pair<const char*, const char*>> relations) {
  std::vector<Relation> rels;
  for (auto [a, b] : relations) rels.push_back({{a}, {b}});
  return build_poset(ids(elements), rels);
}

inline Poset chain3() { return make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
inline Poset antichain3() { return make({"a", "b", "c"}, {}); }
inline Poset diamond() { return make({"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}}); }
/// a < b, c incomparable to both.
inline Poset pair_plus_isolated() { return make({"a", "b", "c"}, {{"a", "b"}}); }

inline Arrangement arr(const Poset& p, std::initializer_list<const char*> names) {
  return arrangement_from_names(p, ids(names));
}

inline ElementIndex at(const Poset& p, const char* name) { return p.index_of({name}); }

}  // namespace leapfrog::testing
