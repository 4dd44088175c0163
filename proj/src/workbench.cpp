#include "leapfrog/workbench.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"
#include "random.hpp"

namespace leapfrog {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::vector<ElementId> numbered(std::size_t n) {
  std::vector<ElementId> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back({"e" + std::to_string(i)});
  return out;
}

void require_size(std::size_t n, const char* what) {
  if (n == 0) throw Error(ErrorCode::InvalidSpec, std::string(what) + " must be positive");
  if (n > kMaxGeneratedSize) {
    throw Error(ErrorCode::InvalidSpec, std::string(what) + " exceeds " + std::to_string(kMaxGeneratedSize));
  }
}

Poset chain(std::size_t n) {
  require_size(n, "chain size");
  std::vector<IndexPair> covers;
  for (ElementIndex i = 0; i + 1 < n; ++i) covers.push_back({i, i + 1});
  return build_poset_indexed(numbered(n), covers);
}

Poset antichain(std::size_t n) {
  require_size(n, "antichain size");
  return build_poset_indexed(numbered(n), {});
}

Poset boolean_lattice(std::size_t k) {
  if (k == 0 || k > kMaxBooleanRank) {
    throw Error(ErrorCode::InvalidSpec, "boolean rank must be in 1.." + std::to_string(kMaxBooleanRank));
  }
  const ElementIndex n = ElementIndex{1} << k;
  std::vector<ElementId> names;
  for (ElementIndex v = 0; v < n; ++v) {
    std::string bits(k, '0');
    for (std::size_t b = 0; b < k; ++b) {
      if (v & (ElementIndex{1} << b)) bits[k - 1 - b] = '1';
    }
    names.push_back({bits});
  }
  std::vector<IndexPair> covers;
  for (ElementIndex v = 0; v < n; ++v) {
    for (std::size_t b = 0; b < k; ++b) {
      const ElementIndex bit = ElementIndex{1} << b;
      if (!(v & bit)) covers.push_back({v, v | bit});
    }
  }
  return build_poset_indexed(std::move(names), covers);
}

Poset grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidSpec, "grid dimensions must be positive");
  if (rows * cols > kMaxGridCells) {
    throw Error(ErrorCode::InvalidSpec, "grid has more than " + std::to_string(kMaxGridCells) + " cells");
  }
  std::vector<ElementId> names;
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 1; j <= cols; ++j) names.push_back({std::to_string(i) + "_" + std::to_string(j)});
  }
  auto at = [cols](std::size_t i, std::size_t j) { return static_cast<ElementIndex>(i * cols + j); };
  std::vector<IndexPair> covers;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (i + 1 < rows) covers.push_back({at(i, j), at(i + 1, j)});
      if (j + 1 < cols) covers.push_back({at(i, j), at(i, j + 1)});
    }
  }
  return build_poset_indexed(std::move(names), covers);
}

[[noreturn]] void schema_error(const std::string& message, const std::string& location) {
  throw Error(ErrorCode::SchemaError, message, location.empty() ? "/" : location);
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string dot_quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

ordered_json names_json(const Poset& poset, const Arrangement& arr) {
  ordered_json out = ordered_json::array();
  for (ElementIndex e : arr.order) out.push_back(poset.element(e).token);
  return out;
}

}  // namespace

Poset gen_named_poset(const GeneratorSpec& spec) {
  return std::visit(
      [](const auto& s) -> Poset {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ChainSpec>) return chain(s.n);
        else if constexpr (std::is_same_v<T, AntichainSpec>) return antichain(s.n);
        else if constexpr (std::is_same_v<T, BooleanSpec>) return boolean_lattice(s.k);
        else if constexpr (std::is_same_v<T, GridSpec>) return grid(s.rows, s.cols);
        else throw Error(ErrorCode::InvalidSpec, "random posets are not a named family");
      },
      spec);
}

Poset generate_poset(const GeneratorSpec& spec) {
  if (const auto* r = std::get_if<RandomSpec>(&spec)) return gen_random_poset(r->n, r->edge_prob, r->seed);
  return gen_named_poset(spec);
}

Poset gen_random_poset(std::size_t n, double edge_prob, std::uint64_t seed) {
  if (n > kMaxGeneratedSize) {
    throw Error(ErrorCode::InvalidSpec, "random poset size exceeds " + std::to_string(kMaxGeneratedSize));
  }
  if (!std::isfinite(edge_prob) || edge_prob < 0.0 || edge_prob > 1.0) {
    throw Error(ErrorCode::InvalidSpec, "edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<ElementIndex> ranking(n);
  for (ElementIndex i = 0; i < n; ++i) ranking[i] = i;
  detail::shuffle(rng, ranking);
  std::vector<IndexPair> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (detail::bernoulli(rng, edge_prob)) pairs.push_back({ranking[a], ranking[b]});
    }
  }
  return build_poset_indexed(numbered(n), pairs);
}

Arrangement gen_random_arrangement(const Poset& poset, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Arrangement arr = identity_arrangement(poset);
  detail::shuffle(rng, arr.order);
  return arr;
}

Poset parse_poset(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, e.what(), "byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) schema_error("document must be an object", "");
  for (const auto& [key, value] : doc.items()) {
    if (key != "elements" && key != "relations") schema_error("unknown field '" + key + "'", "/" + key);
  }
  if (!doc.contains("elements")) schema_error("missing field 'elements'", "");
  if (!doc.contains("relations")) schema_error("missing field 'relations'", "");
  const json& elems = doc["elements"];
  const json& rels = doc["relations"];
  if (!elems.is_array()) schema_error("'elements' must be an array", "/elements");
  if (!rels.is_array()) schema_error("'relations' must be an array", "/relations");

  std::vector<ElementId> elements;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!elems[i].is_string()) schema_error("element must be a string", "/elements/" + std::to_string(i));
    elements.push_back({elems[i].get<std::string>()});
  }
  std::vector<Relation> relations;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const std::string where = "/relations/" + std::to_string(r);
    const json& pair = rels[r];
    if (!pair.is_array() || pair.size() != 2) schema_error("relation must be a two-element array", where);
    for (int side = 0; side < 2; ++side) {
      if (!pair[side].is_string()) schema_error("relation endpoint must be a string", where + "/" + std::to_string(side));
    }
    relations.push_back({{pair[0].get<std::string>()}, {pair[1].get<std::string>()}});
  }
  return build_poset(std::move(elements), relations);
}

std::string write_poset(const Poset& poset) {
  std::string out = "{\n  \"elements\": [";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (i) out += ", ";
    out += quoted(poset.element(static_cast<ElementIndex>(i)).token);
  }
  out += "],\n  \"relations\": [";
  const auto covers = transitive_reduction(poset);
  for (std::size_t i = 0; i < covers.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += "[" + quoted(poset.element(covers[i].first).token) + ", " + quoted(poset.element(covers[i].second).token) + "]";
  }
  if (!covers.empty()) out += "\n  ";
  out += "]\n}\n";
  return out;
}

std::string export_dot(const Poset& poset) {
  std::string out = "digraph poset {\n";
  for (const ElementId& e : poset.elements()) out += "  " + dot_quoted(e.token) + ";\n";
  for (auto [a, b] : transitive_reduction(poset)) {
    out += "  " + dot_quoted(poset.element(a).token) + " -> " + dot_quoted(poset.element(b).token) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string write_trace(const Poset& poset, const SwapTrace& trace, bool verbose) {
  std::string out;
  Arrangement cur = trace.initial;
  for (const SwapEvent& ev : trace.events) {
    ordered_json rec;
    rec["step"] = ev.step;
    rec["index"] = ev.index;
    rec["left"] = poset.element(ev.left).token;
    rec["right"] = poset.element(ev.right).token;
    if (verbose) {
      std::swap(cur.order[ev.index], cur.order[ev.index + 1]);
      rec["after"] = names_json(poset, cur);
    }
    out += rec.dump() + "\n";
  }
  ordered_json summary;
  summary["final"] = names_json(poset, trace.final);
  summary["count"] = trace.events.size();
  out += summary.dump() + "\n";
  return out;
}

Arrangement parse_arrangement(const Poset& poset, std::string_view text) {
  std::vector<ElementId> names;
  auto trim = [](std::string_view s) {
    const char* ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return std::string_view{};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
  };
  if (!trim(text).empty()) {
    std::size_t start = 0;
    for (;;) {
      const auto comma = text.find(',', start);
      auto token = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (token.empty()) throw Error(ErrorCode::ArrangementMismatch, "empty label in arrangement list");
      names.push_back({std::string(token)});
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return arrangement_from_names(poset, names);
}

std::string format_arrangement(const Poset& poset, const Arrangement& arr) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ',';
    out += poset.element(arr[i]).token;
  }
  return out;
}

}  // namespace leapfrog
