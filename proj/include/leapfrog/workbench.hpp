#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "leapfrog/engine.hpp"
#include "leapfrog/poset.hpp"

namespace leapfrog {

// Generator element naming:
//   chain(n), antichain(n)  e1..en
//   boolean(k)              bitstrings of length k, "00", "01", ... in
//                           numeric order; a < b iff a's set bits are a
//                           strict subset of b's
//   grid(a, b)              "i_j" for 1 <= i <= a, 1 <= j <= b, row major;
//                           product order
//   random(n, p, seed)      e1..en

/// Upper bound on generated poset size (closure storage is n^2 bytes).
inline constexpr std::size_t kMaxGeneratedSize = 4096;
inline constexpr std::size_t kMaxBooleanRank = 5;
inline constexpr std::size_t kMaxGridCells = 64;

struct ChainSpec {
  std::size_t n = 0;
};
struct AntichainSpec {
  std::size_t n = 0;
};
struct BooleanSpec {
  std::size_t k = 0;
};
struct GridSpec {
  std::size_t rows = 0;
  std::size_t cols = 0;
};
struct RandomSpec {
  std::size_t n = 0;
  double edge_prob = 0.0;
  std::uint64_t seed = 0;
};
using GeneratorSpec = std::variant<ChainSpec, AntichainSpec, BooleanSpec, GridSpec, RandomSpec>;

/// Throws InvalidSpec on out-of-range parameters.
Poset generate_poset(const GeneratorSpec& spec);

/// Named families only (RandomSpec is rejected with InvalidSpec).
Poset gen_named_poset(const GeneratorSpec& spec);

/// Shuffles e1..en into a random ranking with the seed, keeps each forward
/// pair of the ranking with probability `edge_prob`, then closes.
Poset gen_random_poset(std::size_t n, double edge_prob, std::uint64_t seed);

/// Seeded Fisher-Yates shuffle of the element list.
Arrangement gen_random_arrangement(const Poset& poset, std::uint64_t seed);

/// Document format: {"elements": [string...], "relations": [[string, string]...]}.
/// Unknown fields are rejected. Throws SchemaError with a JSON-pointer
/// location, or the build_poset errors (locations relative to the document).
Poset parse_poset(std::string_view text);

/// Writes the element list and the cover relations.
std::string write_poset(const Poset& poset);

/// Hasse diagram as a DOT digraph: one node per element, one edge per cover.
std::string export_dot(const Poset& poset);

/// Line-delimited JSON: one {"step","index","left","right"[,"after"]} record
/// per event, then {"final": [...], "count": N}.
std::string write_trace(const Poset& poset, const SwapTrace& trace, bool verbose = false);

/// Parses "a,c,b" (whitespace around labels ignored; "" is the empty
/// arrangement). Throws ArrangementMismatch.
Arrangement parse_arrangement(const Poset& poset, std::string_view text);
std::string format_arrangement(const Poset& poset, const Arrangement& arr);

}  // namespace leapfrog
