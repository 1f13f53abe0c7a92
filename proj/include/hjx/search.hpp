#pragma once

// Finite search for the line configurations: monochromatic witnesses in a
// given coloring, colorings avoiding every line, and the least window N at
// which avoidance becomes impossible.

#include <cstdint>
#include <optional>
#include <vector>

#include "hjx/coloring.hpp"
#include "hjx/configurations.hpp"
#include "hjx/hypergraph.hpp"
#include "hjx/words.hpp"

namespace hjx {

/// A monochromatic line. `extensions` is F; it is empty for the plain family.
struct Witness {
  LocatedWord alpha;
  PositionSet gamma;
  PositionSet extensions;
  Color color = 1;

  bool operator==(const Witness&) const = default;
};

/// The points of the witness line in canonical word order.
std::vector<LocatedWord> witness_points(const Witness& witness, const Alphabet& alphabet);

/// The least line (in enumeration order) whose points all share a color.
std::optional<Witness> find_witness(const Coloring& coloring, std::uint32_t n,
                                    const Alphabet& alphabet, const ConfigFamily& family);

struct SearchOptions {
  std::uint64_t max_nodes = std::uint64_t{1} << 32;
  unsigned jobs = 1;
  /// Colors are interchangeable, so a vertex may only open the next unused
  /// color. Never changes which coloring is returned.
  bool symmetry_breaking = true;
};

struct AvoidanceResult {
  bool satisfiable = false;
  Coloring coloring;  // set when satisfiable
  std::uint64_t nodes = 0;
};

/// Lexicographically least proper r-coloring in vertex order, or Unsat.
/// Throws ResourceLimit after max_nodes assignments.
AvoidanceResult avoidance_search(const Hypergraph& hypergraph, std::uint32_t r,
                                 const SearchOptions& options = {});

struct MinimalNResult {
  std::optional<std::uint32_t> n;       // nullopt: exceeded n_max
  std::vector<bool> satisfiable_at;     // index N-1
};

/// Least N ≤ n_max for which no r-coloring of the N-universe avoids every
/// line of family.at_window(N). With stop_at_first=false the scan continues
/// to n_max so monotonicity can be checked.
MinimalNResult minimal_n(const Alphabet& alphabet, std::uint32_t r, const ConfigFamily& family,
                         std::uint32_t n_max, const SearchOptions& options = {},
                         bool stop_at_first = true);

}  // namespace hjx
