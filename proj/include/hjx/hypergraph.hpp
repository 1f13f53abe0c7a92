#pragma once

#include <cstdint>
#include <vector>

#include "hjx/configurations.hpp"
#include "hjx/words.hpp"

namespace hjx {

using Vertex = std::uint32_t;

/// Vertices are word ranks of one N-universe; each edge is the point set of
/// one line, sorted.
struct Hypergraph {
  std::uint64_t vertex_count = 0;
  std::vector<std::vector<Vertex>> edges;

  /// Throws InvalidArgument on edges with fewer than two vertices, vertices
  /// out of range, unsorted edges or duplicate edges.
  void validate() const;
};

/// One edge per extended line inside [N] (or per combinatorial line for the
/// plain family), deduplicated and sorted. The plain family needs σ ≥ 2
/// since its lines have σ points.
Hypergraph build_line_hypergraph(std::uint32_t n, const Alphabet& alphabet,
                                 const ConfigFamily& family,
                                 std::uint64_t universe_cap = kDefaultUniverseCap);

}  // namespace hjx
