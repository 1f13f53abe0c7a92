#include "hjx/hypergraph.hpp"

#include <algorithm>

#include "hjx/error.hpp"

namespace hjx {

void Hypergraph::validate() const {
  for (const auto& edge : edges) {
    if (edge.size() < 2) throw InvalidArgument("edges need at least two vertices");
    if (!std::is_sorted(edge.begin(), edge.end()) ||
        std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw InvalidArgument("edge vertices must be sorted and distinct");
    }
    if (edge.back() >= vertex_count) throw InvalidArgument("edge vertex out of range");
  }
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("duplicate edge");
  }
}

Hypergraph build_line_hypergraph(std::uint32_t n, const Alphabet& alphabet,
                                 const ConfigFamily& family, std::uint64_t universe_cap) {
  if (alphabet.has_variable) throw InvalidArgument("line hypergraphs live over constant words");
  Hypergraph graph;
  graph.vertex_count = universe_size(n, alphabet, universe_cap);
  const UniverseIndex index(n, alphabet);

  auto add = [&](const std::vector<LocatedWord>& points) {
    std::vector<Vertex> edge;
    edge.reserve(points.size());
    for (const LocatedWord& w : points) edge.push_back(static_cast<Vertex>(index.rank(w)));
    std::sort(edge.begin(), edge.end());
    graph.edges.push_back(std::move(edge));
  };

  if (family.kind() == FamilyKind::PlainLines) {
    if (alphabet.size < 2) {
      throw InvalidArgument("plain lines over a one-letter alphabet are single points");
    }
    for_each_plain_line(n, alphabet, [&](const PlainLine& line) {
      add(combinatorial_line(line.alpha, line.gamma, alphabet));
      return true;
    });
  } else {
    for_each_extended_line(n, alphabet, family, [&](const ExtendedLine& line) {
      add(extended_line_points(line));
      return true;
    });
  }
  // Over one letter distinct lines can share a point set.
  std::sort(graph.edges.begin(), graph.edges.end());
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());
  return graph;
}

}  // namespace hjx
