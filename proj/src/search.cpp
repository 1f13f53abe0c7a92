#include "hjx/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <thread>

#include "cdcl.hpp"
#include "hjx/cnf.hpp"
#include "hjx/error.hpp"

namespace hjx {

std::vector<LocatedWord> witness_points(const Witness& witness, const Alphabet& alphabet) {
  if (witness.extensions.empty()) {
    auto points = combinatorial_line(witness.alpha, witness.gamma, alphabet);
    std::sort(points.begin(), points.end());
    return points;
  }
  return extended_line_points(
      ExtendedLine::make(witness.alpha, witness.gamma, witness.extensions, alphabet));
}

std::optional<Witness> find_witness(const Coloring& coloring, std::uint32_t n,
                                    const Alphabet& alphabet, const ConfigFamily& family) {
  const UniverseIndex index(n, alphabet);
  if (coloring.size() != index.size()) {
    throw InvalidArgument("coloring covers " + std::to_string(coloring.size()) +
                          " words, the universe has " + std::to_string(index.size()));
  }
  auto monochrome = [&](const std::vector<LocatedWord>& points) -> std::optional<Color> {
    const Color c = coloring[index.rank(points.front())];
    for (const LocatedWord& w : points) {
      if (coloring[index.rank(w)] != c) return std::nullopt;
    }
    return c;
  };

  std::optional<Witness> found;
  if (family.kind() == FamilyKind::PlainLines) {
    for_each_plain_line(n, alphabet, [&](const PlainLine& line) {
      if (auto c = monochrome(combinatorial_line(line.alpha, line.gamma, alphabet))) {
        found = Witness{line.alpha, line.gamma, {}, *c};
        return false;
      }
      return true;
    });
  } else {
    for_each_extended_line(n, alphabet, family, [&](const ExtendedLine& line) {
      if (auto c = monochrome(extended_line_points(line))) {
        found = Witness{line.alpha(), line.gamma(), line.extensions(), *c};
        return false;
      }
      return true;
    });
  }
  return found;
}

// --- avoidance search ------------------------------------------------------------

namespace {

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t max_nodes) : max_(max_nodes) {}

  void charge() {
    if (used_.fetch_add(1) + 1 > max_) {
      throw ResourceLimit("avoidance search stopped after " + std::to_string(max_) +
                          " nodes");
    }
  }
  std::uint64_t used() const { return std::min(used_.load(), max_); }

 private:
  std::uint64_t max_;
  std::atomic<std::uint64_t> used_{0};
};

AvoidanceResult finish(bool sat, const std::vector<Color>& colors, std::uint32_t r,
                       std::uint64_t nodes) {
  AvoidanceResult result;
  result.satisfiable = sat;
  result.nodes = nodes;
  if (sat) {
    result.coloring.num_colors = r;
    result.coloring.colors = colors;
  }
  return result;
}

// Colors of the component under `fixed` (colors of its first vertices), or
// nullopt.
std::optional<std::vector<Color>> solve_with(const Hypergraph& graph, std::uint32_t r,
                                             const std::vector<Color>& fixed,
                                             NodeBudget& budget) {
  Cnf cnf = export_cnf(graph, r);
  for (Vertex v = 0; v < fixed.size(); ++v) cnf.clauses.push_back({color_variable(v, fixed[v], r)});
  // Settle satisfiability first; only a satisfiable instance needs the
  // ordered pass that finds its least coloring.
  auto tick = [&] { budget.charge(); };
  if (!detail::Cdcl(cnf.num_vars, cnf.clauses, detail::Cdcl::Mode::Free).solve(tick)) {
    return std::nullopt;
  }
  detail::Cdcl ordered(cnf.num_vars, cnf.clauses, detail::Cdcl::Mode::Ordered);
  if (!ordered.solve(tick)) throw Error("ordered search disagrees on satisfiability");
  return decode_model(ordered.model(), graph.vertex_count, r).colors;
}

// One connected component. Colors are interchangeable, so with symmetry
// breaking its first vertex takes color 1; the least coloring always does.
std::optional<std::vector<Color>> solve_component(const Hypergraph& graph, std::uint32_t r,
                                                  const SearchOptions& options,
                                                  NodeBudget& budget) {
  if (r == 1) {
    if (!graph.edges.empty()) return std::nullopt;
    return std::vector<Color>(graph.vertex_count, 1);
  }
  const std::vector<Color> root = options.symmetry_breaking ? std::vector<Color>{1}
                                                            : std::vector<Color>{};
  if (options.jobs <= 1 || graph.vertex_count < 2) return solve_with(graph, r, root, budget);

  // Every coloring of the first `depth` vertices, in lexicographic order;
  // the first satisfiable one holds the sequential answer.
  std::size_t depth = root.size();
  std::uint64_t count = 1;
  while (count < 8 * std::uint64_t{options.jobs} && depth < graph.vertex_count && depth < 24) {
    ++depth;
    count *= r;
  }
  std::vector<std::vector<Color>> prefixes;
  std::vector<Color> prefix(depth, 1);
  while (true) {
    prefixes.push_back(prefix);
    std::size_t i = depth;
    while (i > root.size() && prefix[i - 1] == r) prefix[--i] = 1;
    if (i == root.size()) break;
    ++prefix[i - 1];
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{prefixes.size()};
  std::vector<std::vector<Color>> solutions(prefixes.size());
  std::vector<std::exception_ptr> errors(prefixes.size());

  auto worker = [&] {
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      if (i > best.load()) continue;
      try {
        if (auto colors = solve_with(graph, r, prefixes[i], budget)) {
          solutions[i] = std::move(*colors);
          std::size_t seen = best.load();
          while (i < seen && !best.compare_exchange_weak(seen, i)) {
          }
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < options.jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  const std::size_t winner = best.load();
  for (std::size_t i = 0; i < std::min(winner, prefixes.size()); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
  if (winner < prefixes.size()) return solutions[winner];
  return std::nullopt;
}

// Connected components as ascending vertex lists, ordered by least vertex.
// Vertices on no edge are left out.
std::vector<std::vector<Vertex>> components(const Hypergraph& graph) {
  std::vector<Vertex> parent(graph.vertex_count);
  for (Vertex v = 0; v < parent.size(); ++v) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> touched(graph.vertex_count, false);
  for (const auto& edge : graph.edges) {
    for (Vertex v : edge) {
      touched[v] = true;
      const Vertex a = find(edge.front());
      const Vertex b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Vertex>> out;
  std::vector<std::size_t> slot(graph.vertex_count, SIZE_MAX);
  for (Vertex v = 0; v < graph.vertex_count; ++v) {
    if (!touched[v]) continue;
    const Vertex root = find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

}  // namespace

// Components are colored independently. The lexicographically least coloring
// of the whole graph restricts to the least coloring of each component, so
// this returns the same answer as one search over all vertices, while an
// unsatisfiable component no longer drags the others through backtracking.
AvoidanceResult avoidance_search(const Hypergraph& hypergraph, std::uint32_t r,
                                 const SearchOptions& options) {
  if (r == 0) throw InvalidArgument("need at least one color");
  hypergraph.validate();
  if (hypergraph.vertex_count > std::numeric_limits<Vertex>::max()) {
    throw ResourceLimit("too many vertices");
  }
  NodeBudget budget(options.max_nodes);
  std::vector<Color> colors(hypergraph.vertex_count, 1);

  const auto parts = components(hypergraph);
  std::vector<std::vector<std::uint32_t>> edges_of(parts.size());
  {
    std::vector<std::uint32_t> part_of(hypergraph.vertex_count, 0);
    for (std::uint32_t p = 0; p < parts.size(); ++p) {
      for (Vertex v : parts[p]) part_of[v] = p;
    }
    for (std::uint32_t e = 0; e < hypergraph.edges.size(); ++e) {
      edges_of[part_of[hypergraph.edges[e].front()]].push_back(e);
    }
  }

  std::vector<Vertex> local(hypergraph.vertex_count, 0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    Hypergraph sub;
    sub.vertex_count = parts[p].size();
    for (Vertex i = 0; i < parts[p].size(); ++i) local[parts[p][i]] = i;
    for (std::uint32_t e : edges_of[p]) {
      std::vector<Vertex> edge;
      for (Vertex v : hypergraph.edges[e]) edge.push_back(local[v]);
      sub.edges.push_back(std::move(edge));
    }
    const auto solved = solve_component(sub, r, options, budget);
    if (!solved) return finish(false, {}, r, budget.used());
    for (Vertex i = 0; i < parts[p].size(); ++i) colors[parts[p][i]] = (*solved)[i];
  }
  return finish(true, colors, r, budget.used());
}

MinimalNResult minimal_n(const Alphabet& alphabet, std::uint32_t r, const ConfigFamily& family,
                         std::uint32_t n_max, const SearchOptions& options,
                         bool stop_at_first) {
  MinimalNResult result;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    const Hypergraph graph = build_line_hypergraph(n, alphabet, family.at_window(n));
    const bool sat = avoidance_search(graph, r, options).satisfiable;
    result.satisfiable_at.push_back(sat);
    if (!sat && !result.n) {
      result.n = n;
      if (stop_at_first) break;
    }
  }
  return result;
}

}  // namespace hjx
