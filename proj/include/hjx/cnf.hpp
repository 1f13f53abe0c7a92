#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hjx/coloring.hpp"
#include "hjx/hypergraph.hpp"

namespace hjx {

struct Cnf {
  std::uint32_t num_vars = 0;
  std::vector<std::vector<std::int32_t>> clauses;

  /// `p cnf V C` header, then one zero-terminated clause per line.
  std::string to_dimacs() const;
  /// Accepts comment lines; throws ParseError on malformed input.
  static Cnf parse_dimacs(const std::string& text);
};

/// x_{w,c} = r·rank(w) + c for colors c = 1..r.
inline std::int32_t color_variable(Vertex v, Color c, std::uint32_t r) {
  return static_cast<std::int32_t>(r * v + c);
}

/// Proper r-colorings of the hypergraph as CNF. Per vertex: one
/// at-least-one clause then the C(r,2) at-most-one clauses; per edge and
/// color: one clause forbidding the edge in that color. Needs r ≥ 2.
Cnf export_cnf(const Hypergraph& hypergraph, std::uint32_t r);

/// Reads the coloring off a model (model[var] for var = 1..num_vars; index 0
/// unused). Throws InvalidArgument unless each vertex has exactly one color.
Coloring decode_model(const std::vector<bool>& model, std::uint64_t vertex_count,
                      std::uint32_t r);

}  // namespace hjx
