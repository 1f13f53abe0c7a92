#include "hjx/cnf.hpp"

#include <sstream>

#include "hjx/error.hpp"

namespace hjx {

std::string Cnf::to_dimacs() const {
  std::ostringstream out;
  out << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
  for (const auto& clause : clauses) {
    for (std::int32_t lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

Cnf Cnf::parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Cnf cnf;
  std::size_t declared = 0;
  bool header = false;
  std::vector<std::int32_t> pending;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream fields(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(fields >> p >> fmt >> cnf.num_vars >> declared) || fmt != "cnf") {
        throw ParseError("bad DIMACS header: " + line);
      }
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before DIMACS header");
    std::int64_t lit = 0;
    while (fields >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(std::move(pending));
        pending.clear();
        continue;
      }
      if (static_cast<std::uint64_t>(lit < 0 ? -lit : lit) > cnf.num_vars) {
        throw ParseError("literal " + std::to_string(lit) + " exceeds variable count");
      }
      pending.push_back(static_cast<std::int32_t>(lit));
    }
    if (!fields.eof()) throw ParseError("bad token in clause line: " + line);
  }
  if (!header) throw ParseError("missing DIMACS header");
  if (!pending.empty()) throw ParseError("unterminated clause");
  if (cnf.clauses.size() != declared) throw ParseError("clause count differs from header");
  return cnf;
}

Cnf export_cnf(const Hypergraph& hypergraph, std::uint32_t r) {
  if (r < 2) throw InvalidArgument("CNF export needs at least two colors");
  Cnf cnf;
  cnf.num_vars = static_cast<std::uint32_t>(r * hypergraph.vertex_count);
  for (Vertex v = 0; v < hypergraph.vertex_count; ++v) {
    std::vector<std::int32_t> at_least_one;
    for (Color c = 1; c <= r; ++c) at_least_one.push_back(color_variable(v, c, r));
    cnf.clauses.push_back(std::move(at_least_one));
    for (Color c1 = 1; c1 <= r; ++c1) {
      for (Color c2 = c1 + 1; c2 <= r; ++c2) {
        cnf.clauses.push_back({-color_variable(v, c1, r), -color_variable(v, c2, r)});
      }
    }
  }
  for (const auto& edge : hypergraph.edges) {
    for (Color c = 1; c <= r; ++c) {
      std::vector<std::int32_t> clause;
      for (Vertex v : edge) clause.push_back(-color_variable(v, c, r));
      cnf.clauses.push_back(std::move(clause));
    }
  }
  return cnf;
}

Coloring decode_model(const std::vector<bool>& model, std::uint64_t vertex_count,
                      std::uint32_t r) {
  if (model.size() < r * vertex_count + 1) throw InvalidArgument("model too short");
  Coloring coloring;
  coloring.num_colors = r;
  for (Vertex v = 0; v < vertex_count; ++v) {
    Color chosen = 0;
    for (Color c = 1; c <= r; ++c) {
      if (!model[color_variable(v, c, r)]) continue;
      if (chosen != 0) throw InvalidArgument("vertex " + std::to_string(v) + " has two colors");
      chosen = c;
    }
    if (chosen == 0) throw InvalidArgument("vertex " + std::to_string(v) + " has no color");
    coloring.colors.push_back(chosen);
  }
  return coloring;
}

}  // namespace hjx
