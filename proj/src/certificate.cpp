#include "hjx/certificate.hpp"

#include <algorithm>

#include "hjx/error.hpp"
#include "hjx/hypergraph.hpp"

namespace hjx {

namespace {

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

BigInt big(const Json& j, const char* key) { return parse_decimal(get<std::string>(j, key)); }

std::string decimal(const BigInt& x) { return to_decimal(x); }

Json index_range_json(const IndexRange& r) { return Json::array({r.lo, r.hi}); }

IndexRange index_range_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("index range must be [lo, hi]");
  return {j[0].get<std::uint32_t>(), j[1].get<std::uint32_t>()};
}

Json int_range_json(const IntRange& r) { return Json::array({decimal(r.lo), decimal(r.hi)}); }

IntRange int_range_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("integer range must be [lo, hi]");
  return {parse_decimal(j[0].get<std::string>()), parse_decimal(j[1].get<std::string>())};
}

Json source_to_json(const ColoringSource& source) {
  if (const auto* c = std::get_if<ConstantSource>(&source)) return Json{{"const", c->color}};
  if (const auto* p = std::get_if<PullbackSource>(&source)) {
    Json j = base_coloring_to_json(p->base);
    j["reduce"] = reduction_to_json(p->kind);
    return j;
  }
  const auto& e = std::get<ExplicitSource>(source);
  return Json{{"r", e.coloring.num_colors}, {"explicit", e.coloring.colors}};
}

ColoringSource source_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("coloring source must be an object");
  if (j.contains("const")) return ConstantSource{get<Color>(j, "const")};
  if (j.contains("explicit")) {
    Coloring c;
    c.num_colors = get<std::uint32_t>(j, "r");
    c.colors = get<std::vector<Color>>(j, "explicit");
    return ExplicitSource{std::move(c)};
  }
  Json base = j;
  base.erase("reduce");
  if (!j.contains("reduce")) throw ParseError("pullback coloring needs 'reduce'");
  return PullbackSource{reduction_from_json(j.at("reduce")), base_coloring_from_json(base)};
}

Json common_header(const char* kind, std::uint32_t n, std::uint32_t sigma,
                   const ConfigFamily& family) {
  Json j;
  j["kind"] = kind;
  j["N"] = n;
  j["alphabet"] = sigma;
  j["family"] = family_to_json(family);
  return j;
}

Json to_json(const WitnessCertificate& c) {
  Json j = common_header("witness", c.n, c.sigma, c.family);
  j["coloring"] = source_to_json(c.source);
  j["witness"] = Json{{"alpha", c.witness.alpha.to_string()},
                      {"gamma", c.witness.gamma},
                      {"F", c.witness.extensions},
                      {"color", c.witness.color}};
  Json points = Json::array();
  for (const auto& [w, color] : c.points) points.push_back(Json{{"word", w.to_string()}, {"color", color}});
  j["points"] = std::move(points);
  return j;
}

Json to_json(const ProperColoringCertificate& c) {
  Json j = common_header("proper_coloring", c.n, c.sigma, c.family);
  j["r"] = c.r;
  j["coloring"] = c.coloring.colors;
  return j;
}

Json to_json(const UnsatCertificate& c) {
  Json j = common_header("unsat", c.n, c.sigma, c.family);
  j["r"] = c.r;
  return j;
}

Json to_json(const GridPartition& c) {
  Json j;
  j["kind"] = "grid_partition";
  j["grid"] = grid_name(c.grid);
  j["K"] = c.K;
  j["A"] = decimal(c.A);
  j["D"] = decimal(c.D);
  j["r"] = c.r;
  j["pattern"] = Json{{"i", index_range_json(c.pattern.i_range)},
                      {"j", index_range_json(c.pattern.j_range)},
                      {"b", int_range_json(c.pattern.b)},
                      {"a", int_range_json(c.pattern.a)},
                      {"d", int_range_json(c.pattern.d)}};
  Json cells = Json::array();
  for (const auto& cell : c.cells) cells.push_back(integers_to_json(cell));
  j["partition"] = std::move(cells);
  return j;
}

PositionSet positions_from(const Json& j, const char* key) {
  auto raw = get<std::vector<Position>>(j, key);
  PositionSet set = make_position_set(raw);
  if (set != raw) throw ParseError(std::string("'") + key + "' must be sorted and distinct");
  return set;
}

Verdict refute(std::string why) { return {false, std::move(why)}; }

Verdict verify_witness(const WitnessCertificate& c, const VerifyOptions& options) {
  const Alphabet alphabet(c.sigma);
  universe_size(c.n, alphabet, options.universe_cap);
  if (c.family.kind() != FamilyKind::PlainLines && c.family.window() > c.n) {
    return refute("family window exceeds N");
  }
  const Witness& w = c.witness;
  if (c.family.kind() == FamilyKind::PlainLines) {
    if (!w.extensions.empty()) return refute("plain lines carry no F");
  } else if (!c.family.contains(w.extensions)) {
    return refute("F is not a member of the family");
  }
  std::vector<LocatedWord> expected;
  try {
    expected = witness_points(w, alphabet);
  } catch (const Error& e) {
    return refute(std::string("witness is not a line: ") + e.what());
  }
  for (const LocatedWord& p : expected) {
    if (p.max_position() > c.n) return refute("line leaves [N]");
  }
  if (c.points.size() != expected.size()) return refute("wrong number of points");
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (c.points[i].first != expected[i]) {
      return refute("point " + c.points[i].first.to_string() + " is not on the line");
    }
    if (c.points[i].second != w.color) {
      return refute("point " + expected[i].to_string() + " has color " +
                    std::to_string(c.points[i].second) + ", witness claims " +
                    std::to_string(w.color));
    }
  }

  // Recompute the colors of the points from the declared source.
  const UniverseIndex index(c.n, alphabet);
  for (const LocatedWord& p : expected) {
    Color actual = 0;
    if (const auto* k = std::get_if<ConstantSource>(&c.source)) {
      actual = k->color;
    } else if (const auto* pb = std::get_if<PullbackSource>(&c.source)) {
      const BigInt image = reduce(pb->kind, p);
      auto color = pb->base.color_of(image);
      if (!color) return refute("base coloring has no color for " + to_decimal(image));
      actual = *color;
    } else {
      const auto& e = std::get<ExplicitSource>(c.source).coloring;
      if (e.size() != index.size()) return refute("explicit coloring has the wrong size");
      actual = e[index.rank(p)];
    }
    if (actual != w.color) {
      return refute("coloring gives " + p.to_string() + " color " + std::to_string(actual));
    }
  }
  return {true, "monochromatic line verified"};
}

Verdict verify_proper(const ProperColoringCertificate& c, const VerifyOptions& options) {
  const Alphabet alphabet(c.sigma);
  if (c.coloring.size() != universe_size(c.n, alphabet, options.universe_cap)) {
    return refute("coloring does not cover the universe");
  }
  if (c.coloring.num_colors != c.r) return refute("color count mismatch");
  try {
    c.coloring.validate();
  } catch (const InvalidArgument& e) {
    return refute(e.what());
  }
  if (c.family.kind() != FamilyKind::PlainLines && c.family.window() > c.n) {
    return refute("family window exceeds N");
  }
  if (auto w = find_witness(c.coloring, c.n, alphabet, c.family)) {
    return refute("monochromatic line with alpha " + w->alpha.to_string());
  }
  return {true, "no monochromatic line"};
}

Verdict verify_unsat(const UnsatCertificate& c, const VerifyOptions& options) {
  const Alphabet alphabet(c.sigma);
  if (c.family.kind() != FamilyKind::PlainLines && c.family.window() > c.n) {
    return refute("family window exceeds N");
  }
  const Hypergraph graph = build_line_hypergraph(c.n, alphabet, c.family, options.universe_cap);
  SearchOptions search;
  search.max_nodes = options.max_nodes;
  if (avoidance_search(graph, c.r, search).satisfiable) {
    return refute("an avoiding coloring exists");
  }
  return {true, "no avoiding coloring"};
}

Verdict verify_grid(const GridPartition& c) {
  if (c.cells.size() != c.r) return refute("expected " + std::to_string(c.r) + " cells");
  std::vector<BigInt> all;
  for (const auto& cell : c.cells) {
    if (!std::is_sorted(cell.begin(), cell.end())) return refute("cells must be sorted");
    all.insert(all.end(), cell.begin(), cell.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return refute("cells overlap");
  if (all != make_grid(c.grid, c.A, c.D, c.K)) return refute("cells do not cover the grid");
  if (!verify_partition(c.cells, c.pattern)) return refute("a cell contains a pattern instance");
  return {true, "no cell contains the pattern"};
}

}  // namespace

// --- JSON pieces ------------------------------------------------------------------

Json family_to_json(const ConfigFamily& family) {
  switch (family.kind()) {
    case FamilyKind::ArithmeticProgressions:
      return Json{{"kind", "ap"}, {"k", family.k()}, {"window", family.window()}};
    case FamilyKind::List:
      return Json{{"kind", "list"}, {"members", family.members()}, {"window", family.window()}};
    case FamilyKind::PlainLines:
      return Json{{"kind", "plain"}, {"window", family.window()}};
  }
  return {};
}

ConfigFamily family_from_json(const Json& j) {
  const auto kind = get<std::string>(j, "kind");
  const auto window = get<std::uint32_t>(j, "window");
  try {
    if (kind == "ap") return ConfigFamily::arithmetic(get<std::uint32_t>(j, "k"), window);
    if (kind == "list") {
      return ConfigFamily::list(get<std::vector<PositionSet>>(j, "members"), window);
    }
    if (kind == "plain") return ConfigFamily::plain(window);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("bad family: ") + e.what());
  }
  throw ParseError("unknown family kind '" + kind + "'");
}

Json integers_to_json(std::vector<BigInt> values) {
  std::sort(values.begin(), values.end());
  Json out = Json::array();
  for (const BigInt& v : values) out.push_back(decimal(v));
  return out;
}

std::vector<BigInt> integers_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of decimal strings");
  std::vector<BigInt> out;
  for (const Json& x : j) {
    if (!x.is_string()) throw ParseError("integers are serialized as decimal strings");
    out.push_back(parse_decimal(x.get<std::string>()));
  }
  return out;
}

Json reduction_to_json(const ReductionKind& kind) {
  Json j{{"kind", kind.name()}};
  if (const auto* a = kind.affine_params()) {
    j["A"] = decimal(a->A);
    j["D"] = decimal(a->D);
  }
  return j;
}

ReductionKind reduction_from_json(const Json& j) {
  const auto kind = get<std::string>(j, "kind");
  if (kind == "additive") return ReductionKind::additive();
  if (kind == "multiplicative") return ReductionKind::multiplicative();
  if (kind == "affine") return ReductionKind::affine(big(j, "A"), big(j, "D"));
  throw ParseError("unknown reduction '" + kind + "'");
}

Json base_coloring_to_json(const BaseColoring& base) {
  if (base.is_residue_rule()) {
    return Json{{"mod", base.modulus()}, {"colors", base.residue_colors()}};
  }
  Json map = Json::object();
  for (const auto& [n, c] : base.map()) map[decimal(n)] = c;
  return Json{{"map", std::move(map)}};
}

BaseColoring base_coloring_from_json(const Json& j) {
  try {
    if (j.contains("mod")) {
      return BaseColoring::residues(get<std::uint32_t>(j, "mod"),
                                    get<std::vector<Color>>(j, "colors"));
    }
    if (j.contains("map")) {
      std::map<BigInt, Color> colors;
      for (const auto& [key, value] : j.at("map").items()) {
        colors[parse_decimal(key)] = value.get<Color>();
      }
      return BaseColoring::explicit_map(std::move(colors));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("bad base coloring: ") + e.what());
  }
  throw ParseError("base coloring needs 'mod' or 'map'");
}

// --- certificates ----------------------------------------------------------------

Coloring materialize(const ColoringSource& source, std::uint32_t n, const Alphabet& alphabet) {
  if (const auto* c = std::get_if<ConstantSource>(&source)) {
    Coloring coloring;
    coloring.num_colors = c->color;
    coloring.colors.assign(universe_size(n, alphabet), c->color);
    return coloring;
  }
  if (const auto* p = std::get_if<PullbackSource>(&source)) {
    return pullback_coloring(p->kind, p->base, n, alphabet);
  }
  const Coloring& explicit_colors = std::get<ExplicitSource>(source).coloring;
  if (explicit_colors.size() != universe_size(n, alphabet)) {
    throw InvalidArgument("explicit coloring does not match the universe size");
  }
  explicit_colors.validate();
  return explicit_colors;
}

WitnessCertificate make_witness_certificate(std::uint32_t n, std::uint32_t sigma,
                                            const ConfigFamily& family, ColoringSource source,
                                            const Coloring& coloring, const Witness& witness) {
  const Alphabet alphabet(sigma);
  const UniverseIndex index(n, alphabet);
  WitnessCertificate c{n, sigma, family, std::move(source), witness, {}};
  for (const LocatedWord& p : witness_points(witness, alphabet)) {
    c.points.emplace_back(p, coloring[index.rank(p)]);
  }
  return c;
}

std::string serialize(const Certificate& certificate) {
  return std::visit([](const auto& c) { return to_json(c).dump(2); }, certificate) + "\n";
}

Certificate parse_certificate(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate is not JSON: ") + e.what());
  }
  const auto kind = get<std::string>(j, "kind");
  try {
    if (kind == "grid_partition") {
      GridPartition g;
      g.grid = parse_grid_kind(get<std::string>(j, "grid"));
      g.K = get<std::uint32_t>(j, "K");
      g.A = big(j, "A");
      g.D = big(j, "D");
      g.r = get<std::uint32_t>(j, "r");
      const Json& p = j.at("pattern");
      g.pattern.i_range = index_range_from(p.at("i"));
      g.pattern.j_range = index_range_from(p.at("j"));
      g.pattern.b = int_range_from(p.at("b"));
      g.pattern.a = int_range_from(p.at("a"));
      g.pattern.d = int_range_from(p.at("d"));
      for (const Json& cell : j.at("partition")) g.cells.push_back(integers_from_json(cell));
      return g;
    }
    const auto n = get<std::uint32_t>(j, "N");
    const auto sigma = get<std::uint32_t>(j, "alphabet");
    if (n == 0 || sigma == 0) throw ParseError("N and alphabet must be positive");
    ConfigFamily family = family_from_json(j.at("family"));
    if (kind == "witness") {
      WitnessCertificate c{n, sigma, family, source_from_json(j.at("coloring")), {}, {}};
      const Json& w = j.at("witness");
      c.witness.alpha = LocatedWord::parse(get<std::string>(w, "alpha"));
      c.witness.gamma = positions_from(w, "gamma");
      c.witness.extensions = positions_from(w, "F");
      c.witness.color = get<Color>(w, "color");
      for (const Json& p : j.at("points")) {
        c.points.emplace_back(LocatedWord::parse(get<std::string>(p, "word")),
                              get<Color>(p, "color"));
      }
      return c;
    }
    if (kind == "proper_coloring") {
      ProperColoringCertificate c{n, sigma, family, get<std::uint32_t>(j, "r"), {}};
      c.coloring.num_colors = c.r;
      c.coloring.colors = get<std::vector<Color>>(j, "coloring");
      return c;
    }
    if (kind == "unsat") return UnsatCertificate{n, sigma, family, get<std::uint32_t>(j, "r")};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
  throw ParseError("unknown certificate kind '" + kind + "'");
}

Verdict verify(const Certificate& certificate, const VerifyOptions& options) {
  try {
    if (const auto* w = std::get_if<WitnessCertificate>(&certificate)) {
      return verify_witness(*w, options);
    }
    if (const auto* p = std::get_if<ProperColoringCertificate>(&certificate)) {
      return verify_proper(*p, options);
    }
    if (const auto* u = std::get_if<UnsatCertificate>(&certificate)) {
      return verify_unsat(*u, options);
    }
    return verify_grid(std::get<GridPartition>(certificate));
  } catch (const ResourceLimit&) {
    throw;
  } catch (const Error& e) {
    return refute(e.what());
  }
}

Verdict verify_text(const std::string& text, const VerifyOptions& options) {
  Certificate certificate;
  try {
    certificate = parse_certificate(text);
  } catch (const Error& e) {
    return refute(e.what());
  }
  if (serialize(certificate) != text) return refute("certificate is not in canonical form");
  return verify(certificate, options);
}

}  // namespace hjx
