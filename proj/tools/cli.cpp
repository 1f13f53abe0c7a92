#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hjx/certificate.hpp"
#include "hjx/cnf.hpp"
#include "hjx/configurations.hpp"
#include "hjx/error.hpp"
#include "hjx/grid_search.hpp"
#include "hjx/hypergraph.hpp"
#include "hjx/laws.hpp"
#include "hjx/reductions.hpp"
#include "hjx/search.hpp"

namespace hjx::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

std::uint32_t to_u32(const std::string& text) {
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(text, &used);
    if (used != text.size() || value > 0xffffffffUL) throw UsageError("");
    return static_cast<std::uint32_t>(value);
  } catch (const std::exception&) {
    throw UsageError("expected a nonnegative integer, got '" + text + "'");
  }
}

/// `ap:<k>`, `plain`, `list:[[2,3],[4,6]]`, or a family JSON object.
ConfigFamily parse_family(const std::string& spec, std::uint32_t window) {
  if (spec == "plain") return ConfigFamily::plain(window);
  if (spec.rfind("ap:", 0) == 0) return ConfigFamily::arithmetic(to_u32(spec.substr(3)), window);
  try {
    if (spec.rfind("list:", 0) == 0) {
      return ConfigFamily::list(Json::parse(spec.substr(5)).get<std::vector<PositionSet>>(),
                                window);
    }
    if (!spec.empty() && spec.front() == '{') return family_from_json(Json::parse(spec));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("bad family spec '" + spec + "': " + e.what());
  }
  throw UsageError("family must be ap:<k>, plain, list:<json> or a JSON object");
}

ReductionKind parse_reduction(const std::string& name, const std::string& A,
                              const std::string& D) {
  if (name == "additive") return ReductionKind::additive();
  if (name == "multiplicative") return ReductionKind::multiplicative();
  if (name == "affine") {
    if (A.empty() || D.empty()) throw UsageError("affine reduction needs --A and --D");
    return ReductionKind::affine(parse_decimal(A), parse_decimal(D));
  }
  throw UsageError("reduction must be additive, multiplicative or affine");
}

/// `lo:hi` or a single value.
IntRange parse_int_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {parse_decimal(text), parse_decimal(text)};
  return {parse_decimal(text.substr(0, colon)), parse_decimal(text.substr(colon + 1))};
}

IndexRange parse_index_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {to_u32(text), to_u32(text)};
  return {to_u32(text.substr(0, colon)), to_u32(text.substr(colon + 1))};
}

ColoringSource parse_coloring(const std::string& spec, const std::string& reduce_kind,
                              const std::string& A, const std::string& D) {
  const auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "const") return ConstantSource{to_u32(parts[1])};
  if (parts.size() == 3 && parts[0] == "mod") {
    std::vector<Color> colors;
    for (const auto& c : split(parts[2], ',')) colors.push_back(to_u32(c));
    if (reduce_kind.empty()) throw UsageError("mod colorings are pulled back: pass --reduce");
    return PullbackSource{parse_reduction(reduce_kind, A, D),
                          BaseColoring::residues(to_u32(parts[1]), std::move(colors))};
  }
  if (spec.rfind("file:", 0) == 0) {
    const Json j = Json::parse(read_file(spec.substr(5)));
    if (j.contains("reduce")) {
      Json base = j;
      base.erase("reduce");
      return PullbackSource{reduction_from_json(j.at("reduce")), base_coloring_from_json(base)};
    }
    Coloring coloring;
    coloring.num_colors = j.at("r").get<std::uint32_t>();
    coloring.colors = j.at("coloring").get<std::vector<Color>>();
    return ExplicitSource{std::move(coloring)};
  }
  throw UsageError("coloring must be const:<c>, mod:<q>:<c1,c2,...> or file:<path>");
}

struct Common {
  std::uint32_t n = 0;
  std::uint32_t sigma = 2;
  std::uint32_t r = 2;
  std::string family = "ap:1";
  std::string out;
  unsigned jobs = 1;
  std::uint64_t universe_cap = kDefaultUniverseCap;
  std::uint64_t max_nodes = std::uint64_t{1} << 32;
};

SearchOptions search_options(const Common& c) {
  SearchOptions options;
  options.jobs = c.jobs;
  options.max_nodes = c.max_nodes;
  return options;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Search and verification for extended Hales-Jewett lines"};
  app.require_subcommand(1);
  Common c;

  auto add_n = [&](CLI::App* sub) { sub->add_option("--N", c.n, "window [N]")->required(); };
  auto add_sigma = [&](CLI::App* sub) { sub->add_option("--sigma", c.sigma, "alphabet size"); };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "ap:<k> | plain | list:<json> | <json>");
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--universe-cap", c.universe_cap, "maximum universe size");
    sub->add_option("--max-nodes", c.max_nodes, "search node budget");
    sub->add_option("--jobs", c.jobs, "worker threads");
  };

  // enumerate
  bool variable = false;
  bool lines = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list the N-universe or its lines");
  add_n(enumerate_cmd);
  add_sigma(enumerate_cmd);
  add_family(enumerate_cmd);
  enumerate_cmd->add_flag("--variable", variable, "adjoin the variable v");
  enumerate_cmd->add_flag("--lines", lines, "list lines of --family instead of words");

  // witness
  std::string coloring_spec;
  std::string reduce_kind;
  std::string A_text;
  std::string D_text;
  auto* witness_cmd = app.add_subcommand("witness", "find a monochromatic line");
  add_n(witness_cmd);
  add_sigma(witness_cmd);
  add_family(witness_cmd);
  witness_cmd->add_option("--coloring", coloring_spec, "const:<c> | mod:<q>:<c1,...> | file:<path>")
      ->required();
  witness_cmd->add_option("--reduce", reduce_kind, "additive | multiplicative | affine");
  witness_cmd->add_option("--A", A_text);
  witness_cmd->add_option("--D", D_text);
  witness_cmd->add_option("--out", c.out, "certificate path");

  // avoid
  auto* avoid_cmd = app.add_subcommand("avoid", "search an r-coloring with no monochromatic line");
  add_n(avoid_cmd);
  add_sigma(avoid_cmd);
  add_family(avoid_cmd);
  avoid_cmd->add_option("--r", c.r, "number of colors");
  avoid_cmd->add_option("--out", c.out, "certificate path");
  add_caps(avoid_cmd);

  // min-n
  std::uint32_t n_max = 0;
  auto* min_n_cmd = app.add_subcommand("min-n", "least N at which every r-coloring has a line");
  add_sigma(min_n_cmd);
  add_family(min_n_cmd);
  min_n_cmd->add_option("--r", c.r, "number of colors");
  min_n_cmd->add_option("--nmax", n_max, "largest N tried")->required();
  min_n_cmd->add_option("--out", c.out, "certificate path for the minimal N");
  add_caps(min_n_cmd);

  // export-cnf
  std::string cnf_path;
  auto* cnf_cmd = app.add_subcommand("export-cnf", "DIMACS CNF of the avoidance problem");
  add_n(cnf_cmd);
  add_sigma(cnf_cmd);
  add_family(cnf_cmd);
  cnf_cmd->add_option("--r", c.r, "number of colors");
  cnf_cmd->add_option("--cnf", cnf_path, "output path");
  cnf_cmd->add_option("--universe-cap", c.universe_cap, "maximum universe size");

  // counterexample
  std::uint32_t K = 2;
  std::string A_range = "1:3";
  std::string D_range = "1:3";
  std::string grid = "power";
  std::string pattern_i = "0:2";
  std::string pattern_j = "0:1";
  std::string box_b, box_a, box_d;
  std::uint64_t partition_cap = kDefaultPartitionCap;
  auto* counter_cmd = app.add_subcommand("counterexample", "partition a grid avoiding a pattern");
  counter_cmd->add_option("--K", K, "grid index bound");
  counter_cmd->add_option("--A", A_range, "lo:hi");
  counter_cmd->add_option("--D", D_range, "lo:hi");
  counter_cmd->add_option("--grid", grid, "power | s");
  counter_cmd->add_option("--pattern-i", pattern_i, "i range lo:hi");
  counter_cmd->add_option("--pattern-j", pattern_j, "j range lo:hi");
  counter_cmd->add_option("--box-b", box_b, "b range lo:hi (default 1:max grid)");
  counter_cmd->add_option("--box-a", box_a, "a range lo:hi (default 1:max grid)");
  counter_cmd->add_option("--box-d", box_d, "d range lo:hi (default 1:max grid)");
  counter_cmd->add_option("--r", c.r, "number of cells");
  counter_cmd->add_option("--partition-cap", partition_cap, "maximum partitions per grid");
  counter_cmd->add_option("--out", c.out, "certificate path");

  // verify
  std::string in_path;
  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate");
  verify_cmd->add_option("--in,in", in_path, "certificate path")->required();
  verify_cmd->add_option("--universe-cap", c.universe_cap, "maximum universe size");
  verify_cmd->add_option("--max-nodes", c.max_nodes, "search node budget");

  // reduce
  std::string word_text;
  std::string kind_name;
  auto* reduce_cmd = app.add_subcommand("reduce", "evaluate a reduction on a word");
  reduce_cmd->add_option("--kind", kind_name, "additive | multiplicative | affine")->required();
  reduce_cmd->add_option("--A", A_text);
  reduce_cmd->add_option("--D", D_text);
  reduce_cmd->add_option("--word", word_text, "e.g. {1:1,2:1}")->required();

  // laws
  std::string check;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  auto* laws_cmd = app.add_subcommand("laws", "bounded checks of the word laws");
  laws_cmd->add_option("--check", check, "associativity | phi | adequacy | invariance | pws")
      ->required();
  laws_cmd->add_option("--N", c.n, "window [N]")->default_val(4);
  add_sigma(laws_cmd);
  laws_cmd->add_option("--samples", samples);
  laws_cmd->add_option("--seed", seed);

  std::vector<std::string> argv_storage{"hjx"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kFound : kUsage;
  }

  try {
    if (*enumerate_cmd) {
      const Alphabet alphabet(c.sigma, variable);
      if (!lines) {
        const auto words = enumerate_universe(c.n, alphabet, c.universe_cap);
        for (std::size_t i = 0; i < words.size(); ++i) out << i << '\t' << words[i].to_string() << '\n';
        out << "# " << words.size() << " words\n";
        return kFound;
      }
      const ConfigFamily family = parse_family(c.family, c.n);
      std::uint64_t count = 0;
      auto print = [&](const LocatedWord& alpha, const PositionSet& gamma, const PositionSet& f) {
        out << "alpha=" << alpha.to_string() << " gamma=" << Json(gamma).dump()
            << " F=" << Json(f).dump() << '\n';
        ++count;
        return true;
      };
      if (family.kind() == FamilyKind::PlainLines) {
        for_each_plain_line(c.n, alphabet, [&](const PlainLine& l) { return print(l.alpha, l.gamma, {}); });
      } else {
        for_each_extended_line(c.n, alphabet, family, [&](const ExtendedLine& l) {
          return print(l.alpha(), l.gamma(), l.extensions());
        });
      }
      out << "# " << count << " lines\n";
      return kFound;
    }

    if (*witness_cmd) {
      const Alphabet alphabet(c.sigma);
      const ConfigFamily family = parse_family(c.family, c.n);
      ColoringSource source = parse_coloring(coloring_spec, reduce_kind, A_text, D_text);
      const Coloring coloring = materialize(source, c.n, alphabet);
      const auto witness = find_witness(coloring, c.n, alphabet, family);
      if (!witness) {
        err << "no monochromatic line inside [" << c.n << "]\n";
        return kNone;
      }
      write_output(serialize(make_witness_certificate(c.n, c.sigma, family, std::move(source),
                                                      coloring, *witness)),
                   c.out, out);
      return kFound;
    }

    if (*avoid_cmd) {
      const Alphabet alphabet(c.sigma);
      const ConfigFamily family = parse_family(c.family, c.n);
      const Hypergraph graph = build_line_hypergraph(c.n, alphabet, family, c.universe_cap);
      const AvoidanceResult result = avoidance_search(graph, c.r, search_options(c));
      if (result.satisfiable) {
        write_output(serialize(ProperColoringCertificate{c.n, c.sigma, family, c.r, result.coloring}),
                     c.out, out);
        return kFound;
      }
      write_output(serialize(UnsatCertificate{c.n, c.sigma, family, c.r}), c.out, out);
      return kNone;
    }

    if (*min_n_cmd) {
      const Alphabet alphabet(c.sigma);
      const ConfigFamily family = parse_family(c.family, c.family.rfind("ap:", 0) == 0
                                                             ? to_u32(c.family.substr(3)) + 1
                                                             : 1);
      const MinimalNResult result = minimal_n(alphabet, c.r, family, n_max, search_options(c));
      if (!result.n) {
        out << "exceeded " << n_max << '\n';
        return kNone;
      }
      out << *result.n << '\n';
      if (!c.out.empty()) {
        write_output(serialize(UnsatCertificate{*result.n, c.sigma, family.at_window(*result.n), c.r}),
                     c.out, out);
      }
      return kFound;
    }

    if (*cnf_cmd) {
      const ConfigFamily family = parse_family(c.family, c.n);
      const Hypergraph graph =
          build_line_hypergraph(c.n, Alphabet(c.sigma), family, c.universe_cap);
      write_output(export_cnf(graph, c.r).to_dimacs(), cnf_path, out);
      return kFound;
    }

    if (*counter_cmd) {
      const IntRange As = parse_int_range(A_range);
      const IntRange Ds = parse_int_range(D_range);
      const GridKind kind = parse_grid_kind(grid);
      BigInt top = 1;
      for (BigInt A = As.lo; A <= As.hi; ++A) {
        for (BigInt D = Ds.lo; D <= Ds.hi; ++D) top = std::max(top, make_grid(kind, A, D, K).back());
      }
      const IntRange whole{1, top};
      PatternSpec pattern;
      pattern.i_range = parse_index_range(pattern_i);
      pattern.j_range = parse_index_range(pattern_j);
      pattern.b = box_b.empty() ? whole : parse_int_range(box_b);
      pattern.a = box_a.empty() ? whole : parse_int_range(box_a);
      pattern.d = box_d.empty() ? whole : parse_int_range(box_d);
      const auto found = grid_counterexample_search(K, As, Ds, pattern, kind, c.r, partition_cap);
      if (!found) {
        err << "every partition of every grid in range contains the pattern\n";
        return kNone;
      }
      write_output(serialize(*found), c.out, out);
      return kFound;
    }

    if (*verify_cmd) {
      VerifyOptions options;
      options.universe_cap = c.universe_cap;
      options.max_nodes = c.max_nodes;
      const Verdict verdict = verify_text(read_file(in_path), options);
      out << (verdict.ok ? "verified: " : "refuted: ") << verdict.reason << '\n';
      return verdict.ok ? kFound : kNone;
    }

    if (*reduce_cmd) {
      const ReductionKind kind = parse_reduction(kind_name, A_text, D_text);
      out << to_decimal(reduce(kind, LocatedWord::parse(word_text))) << '\n';
      return kFound;
    }

    if (*laws_cmd) {
      const LawReport report = run_law_check(check, c.n, c.sigma, samples, seed);
      out << report.check << ": " << report.samples << " samples, " << report.violations
          << " violations";
      if (report.violations > 0) out << " (first: " << report.first_violation << ")";
      out << "; not refuted at N=" << c.n << '\n';
      return report.violations == 0 ? kFound : kNone;
    }
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hjx::cli
