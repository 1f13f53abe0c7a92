#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "hjx/certificate.hpp"

using namespace hjx;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hjx_cli_test_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("witness for a constant coloring") {
  const auto r = run({"witness", "--N", "3", "--sigma", "2", "--family", "ap:1", "--coloring", "const:1"});
  REQUIRE(r.code == cli::kFound);
  const auto j = Json::parse(r.out);
  CHECK(j["kind"] == "witness");
  CHECK(j["witness"]["alpha"] == "{}");
  CHECK(j["witness"]["gamma"] == Json::array({3}));
  CHECK(j["witness"]["F"] == Json::array({1, 2}));
  CHECK(j["points"].size() == 4);
}

TEST_CASE("verify accepts emitted certificates and rejects tampering") {
  const auto path = temp_path("witness.json");
  REQUIRE(run({"witness", "--N", "4", "--sigma", "2", "--coloring", "mod:3:1,2,2", "--reduce",
               "multiplicative", "--out", path})
              .code == cli::kFound);
  CHECK(run({"verify", path}).code == cli::kFound);

  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Json j = Json::parse(text);
  const auto color = j["points"][1]["color"].get<int>();
  j["points"][1]["color"] = color == 1 ? 2 : 1;
  write(path, j.dump(2) + "\n");
  const auto r = run({"verify", path});
  CHECK(r.code == cli::kNone);
  CHECK(r.out.find("refuted") == 0);

  write(path, text.substr(0, text.size() - 1));
  CHECK(run({"verify", path}).code == cli::kNone);
  write(path, "{\"kind\":\"nonsense\"}\n");
  CHECK(run({"verify", path}).code == cli::kNone);
  std::filesystem::remove(path);
}

TEST_CASE("min-n") {
  const auto r = run({"min-n", "--sigma", "1", "--r", "1", "--family", "ap:1", "--nmax", "5"});
  CHECK(r.code == cli::kFound);
  CHECK(r.out == "3\n");
  CHECK(run({"min-n", "--sigma", "1", "--r", "1", "--family", "ap:1", "--nmax", "2"}).code ==
        cli::kNone);
}

TEST_CASE("avoid, export-cnf and the resource limit code") {
  const auto path = temp_path("proper.json");
  REQUIRE(run({"avoid", "--N", "3", "--sigma", "2", "--r", "2", "--out", path}).code == cli::kFound);
  CHECK(run({"verify", path}).code == cli::kFound);
  // The proper coloring feeds back in as an explicit coloring with no witness.
  CHECK(run({"witness", "--N", "3", "--sigma", "2", "--coloring", "file:" + path}).code == cli::kNone);
  std::filesystem::remove(path);

  const auto unsat = run({"avoid", "--N", "3", "--sigma", "1", "--r", "2"});
  CHECK(unsat.code == cli::kNone);
  CHECK(Json::parse(unsat.out)["kind"] == "unsat");

  const auto cnf = run({"export-cnf", "--N", "1", "--sigma", "2", "--family", "plain"});
  CHECK(cnf.code == cli::kFound);
  CHECK(cnf.out == "p cnf 6 8\n1 2 0\n-1 -2 0\n3 4 0\n-3 -4 0\n5 6 0\n-5 -6 0\n-3 -5 0\n-4 -6 0\n");

  CHECK(run({"avoid", "--N", "7", "--sigma", "2", "--max-nodes", "10"}).code == cli::kResourceLimit);
  CHECK(run({"enumerate", "--N", "20", "--sigma", "2"}).code == cli::kResourceLimit);
}

TEST_CASE("reduce, enumerate, laws") {
  CHECK(run({"reduce", "--kind", "affine", "--A", "1", "--D", "2", "--word", "{1:1,2:1}"}).out == "15\n");
  CHECK(run({"reduce", "--kind", "multiplicative", "--word", "{2:3}"}).out == "8\n");
  CHECK(run({"reduce", "--kind", "additive", "--word", "{2:v}"}).code == cli::kUsage);
  const auto e = run({"enumerate", "--N", "1", "--sigma", "2"});
  CHECK(e.out == "0\t{}\n1\t{1:0}\n2\t{1:1}\n# 3 words\n");
  CHECK(run({"enumerate", "--N", "3", "--sigma", "1", "--lines"}).out.find("# 3 lines") !=
        std::string::npos);
  const auto l = run({"laws", "--check", "associativity", "--samples", "200", "--seed", "3"});
  CHECK(l.code == cli::kFound);
  CHECK(l.out == run({"laws", "--check", "associativity", "--samples", "200", "--seed", "3"}).out);
}

TEST_CASE("counterexample") {
  const auto path = temp_path("grid.json");
  const auto r = run({"counterexample", "--K", "2", "--A", "1:3", "--D", "1:3", "--out", path});
  CHECK((r.code == cli::kFound || r.code == cli::kNone));
  if (r.code == cli::kFound) CHECK(run({"verify", path}).code == cli::kFound);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"witness", "--N", "3"}).code == cli::kUsage);
  CHECK(run({"witness", "--N", "3", "--coloring", "rainbow"}).code == cli::kUsage);
  CHECK(run({"witness", "--N", "3", "--coloring", "mod:2:1,2"}).code == cli::kUsage);
  CHECK(run({"witness", "--N", "3", "--family", "ap:x", "--coloring", "const:1"}).code == cli::kUsage);
  CHECK(run({"witness", "--N", "2", "--family", "ap:2", "--coloring", "const:1"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kFound);
}

}  // TEST_SUITE
