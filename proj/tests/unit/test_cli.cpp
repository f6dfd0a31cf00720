#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = folb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("recognize") {
  const Run r = run({"--format", "tsv", "recognize", "hypercube(3)", "median"});
  CHECK(r.code == folb::cli::kComputed);
  CHECK(r.out.rfind("median\ttrue", 0) == 0);

  const Run k23 = run({"--format", "tsv", "recognize", "complete_bipartite(2,3)", "median", "--via", "sentence"});
  CHECK(k23.code == 0);
  CHECK(k23.out.rfind("median\tfalse\t", 0) == 0);

  const Run slim = run({"recognize", "cycle(4)", "interval_delta_slim", "--delta", "0"});
  CHECK(slim.code == 0);
  CHECK(slim.out.find("false") != std::string::npos);
}

TEST_CASE("eval and jsonl output") {
  const Run r = run({"--format", "jsonl", "eval", "cycle(3)", "-f", "@bipartite"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"kind", "subject", "result", "witness", "cost"}) CHECK(j.contains(key));
  CHECK(j["result"] == "false");
  CHECK(j["witness"].size() == 3);

  const Run bound = run({"--format", "tsv", "eval", "path(3)", "-f", "E(x,y)", "--let", "x=0", "--let", "y=1"});
  CHECK(bound.code == 0);
  CHECK(bound.out.find("\ttrue") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == folb::cli::kUsage);
  CHECK(run({"frobnicate"}).code == folb::cli::kUsage);
  CHECK(run({"recognize", "cycle(5)", "no_such_class"}).code == folb::cli::kUsage);
  CHECK(run({"recognize", "cycle(2)", "median"}).code == folb::cli::kUsage);
  CHECK(run({"--format", "xml", "classify", "cycle(5)"}).code == folb::cli::kUsage);
  CHECK(run({"eval", "cycle(5)", "-f", "forall x ("}).code != 0);
  CHECK(run({"recognize", "/nonexistent/graph.txt", "median"}).code == folb::cli::kDataOrResource);
  CHECK(run({"recognize", "path(3)", "median", "--via", "guess"}).code == folb::cli::kUsage);
}

TEST_CASE("gen round trip and other commands") {
  const auto file = std::filesystem::temp_directory_path() / "folb_cli_q3.txt";
  REQUIRE(run({"gen", "hypercube(3)", "-o", file.string()}).code == 0);
  std::ifstream in(file);
  std::string header;
  std::getline(in, header);
  while (header.rfind('#', 0) == 0) std::getline(in, header);
  CHECK(header == "8 12");
  CHECK(run({"--format", "tsv", "recognize", file.string(), "partial_cube"}).out.rfind("partial_cube\ttrue", 0) == 0);
  std::filesystem::remove(file);

  const Run ef = run({"--format", "tsv", "ef", "path(2)", "path(3)", "-r", "3"});
  CHECK(ef.code == 0);
  CHECK(ef.out.find("Spoiler") != std::string::npos);

  CHECK(run({"axioms", "cycle(5)"}).out.find("ok") != std::string::npos);
  CHECK(run({"--format", "tsv", "hyperbolicity", "cycle(4)"}).out.find("\t1") != std::string::npos);
  CHECK(run({"audit", "--max-order", "4"}).code == 0);
  const Run cls = run({"--format", "tsv", "classify", "cycle(5)"});
  CHECK(cls.code == 0);
  CHECK(cls.out.find("weakly_modular\tfalse") != std::string::npos);
}

TEST_CASE("cost warning") {
  // Width 6 on 64 vertices is far above the threshold.
  const std::string wide = "forall a forall b forall c forall d forall e forall f B(a,b,c) | B(d,e,f)";
  const Run r = run({"eval", "hypercube(6)", "-f", wide});
  CHECK(r.code == folb::cli::kDataOrResource);
  CHECK(r.err.find("warning") != std::string::npos);
}
