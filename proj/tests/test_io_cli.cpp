#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gray16/catalog.hpp"
#include "gray16/cli.hpp"
#include "gray16/io.hpp"

using namespace gray16;

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  const std::filesystem::path path =
      std::filesystem::path(GRAY16_GOLDEN_DIR) / name;
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("group serialization round trip") {
  for (const auto& name : {"C4", "D8", "Q16", "G12"}) {
    const GroupTable g = build_builtin(name);
    const GroupTable back = group_from_text(group_to_text(g));
    CHECK(back.same_table(g));
  }
  CHECK_THROWS_AS(group_from_text("order 2\ne x\n0 1\n1"), std::invalid_argument);
  CHECK_THROWS_AS(group_from_text("size 2\ne x\n0 1\n1 0"), std::invalid_argument);
}

TEST_CASE("graymap file round trip is bit-exact") {
  const GrayMapTable map = standard_type1("D8");
  const std::string text = graymap_to_text(map, "D8");
  std::string name;
  const GrayMapTable back = graymap_from_text(text, &name);
  CHECK(name == "D8");
  CHECK(graymap_to_text(back, name) == text);
  for (int i = 0; i < map.group.order(); ++i) CHECK(back.word(i) == map.word(i));

  CHECK_THROWS_AS(graymap_from_text("group D8 length 4\ne\t0000\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(graymap_from_text("group D8 length 4\nz\t0000\n"),
                  std::invalid_argument);
}

TEST_CASE("automorphism serialization lines") {
  const GroupTable k8 = build_builtin("K8");
  const auto f = automorphism_from_images(
      k8, {{k8.index_of("x"), k8.index_of("x^3")}, {k8.index_of("y"), k8.index_of("y")}});
  REQUIRE(f.has_value());
  CHECK(automorphism_lines(k8, *f) ==
        std::vector<std::string>{"x -> x^3", "y -> y"});
}

TEST_CASE("cli usage errors exit with status 2") {
  CHECK(run_cli({}).status == 2);
  CHECK(run_cli({"frobnicate"}).status == 2);
  CHECK(run_cli({"groups", "show", "F20"}).status == 2);
  CHECK(run_cli({"graymap", "type1"}).status == 2);
  CHECK(run_cli({"verify", "/nonexistent/map.txt"}).status == 2);
  CHECK(run_cli({"graymap", "type1", "C8", "--format", "yaml"}).status == 2);
}

TEST_CASE("cli verdicts exit with status 1") {
  CHECK(run_cli({"graymap", "type2", "Q8"}).status == 1);
  CHECK(run_cli({"graymap", "type2", "G1"}).status == 1);
  CHECK(run_cli({"graymap", "type2", "G11"}).status == 1);
  CHECK(run_cli({"feasible", "C8", "--length", "3"}).status == 1);
  CHECK(run_cli({"feasible", "K8", "--length", "3"}).status == 0);
  CHECK(run_cli({"graymap", "type2", "G9"}).status == 0);
}

TEST_CASE("cli output is deterministic") {
  const RunResult first = run_cli({"survey", "--format", "tsv"});
  const RunResult second = run_cli({"survey", "--format", "tsv"});
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("verify accepts its own graymap output") {
  const RunResult map = run_cli({"graymap", "type1", "G7", "--format", "tsv"});
  REQUIRE(map.status == 0);
  const auto path = std::filesystem::temp_directory_path() / "g7_type1.tsv";
  std::ofstream(path) << map.out;
  const RunResult verdict = run_cli({"verify", path.string()});
  CHECK(verdict.status == 0);
  CHECK(verdict.out.find("Gray map") != std::string::npos);

  // Corrupt one word: the verifier must refute it.
  std::string corrupted = map.out;
  corrupted.replace(corrupted.find("00110011"), 8, "00110010");
  const auto bad_path = std::filesystem::temp_directory_path() / "g7_bad.tsv";
  std::ofstream(bad_path) << corrupted;
  CHECK(run_cli({"verify", bad_path.string()}).status == 1);
}

TEST_CASE("cli golden outputs") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"classify"}, "classify.txt"},
      {{"survey", "--format", "tsv"}, "survey.tsv"},
      {{"graymap", "type1", "C8"}, "type1_C8.txt"},
      {{"graymap", "type1", "K8"}, "type1_K8.txt"},
      {{"graymap", "type1", "D8"}, "type1_D8.txt"},
      {{"graymap", "type1", "Q8"}, "type1_Q8.txt"},
      {{"graymap", "type1", "C4"}, "type1_C4.txt"},
      {{"graymap", "type1", "G1"}, "type1_G1.txt"},
      {{"graymap", "type1", "G7"}, "type1_G7.txt"},
      {{"graymap", "type2", "D8"}, "type2_D8.txt"},
      {{"graymap", "type2", "K8"}, "type2_K8.txt"},
      {{"graymap", "type2", "G7"}, "type2_G7.txt"},
      {{"graymap", "type2", "G9"}, "type2_G9.txt"},
      {{"graymap", "type2", "G12"}, "type2_G12.txt"},
      {{"graymap", "type2", "G13"}, "type2_G13.txt"},
  };
  for (const auto& [args, file] : cases) {
    const RunResult result = run_cli(args);
    CHECK_MESSAGE(result.status == 0, file);
    CHECK_MESSAGE(result.out == golden(file), file);
  }
}

TEST_CASE("survey json carries the same fields as the tsv") {
  const RunResult json = run_cli({"survey", "--format", "json"});
  CHECK(json.status == 0);
  CHECK(json.out.find("\"group\": \"G13\"") != std::string::npos);
  CHECK(json.out.find("\"verdict\": \"fails C2\"") != std::string::npos);
  CHECK(json.out.find("\"paper_section\": \"7.4\"") != std::string::npos);
}

TEST_CASE("groups show emits the group file format") {
  const RunResult shown = run_cli({"groups", "show", "C4"});
  CHECK(shown.status == 0);
  CHECK(group_from_text(shown.out).same_table(build_builtin("C4")));
}

TEST_CASE("aut command formats") {
  const RunResult table = run_cli({"aut", "K8"});
  CHECK(table.status == 0);
  CHECK(table.out.find("|Aut(K8)| = 8") != std::string::npos);
  CHECK(table.out.find("isomorphic to D8") != std::string::npos);
  CHECK(table.out.find("x -> x^3") != std::string::npos);

  const RunResult tsv = run_cli({"aut", "C8", "--format", "tsv"});
  CHECK(tsv.out.find("x->x^5") != std::string::npos);

  const RunResult json = run_cli({"aut", "C8", "--format", "json"});
  CHECK(json.status == 0);
  CHECK(json.out.find("\"count\": 4") != std::string::npos);
}

TEST_CASE("explicit decompositions through the cli") {
  const RunResult good = run_cli({"graymap", "type2", "G8", "--decomp",
                                  "(N=D8, n=2, tau=x->x^3;y->y, v=e)"});
  CHECK(good.status == 0);

  // The literal builds G8, not G7.
  const RunResult wrong = run_cli({"graymap", "type2", "G7", "--decomp",
                                   "(N=D8, n=2, tau=x->x^3;y->y, v=e)"});
  CHECK(wrong.status == 2);

  const RunResult refuted = run_cli({"graymap", "type2", "G13", "--decomp",
                                     "(N=K8, n=2, tau=x->x;y->y, v=y)"});
  CHECK(refuted.status == 1);
  CHECK(refuted.err.find("C2") != std::string::npos);
}

TEST_CASE("exhaustive survey runs clean") {
  const RunResult result = run_cli({"survey", "--exhaustive", "--format", "tsv"});
  CHECK(result.status == 0);
  CHECK(result.out.find("exploratory") == std::string::npos);
}
