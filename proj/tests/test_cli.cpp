#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "modrad/cli.hpp"
#include "modrad/json_io.hpp"

using namespace modrad;

namespace {

int run_cli(const std::vector<std::string>& args, std::string* stdout_text = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  if (stdout_text) *stdout_text = out.str();
  return code;
}

const char* kZ12 = R"({"ring":{"kind":"Z"},"kind":"finpres","gens":1,"relations":[[12]]})";
const char* kPruefer =
    R"({"ring":{"kind":"Z"},"kind":"symbolic","free_rank":0,"pruefer":[{"p":5,"mult":1}]})";
const char* kExample26 =
    R"({"ring":{"kind":"Z"},"kind":"symbolic","free_rank":0,"families":[{"primes":{"cofinite_except":[]}}]})";

}  // namespace

TEST_CASE("json round-trip for every module kind") {
  const char* samples[] = {
      kZ12,
      kPruefer,
      kExample26,
      R"({"ring":{"kind":"ZmodN","n":12},"kind":"finpres","gens":2,"relations":[[2,0],[0,4]]})",
      R"({"ring":{"kind":"ZlocP","p":5},"kind":"symbolic","free_rank":0,"cyclics":[{"p":5,"k":1,"mult":1}],"pruefer":[{"p":5,"mult":1}]})",
      R"({"ring":{"kind":"Fp","p":7},"kind":"symbolic","free_rank":"inf"})",
      R"({"ring":{"kind":"Z"},"kind":"symbolic","free_rank":2,"cyclics":[{"p":3,"k":2,"mult":1}],"families":[{"primes":[2,3]}]})",
  };
  for (const char* text : samples) {
    ModuleHandle m = json_io::module_from_string(text);
    json_io::json emitted = json_io::module_to_json(m);
    ModuleHandle again = json_io::module_from_json(emitted);
    CHECK(json_io::module_to_json(again) == emitted);
  }
}

TEST_CASE("big integers ride through JSON as decimal strings") {
  std::string big = "123456789012345678901234567890";
  std::string text = R"({"ring":{"kind":"Z"},"kind":"finpres","gens":1,"relations":[[")" + big +
                     R"("]]})";
  ModuleHandle m = json_io::module_from_string(text);
  const auto& fp = std::get<fgmod::FinPresModule>(m);
  CHECK(fp.torsion_exponent() == Int(big));
  auto emitted = json_io::module_to_json(m);
  CHECK(emitted.at("relations")[0][0].is_string());
  CHECK(json_io::int_from_json(emitted.at("relations")[0][0]) == Int(big));
}

TEST_CASE("malformed input maps to ParseError") {
  CHECK_THROWS_AS(json_io::module_from_string("{"), ParseError);
  CHECK_THROWS_AS(json_io::module_from_string(R"({"kind":"finpres"})"), ParseError);
  CHECK_THROWS_AS(json_io::module_from_string(R"({"ring":{"kind":"Q"},"kind":"finpres","gens":1})"),
                  ParseError);
  CHECK_THROWS_AS(
      json_io::module_from_string(
          R"({"ring":{"kind":"Z"},"kind":"finpres","gens":2,"relations":[[1]]})"),
      ParseError);
  CHECK_THROWS_AS(
      json_io::module_from_string(R"({"ring":{"kind":"Z"},"kind":"mystery","gens":1})"),
      ParseError);
}

TEST_CASE("analyze command: verdicts and exit codes") {
  std::string out;
  CHECK(run_cli({"analyze", kZ12}, &out) == cli::kExitOk);
  CHECK(out.find("primeful        true") != std::string::npos);
  CHECK(out.find("pradical        true") != std::string::npos);
  CHECK(out.find("multiplication  true") != std::string::npos);

  CHECK(run_cli({"analyze", kExample26}, &out) == cli::kExitOk);
  CHECK(out.find("primeful        false") != std::string::npos);
  CHECK(out.find("pradical        true") != std::string::npos);

  CHECK(run_cli({"analyze", kPruefer}, &out) == cli::kExitOk);
  CHECK(out.find("primeless       true") != std::string::npos);

  // Parse error -> 2, unsupported explicit property -> 3.
  CHECK(run_cli({"analyze", "{broken"}) == cli::kExitUsage);
  CHECK(run_cli({"analyze", kPruefer, "--props", "multiplication"}) == cli::kExitUnsupported);
  CHECK(run_cli({"analyze", kZ12, "--props", "unknownprop"}) == cli::kExitUsage);
}

TEST_CASE("analyze --json re-parses and round-trips the module") {
  std::string out;
  REQUIRE(run_cli({"analyze", kZ12, "--json"}, &out) == cli::kExitOk);
  auto parsed = json_io::parse(out);
  CHECK(parsed.at("properties").at("primeful").at("verdict").get<bool>());
  ModuleHandle m = json_io::module_from_json(parsed.at("module"));
  CHECK(json_io::module_to_json(m) == parsed.at("module"));
}

TEST_CASE("radical and colon commands") {
  std::string out;
  CHECK(run_cli({"radical", kZ12}, &out) == cli::kExitOk);
  CHECK(out.find("sqrt[p](N):          [[6]]") != std::string::npos);
  CHECK(out.find("(sqrt[p](N) : M):    (6)") != std::string::npos);
  CHECK(out.find("radical formula at I=(12): holds") != std::string::npos);

  const char* mixed = R"({"ring":{"kind":"Z"},"kind":"finpres","gens":2,"relations":[[0,4]]})";
  CHECK(run_cli({"radical", mixed}, &out) == cli::kExitOk);
  CHECK(out.find("fails") != std::string::npos);

  CHECK(run_cli({"radical", kZ12, "--ideal", "4"}, &out) == cli::kExitOk);
  CHECK(out.find("radical formula at I=(4): holds") != std::string::npos);

  CHECK(run_cli({"colon", kZ12, "--submodule", R"({"gens":[[2]]})"}, &out) == cli::kExitOk);
  CHECK(out.find("(N : M) = (2)") != std::string::npos);

  CHECK(run_cli({"radical", kPruefer}) == cli::kExitUnsupported);
}

TEST_CASE("spec command renders psi and closed sets") {
  std::string out;
  CHECK(run_cli({"spec", kExample26}, &out) == cli::kExitOk);
  CHECK(out.find("V(Ann M) = whole") != std::string::npos);
  CHECK(out.find("(0) not realized") != std::string::npos);
  CHECK(out.find("primeful (psi surjective): false") != std::string::npos);

  CHECK(run_cli({"spec", kZ12, "--submodule", R"({"gens":[[4]]})"}, &out) == cli::kExitOk);
  CHECK(out.find("defining radical colon (2)") != std::string::npos);
  CHECK(out.find("members of V(N) in Spec(M): [[2]]") != std::string::npos);

  CHECK(run_cli({"spec", kZ12, "--dot"}, &out) == cli::kExitOk);
  CHECK(out.find("graph psi") != std::string::npos);
  CHECK(run_cli({"spec", kPruefer, "--dot"}) == cli::kExitUnsupported);
}

TEST_CASE("gallery output matches the frozen golden file byte for byte") {
  std::string out;
  REQUIRE(run_cli({"gallery"}, &out) == cli::kExitOk);
  std::ifstream golden(MODRAD_GALLERY_EXPECTED);
  REQUIRE(golden.good());
  std::stringstream expected;
  expected << golden.rdbuf();
  CHECK(out == expected.str());
  CHECK(cli::render_gallery() == expected.str());
}

TEST_CASE("verify command: pass, JSON report, unknown suite") {
  std::string out;
  CHECK(run_cli({"verify", "prop_2_9", "--trials", "30", "--seed", "7"}, &out) == cli::kExitOk);
  CHECK(out.find("pass") != std::string::npos);

  CHECK(run_cli({"verify", "thm_2_11", "--trials", "25", "--seed", "7", "--json"}, &out) ==
        cli::kExitOk);
  auto report = json_io::parse(out);
  CHECK(report.at("suite") == "thm_2_11");
  CHECK(report.at("seed") == 7);
  CHECK(report.at("failures").empty());

  CHECK(run_cli({"verify", "no_such_suite"}) == cli::kExitUsage);
}

TEST_CASE("oracle command cross-checks the closed form") {
  std::string out;
  CHECK(run_cli({"oracle", kZ12}, &out) == cli::kExitOk);
  CHECK(out.find("submodules: 6") != std::string::npos);
  CHECK(out.find("agreement: yes") != std::string::npos);
  CHECK(run_cli({"oracle", kZ12, "--submodule", R"({"gens":[[4]]})"}, &out) == cli::kExitOk);
  CHECK(out.find("agreement: yes") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({}) == cli::kExitUsage);
  CHECK(run_cli({"analyze"}) == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}) == cli::kExitUsage);
}
