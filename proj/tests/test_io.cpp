#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "weylmon/io.hpp"

using namespace weylmon;

namespace {

std::string fixture(const std::string& name) {
  return std::string(WEYLMON_FIXTURE_DIR) + "/" + name;
}

int run_cli(const std::string& args, std::string* output = nullptr) {
  const std::string out_file = std::string("/tmp/weylmon_cli_out_") +
                               std::to_string(reinterpret_cast<uintptr_t>(&args) % 100000) +
                               ".txt";
  const std::string cmd =
      std::string(WEYLMON_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (output) {
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    *output = buf.str();
  }
  std::remove(out_file.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("problem documents") {
  SUBCASE("round trip through the A2 fixture") {
    const ProblemSpec spec = ProblemSpec::load(fixture("a2.json"));
    CHECK(spec.cartan.size() == 2);
    CHECK(spec.realization.dim == 2);
    CHECK(spec.mu == RatVec{Rat(3), Rat(2)});
  }
  SUBCASE("short mu is padded for degenerate matrices") {
    const ProblemSpec spec = ProblemSpec::parse(
        R"({"cartan": [[2,-2],[-2,2]], "mu": [1, 0]})");
    CHECK(spec.realization.dim == 3);
    CHECK(spec.mu == RatVec{Rat(1), Rat(0), Rat(0)});
  }
  SUBCASE("explicit completions are honored") {
    const ProblemSpec spec = ProblemSpec::load(fixture("a1aff_alt_completion.json"));
    CHECK(spec.realization.completion == IntMat{{Int(1), Int(3)}});
  }
  SUBCASE("malformed documents fail with ParseError") {
    CHECK_THROWS_AS(ProblemSpec::parse("{"), Error);
    CHECK_THROWS_AS(ProblemSpec::parse(R"({"mu": [1]})"), Error);
    CHECK_THROWS_AS(ProblemSpec::parse(R"({"cartan": [[2,-1],[-1,2]]})"), Error);
    CHECK_THROWS_AS(ProblemSpec::parse(R"({"cartan": [[2,1],[1,2]], "mu": [1,1]})"), Error);
  }
}

TEST_CASE("renner element JSON round trip") {
  const ProblemSpec spec = ProblemSpec::load(fixture("a2.json"));
  const Problem problem = Problem::build(spec);
  const RennerMonoid monoid(*problem.point);
  const RennerEnumeration all = monoid.enumerate(3, 3);
  for (const RennerElement& x : all.elements) {
    const std::string text = renner_element_to_json(monoid, x);
    CHECK(renner_element_from_json(monoid, text) == x);
  }
  CHECK_THROWS_AS(renner_element_from_json(monoid, "not json"), Error);
  CHECK_THROWS_AS(renner_element_from_json(monoid, R"({"unit": "7"})"), Error);
}

TEST_CASE("face exports") {
  const ProblemSpec spec = ProblemSpec::load(fixture("a2.json"));
  const Problem problem = Problem::build(spec);
  const FaceEnumeration fe = enumerate_faces(*problem.point, 3);
  const std::string json = faces_to_json(*problem.point, fe);
  CHECK(json.find("\"faces\"") != std::string::npos);
  const std::string dot = faces_to_dot(*problem.point, fe);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("e|{1}") != std::string::npos);
  // Hasse diagram of the 14-face lattice: hexagon cover relations
  // 6 vertex->edge x2 + 6 edge->hull + 6 empty->vertex = 24 arrows.
  size_t arrows = 0;
  for (size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 1))
    ++arrows;
  CHECK(arrows == 24);
}

TEST_CASE("cli") {
  std::string out;
  SUBCASE("classify") {
    CHECK(run_cli("classify " + fixture("a2.json"), &out) == 0);
    CHECK(out.find("Finite") != std::string::npos);
    CHECK(out.find("mu in Q^sat") != std::string::npos);
    CHECK(run_cli("classify " + fixture("a1aff.json"), &out) == 0);
    CHECK(out.find("Affine") != std::string::npos);
    CHECK(out.find("mu not in Q^sat") != std::string::npos);
    CHECK(run_cli("classify " + fixture("aab.json"), &out) == 0);
    CHECK(out.find("Indefinite, strongly hyperbolic") != std::string::npos);
  }
  SUBCASE("malformed input names the problem") {
    const std::string bad = "/tmp/weylmon_bad_fixture.json";
    std::ofstream(bad) << R"({"cartan": [[2, 1], [1, 2]], "mu": [1, 1]})";
    CHECK(run_cli("classify " + bad, &out) == 2);
    CHECK(out.find("PositiveOffDiagonal") != std::string::npos);
    std::remove(bad.c_str());
  }
  SUBCASE("faces") {
    CHECK(run_cli("faces " + fixture("a2.json") + " --bound 3", &out) == 0);
    CHECK(out.find("14 faces") != std::string::npos);
    CHECK(run_cli("faces " + fixture("a1aff.json") + " --bound 4", &out) == 0);
    CHECK(out.find("truncation") != std::string::npos);
    CHECK(run_cli("faces " + fixture("a2.json") + " --bound 0", &out) == 0);
    CHECK(out.find("5 faces") != std::string::npos);
  }
  SUBCASE("renner") {
    CHECK(run_cli("renner " + fixture("a2.json") + " --table --bound 3", &out) == 0);
    CHECK(out.find("79 elements") != std::string::npos);
    CHECK(run_cli("renner " + fixture("a2.json") + " --verify-grm --bound 3", &out) == 0);
    CHECK(out.find("FAIL") == std::string::npos);
    CHECK(run_cli("renner " + fixture("a1aff.json") + " --verify-grm --bound 3", &out) == 0);
    // x ; x^inv ; x multiplies back to x.
    const std::string x = R"({"unit": "1 2", "sigma": "1", "I": [1]})";
    const std::string xinv = R"({"unit": "1 2", "sigma": "1", "I": [1], "inv": true})";
    CHECK(run_cli("renner " + fixture("a2.json") + " --mul '" + x + ";" + xinv + ";" + x + "'",
                  &out) == 0);
    const ProblemSpec spec = ProblemSpec::load(fixture("a2.json"));
    const Problem problem = Problem::build(spec);
    const RennerMonoid monoid(*problem.point);
    const RennerElement expect = renner_element_from_json(monoid, x);
    CHECK(out == renner_element_to_json(monoid, expect) + "\n");
  }
  SUBCASE("oracle") {
    CHECK(run_cli("oracle " + fixture("a2.json"), &out) == 0);
    CHECK(out.find("lattices isomorphic") != std::string::npos);
    CHECK(run_cli("oracle " + fixture("b2.json"), &out) == 0);
    std::string suggestion;
    CHECK(run_cli("oracle " + fixture("aab.json"), &suggestion) == 2);
    CHECK(suggestion.find("FiniteTypeRequired") != std::string::npos);
    CHECK(suggestion.find("{1}") != std::string::npos);
    CHECK(run_cli("oracle " + fixture("a1aff.json") + " --slice 1", &out) == 0);
    CHECK(out.find("lattices isomorphic") != std::string::npos);
  }
  SUBCASE("weights") {
    CHECK(run_cli("weights " + fixture("a2.json") + " --depth 8 --verify --height 3", &out) == 0);
    CHECK(out.find("0 violations") != std::string::npos);
    CHECK(out.find("0 mismatches") != std::string::npos);
  }
  SUBCASE("byte-for-byte determinism") {
    std::string again;
    CHECK(run_cli("renner " + fixture("a2.json") + " --table --bound 3", &out) == 0);
    CHECK(run_cli("renner " + fixture("a2.json") + " --table --bound 3", &again) == 0);
    CHECK(out == again);
  }
}
