#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mlgap/cover.hpp"
#include "mlgap/sft_io.hpp"

using namespace mlgap;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

const std::filesystem::path kData = MLGAP_DATA_DIR;

std::filesystem::path scratch(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("markov-value prints the exact surd") {
  const Run two = run({"markov-value", "2"});
  CHECK(two.status == 0);
  CHECK(two.out.find("2*sqrt(2)") != std::string::npos);
  CHECK(two.out.find("2.828427") != std::string::npos);
  const Run split = run({"markov-value", "2", "2", "1", "1"});
  CHECK(split.out.find("(sqrt(221))/5") != std::string::npos);
  CHECK(run({"markov-value", "20"}).status == 2);
}

TEST_CASE("extremal and gap-constant") {
  const Run max = run({"extremal", "E3", "--max", "--prefix", "1"});
  CHECK(max.status == 0);
  CHECK(max.out.find("[0;(1,3)]") != std::string::npos);
  CHECK(run({"extremal", "E3"}).status == 2);
  CHECK(run({"extremal", "E3", "--min", "--max"}).status == 2);

  const Run gap = run({"gap-constant", "B4.1", "E2", "--below", "sqrt(10)"});
  CHECK(gap.status == 0);
  CHECK(gap.out.find("sqrt(2) + sqrt(3)") != std::string::npos);
  CHECK(gap.out.find("PASS") != std::string::npos);
  const Run tight = run({"gap-constant", "B4.3", "E3", "--below", "3.81"});
  CHECK(tight.status == 1);
  CHECK(tight.out.find("FAIL") != std::string::npos);
}

TEST_CASE("verify-cover by name and by file") {
  const Run named = run({"verify-cover", "4.1"});
  CHECK(named.status == 0);
  CHECK(named.out.find("(r+1)/((3r+5)(4r+7))") != std::string::npos);
  CHECK(named.out.find("PASS") != std::string::npos);
  const Run file = run({"verify-cover", (kData / "cases" / "5.5.case").string(), "--find-s"});
  CHECK(file.status == 0);
  CHECK(file.out.find("smallest admissible s") != std::string::npos);
  // a case whose sum exceeds 1 at its exponent
  const auto loose = scratch("mlgap_loose.case", "name: loose\ns: 0.05\nrule: g 3 21\n");
  const Run fails = run({"verify-cover", loose.string()});
  CHECK(fails.status == 1);
  CHECK(fails.out.find("FAIL") != std::string::npos);
}

TEST_CASE("malformed input names the line and field") {
  const auto bad = scratch("mlgap_bad.sft", "name: t\nalphabet: 1 2\nforbidden: 13\n");
  const Run spec = run({"extremal", bad.string(), "--max"});
  CHECK(spec.status == 2);
  CHECK(spec.err.find(":3:") != std::string::npos);
  CHECK(spec.err.find("forbidden") != std::string::npos);

  const auto bad_case = scratch("mlgap_bad.case", "name: x\ns: 0.2\nrule: g 3 2x1\n");
  const Run c = run({"verify-cover", bad_case.string()});
  CHECK(c.status == 2);
  CHECK(c.err.find(":3:") != std::string::npos);
  CHECK(c.err.find("rule") != std::string::npos);

  CHECK(run({"verify-cover", "9.9"}).status == 2);
  CHECK(run({"report", "--mode", "exact"}).status == 2);
  CHECK(run({}).status == 2);
}

TEST_CASE("dim and report") {
  const Run dim = run({"dim", "E2", "--order", "6", "--oracle-depth", "6"});
  CHECK(dim.status == 0);
  CHECK(dim.out.find("HEURISTIC") != std::string::npos);
  CHECK(dim.out.find("RIGOROUS-UP-TO-DISTORTION-CONSTANT") != std::string::npos);
  CHECK(run({"dim", "B4.3"}).status == 2);

  const Run rigorous = run({"report", "--mode", "rigorous"});
  CHECK(rigorous.status == 0);
  CHECK(rigorous.out.find("HD(M \\ L) < 0.986927") != std::string::npos);
  const Run structured = run({"--precision", "60", "report", "--format", "structured"});
  CHECK(structured.status == 0);
  CHECK(structured.out.find("\"global_bound\": \"0.986927\"") != std::string::npos);
  CHECK(run({"report", "--format", "structured"}).out == run({"report", "--format", "structured"}).out);
}

TEST_CASE("bundled data files match the builtins") {
  for (const SftSpec& s : builtin_specs()) {
    INFO(s.name);
    CHECK(load_spec((kData / "specs" / (s.name + ".sft")).string()) == s);
  }
  for (const BranchCase& c : builtin_cases()) {
    INFO(c.name);
    CHECK(load_case((kData / "cases" / (c.name + ".case")).string()) == c);
  }
}
