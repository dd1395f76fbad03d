#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "grp/corpus.hpp"
#include "grp/errors.hpp"
#include "grp/suites.hpp"

using namespace grp;

namespace {

std::vector<CorpusEntry> small_corpus(std::initializer_list<const char*> records) {
  std::string text;
  for (const char* r : records) {
    text += r;
    text += '\n';
  }
  return parse_corpus_text(text, /*tolerant=*/false).entries;
}

std::string temp_path() {
  static int counter = 0;
  return (std::filesystem::temp_directory_path() /
          ("nrverify_test_" + std::to_string(counter++) + ".out"))
      .string();
}

int run_cli(const std::string& args, std::string* out_path = nullptr) {
  std::string out = temp_path();
  if (out_path) *out_path = out;
  std::string cmd = std::string(NRVERIFY_BIN) + " " + args + " > " + out + " 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("suite registry") {
  CHECK(is_suite_id("th1"));
  CHECK(is_suite_id("anchors"));
  CHECK(is_suite_id("all"));
  CHECK(!is_suite_id("th9"));
  CHECK(suite_ids().size() == 17);
  auto corpus = small_corpus({"C2 = cyclic 2"});
  CHECK_THROWS_AS(run_suite("bogus", corpus), UnknownSuite);
}

TEST_CASE("the dihedral suite verifies the corpus family") {
  auto corpus = small_corpus({"D2 = dihedral 2", "D4 = dihedral 4", "D6 = dihedral 6",
                              "D8 = dihedral 8", "D14 = dihedral 14",
                              "D18 = dihedral 18", "D24 = dihedral 24",
                              "C6 = cyclic 6"});
  VerificationReport report = run_suite("lem9", corpus);
  CHECK(report.verdict == "verified");
  CHECK(report.groups_checked == 7);  // the cyclic entry is not dihedral
  CHECK(report.counterexamples.empty());
}

TEST_CASE("theorem suite on a singleton A5 corpus") {
  auto corpus = small_corpus({"A5 = alternating 5"});

  VerificationReport th1 = run_suite("th1", corpus);
  CHECK(th1.verdict == "verified");  // vacuously: the hypothesis fails on A5
  CHECK(th1.groups_checked == 1);
  CHECK(th1.hypothesis_holders.empty());
  CHECK(th1.counterexamples.empty());

  VerificationReport th2 = run_suite("th2", corpus);
  CHECK(th2.verdict == "verified");
  REQUIRE(th2.hypothesis_holders == std::vector<std::string>{"A5"});
  REQUIRE(th2.notes.size() == 1);
  CHECK(th2.notes.front().find("isomorphic to A5") != std::string::npos);

  VerificationReport cor = run_suite("cor", corpus);
  CHECK(cor.verdict == "verified");
  CHECK(cor.hypothesis_holders.empty());
}

TEST_CASE("groups above the cap are reported as skipped") {
  auto corpus = small_corpus({"C2 = cyclic 2", "L2_11 = psl2 11"});
  VerificationReport report = run_suite("th1", corpus);
  CHECK(report.groups_checked == 1);
  REQUIRE(report.skipped.size() == 1);
  CHECK(report.skipped.front().group == "L2_11");
  CHECK(report.verdict == "verified");
}

TEST_CASE("anchors suite passes") {
  VerificationReport report = run_suite("anchors", {});
  CHECK(report.verdict == "verified");
  CHECK(report.counterexamples.empty());
  bool a4_flag = false;
  for (const auto& note : report.notes)
    a4_flag = a4_flag || note.find("s4-a4-verdict") != std::string::npos;
  CHECK(a4_flag);
}

TEST_CASE("reports are deterministic") {
  auto corpus = small_corpus({"S4 = symmetric 4", "A4 = alternating 4",
                              "D12 = dihedral 12", "Q8 = quaternion8"});
  SuiteOptions options;
  options.jobs = 3;
  std::ostringstream first, second;
  run_suite("th1", corpus, options).write_text(first);
  run_suite("th1", corpus, options).write_text(second);
  CHECK(first.str() == second.str());
  CHECK(run_suite("nc1", corpus, options).to_json().dump() ==
        run_suite("nc1", corpus, options).to_json().dump());
}

TEST_CASE("run_suite all aggregates") {
  auto corpus = small_corpus({"S3 = symmetric 3", "C4 = cyclic 4"});
  VerificationReport total = run_suite("all", corpus);
  CHECK(total.suite_id == "all");
  CHECK(total.verdict == "verified");
}

TEST_CASE("cli: verify exits zero and writes machine reports") {
  std::string report_file = temp_path();
  int code = run_cli("verify lem3 --report " + report_file + " --format machine");
  CHECK(code == 0);
  std::string json_text = slurp(report_file);
  CHECK(json_text.find("\"suite_id\": \"lem3\"") != std::string::npos);
  CHECK(json_text.find("\"verdict\": \"verified\"") != std::string::npos);
}

TEST_CASE("cli: check-nr reports the V4 witness in A5") {
  std::string out_path;
  int code = run_cli("check-nr --group A5 --subgroup \"(1 2)(3 4),(1 3)(2 4)\"",
                     &out_path);
  CHECK(code == 1);
  std::string out = slurp(out_path);
  CHECK(out.find("not NR") != std::string::npos);
  CHECK(out.find("witness K = ") != std::string::npos);
  CHECK(out.find("order 2") != std::string::npos);
}

TEST_CASE("cli: check-triple answers the S4 instance") {
  std::string out_path;
  int code = run_cli(
      "check-triple --G S4 --H \"(1 2 3),(1 2)\" --K \"(1 2 3)\"", &out_path);
  CHECK(code == 0);
  CHECK(slurp(out_path).find("special") != std::string::npos);
}

TEST_CASE("cli: lattice dump contains thirty records for S4") {
  std::string emit = temp_path();
  std::string out_path;
  int code = run_cli("lattice --group S4 --emit " + emit, &out_path);
  CHECK(code == 0);
  CHECK(slurp(out_path).find("30 subgroups") != std::string::npos);
  std::string records = slurp(emit);
  CHECK(records.find("\"order\"") != std::string::npos);
  CHECK(records.find("\"maximal_in\"") != std::string::npos);
}

TEST_CASE("cli: unknown suite is a usage error") {
  CHECK(run_cli("verify nosuch") == 2);
  CHECK(run_cli("numscan lemma3") == 0);
}

TEST_CASE("cli: machine reports are byte-identical across runs") {
  std::string first = temp_path(), second = temp_path();
  CHECK(run_cli("verify cor --report " + first + " --format machine") == 0);
  CHECK(run_cli("verify cor --report " + second + " --format machine") == 0);
  std::string a = slurp(first), b = slurp(second);
  CHECK(!a.empty());
  CHECK(a == b);
}
