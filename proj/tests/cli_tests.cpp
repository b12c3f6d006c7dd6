// End-to-end checks of the command line tool: output shape, JSON fields,
// and the exit-code contract (0 ok, 1 usage, 2 failed check, 3 inconclusive).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "pptrans/partition.hpp"
#include "pptrans/transformation.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PPTRANS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("rank: text and json") {
  const RunResult r = run_cli("rank 3+2+1");
  CHECK(r.code == 0);
  CHECK(r.out.find("total") != std::string::npos);
  CHECK(r.out.find("7") != std::string::npos);

  const RunResult j = run_cli("--json rank 3+2+1");
  CHECK(j.code == 0);
  const json parsed = json::parse(j.out);
  CHECK(parsed.at("total") == 7);
  CHECK(parsed.at("units") == 2);
  CHECK(parsed.at("relrank_T_over_Sigma") == 3);
  CHECK(parsed.at("relrank_Sigma_over_S") == 2);
  CHECK(parsed.at("partition") == "3+2+1");
  for (const char* key : {"p", "q", "t", "s", "r_rep", "l", "g", "g_prime", "h"})
    CHECK(parsed.at("params").contains(key));
  CHECK(parsed.at("special_case").is_null());

  const json special = json::parse(run_cli("--json rank 2+1").out);
  CHECK(special.at("total") == 3);
  CHECK_FALSE(special.at("special_case").is_null());
}

TEST_CASE("size reports the three orders") {
  const RunResult r = run_cli("size 2+2");
  CHECK(r.code == 0);
  CHECK(r.out.find("64") != std::string::npos);
  CHECK(r.out.find("32") != std::string::npos);
  const json j = json::parse(run_cli("--json size 2+2").out);
  CHECK(j.at("order_T") == "64");
  CHECK(j.at("order_Sigma") == "32");
  CHECK(j.at("order_S") == "8");
}

TEST_CASE("gens prints labeled transformations that parse back") {
  const RunResult r = run_cli("gens 2+2");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 4);
  CHECK(r.out.find("unit: ") != std::string::npos);
  CHECK(r.out.find("A(2,2): ") != std::string::npos);
  CHECK(r.out.find("C(1): ") != std::string::npos);

  const pptrans::Partition p({2, 2});
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line)) {
    const auto colon = line.find(": ");
    REQUIRE(colon != std::string::npos);
    const auto f = pptrans::Transformation::parse(line.substr(colon + 2));
    CHECK(pptrans::in_T(p, f));
  }

  const json j = json::parse(run_cli("--json gens 3+2+1").out);
  CHECK(j.at("count") == 7);
  CHECK(j.at("rank") == 7);
  CHECK(j.at("elements").size() == 7);
  for (const auto& e : j.at("elements")) {
    CHECK(e.contains("label"));
    CHECK(e.contains("images"));
    CHECK(e.contains("note"));
  }
}

TEST_CASE("verify passes on constructed sets") {
  const RunResult r = run_cli("verify 2+2");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("64") != std::string::npos);
  const json j = json::parse(run_cli("--json verify 3+2+1").out);
  CHECK(j.at("status") == "pass");
  CHECK(j.at("closure_order") == 3024);
}

TEST_CASE("verify over-cap paths exit 3") {
  CHECK(run_cli("--cap 10 verify 3+3").code == 3);
  // Too big to enumerate without an explicit cap.
  const RunResult r = run_cli("verify 8+8");
  CHECK(r.code == 3);
  CHECK(run_cli("--json --quiet verify 8+8").out.empty());
}

TEST_CASE("certify prints the obligation table") {
  const RunResult r = run_cli("certify 3+2+1");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("class A(") != std::string::npos);
  CHECK(r.out.find("class B(1)") != std::string::npos);
  CHECK(r.out.find("parity bit") != std::string::npos);
  CHECK(r.out.find("MISSING") == std::string::npos);

  const json j = json::parse(run_cli("--json certify 2+2+1+1").out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("mode") == "minimality");
  CHECK(j.at("obligations").size() == 7);
}

TEST_CASE("certify of a weak set from a file fails with exit 2") {
  const std::string path = "cli_test_weak_set.txt";
  {
    std::ofstream out(path);
    out << "# only the identity, with a labeled line to exercise the parser\n";
    out << "unit: 0,1,2,3\n";
  }
  const RunResult r = run_cli("certify 2+2 " + path);
  CHECK(r.code == 2);
  CHECK(r.out.find("MISSING") != std::string::npos);
  CHECK(r.out.find("FAIL") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("search reports the exact minimum") {
  const RunResult r = run_cli("search 2+1");
  CHECK(r.code == 0);
  CHECK(r.out.find("3") != std::string::npos);
  const json j = json::parse(run_cli("--json search 1+1").out);
  CHECK(j.at("status") == "exact");
  CHECK(j.at("rank") == 2);
  CHECK(j.at("formula_rank") == 2);
  // Ground set too large: inconclusive by contract.
  CHECK(run_cli("search 3+3").code == 3);
}

TEST_CASE("table annotates the two published-size misprints and exits 0") {
  const RunResult r = run_cli("table 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("misprint") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);

  const json j = json::parse(run_cli("--json table 7").out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("rows").size() == 41);  // partitions of 3..7
  int misprints = 0, tabulated = 0;
  for (const auto& row : j.at("rows")) {
    if (row.at("status") ==  "size misprint in published table") ++misprints;
    if (!row.at("published_rank").is_null()) ++tabulated;
    CHECK(row.at("status") != "MISMATCH");
  }
  CHECK(misprints == 2);
  CHECK(tabulated == 31);
}

TEST_CASE("jinv prints kernel multisets") {
  const RunResult r = run_cli("jinv 4+4 1,1,3,3,4,5,6,7");
  CHECK(r.code == 0);
  CHECK(r.out.find("{2,2}") != std::string::npos);
  CHECK(r.out.find("{1,1,1,1}") != std::string::npos);
  const json j = json::parse(run_cli("--json jinv 4+4 1,1,3,3,4,5,6,7").out);
  CHECK(j.at("table").size() == 1);
  CHECK(j.at("table")[0].at("source_size") == 4);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("").code == 1);
  CHECK(run_cli("frobnicate 2+2").code == 1);
  CHECK(run_cli("rank").code == 1);
  CHECK(run_cli("rank 0+2").code == 1);
  CHECK(run_cli("rank 2+x").code == 1);
  CHECK(run_cli("jinv 2+2 9,9,9,9").code == 1);
  CHECK(run_cli("certify 2+2 no_such_file.txt").code == 1);
  CHECK(run_cli("table 2").code == 1);
}

TEST_CASE("quiet mode stays silent but keeps the exit code") {
  const RunResult ok = run_cli("--quiet rank 3+2+1");
  CHECK(ok.code == 0);
  CHECK(ok.out.empty());
  const RunResult bad = run_cli("--quiet search 3+3");
  CHECK(bad.code == 3);
}
