#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

// TRIBCENSUS_BIN is injected by the build with the absolute binary path.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(TRIBCENSUS_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

long count_lines_with(const std::string& text, const std::string& needle) {
  long hits = 0;
  for (const std::string& line : lines_of(text))
    if (line.find(needle) != std::string::npos) ++hits;
  return hits;
}

// wall time is the one legitimately varying manifest field
std::string strip_wall(const std::string& text) {
  return std::regex_replace(text, std::regex("wall_ms:[0-9.]+ "), "wall_ms:X ");
}

}  // namespace

TEST_CASE("count subcommand emits the exact record") {
  RunResult res = run_cli("count --params 1,1,1 --k 4 --n 5");
  CHECK(res.exit_code == 0);
  CHECK(count_lines_with(res.out, "record:count k:4 n:5 count:6") == 1);
  CHECK(count_lines_with(res.out, "record:manifest") == 1);
}

TEST_CASE("threshold single-length shorthand") {
  RunResult res = run_cli("threshold --params 1,1,1 --k 7");
  CHECK(res.exit_code == 0);
  CHECK(count_lines_with(res.out, "threshold:26") == 1);
  CHECK(count_lines_with(res.out, "certified:yes") == 1);
}

TEST_CASE("spectral table verification emits twenty passing rows") {
  RunResult res = run_cli("spectral --params 1,1,1 --verify-tables");
  CHECK(res.exit_code == 0);
  CHECK(count_lines_with(res.out, "record:table-row") == 20);
  CHECK(count_lines_with(res.out, "pass:yes") == 20);
  CHECK(count_lines_with(res.out, "record:spectral") == 1);
}

TEST_CASE("basis range lists the frozen triples") {
  RunResult res = run_cli("basis --params 1,1,1 --k-lo 4 --k-hi 7");
  CHECK(res.exit_code == 0);
  CHECK(count_lines_with(res.out, "record:basis k:4 p:1 q:1 r:1 sum:3") == 1);
  CHECK(count_lines_with(res.out, "record:basis k:7 p:4 q:6 r:7 sum:17") == 1);
}

TEST_CASE("tn and pn agree with the landmark") {
  RunResult tn = run_cli("tn --n 61");
  CHECK(tn.exit_code == 0);
  CHECK(count_lines_with(tn.out, "record:tn n:61 t:7") == 1);
  RunResult pn = run_cli("pn --n 61");
  CHECK(count_lines_with(pn.out, "record:pn n:61 t:7 count:9") == 1);
}

TEST_CASE("identical invocations produce identical streams modulo wall time") {
  const std::string args = "scan-max-p --n-lo 3 --n-hi 300 --per-n";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(strip_wall(a.out) == strip_wall(b.out));
  CHECK(a.out.find("max-count:9") != std::string::npos);
}

TEST_CASE("thread count does not change the records") {
  RunResult one = run_cli("--threads 1 scan-max-p --n-lo 3 --n-hi 400 --per-n");
  RunResult four = run_cli("--threads 4 scan-max-p --n-lo 3 --n-hi 400 --per-n");
  CHECK(one.exit_code == 0);
  CHECK(four.exit_code == 0);
  // the streams differ only in the echoed flag and the wall time
  auto body = [](const std::string& text) {
    std::string stripped = strip_wall(text);
    return std::regex_replace(stripped, std::regex("--threads [0-9]+ "), "");
  };
  CHECK(body(one.out) == body(four.out));
}

TEST_CASE("tsv format drops keys and separates with tabs") {
  RunResult res = run_cli("--format tsv count --k 4 --n 5");
  CHECK(res.exit_code == 0);
  CHECK(count_lines_with(res.out, "count\t4\t5\t6") == 1);
}

TEST_CASE("the manifest carries a digest and an accurate record count") {
  RunResult res = run_cli("basis --k-lo 4 --k-hi 9");
  CHECK(res.exit_code == 0);
  std::vector<std::string> lines = lines_of(res.out);
  REQUIRE(!lines.empty());
  const std::string& manifest = lines.back();
  CHECK(manifest.find("record:manifest") == 0);
  CHECK(std::regex_search(manifest, std::regex("digest:[0-9a-f]{16}")));
  CHECK(manifest.find("records:6") != std::string::npos);
  CHECK(manifest.find("version:") != std::string::npos);
  CHECK(manifest.find("precision:") != std::string::npos);
  // six basis records plus the manifest line
  CHECK(lines.size() == 7);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("count --k 4").exit_code == 2);            // missing --n
  CHECK(run_cli("count --k 4 --n 5x").exit_code == 2);     // malformed integer
  CHECK(run_cli("bogus").exit_code == 2);                  // unknown subcommand
  CHECK(run_cli("--format xml count --k 4 --n 5").exit_code == 2);
  CHECK(run_cli("count --params 1,1 --k 4 --n 5").exit_code == 2);
  CHECK(run_cli("frobenius --triple 2,4,6").exit_code == 2);  // not coprime
  CHECK(run_cli("threshold --k 7 --k-lo 4").exit_code == 2);  // conflicting flags
  CHECK(run_cli("null-vector --n 9 --pattern +,+,+ --construct a").exit_code == 2);
  CHECK(run_cli("spectral --params 1,1,2 --verify-tables").exit_code == 2);
}

TEST_CASE("resource limits exit with code 3") {
  CHECK(run_cli("frobenius --triple 1048577,1048578,1048579").exit_code == 3);
}

TEST_CASE("verification failures exit with code 1") {
  // no all-positive null vector can exist: the terminus would be positive
  RunResult res = run_cli("null-vector --n 9 --pattern +,+,+ --box 4");
  CHECK(res.exit_code == 1);
  CHECK(count_lines_with(res.out, "found:no") == 1);
}

TEST_CASE("output flag writes the stream to a file instead of stdout") {
  std::string path = "/tmp/tribcensus_test_out.txt";
  std::remove(path.c_str());
  RunResult res = run_cli("--output " + path + " count --k 4 --n 5");
  CHECK(res.exit_code == 0);
  CHECK(res.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(count_lines_with(ss.str(), "record:count k:4 n:5 count:6") == 1);
  CHECK(count_lines_with(ss.str(), "record:manifest") == 1);
  std::remove(path.c_str());
}

TEST_CASE("null-vector construction variants expose their source") {
  RunResult a = run_cli("null-vector --n 12 --construct a");
  CHECK(a.exit_code == 0);
  CHECK(count_lines_with(a.out, "source:table found:yes") == 1);
  CHECK(count_lines_with(a.out, "terminus:0") == 1);
  RunResult off = run_cli("null-vector --params 2,1,1 --n 10 --construct a");
  CHECK(off.exit_code == 0);
  CHECK(count_lines_with(off.out, "source:backward-search found:yes") == 1);
}

TEST_CASE("noncongenial growth plus control rows") {
  RunResult res = run_cli("noncongenial --t-lo 1 --t-hi 2 --control");
  CHECK(res.exit_code == 0);
  CHECK(count_lines_with(res.out, "record:gap t:1 length:6 best-m:89 best-count:50") == 1);
  CHECK(count_lines_with(res.out, "record:gap t:2 length:9 best-m:5401 best-count:370") == 1);
  CHECK(count_lines_with(res.out, "grew:yes") == 2);
  CHECK(count_lines_with(res.out, "record:gap-control t:1 length:6 best-m:26 best-count:8") == 1);
}

TEST_CASE("affable classification for a single parameter set") {
  RunResult res = run_cli("affable --params 1,1,2");
  CHECK(res.exit_code == 0);
  CHECK(count_lines_with(res.out, "discriminant:-147 affable:no") == 1);
  RunResult grid = run_cli("affable --grid");
  CHECK(grid.exit_code == 0);
  CHECK(count_lines_with(grid.out, "affable:yes") == 17);
  CHECK(count_lines_with(grid.out, "record:affable") == 24);
}
