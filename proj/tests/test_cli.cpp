#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell with stderr discarded.
Run run(const std::string& args) {
  std::string cmd = std::string(TREECRIT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string write_tmp(const std::string& name, const std::string& body) {
  std::string path = std::string(TREECRIT_TEST_TMP) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("gen emits the family edge list") {
  Run r = run("gen --family A --params 3");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "# family: A(3)"));
  CHECK(contains(r.out, "\n7\n"));
  CHECK(contains(r.out, "# sigma-labels: 4 5 6"));

  Run dot = run("gen --family path --params 4 --dot");
  CHECK(dot.status == 0);
  CHECK(contains(dot.out, "graph {"));
  CHECK(contains(dot.out, "0 -- 1;"));

  CHECK(run("gen --family Q --params 3").status == 2);
  CHECK(run("gen --family Pkt --params 3,1").status == 2);
  CHECK(run("gen --family Pkt --params 5").status == 2);
}

TEST_CASE("count prints the formula table") {
  Run r = run("count --what minimal3 --nmax 6");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "   4         1\n"));
  CHECK(contains(r.out, "   5         1\n"));
  CHECK(contains(r.out, "   6         2\n"));

  Run v = run("--format records count --what critical2 --nmax 8 --verify");
  CHECK(v.status == 0);
  std::istringstream lines(v.out);
  int rows = 0;
  for (std::string line; std::getline(lines, line); ++rows) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["agree"] == true);
    if (j["n"] == 8) CHECK(j["enumerated"] == 3);
  }
  CHECK(rows == 4);

  CHECK(run("count --what minimal4 --nmax 6").status == 2);
  CHECK(run("count --what minimal3 --nmax 19 --verify").status == 2);
}

TEST_CASE("sigma on P4 is empty") {
  std::string p4 = write_tmp("p4.txt", "4\n0 1\n1 2\n2 3\n");
  Run r = run("sigma " + p4);
  CHECK(r.status == 0);
  CHECK(contains(r.out, "sigma: {}"));
  CHECK(contains(r.out, "k: 0"));
}

TEST_CASE("prime verdicts and exit status") {
  std::string star = write_tmp("star.txt", "4\n0 1\n0 2\n0 3\n");
  Run r = run("prime " + star);
  CHECK(r.status == 1);
  CHECK(contains(r.out, "module: {1,2}"));
  CHECK(run("sigma " + star).status == 1);

  std::string p5 = write_tmp("p5.txt", "# a path\n5\n0 1\n1 2\n2 3\n3 4\n");
  CHECK(run("prime " + p5).status == 0);
}

TEST_CASE("malformed input exits with status 2") {
  std::string bad = write_tmp("bad.txt", "3\n0 1\n1 7\n");
  CHECK(run("prime " + bad).status == 2);
  std::string loop = write_tmp("loop.txt", "3\n0 0\n");
  CHECK(run("sigma " + loop).status == 2);
  CHECK(run("prime /nonexistent/file").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("enumerate --n 19").status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("check-minimal and extract-minimal use labels from gen output") {
  Run g = run("gen --family Pkt --params 4,1");
  REQUIRE(g.status == 0);
  std::string file = write_tmp("p41.txt", g.out);

  Run c = run("check-minimal " + file + " --set 3,6 --brute");
  CHECK(c.status == 1);
  CHECK(contains(c.out, "minimal: no"));
  CHECK(contains(c.out, "brute force: no (agrees)"));

  Run e = run("extract-minimal " + file + " --set 3,6");
  CHECK(e.status == 0);
  CHECK(contains(e.out, "# labels: 3 4 5 6"));
  CHECK(contains(e.out, "\n4\n"));

  Run ok = run("check-minimal " + file + " --set 1,3,6");
  CHECK(ok.status == 0);
  CHECK(run("check-minimal " + file + " --set 9").status == 2);
}

TEST_CASE("classify-critical") {
  Run g = run("gen --family Pmn --params 5,1,2");
  std::string file = write_tmp("pmn.txt", g.out);
  Run r = run("classify-critical " + file);
  CHECK(r.status == 0);
  CHECK(contains(r.out, "family: Pmn(5,1,2)"));
  CHECK(contains(r.out, "k: 2"));
  CHECK(contains(r.out, "characterization: holds"));

  Run wrong = run("classify-critical " + file + " --set 1");
  CHECK(wrong.status == 1);
  CHECK(contains(wrong.out, "fails  witness"));
}

TEST_CASE("enumerate streams records") {
  Run r = run("enumerate --n 6 --predicate prime");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "# count: 2"));
  CHECK(run("enumerate --n 6 --predicate critical=1").out.find("# count: 1") !=
        std::string::npos);
  CHECK(run("enumerate --n 6 --predicate bogus").status == 2);

  Run rec = run("--format records enumerate --n 5");
  std::istringstream lines(rec.out);
  int count = 0;
  for (std::string line; std::getline(lines, line); ++count)
    CHECK(nlohmann::json::parse(line).contains("code"));
  CHECK(count == 3);
}

TEST_CASE("output is deterministic, independent of --jobs") {
  Run a = run("enumerate --n 11 --predicate critical=2");
  Run b = run("enumerate --n 11 --predicate critical=2");
  Run c = run("--jobs 4 enumerate --n 11 --predicate critical=2");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(run("--jobs 3 count --what minimal3 --nmax 9 --verify").out ==
        run("count --what minimal3 --nmax 9 --verify").out);
}
