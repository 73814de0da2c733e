#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SOLITON_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(TEST_DATA) + "/" + name; }

int count_of(const std::string& text, const std::string& needle) {
  int c = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++c;
  return c;
}

const char* kGr48Kappa = "--kappa=-7/2,-2,-1,0,1/2,1,2,5";

}  // namespace

TEST_CASE("perm") {
  const Run r = run("perm " + data("gr48.txt"));
  CHECK(r.status == 0);
  CHECK(r.out.rfind("pi = (5,7,1,6,8,3,4,2)\n", 0) == 0);
  CHECK(r.out.find("necklace = {1,2,4,5} {2,3,4,5}") != std::string::npos);
}

TEST_CASE("matrix and pluckers") {
  const Run m = run("matrix " + data("gr37_out.txt"));
  CHECK(m.status == 0);
  CHECK(m.out.find("-77") != std::string::npos);
  const Run p = run("pluckers " + data("gr37_out.txt"));
  CHECK(p.status == 0);
  CHECK(p.out.find("  Delta{1,5,7} = -77\n") != std::string::npos);
  CHECK(p.out.find("Delta{1,2,4} = 2310") != std::string::npos);
}

TEST_CASE("contour output") {
  const Run one = run("contour " + data("one_box.txt") + " --minus-infinity --kappa 0,1");
  REQUIRE(one.status == 0);
  const auto j = nlohmann::json::parse(one.out);
  CHECK(j["schema"] == "contour-plot/1");
  CHECK(j["frame"] == "rescaled");
  CHECK(j["edges"].size() == 1);
  CHECK(j["regions"].size() == 2);
  for (const auto& v : j["vertices"]) CHECK(v["kind"] == "exit");

  const Run svg = run("contour " + data("gr48.txt") + " --minus-infinity " + kGr48Kappa + " --format svg");
  REQUIRE(svg.status == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);
  CHECK(count_of(svg.out, "stroke-dasharray") == 3);
  for (const char* type : {"[2,7]", "[4,6]", "[5,8]"})
    CHECK(svg.out.find(std::string("soliton singular\" data-type=\"") + type) != std::string::npos);

  const Run dot = run("contour " + data("gr24_matrix.txt") + " --t 1 --kappa=-1,0,1,2 --format dot");
  CHECK(dot.status == 0);
  CHECK(dot.out.rfind("graph", 0) == 0);
}

TEST_CASE("json output is stable") {
  const Run a = run("contour " + data("gr49.txt") + " --t -1 --kappa=-5,-3,-2,-1,0,1,2,3,4");
  const Run b = run("contour " + data("gr49.txt") + " --t -1 --kappa=-5,-3,-2,-1,0,1,2,3,4");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["t"] == "-1");
}

TEST_CASE("regularity and positivity") {
  const Run irr = run("regularity " + data("gr49.txt") + " --t -1 --kappa=-5,-3,-2,-1,0,1,2,3,4");
  CHECK(irr.status == 0);
  CHECK(irr.out.rfind("irregular: singular soliton [4,8]", 0) == 0);
  const Run tnn = run("positivity " + data("gr24_m0.txt"));
  CHECK(tnn.status == 0);
  CHECK(tnn.out.find("verdict: not totally nonnegative") != std::string::npos);
}

TEST_CASE("field") {
  const Run csv = run("field " + data("gr24_m0.txt") + " --t 1 --kappa=-2,-1,0,3/2 --bbox=-5,5,-5,5 --resolution 8x4");
  REQUIRE(csv.status == 0);
  CHECK(count_of(csv.out, "\n") == 4);
  const Run svg = run("field " + data("gr24_m0.txt") + " --t 1 --kappa=-2,-1,0,3/2 --resolution 8x4 --format svg");
  CHECK(svg.status == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);
}

TEST_CASE("exit codes") {
  const auto tmp = std::filesystem::temp_directory_path() / "soliton_cli_bad.txt";
  std::ofstream(tmp) << "k=2 n=4\n. x\n. o\n";
  CHECK(run("perm " + tmp.string()).status == 1);
  std::ofstream(tmp) << "k=2 n=4\n. .\n. o\n";  // blank at a forced descent
  CHECK(run("perm " + tmp.string()).status == 1);
  std::filesystem::remove(tmp);
  CHECK(run("regularity " + data("gr49.txt")).status == 2);
  CHECK(run("").status == 2);
  CHECK(run("perm /nonexistent/file.txt").status == 2);
  CHECK(run("contour " + data("gr48.txt") + " --t 1 --minus-infinity --kappa=1,2,3,4,5,6,7,8").status == 2);
  CHECK(run("contour " + data("gr48.txt") + " --t 1 --kappa=1,2").status == 1);
}
