#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "slatt/io.hpp"

using namespace slatt;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "slatt_cli_tests";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const fs::path out = work_dir() / ("out" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string(SLATT_BIN) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

fs::path write_tmp(const std::string& name, const std::string& content) {
  const fs::path p = work_dir() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("gen writes recipes and rejects bad grids") {
  auto ok = run("gen --grid 2x2 --forks 0");
  CHECK(ok.exit_code == 0);
  CHECK(recipe_from_json(parse_json_text(ok.out)) == Recipe{2, 2, {0}, std::nullopt});

  CHECK(run("gen --grid 1x3").exit_code == 2);
  CHECK(run("gen --grid nonsense").exit_code == 2);
  CHECK(run("gen --grid 2x2 --forks 99").exit_code == 2);

  auto a = run("gen --grid 4x4 --forks auto:2 --seed 7");
  auto b = run("gen --grid 4x4 --forks auto:2 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("check on a recipe, a lattice, and garbage") {
  const auto recipe = write_tmp("s7.json", R"({"grid":[2,2],"forks":[0]})");
  auto ok = run("check " + recipe.string());
  CHECK(ok.exit_code == 0);
  Json report = parse_json_text(ok.out);
  CHECK(report["properties"]["partition"] == true);
  CHECK(report["properties"]["four_crown"] == true);
  CHECK(report["checks"]["oracle_equivalence"] == true);

  const auto m3 =
      write_tmp("m3.json", R"({"n":5,"upper_covers":[[1,2,3],[4],[4],[4],[]]})");
  auto diagnosed = run("check " + m3.string());
  CHECK(diagnosed.exit_code == 0);
  Json dj = parse_json_text(diagnosed.out);
  CHECK(dj["valid"]["slim"] == false);
  CHECK(dj["diagnosis"].get<std::string>().find("not slim") == 0);

  const auto garbage = write_tmp("bad.json", "{oops");
  CHECK(run("check " + garbage.string()).exit_code == 2);
}

TEST_CASE("congruences emits the P order") {
  const auto recipe = write_tmp("s7b.json", R"({"grid":[2,2],"forks":[0]})");
  auto res = run("congruences " + recipe.string());
  REQUIRE(res.exit_code == 0);
  Json j = parse_json_text(res.out);
  CHECK(j["elements"] == 3);
  CHECK(j["maximal"] == Json::parse("[0,1]"));
  CHECK(j["col"]["4-6"] == 2);
}

TEST_CASE("swing pair decisions and the oracle sweep") {
  const auto recipe = write_tmp("s7c.json", R"({"grid":[2,2],"forks":[0]})");
  auto yes = run("swing " + recipe.string() + " --pair 3-6 2-5 --witness");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out.find("col 2-5 <= col 3-6: true") != std::string::npos);
  CHECK(yes.out.find("witness: 3-6 ex-swing 4-6 dn 2-5") != std::string::npos);

  auto no = run("swing " + recipe.string() + " --pair 3-6 0-1");
  CHECK(no.exit_code == 0);
  CHECK(no.out.find("false") != std::string::npos);

  CHECK(run("swing " + recipe.string() + " --verify-oracle").exit_code == 0);
  CHECK(run("swing " + recipe.string()).exit_code == 2);
}

TEST_CASE("render produces identical bytes across runs") {
  const auto recipe = write_tmp("s7d.json", R"({"grid":[2,2],"forks":[0]})");
  auto a = run("render " + recipe.string() + " --format svg --colors");
  auto b = run("render " + recipe.string() + " --format svg --colors");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("<svg") != std::string::npos);

  auto tikz = run("render " + recipe.string() + " --format tikz");
  CHECK(tikz.exit_code == 0);
  CHECK(tikz.out.find("tikzpicture") != std::string::npos);
}

TEST_CASE("survey sweeps a corpus and is jobs-invariant") {
  auto small = run("survey --max-m 2 --max-n 2 --max-forks 1");
  CHECK(small.exit_code == 0);
  Json j = parse_json_text(small.out);
  CHECK(j["summary"]["recipes"] == 2);
  CHECK(j["summary"]["failures"] == 0);

  auto one = run("survey --max-m 3 --max-n 3 --max-forks 1 --random 3 --jobs 1");
  auto eight = run("survey --max-m 3 --max-n 3 --max-forks 1 --random 3 --jobs 8");
  CHECK(one.exit_code == 0);
  CHECK(one.out == eight.out);
}
