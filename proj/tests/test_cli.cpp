#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const fs::path data_dir = PCOH_DATA_DIR;

struct run_result {
  int code;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("pcoh_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

run_result run(const std::string& args) {
  auto out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  std::string cmd = std::string("\"") + PCOH_CLI_PATH + "\" " + args + " >\"" + out.string() +
                    "\" 2>\"" + err.string() + "\"";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

std::string input(const char* name) { return "--input \"" + (data_dir / name).string() + "\""; }

}  // namespace

TEST_CASE("full triangle diagram file") {
  auto out = scratch() / "tri.dgm";
  auto r = run(input("tri.flt") + " --format filtration --field 2 --output \"" + out.string() + "\"");
  REQUIRE(r.code == 0);
  CHECK(slurp(out) == "0 0 1\n0 0 1\n0 0 inf\n1 1 2\n");
}

TEST_CASE("diagram on stdout and stats on stderr") {
  auto r = run(input("tri.flt") + " --stats");
  REQUIRE(r.code == 0);
  CHECK(r.out == "0 0 1\n0 0 1\n0 0 inf\n1 1 2\n");
  CHECK(r.err.find("G_m=") != std::string::npos);
}

TEST_CASE("stats file next to the output") {
  auto out = scratch() / "s.dgm";
  auto r = run(input("tri.flt") + " --stats --output \"" + out.string() + "\"");
  REQUIRE(r.code == 0);
  auto stats = slurp(out.string() + ".stats");
  CHECK(stats.find("field_ops=") == 0);
  CHECK(stats.find("g_m[1]=") != std::string::npos);
}

TEST_CASE("composite field") {
  auto r = run(input("tri.flt") + " --field 4");
  CHECK(r.code == 1);
  CHECK(r.err.find("CompositeModulus") != std::string::npos);
}

TEST_CASE("input errors exit with 1") {
  CHECK(run(input("bad.flt")).code == 1);
  CHECK(run(input("open.flt")).code == 1);
  CHECK(run(input("circle.pts") + " --format points").code == 1);
  CHECK(run("--input /nonexistent/file.flt").code == 1);
  CHECK(run(input("tri.flt") + " --format xml").code == 1);
}

TEST_CASE("configurations give byte-identical diagrams") {
  auto a = scratch() / "a.dgm", b = scratch() / "b.dgm", c = scratch() / "c.dgm";
  REQUIRE(run(input("tri.flt") + " --lazy --reorder --output \"" + a.string() + "\"").code == 0);
  REQUIRE(run(input("tri.flt") + " --no-lazy --no-reorder --output \"" + b.string() + "\"").code == 0);
  REQUIRE(run(input("tri.flt") + " --lazy --reorder --output \"" + c.string() + "\"").code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) == slurp(c));
}

TEST_CASE("points input with oracle check") {
  auto r = run(input("circle.pts") + " --format points --rips-max-edge 0.6 --max-dim 2 --field 3 --oracle");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("0 0 inf\n") != std::string::npos);
  CHECK(r.out.find("\n1 0.5176") != std::string::npos);
  CHECK(r.out.substr(r.out.size() - 4) == "inf\n");
}

TEST_CASE("oracle check leaves the diagram unchanged") {
  auto plain = run(input("tri.flt") + " --emit-zero-length");
  auto checked = run(input("tri.flt") + " --emit-zero-length --oracle");
  REQUIRE(checked.code == 0);
  CHECK(plain.out == checked.out);
}
