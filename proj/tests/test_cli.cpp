#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <zlib.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& args) {
  std::string cmd = std::string(RATBASE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[65536];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string gunzip(const std::filesystem::path& p) {
  gzFile f = gzopen(p.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[65536];
  int n;
  while ((n = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(n));
  gzclose(f);
  return out;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "ratbase_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("encode and decode") {
  CHECK(run("encode --a 3 --b 2 10").out == "21202\n");
  CHECK(run("decode --a 3 --b 2 21202").out == "10\n");
  Run bad = run("decode --a 3 --b 2 1");
  CHECK(bad.code == 2);
  std::string w = run("encode --a 13 --b 5 200").out;
  CHECK(w.front() == '(');
  CHECK(run("decode --a 13 --b 5 '" + w.substr(0, w.size() - 1) + "'").out == "200\n");
}

TEST_CASE("exit codes") {
  CHECK(run("encode --a 3 --b 2 10").code == 0);
  CHECK(run("encode --a 4 --b 2 3").code == 64);
  CHECK(run("encode --a 3 --b 2").code == 64);
  CHECK(run("encode --a 3 --b 2 --bogus 1").code == 64);
  CHECK(run("patterns --a 3 --b 2 --w 3 --N 10").code == 64);
  CHECK(run("verify --a 3 --b 2 --suite nope").code == 64);
  CHECK(run("tiles --a 3 --b 2 --r 30 --translates 0").code == 3);
}

TEST_CASE("pattern and digit-sum reports") {
  Run p = run("patterns --a 3 --b 2 --w 2 --N 10");
  CHECK(p.out.rfind("N,S_w,main_term,residual,residual_norm\n10,17,", 0) == 0);
  Run h = run("patterns --a 3 --b 2 --w 2 --horizons 1e4,1e5,1e6");
  CHECK(std::count(h.out.begin(), h.out.end(), '\n') == 4);
  Run j = run("patterns --a 3 --b 2 --w 2 --N 10 --format json");
  CHECK(j.out.find("\"S_w\": 17") != std::string::npos);
  CHECK(run("sod-sum --a 3 --b 2 --N 10").out == "46\n");
  CHECK(run("champernowne --a 3 --b 2 --N 30").out == "221210212210121202122210112120\n");
}

TEST_CASE("fourier table and verify output") {
  Run f = run("fourier --a 3 --b 2 --d 1 --r 3 --max-xi 100");
  CHECK(f.out.rfind("xi_numerator,r,digit,re,im,abs\n", 0) == 0);
  CHECK(f.out.find("\n0,3,1,0.33333333333333331,0,0.33333333333333331\n") != std::string::npos);
  Run v = run("verify --a 3 --b 2 --suite tiling --r 6");
  CHECK(v.code == 0);
  CHECK(v.out.find("residue_system r=6: PASS (729 distinct)") != std::string::npos);
}

TEST_CASE("outputs are byte-stable") {
  auto a = scratch("t1.csv"), b = scratch("t2.csv");
  CHECK(run("tiles --a 5 --b 3 --r 3 --translates 0,1/3 --format csv --out " + a.string()).code == 0);
  CHECK(run("tiles --a 5 --b 3 --r 3 --translates 0,1/3 --format csv --out " + b.string()).code == 0);
  CHECK(read_file(a) == read_file(b));
  CHECK(read_file(a).rfind("translate,digit,real_lo,real_hi,fiber_lo,fiber_hi\n", 0) == 0);
  CHECK(run("verify --a 3 --b 2 --suite tiling --r 4 --seed 9").out ==
        run("verify --a 3 --b 2 --suite tiling --r 4 --seed 9").out);
}

TEST_CASE("figure matches the golden file") {
  auto out = scratch("f32.svg");
  CHECK(run("tiles --a 3 --b 2 --r 8 --translates -5/2..10/2 --out " + out.string()).code == 0);
  std::string got = read_file(out);
  std::string want = gunzip(std::filesystem::path(RATBASE_GOLDEN_DIR) / "f32.svg.gz");
  REQUIRE(!want.empty());
  CHECK(got.size() == want.size());
  CHECK(got == want);
}
