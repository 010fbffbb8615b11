#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#ifndef CHEBMELLIN_CLI_PATH
#error "CHEBMELLIN_CLI_PATH must name the CLI binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Run run(const std::string& args, const std::string& stdin_text = "") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path out = dir / "chebmellin_cli_out.txt", err = dir / "chebmellin_cli_err.txt",
                 in = dir / "chebmellin_cli_in.txt";
  {
    std::ofstream f(in);
    f << stdin_text;
  }
  const std::string cmd = std::string("\"") + CHEBMELLIN_CLI_PATH + "\" " + args + " < \"" + in.string() + "\" > \"" +
                          out.string() + "\" 2> \"" + err.string() + "\"";
  Run r;
  const int status = std::system(cmd.c_str());
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) v.push_back(l);
  return v;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("poly") {
  Run r = run("poly --family u --n 4");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"schema\":\"1\",\"family\":\"U\",\"n\":4,\"normalization\":\"rational-p\",\"variable\":\"s\","
        "\"coeffs_ascending\":[\"21/32\",\"-5/8\",\"5/8\"]}\n");
  CHECK(contains(run("poly --family beta --beta 0 --n 2").out, "\"beta\":\"0\""));
  CHECK(contains(run("poly --family beta --beta 0 --n 2").out, "[\"-1/4\",\"1/2\"]"));
  CHECK(contains(run("poly --family u --n 0").out, "[\"1/2\"]"));
  CHECK(contains(run("poly --family gegenbauer --lambda 3/2 --n 3").out, "\"lambda\":\"3/2\""));
  Run t = run("poly --family t --n 4");
  CHECK(contains(t.out, "\"normalization\":\"monic\",\"multiplier\":\"1/16\""));
  CHECK(contains(t.out, "[\"15\",\"-16\",\"1\"]"));
  CHECK(lines(run("poly --family u --n 2..6").out).size() == 5);
}

TEST_CASE("poly round trip is byte-identical") {
  for (const char* args : {"poly --family u --n 0..12", "poly --family t --n 0..9", "poly --family gegenbauer --lambda 7/3 --n 0..9",
                           "poly --family beta --beta -1/2 --n 0..9"}) {
    Run a = run(args);
    REQUIRE(a.code == 0);
    Run b = run("poly --from -", a.out);
    CHECK(b.code == 0);
    CHECK(b.out == a.out);
  }
  CHECK(run("poly --from -", "{\"schema\":\"2\"}\n").code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("poly --family u --lambda 1 --n 2").code == 2);
  CHECK(run("poly --family gegenbauer --n 2").code == 2);
  CHECK(run("poly --family beta --beta 1 --n 2").code == 2);
  CHECK(run("poly --family x --n 2").code == 2);
  CHECK(run("poly --family u --n -1").code == 2);
  CHECK(run("poly --family u").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("eval --family u --n 1").code == 2);
  CHECK(run("eval --family u --n 1 --s 1+").code == 2);
  CHECK(run("verify --suite nope").code == 2);
  CHECK(run("zeros --family u --n 3 --format text").code == 2);
  CHECK(run("poly --help").code == 0);
}

TEST_CASE("zeros") {
  Run u = run("zeros --family u --n 4");
  CHECK(u.code == 0);
  auto rows = lines(u.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "n,family,lambda,root_index,re,im,residual");
  CHECK(contains(rows[1], "4,U,,0,5.0000000000"));
  CHECK(contains(u.err, "family=U n=4 verdict=critical max_re_dev="));

  Run t = run("zeros --family t --n 5");
  CHECK(t.code == 0);
  rows = lines(t.out);
  REQUIRE(rows.size() == 3);
  CHECK(contains(rows[1], ",2.000000000"));
  CHECK(contains(rows[2], ",2.400000000"));
  CHECK(contains(t.err, "verdict=real-line"));

  Run one = run("zeros --family u --n 1");
  CHECK(one.code == 0);
  CHECK(lines(one.out).size() == 1);
  CHECK(contains(one.err, "verdict=critical"));

  Run g = run("zeros --family gegenbauer --lambda 7/3 --n 2..10");
  CHECK(g.code == 0);
  CHECK(lines(g.err).size() == 9);
  CHECK(contains(lines(g.out)[1], ",gegenbauer,7/3,"));
}

TEST_CASE("eval") {
  Run a = run("eval --family u --n 0 --s 2");
  CHECK(a.code == 0);
  CHECK(contains(a.out, "value=0.66666666666666666666"));
  CHECK(contains(a.out, "exact=2/3"));
  Run b = run("eval --family t --n 2 --s 2 --oracle");
  CHECK(b.code == 0);
  CHECK(contains(b.out, "value=-0.0666666666666"));
  CHECK(contains(b.out, "oracle=-0.0666666666"));
  auto ls = lines(b.out);
  REQUIRE(contains(ls.back(), "rel_diff="));
  CHECK(std::stod(ls.back().substr(9)) < 1e-8);
  CHECK(contains(run("eval --family gegenbauer --lambda 1 --n 1 --s 1").out, "value=1.3333333333"));
  Run c = run("eval --family u --n 3 --s 3/2+1/4i --format json");
  CHECK(c.code == 0);
  CHECK(contains(c.out, "\"schema\":\"1\""));
  CHECK(run("eval --family u --n 0 --s 0").code == 1);
  CHECK(run("eval --family u --n 0 --s -1/2 --oracle").code == 1);
}

TEST_CASE("verify") {
  Run a = run("verify --suite functional-eq --max-n 40");
  CHECK(a.code == 0);
  for (const auto& l : lines(a.out)) CHECK(contains(l, "\"status\":\"pass\""));
  CHECK(contains(a.out, "\"case\":\"U zeros n=40\""));

  Run e = run("verify --suite all --max-n 0");
  CHECK(e.code == 0);
  CHECK(e.out.empty());
  CHECK(contains(e.err, "warning"));

  Run t = run("verify --suite transforms --seed 7");
  CHECK(t.code == 0);
  CHECK(lines(t.out).size() >= 200 * 8);
  for (int k = 1; k <= 7; ++k) CHECK(contains(t.out, "\"case\":\"coverage transform " + std::to_string(k) + "\",\"status\":\"pass\""));

  Run h = run("verify --suite hahn --lambda-grid 1,5/2 --max-n 4");
  CHECK(h.code == 0);
  CHECK(lines(h.out).size() == 10);
}

TEST_CASE("output is deterministic for a fixed seed") {
  Run a = run("verify --suite recursion --seed 5");
  Run b = run("verify --suite recursion --seed 5");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("verify --suite recursion --seed 6").out != a.out);
}

TEST_CASE("bench") {
  Run h = run("bench --max-n 0");
  CHECK(h.code == 0);
  CHECK(h.out == "family,n,method,precision_bits,wall_time\n");
  Run b = run("bench --family u --precision 128");
  CHECK(b.code == 0);
  auto rows = lines(b.out);
  CHECK(rows.size() == 10);
  for (const char* m : {"recursion", "hypergeometric", "quadrature"})
    for (const char* n : {",8,", ",16,", ",32,"}) {
      bool found = false;
      for (const auto& r : rows) found = found || (contains(r, n) && contains(r, std::string(",") + m + ","));
      CHECK_MESSAGE(found, m << n);
    }
  CHECK_FALSE(contains(b.err, "warning"));
  for (const char* fam : {"--family t", "--family gegenbauer --lambda 3/2", "--family beta --beta -1"}) {
    Run x = run(std::string("bench --max-n 16 ") + fam);
    CHECK(x.code == 0);
    CHECK(lines(x.out).size() == 7);
    CHECK_FALSE(contains(x.err, "warning"));
  }
}
