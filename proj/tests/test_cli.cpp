#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "bumpforge/io.hpp"

namespace {

const std::string cli = BUMPFORGE_CLI_PATH;

int run(const std::string& args) {
  int status = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp_prefix(const char* tag) {
  return std::string("/tmp/bumpforge_test_") + tag + "_" + std::to_string(getpid());
}

}  // namespace

TEST_CASE("compute writes the d = 3 measure and profile") {
  const std::string p = tmp_prefix("c3");
  REQUIRE(run("compute --d 3 --scheme optimal --out " + p) == 0);
  const std::string measure = slurp(p + "_measure.csv");
  REQUIRE(measure.substr(0, 12) == "i,s_i,mu_i\n0");
  // rounded weights are exactly (-3, 4, -1)
  REQUIRE(measure.find(",-3\n") == std::string::npos);  // 17-digit, not rounded
  bumpforge::CsvTable t = bumpforge::read_csv(p + "_measure.csv");
  REQUIRE(t.rows.size() == 3);
  REQUIRE(t.rows[0][2] == Catch::Approx(-3.0).margin(1e-9));
  REQUIRE(t.rows[1][2] == Catch::Approx(4.0).margin(1e-9));
  REQUIRE(t.rows[2][2] == Catch::Approx(-1.0).margin(1e-9));

  bumpforge::CsvTable prof = bumpforge::read_csv(p + "_profile.csv");
  REQUIRE(prof.header == std::vector<std::string>{"r", "f", "f_prime"});
  REQUIRE(prof.rows.size() == 1001);
  REQUIRE(prof.rows.front()[1] == Catch::Approx(1.0).margin(1e-10));
  REQUIRE(prof.rows.back()[0] == Catch::Approx(1.2));
  REQUIRE(prof.rows.back()[1] == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("optimal and chebyshev agree for d = 3") {
  const std::string p1 = tmp_prefix("op"), p2 = tmp_prefix("ch");
  REQUIRE(run("compute --d 3 --scheme optimal --out " + p1) == 0);
  REQUIRE(run("compute --d 3 --scheme chebyshev --out " + p2) == 0);
  bumpforge::CsvTable a = bumpforge::read_csv(p1 + "_measure.csv");
  bumpforge::CsvTable b = bumpforge::read_csv(p2 + "_measure.csv");
  for (int i = 0; i < 3; ++i) {
    REQUIRE(a.rows[i][1] == Catch::Approx(b.rows[i][1]).margin(1e-9));
    REQUIRE(a.rows[i][2] == Catch::Approx(b.rows[i][2]).margin(1e-8));
  }
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string p1 = tmp_prefix("d1"), p2 = tmp_prefix("d2");
  REQUIRE(run("compute --d 7 --scheme equidistant --out " + p1) == 0);
  REQUIRE(run("compute --d 7 --scheme equidistant --out " + p2) == 0);
  REQUIRE(slurp(p1 + "_measure.csv") == slurp(p2 + "_measure.csv"));
  REQUIRE(slurp(p1 + "_profile.csv") == slurp(p2 + "_profile.csv"));
}

TEST_CASE("sweep emits rows per dimension plus fitted laws") {
  const std::string p = tmp_prefix("sw");
  REQUIRE(run("sweep --d-min 3 --d-max 9 --scheme optimal --out " + p) == 0);
  bumpforge::CsvTable t = bumpforge::read_csv(p + "_sweep.csv");
  REQUIRE(t.rows.size() == 4);
  REQUIRE(t.rows[0][0] == 3.0);
  REQUIRE(t.rows[0][2] == Catch::Approx(8.0).margin(1e-9));  // gamma
  REQUIRE(t.rows[3][0] == 9.0);
  const std::string fits = slurp(p + "_fits.json");
  REQUIRE(fits.find("gamma_power_exponent") != std::string::npos);
  REQUIRE(fits.find("ball_avg_exp_slope") != std::string::npos);
}

TEST_CASE("json format writes json files") {
  const std::string p = tmp_prefix("js");
  REQUIRE(run("compute --d 5 --format json --out " + p) == 0);
  const std::string m = slurp(p + "_measure.json");
  REQUIRE(m.find("\"gamma\"") != std::string::npos);
  REQUIRE(m.find("\"weights\"") != std::string::npos);
}

TEST_CASE("verify passes on the default range and plateau variant") {
  REQUIRE(run("verify --d-min 3 --d-max 7") == 0);
  REQUIRE(run("verify --d-min 5 --d-max 5 --scheme equidistant") == 0);
  REQUIRE(run("verify --d-min 7 --d-max 7 --eps 0.5") == 0);
}

TEST_CASE("verify flags an injected corrupted weight") {
  REQUIRE(run("verify --d-min 3 --d-max 3 --corrupt-weight 1e-4") != 0);
}

TEST_CASE("usage errors exit 2") {
  REQUIRE(run("compute --d 4") == 2);
  REQUIRE(run("compute --d 3 --quad-points 10") == 2);
  REQUIRE(run("compute --d 3 --eps 1.5") == 2);
  REQUIRE(run("sweep --d-min 9 --d-max 3") == 2);
  REQUIRE(run("nonsense") == 2);
  REQUIRE(run("") == 2);
}

TEST_CASE("numerical failures exit 3") {
  // equidistant nodes collapse when the plateau eats the whole interval
  REQUIRE(run("compute --d 9 --scheme equidistant --eps 0.99999999999999") == 3);
}

TEST_CASE("plot renders profiles and sweeps, rejects missing input") {
  const std::string p = tmp_prefix("pl");
  REQUIRE(run("compute --d 3 --out " + p + "a") == 0);
  REQUIRE(run("compute --d 5 --out " + p + "b") == 0);
  REQUIRE(run("compute --d 7 --out " + p + "c") == 0);
  REQUIRE(run("plot " + p + "a_profile.csv " + p + "b_profile.csv " + p +
              "c_profile.csv --out " + p + ".svg") == 0);
  const std::string svg = slurp(p + ".svg");
  REQUIRE(svg.find("<svg") != std::string::npos);
  REQUIRE(std::count(svg.begin(), svg.end(), '<') > 3);
  std::size_t polylines = 0, pos = 0;
  while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
    ++polylines;
    ++pos;
  }
  REQUIRE(polylines == 3);

  // round-trip: re-plotting the same CSV gives identical bytes
  REQUIRE(run("plot " + p + "a_profile.csv --out " + p + "_r1.svg") == 0);
  REQUIRE(run("plot " + p + "a_profile.csv --out " + p + "_r2.svg") == 0);
  REQUIRE(slurp(p + "_r1.svg") == slurp(p + "_r2.svg"));

  REQUIRE(run("plot /tmp/bumpforge_no_such_file.csv --out " + p + "_x.svg") == 2);
  const std::string empty = p + "_empty.csv";
  { std::ofstream(empty); }
  REQUIRE(run("plot " + empty + " --out " + p + "_y.svg") == 2);

  const std::string sp = tmp_prefix("swp");
  REQUIRE(run("sweep --d-min 3 --d-max 9 --out " + sp) == 0);
  REQUIRE(run("plot " + sp + "_sweep.csv --log-scale --out " + sp + ".svg") == 0);
  REQUIRE(slurp(sp + ".svg").find("optimal") != std::string::npos);
}
