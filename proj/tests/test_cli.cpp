// Copyright 2026 The spherebound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through the shell; extra is appended verbatim (redirections,
// environment assignments go in prefix).
Run Cli(const std::string& args, const std::string& prefix = "",
        const std::string& extra = "2>/dev/null") {
  const std::string cmd =
      prefix + " '" + std::string(SPHEREBOUND_CLI) + "' " + args + " " + extra;
  Run run;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) run.out.append(buf, got);
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

nlohmann::json Json(const Run& run) { return nlohmann::json::parse(run.out); }

std::vector<std::vector<std::string>> Csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream cells_in(line);
    std::string cell;
    while (std::getline(cells_in, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

int Column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("theta at the worked example") {
    const auto run = Cli("theta --n 24 --t 0.9999");
    REQUIRE(run.exit_code == 0);
    const auto j = Json(run);
    CHECK(j["command"] == "theta");
    CHECK(j["certified"] == true);
    CHECK(j["backend"] == "float");
    CHECK(j["results"]["k_star"] == 1131);
    CHECK(std::abs(j["results"]["m"].get<double>() - (-0.00059623)) < 5e-9);
    CHECK(j["results"]["chi_lower"].get<int>() >= 1677);
    CHECK_FALSE(j.contains("wall_time_s"));
  }

  TEST_CASE("theta with the rational backend") {
    const auto run = Cli("theta --n 3 --t 0 --backend rational");
    REQUIRE(run.exit_code == 0);
    const auto j = Json(run);
    CHECK(j["backend"] == "rational");
    CHECK(j["results"]["chi_lower"] == 3);
    CHECK(j["results"]["exact_m"] == "-1/2");
  }

  TEST_CASE("table reproduces the published integers") {
    const auto run = Cli("table --n 10..24");
    REQUIRE(run.exit_code == 0);
    const auto rows = Csv(run.out);
    REQUIRE(rows.size() == 16);
    const int col = Column(rows[0], "chi_at_t_int");
    const int limit_col = Column(rows[0], "chi_int");
    REQUIRE(col >= 0);
    REQUIRE(limit_col >= 0);
    const int want[] = {48,  64,  85,  113, 147,  191,  248, 319,
                        408, 521, 662, 839, 1060, 1336, 1679};
    for (int i = 0; i < 15; ++i) {
      CHECK(rows[i + 1][0] == std::to_string(10 + i));
      CHECK(std::stoi(rows[i + 1][col]) == want[i]);
    }
    CHECK(std::stoi(rows[1 + 14][limit_col]) == 1679);
    CHECK(std::stoi(rows[1 + 10][limit_col]) == 663);
  }

  TEST_CASE("table single row and shifted labels") {
    const auto nine = Csv(Cli("table --n 9").out);
    REQUIRE(nine.size() == 2);
    CHECK(nine[1][Column(nine[0], "chi_int")] == "35");

    const auto plain = Csv(Cli("table --n 12..13").out);
    const auto shifted = Csv(Cli("table --n 12..13 --annotate-shift").out);
    const int s = Column(shifted[0], "chi_int_for_dimension_minus_1");
    REQUIRE(s >= 0);
    CHECK(Column(shifted[0], "shifted_dimension") >= 0);
    CHECK(shifted[1][s] == plain[1][Column(plain[0], "chi_int")]);
    CHECK(shifted[1][Column(shifted[0], "shifted_dimension")] == "11");
  }

  TEST_CASE("table as JSON") {
    const auto run = Cli("table --n 10..11 --format json");
    REQUIRE(run.exit_code == 0);
    const auto j = Json(run);
    REQUIRE(j["results"]["rows"].size() == 2);
    CHECK(j["results"]["rows"][0]["chi_at_t_int"] == 48);
  }

  TEST_CASE("delsarte") {
    const auto e8 = Json(Cli("delsarte --n 8 --t 0.5 --degree 6"));
    CHECK(std::abs(e8["results"]["certified_bound"].get<double>() - 240.0) <=
          1e-6);
    CHECK(e8["certified"] == true);
    CHECK(e8["results"]["f"].size() == 6);
    const auto k3 = Json(Cli("delsarte --n 3 --t 0.5 --degree 9"));
    CHECK(k3["results"]["certified_bound"].get<double>() < 14.0);
  }

  TEST_CASE("dual LP, zeros, bessel zero, convergence") {
    const auto lp = Json(Cli("dual-lp --n 3 --t 0 --degree 64"));
    CHECK(std::abs(lp["results"]["bound_on_theta"].get<double>() -
                   4 * M_PI / 3) <= 1e-6 * 4 * M_PI / 3);
    const auto two = Json(Cli("dual-lp --n 3 --t -0.5,0 --degree 64"));
    CHECK(two["results"]["z"].size() == 3);

    const auto z = Json(Cli("zeros --alpha 0 --beta 0 --k 2"));
    CHECK(std::abs(z["results"]["zeros"][1].get<double>() -
                   0.5773502691896258) < 1e-14);
    const auto z3 = Json(Cli("zeros --alpha 1 --beta 1 --k 3"));
    CHECK(z3["results"]["zeros"][1].get<double>() == 0.0);

    const auto b = Json(Cli("bessel-zero --nu 0.5"));
    CHECK(std::abs(b["results"]["j"].get<double>() - M_PI) < 1e-13);

    const auto c = Json(Cli("convergence --n 24"));
    CHECK(c["results"]["gaps_decreasing"] == true);
    CHECK(c["results"]["entries"].size() == 4);
  }

  TEST_CASE("exit codes") {
    CHECK(Cli("theta --n 24 --t 1.5").exit_code == 2);
    CHECK(Cli("theta --n 24 --t abc").exit_code == 2);
    CHECK(Cli("theta --n 3 --t 1/3 --backend rational").exit_code == 0);
    CHECK(Cli("theta --n 3 --t pi --backend rational").exit_code == 2);
    CHECK(Cli("theta --n 24").exit_code == 2);
    CHECK(Cli("nonsense").exit_code == 2);
    CHECK(Cli("theta --n 3 --t 0 --format csv").exit_code == 2);

    const auto degree0 = Cli("delsarte --n 3 --t 0.5 --degree 0", "", "2>&1");
    CHECK(degree0.exit_code == 2);
    CHECK(degree0.out.find("increase degree") != std::string::npos);

    // Negative t is reported but not certified.
    CHECK(Cli("theta --n 3 --t -0.5").exit_code == 1);
    CHECK(Cli("theta --n 3 --t -0.5 --allow-uncertified").exit_code == 0);
  }

  TEST_CASE("output is deterministic") {
    const auto a = Cli("theta --n 24 --t 0.9999");
    const auto b = Cli("theta --n 24 --t 0.9999");
    CHECK(a.out == b.out);
    const auto c = Cli("table --n 10..24");
    const auto d = Cli("table --n 10..24");
    CHECK(c.out == d.out);
    const auto timed = Json(Cli("theta --n 3 --t 0 --timing"));
    CHECK(timed.contains("wall_time_s"));
  }

  TEST_CASE("environment defaults and flag precedence") {
    const auto env = Json(Cli("theta --n 3 --t 0", "SPHEREBOUND_CEIL_GUARD=0.25"));
    CHECK(env["parameters"]["ceil_guard"] == 0.25);
    const auto flag = Json(
        Cli("theta --n 3 --t 0 --ceil-guard 1e-9", "SPHEREBOUND_CEIL_GUARD=0.25"));
    CHECK(flag["parameters"]["ceil_guard"] == 1e-9);

    const auto table_env = Csv(Cli("table --n 10", "SPHEREBOUND_TABLE_T=0.5").out);
    CHECK(table_env[1][Column(table_env[0], "table_t")] == "0.5");

    const auto help = Cli("--help");
    CHECK(help.exit_code == 0);
    for (const char* var : {"SPHEREBOUND_CEIL_GUARD", "SPHEREBOUND_MAX_DEGREE",
                            "SPHEREBOUND_TABLE_T", "SPHEREBOUND_GRID"}) {
      CHECK(help.out.find(var) != std::string::npos);
    }
  }
}
