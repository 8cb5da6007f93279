// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
//
// End-to-end checks against the installed CLI binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(EDCOUNT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("count reproduces the known order of E_2 over F_13") {
  RunResult r = run_cli("count --p 13 --d 2 --format json");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("schema_version") == "1.0");
  CHECK(doc.at("results").at("affine") == 8);
  CHECK(doc.at("results").at("method") == "congruence+parity");
  CHECK(doc.at("oracle_verified") == true);
}

TEST_CASE("count over the square extension echoes the polynomial") {
  RunResult r = run_cli("count --p 3 --d 2 --n 2 --format json");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("results").at("affine") == 12);
  CHECK(doc.at("results").at("projective") == 16);
  CHECK(doc.at("results").at("reduction_poly") == json::array({1, 0, 1}));
}

TEST_CASE("count rejects p = 2") {
  CHECK(run_cli("count --p 2 --d 2").exit_code == 2);
  CHECK(run_cli("count --p 9 --d 2").exit_code == 2);
  CHECK(run_cli("count --p 13 --d 14").exit_code == 2);
}

TEST_CASE("supersingular command") {
  RunResult r = run_cli("supersingular --p 31 --d 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("supersingular=true") != std::string::npos);

  RunResult neg = run_cli("supersingular --p 13 --d 2 --format json");
  REQUIRE(neg.exit_code == 0);
  CHECK(json::parse(neg.out).at("results").at("supersingular") == false);
}

TEST_CASE("map reports special points") {
  RunResult special = run_cli("map --p 7 --d 2 --x 1 --y 0 --direction e2m");
  REQUIRE(special.exit_code == 0);
  CHECK(special.out == "SPECIAL (no image)\n");

  RunResult image = run_cli("map --p 7 --d 2 --x 0 --y 1 --direction e2m");
  REQUIRE(image.exit_code == 0);
  CHECK(image.out == "(u, v) = (6, 5)\n");

  // Off-curve input is a usage error.
  CHECK(run_cli("map --p 7 --d 2 --x 2 --y 3 --direction e2m").exit_code == 2);
}

TEST_CASE("twist command text output") {
  RunResult r = run_cli("twist --p 13 --d 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("relation: 8 + 20 = 28 = 2p+2") != std::string::npos);
  CHECK(r.out.find("holds=true") != std::string::npos);
}

TEST_CASE("embed command") {
  RunResult r = run_cli("embed --p 11 --d 2 --format json");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("results").at("group_order") == 12);
  CHECK(doc.at("results").at("embedding_degree") == 2);
}

TEST_CASE("scan emits the fixed CSV header") {
  RunResult r = run_cli("scan --p-min 3 --p-max 13 --d all");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("p,d,legendre,supersingular,affine,projective,"
                    "embedding_degree,method,oracle_verified\n",
                    0) == 0);
}

TEST_CASE("scan honors the budget override") {
  // A tiny budget leaves every cell computed by congruence alone.
  std::string cmd = std::string("EDCOUNT_ENUM_BUDGET=2 ") + EDCOUNT_CLI_PATH +
                    " scan --p-min 3 --p-max 13 --d 2 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
  CHECK(out.find("oracle_verified") != std::string::npos);
  // oracle_verified is the last column, so no data line may end in true.
  CHECK(out.find("true\n") == std::string::npos);
}
