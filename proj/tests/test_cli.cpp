#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyc/cli.hpp"
#include "helpers.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cyc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> with_data(std::vector<std::string> args) {
  args.push_back("--catalog");
  args.push_back(data_file("catalog.jsonl"));
  args.push_back("--counts");
  args.push_back(data_file("reference_counts.json"));
  return args;
}

// The shipped catalog minus one entry, written to a temp file.
std::string catalog_without(const std::string& id, const std::string& temp_name) {
  std::ifstream in(data_file("catalog.jsonl"));
  std::ostringstream kept;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (nlohmann::json::parse(line)["id"] == id) continue;
    kept << line << "\n";
  }
  return write_temp(temp_name, kept.str());
}

}  // namespace

TEST_CASE("census command") {
  CliResult r = run_cli({"census", "Z(12)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("order: 12") != std::string::npos);
  CHECK(r.out.find("cyclic subgroups: 6") != std::string::npos);
  CHECK(r.out.find("involutions: 1") != std::string::npos);
  CHECK(r.out.find("exponent: 12") != std::string::npos);
  CHECK(r.out.find("order profile: 1:1;2:1;3:2;4:2;6:2;12:4") != std::string::npos);

  CliResult trivial = run_cli({"census", "Z(1)"});
  CHECK(trivial.code == 0);
  CHECK(trivial.out.find("cyclic subgroups: 1") != std::string::npos);
  CHECK(trivial.out.find("involutions: 0") != std::string::npos);

  CliResult family = run_cli({"census", "prod(M(16),Z(3))"});
  CHECK(family.code == 0);
  CHECK(family.out.find("order: 48") != std::string::npos);
  CHECK(family.out.find("cyclic subgroups: 16") != std::string::npos);

  CliResult json_mode = run_cli({"census", "Z(12)", "--format", "json"});
  CHECK(json_mode.code == 0);
  nlohmann::json doc = nlohmann::json::parse(json_mode.out);
  CHECK(doc["order"] == 12);
  CHECK(doc["cyclic_count"] == 6);
  CHECK(doc["involution_count"] == 1);
  CHECK(doc["label"] == "Z(12)");
  CHECK(doc["classes"].size() == 6);
}

TEST_CASE("census diagnostics use exit code 2") {
  CliResult parse_error = run_cli({"census", "Z(5"});
  CHECK(parse_error.code == 2);
  CHECK(parse_error.err.find("error:") != std::string::npos);
  CHECK(parse_error.err.find("offset") != std::string::npos);

  CliResult eval_error = run_cli({"census", "Z(0)"});
  CHECK(eval_error.code == 2);

  CliResult capped = run_cli({"census", "prod(Z(30),Z(30))", "--order-cap", "512"});
  CHECK(capped.code == 2);
  CliResult raised = run_cli({"census", "prod(Z(30),Z(30))", "--order-cap", "1000"});
  CHECK(raised.code == 0);
}

TEST_CASE("search command reproduces the classified sets") {
  CliResult halved = run_cli(with_data({"search", "--c-eq", "G/2", "--o2", "3",
                                        "--max-order", "24"}));
  CHECK(halved.code == 0);
  CHECK(halved.out.find("3 matching entries") != std::string::npos);
  CHECK(halved.out.find("16.02") != std::string::npos);
  CHECK(halved.out.find("16.06") != std::string::npos);
  CHECK(halved.out.find("24.02") != std::string::npos);

  CliResult all_cyclic = run_cli(with_data({"search", "--c-eq", "G"}));
  CHECK(all_cyclic.code == 0);
  CHECK(all_cyclic.out.find("5 matching entries") != std::string::npos);
  CHECK(all_cyclic.out.find("16.05") != std::string::npos);

  CliResult odd = run_cli(with_data({"search", "--c-eq", "(G-1)/2", "--parity", "odd"}));
  CHECK(odd.code == 0);
  CHECK(odd.out.find("1 matching entries") != std::string::npos);
  CHECK(odd.out.find("5.01") != std::string::npos);

  CliResult json_mode = run_cli(with_data({"search", "--c-eq", "G", "--format", "json"}));
  nlohmann::json doc = nlohmann::json::parse(json_mode.out);
  CHECK(doc.size() == 5);
  CHECK(doc[0]["id"] == "1.01");

  CliResult bad_form = run_cli(with_data({"search", "--c-eq", "G/"}));
  CHECK(bad_form.code == 2);

  CliResult conflicting = run_cli(with_data({"search", "--c-eq", "G", "--c-le", "G"}));
  CHECK(conflicting.code == 2);
}

TEST_CASE("verify command") {
  CliResult one = run_cli(with_data({"verify", "--suite", "phi-identity"}));
  CHECK(one.code == 0);
  CHECK(one.out.find("suite phi-identity: PASS") != std::string::npos);
  CHECK(one.out.find("verification: PASS (1/1 suites passed)") != std::string::npos);

  CliResult unknown = run_cli(with_data({"verify", "--suite", "no-such"}));
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown suite") != std::string::npos);

  // Unknown ids are rejected before any file is touched.
  CliResult unknown_no_data =
      run_cli({"verify", "--suite", "no-such", "--catalog", "/definitely/not/here"});
  CHECK(unknown_no_data.code == 2);
  CHECK(unknown_no_data.err.find("unknown suite") != std::string::npos);

  CliResult missing_data = run_cli({"verify", "--suite", "phi-identity", "--catalog",
                                    "/definitely/not/here"});
  CHECK(missing_data.code == 2);

  CliResult json_mode =
      run_cli(with_data({"verify", "--suite", "census-table", "--format", "json"}));
  CHECK(json_mode.code == 0);
  nlohmann::json doc = nlohmann::json::parse(json_mode.out);
  CHECK(doc.size() == 1);
  CHECK(doc[0]["suite"] == "census-table");
  CHECK(doc[0]["passed"] == true);
}

TEST_CASE("full verification run") {
  CliResult all = run_cli(with_data({"verify"}));
  CHECK(all.code == 0);
  CHECK(all.out.find("verification: PASS (24/24 suites passed)") != std::string::npos);
  // Reports appear in the fixed suite order.
  CHECK(all.out.find("suite phi-identity:") < all.out.find("suite census-table:"));
  CHECK(all.out.find("suite census-table:") < all.out.find("suite doubling:"));
  CHECK(all.out.find("suite o2-classification:") < all.out.find("suite families:"));
}

TEST_CASE("verify exits 1 when a suite fails") {
  std::string broken = catalog_without("16.08", "cli_no_16_08.jsonl");
  CliResult r = run_cli({"verify", "--suite", "thm3.1", "--catalog", broken});
  CHECK(r.code == 1);
  CHECK(r.out.find("suite thm3.1: FAIL") != std::string::npos);
  CHECK(r.out.find("verification: FAIL") != std::string::npos);
}

TEST_CASE("catalog validate") {
  CliResult ok = run_cli(with_data({"catalog", "validate"}));
  CHECK(ok.code == 0);
  CHECK(ok.out.find("order 16: 14/14") != std::string::npos);
  CHECK(ok.out.find("order 24: 15/15") != std::string::npos);
  CHECK(ok.out.find("catalog validate: PASS") != std::string::npos);

  std::string broken = catalog_without("12.05", "cli_no_12_05.jsonl");
  CliResult bad = run_cli({"catalog", "validate", "--catalog", broken, "--counts",
                           data_file("reference_counts.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("order 12: 4/5") != std::string::npos);
  CHECK(bad.out.find("catalog validate: FAIL") != std::string::npos);

  CliResult json_mode = run_cli(with_data({"catalog", "validate", "--format", "json"}));
  CHECK(json_mode.code == 0);
  nlohmann::json doc = nlohmann::json::parse(json_mode.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["orders"].size() == 24);
}

TEST_CASE("catalog list") {
  CliResult r = run_cli(with_data({"catalog", "list"}));
  CHECK(r.code == 0);
  CHECK(r.out.find("97 entries") != std::string::npos);
  CHECK(r.out.find("16.06: order=16, C=8, O2=3, exp=8, expr=M(16)") != std::string::npos);
}

TEST_CASE("catalog export") {
  CliResult csv = run_cli(with_data({"catalog", "export", "--format", "csv"}));
  CHECK(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 98);
  CHECK(rows[0] == "id,order,C,O2,exponent,order_profile");
  CHECK(rows[1] == "1.01,1,1,0,1,1:1");

  CliResult json_mode = run_cli(with_data({"catalog", "export", "--format", "json"}));
  CHECK(json_mode.code == 0);
  nlohmann::json doc = nlohmann::json::parse(json_mode.out);
  REQUIRE(doc.size() == 97);
  CHECK(doc[0]["id"] == "1.01");
  CHECK(doc[0]["census"]["cyclic_count"] == 1);
  // Round trip: serializing the parsed document reproduces the same values.
  CHECK(nlohmann::json::parse(doc.dump()) == doc);

  CliResult csv_elsewhere = run_cli({"census", "Z(4)", "--format", "csv"});
  CHECK(csv_elsewhere.code == 2);
  CHECK(csv_elsewhere.err.find("catalog export") != std::string::npos);
}

TEST_CASE("environment variables supply default paths") {
  setenv("CYCLIC_CENSUS_CATALOG", data_file("catalog.jsonl").c_str(), 1);
  setenv("CYCLIC_CENSUS_COUNTS", data_file("reference_counts.json").c_str(), 1);
  CliResult from_env = run_cli({"catalog", "list"});
  CHECK(from_env.code == 0);
  CHECK(from_env.out.find("97 entries") != std::string::npos);

  setenv("CYCLIC_CENSUS_CATALOG", "/definitely/not/here", 1);
  CliResult bad_env = run_cli({"catalog", "list"});
  CHECK(bad_env.code == 2);

  // An explicit flag wins over the environment.
  CliResult flag_wins =
      run_cli({"catalog", "list", "--catalog", data_file("catalog.jsonl")});
  CHECK(flag_wins.code == 0);

  unsetenv("CYCLIC_CENSUS_CATALOG");
  unsetenv("CYCLIC_CENSUS_COUNTS");
}

TEST_CASE("usage errors") {
  CliResult nothing = run_cli({});
  CHECK(nothing.code == 2);

  CliResult bad_flag = run_cli({"census", "Z(2)", "--bogus"});
  CHECK(bad_flag.code == 2);

  CliResult bad_parity = run_cli(with_data({"search", "--parity", "sideways"}));
  CHECK(bad_parity.code == 2);

  CliResult bad_format = run_cli({"census", "Z(2)", "--format", "yaml"});
  CHECK(bad_format.code == 2);

  CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("census") != std::string::npos);
}
