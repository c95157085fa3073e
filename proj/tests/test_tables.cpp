#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "circuit.hpp"
#include "estimate.hpp"
#include "tables.hpp"

using namespace qre;

TEST_CASE("cipher parameters") {
  CHECK(tables::cipher_params("aes128").key_bits == 128);
  CHECK(tables::cipher_params("aes192").key_bits == 192);
  CHECK(tables::cipher_params("aes192").block_bits == 128);
  CHECK(tables::cipher_params("aes256").key_bits == 256);
  CHECK(tables::cipher_params("lowmc-l1").block_bits == 128);
  CHECK(tables::cipher_params("lowmc-l5").key_bits == 256);
  CHECK_THROWS_AS(tables::cipher_params("des"), std::invalid_argument);
}

TEST_CASE("target registry covers the documented names and rejects others") {
  for (const char* name :
       {"sbox-bp12", "sbox-lowmc-ip", "sbox-lowmc-shallow", "mixcolumn-ip",
        "mixcolumn-maximov", "aes128", "aes128-oop-mc", "aes128-naive-ke",
        "lowmc-l1", "lowmc-l1-ip", "oracle:aes128:1", "oracle:lowmc-l1:2"}) {
    Circuit c = tables::build_target(name);
    CHECK(c.size() > 0);
  }
  CHECK_THROWS_AS(tables::build_target("aes512"), std::invalid_argument);
  CHECK_THROWS_AS(tables::build_target("oracle:aes128:0"), std::invalid_argument);
  CHECK_THROWS_AS(tables::build_target("oracle:aes128:x"), std::invalid_argument);
  CHECK_THROWS_AS(tables::build_target("oracle:des:1"), std::invalid_argument);
}

TEST_CASE("pinned estimates for the smallest targets") {
  ResourceEstimate sbox = estimate(tables::build_target("sbox-bp12"));
  CHECK(sbox.t == 136);
  CHECK(sbox.measure == 34);
  CHECK(sbox.t_depth == 6);
  CHECK(sbox.width == 137);
  ResourceEstimate mc = estimate(tables::build_target("mixcolumn-ip"));
  CHECK(mc.t == 0);
  CHECK(mc.width == 128);
}

TEST_CASE("simulate_cipher reproduces the FIPS-197 vector") {
  CHECK(tables::simulate_cipher("aes128", "000102030405060708090a0b0c0d0e0f",
                                "00112233445566778899aabbccddeeff") ==
        "69c4e0d86a7b0430d8cdb78070b4c55a");
  CHECK_THROWS(tables::simulate_cipher("aes128", "00",  // short key
                                       "00112233445566778899aabbccddeeff"));
}

TEST_CASE("baseline records and the bundled JSON agree") {
  const auto& rows = tables::baseline_oracle_costs();
  CHECK(rows.size() == 20);
  auto from_file = tables::load_oracle_costs("data/baseline_oracle_costs.json");
  REQUIRE(from_file.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(from_file[i].cipher == rows[i].cipher);
    CHECK(from_file[i].variant == rows[i].variant);
    CHECK(from_file[i].r == rows[i].r);
    CHECK(static_cast<double>(from_file[i].oc.cnot) ==
          static_cast<double>(rows[i].oc.cnot));
    CHECK(static_cast<double>(from_file[i].oc.t_depth) ==
          static_cast<double>(rows[i].oc.t_depth));
    CHECK(static_cast<double>(from_file[i].oc.width) ==
          static_cast<double>(rows[i].oc.width));
  }
}

TEST_CASE("load_oracle_costs validates the schema") {
  const char* path = "test_tables_bad.json";
  {
    std::ofstream os(path);
    os << "[{\"cipher\": \"aes128\"}]";
  }
  CHECK_THROWS_AS(tables::load_oracle_costs(path), std::runtime_error);
  std::remove(path);
  CHECK_THROWS_AS(tables::load_oracle_costs("does_not_exist.json"),
                  std::runtime_error);
  const char* good = "test_tables_good.json";
  {
    std::ofstream os(good);
    os << "[{\"cipher\":\"aes128\",\"variant\":\"in-place\",\"r\":1,"
          "\"cnot\":10,\"one_qubit_clifford\":1,\"t\":2,\"m\":3,"
          "\"t_depth\":4,\"full_depth\":5,\"width\":6}]";
  }
  auto rows = tables::load_oracle_costs(good);
  std::remove(good);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].cipher == "aes128");
  CHECK(static_cast<double>(rows[0].oc.width) == 6.0);
}

TEST_CASE("plan_for picks the cheapest variant per depth limit") {
  const auto& rows = tables::baseline_oracle_costs();
  tables::AttackRow deep = tables::plan_for(rows, "aes128", 40,
                                            cost::DepthMetric::Full);
  REQUIRE(deep.feasible);
  CHECK(deep.variant == "maximov");
  CHECK(deep.result.r == 1);
  CHECK(deep.result.plan.s.render() == "1.28*2^69");
  CHECK(deep.result.plan.g.render() == "1.07*2^117");
  CHECK(deep.result.plan.dw.render() == "1.76*2^120");
  tables::AttackRow wide = tables::plan_for(rows, "aes128", 96,
                                            cost::DepthMetric::Full);
  REQUIRE(wide.feasible);
  CHECK(wide.variant == "in-place");
  CHECK(wide.result.r == 2);
  CHECK(wide.result.plan.s.render() == "1.00*2^0");
  CHECK(wide.result.plan.g.render() == "1.34*2^83");
}

TEST_CASE("attack_report formats") {
  const auto& rows = tables::baseline_oracle_costs();
  tables::AttackRow row = tables::plan_for(rows, "aes128", 40,
                                           cost::DepthMetric::Full);
  std::string csv = tables::attack_report(row, TableFormat::Csv);
  CHECK(csv.find("1.28*2^69") != std::string::npos);
  CHECK(csv.find("-69.36") != std::string::npos);
  std::string text = tables::attack_report(row, TableFormat::Text);
  CHECK(text.find("1.07*2^117") != std::string::npos);
}

TEST_CASE("make_table nist emits nine data rows in CSV") {
  std::string csv = tables::make_table("nist", tables::baseline_oracle_costs(),
                                       TableFormat::Csv);
  size_t lines = 0;
  std::stringstream ss(csv);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) ++lines;
  CHECK(lines == 10);  // header + 3 categories x 3 depth limits
  CHECK(csv.find("1.07*2^117") != std::string::npos);
  CHECK(csv.find("1.34*2^83") != std::string::npos);
  CHECK_THROWS_AS(tables::make_table("bogus", tables::baseline_oracle_costs(),
                                     TableFormat::Csv),
                  std::invalid_argument);
}
