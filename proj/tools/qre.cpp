// qre: quantum resource estimates for AES and LowMC key search.
//
// Subcommands:
//   simulate  run a cipher circuit on a key/message pair
//   estimate  resource-estimate a named circuit target
//   attack    plan a depth-limited parallel Grover key search
//   tables    regenerate the report tables
//
// Exit codes: 0 success, 2 validation error, 3 infeasible depth limit.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "costmodel.hpp"
#include "estimate.hpp"
#include "tables.hpp"

namespace {

using qre::cost::DepthMetric;

DepthMetric parse_metric(const std::string& s) {
  if (s == "full") return DepthMetric::Full;
  if (s == "t-depth" || s == "tdepth") return DepthMetric::TDepth;
  throw CLI::ValidationError("metric", "expected 'full' or 't-depth'");
}

std::vector<qre::tables::OracleRow> oracle_rows(const std::string& file) {
  if (file.empty()) return qre::tables::baseline_oracle_costs();
  return qre::tables::load_oracle_costs(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum resource estimates for AES and LowMC key search"};
  app.require_subcommand(1);

  // simulate ------------------------------------------------------------------
  auto* sim = app.add_subcommand("simulate", "Simulate a cipher circuit");
  std::string sim_cipher, sim_key, sim_msg;
  sim->add_option("--cipher", sim_cipher,
                  "aes128|aes192|aes256|lowmc-l1|lowmc-l3|lowmc-l5")
      ->required();
  sim->add_option("--key", sim_key, "key as hex")->required();
  sim->add_option("--msg", sim_msg, "message block as hex")->required();

  // estimate ------------------------------------------------------------------
  auto* est = app.add_subcommand("estimate", "Estimate a circuit target");
  std::string est_target, est_format = "text";
  est->add_option("--target", est_target,
                  "e.g. sbox-bp12, mixcolumn-ip, aes128, lowmc-l1, "
                  "oracle:aes128:2")
      ->required();
  est->add_option("--format", est_format, "text|csv|json");

  // attack --------------------------------------------------------------------
  auto* atk = app.add_subcommand("attack", "Plan a depth-limited key search");
  std::string atk_cipher, atk_md, atk_metric = "full", atk_format = "text";
  std::string atk_costs;
  bool atk_from_circuits = false;
  double atk_skp_bound = -20;
  atk->add_option("cipher", atk_cipher, "cipher name")->required();
  atk->add_option("maxdepth", atk_md, "depth limit, e.g. 2^40")->required();
  atk->add_option("metric", atk_metric, "full|t-depth");
  atk->add_option("--format", atk_format, "text|csv|json");
  atk->add_option("--oracle-costs", atk_costs,
                  "JSON file with oracle cost records (default: bundled "
                  "baseline records)");
  atk->add_flag("--from-circuits", atk_from_circuits,
                "build and estimate our own oracle circuits instead of using "
                "recorded costs");
  atk->add_option("--skp-bound", atk_skp_bound,
                  "log2 spurious-key-probability bound for choosing r");

  // tables --------------------------------------------------------------------
  auto* tab = app.add_subcommand("tables", "Regenerate a report table");
  std::string tab_which, tab_format = "text", tab_costs;
  tab->add_option("which", tab_which,
                  "sbox|mixcolumn|cipher|oracle|grover|nist|maxdepth-aes|"
                  "maxdepth-lowmc")
      ->required();
  tab->add_option("--format", tab_format, "text|csv|json");
  tab->add_option("--oracle-costs", tab_costs,
                  "JSON file with oracle cost records for the cost-model "
                  "tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sim) {
      std::cout << qre::tables::simulate_cipher(sim_cipher, sim_key, sim_msg)
                << "\n";
    } else if (*est) {
      qre::TableFormat fmt = qre::parse_format(est_format);
      std::vector<qre::EstimateRow> rows{
          {est_target, qre::estimate(qre::tables::build_target(est_target))}};
      std::cout << qre::tabulate(rows, fmt);
    } else if (*atk) {
      qre::TableFormat fmt = qre::parse_format(atk_format);
      DepthMetric metric = parse_metric(atk_metric);
      qre::cost::f128 md = qre::cost::BigCost::parse(atk_md).log2v;
      qre::tables::CipherParams cp = qre::tables::cipher_params(atk_cipher);
      qre::tables::AttackRow row;
      if (atk_from_circuits) {
        auto oracle_for_r = [&](int r) {
          return qre::tables::to_oracle_cost(qre::estimate(
              qre::tables::build_target("oracle:" + atk_cipher + ":" +
                                        std::to_string(r))));
        };
        row.scheme = atk_cipher;
        row.md = atk_md;
        row.result = qre::cost::attack(oracle_for_r, cp.key_bits, cp.block_bits,
                                       md, metric, 1, atk_skp_bound);
        row.feasible = row.result.plan.feasible;
      } else {
        row = qre::tables::plan_for(oracle_rows(atk_costs), atk_cipher, md,
                                    metric);
        row.md = atk_md;
      }
      if (!row.feasible) {
        std::cerr << "error: depth limit " << atk_md
                  << " is below the depth of a single oracle call\n";
        return 3;
      }
      std::cout << qre::tables::attack_report(row, fmt);
    } else if (*tab) {
      qre::TableFormat fmt = qre::parse_format(tab_format);
      std::cout << qre::tables::make_table(tab_which, oracle_rows(tab_costs),
                                           fmt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
