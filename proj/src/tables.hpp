#pragma once
// Estimate-target registry, baseline oracle-cost records, attack planning over
// a cipher's oracle variants, and generation of the report tables.

#include <string>
#include <vector>

#include "circuit.hpp"
#include "costmodel.hpp"
#include "estimate.hpp"

namespace qre::tables {

struct OracleRow {
  std::string cipher;   // aes128 / aes192 / aes256 / lowmc-l1 / lowmc-l3 / lowmc-l5
  std::string variant;  // "in-place" / "maximov" for AES, "shallow" for LowMC
  int r = 1;            // known-plaintext pairs encrypted inside the oracle
  cost::OracleCost oc;
};

// Baseline oracle costs bundled with the tool; the same records ship as
// data/baseline_oracle_costs.json.
const std::vector<OracleRow>& baseline_oracle_costs();

// Loads oracle-cost records from a JSON array of objects with fields
// cipher, variant, r, cnot, one_qubit_clifford, t, m, t_depth, full_depth,
// width. Throws std::runtime_error on I/O or schema errors.
std::vector<OracleRow> load_oracle_costs(const std::string& path);

struct CipherParams {
  int key_bits;
  int block_bits;
};
CipherParams cipher_params(const std::string& cipher);  // throws invalid_argument

// Builds any estimate target by name:
//   sbox-bp12, sbox-lowmc-ip, sbox-lowmc-shallow,
//   mixcolumn-ip, mixcolumn-maximov,
//   aes128 / aes192 / aes256 (suffixes -oop-mc, -naive-ke select variants),
//   lowmc-l1 / lowmc-l3 / lowmc-l5 (suffix -ip selects the in-place S-box),
//   oracle:<cipher>:<r>.
// Throws std::invalid_argument for unknown names.
Circuit build_target(const std::string& name);

// Simulates a full cipher circuit on (key, msg) given as hex strings and
// returns the ciphertext as hex. cipher is one of the six cipher names.
std::string simulate_cipher(const std::string& cipher, const std::string& key_hex,
                            const std::string& msg_hex);

cost::OracleCost to_oracle_cost(const ResourceEstimate& e);

struct AttackRow {
  std::string scheme, variant, md;
  bool feasible = true;
  cost::Attack result{};
};

// Runs the r-selecting attack over every oracle variant recorded for `cipher`
// and returns the variant minimizing G-cost (first wins ties).
AttackRow plan_for(const std::vector<OracleRow>& rows, const std::string& cipher,
                   cost::f128 md_log2, cost::DepthMetric metric);

// Renders one attack row (columns MD, r, S, log2(SKP), D, W, G, DW).
std::string attack_report(const AttackRow& row, TableFormat fmt);

// which: sbox, mixcolumn, cipher, oracle, grover, nist, maxdepth-aes,
// maxdepth-lowmc. The first five build and estimate circuits; the last three
// evaluate the cost model on `rows` (pass baseline_oracle_costs() for the
// bundled records). Throws std::invalid_argument for unknown names.
std::string make_table(const std::string& which,
                       const std::vector<OracleRow>& rows, TableFormat fmt);

}  // namespace qre::tables
