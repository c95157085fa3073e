#pragma once
// Resource estimation over the Clifford+T gadget decomposition of the IR.
//
// Gate counts come from inlining fixed gadget bodies (AND, AND_ADJ, CCNOT get
// fault-tolerant decompositions; X/CNOT/SWAP/MEASURE are costed directly).
// Full depth is ASAP scheduling over per-wire last-layer tracking; gadget
// ancillas receive fresh scheduling slots per instance. T-depth is the longest
// chain of T gates along any wire-dependency path. Width is the program-order
// high-water mark of live wires (IR wires plus gadget transients live at the
// gadget's position in the stream).

#include <cstdint>
#include <string>
#include <vector>

#include "circuit.hpp"

namespace qre {

struct ResourceEstimate {
  uint64_t cnot = 0;       // CNOT-category Cliffords (incl. CZ corrections)
  uint64_t one_qubit = 0;  // 1-qubit Cliffords (H, S, X, ...)
  uint64_t t = 0;          // T / T^dagger
  uint64_t measure = 0;
  uint64_t t_depth = 0;
  uint64_t full_depth = 0;
  uint64_t width = 0;

  uint64_t gates() const { return cnot + one_qubit + t + measure; }
};

ResourceEstimate estimate(const Circuit& c);

struct EstimateRow {
  std::string name;
  ResourceEstimate est;
};

enum class TableFormat { Text, Csv, Json };

std::string tabulate(const std::vector<EstimateRow>& rows, TableFormat fmt);
TableFormat parse_format(const std::string& s);  // throws std::invalid_argument

}  // namespace qre
