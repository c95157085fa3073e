#pragma once
// Classical bit-level simulation of circuits, bitsliced 64 lanes wide.

#include <cstdint>
#include <vector>

#include "circuit.hpp"

namespace qre {

class SimError : public std::runtime_error {
 public:
  explicit SimError(const std::string& what) : std::runtime_error(what) {}
};

struct CleanViolation {
  enum Kind { ReleasedNonZero, LiveNonZero };
  Kind kind;
  int wire;
  uint64_t lanes;  // bitmask of offending lanes
};

struct SimResult {
  std::vector<uint64_t> outputs;  // one word per circuit output wire
  std::vector<CleanViolation> violations;
};

// Runs up to 64 independent lanes. inputs[i] holds, bit-per-lane, the value of
// circuit input wire i. AND with non-zero target or inconsistent AND_ADJ throws
// SimError (builder bug); RELEASE of a non-zero wire and live non-input/output
// wires holding non-zero values at the end are recorded as violations.
SimResult run_lanes(const Circuit& c, const std::vector<uint64_t>& inputs);

// Single-lane convenience wrapper: one bit per input/output wire.
std::vector<uint8_t> run(const Circuit& c, const std::vector<uint8_t>& input);

struct CleanReport {
  size_t lanes_checked = 0;
  std::vector<CleanViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Runs every given input vector (batched 64 at a time) and accumulates
// cleanliness violations.
CleanReport check_clean(const Circuit& c,
                        const std::vector<std::vector<uint8_t>>& inputs);

}  // namespace qre
