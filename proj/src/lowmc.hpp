#pragma once
// LowMC instance handling (generation, file I/O), classical reference
// encryption, and reversible circuit construction for the L1/L3/L5
// parameter sets (block = key = 128/192/256 bits, 20/30/38 rounds, 10 S-boxes
// per round on the 30 low-order bits).
//
// Bit conventions: state bit i is wire i; S-box s acts on bits (3s, 3s+1,
// 3s+2) with c = bit 3s, b = bit 3s+1, a = bit 3s+2; the S-box maps (a,b,c) ->
// (a^bc, a^b^ac, a^b^c^ab).

#include <iosfwd>
#include <vector>

#include "circuit.hpp"
#include "gf2.hpp"

namespace qre::lowmc {

struct Params {
  int block_bits;
  int key_bits;
  int rounds;
};

Params params_for_level(int level);  // level in {1, 3, 5}

struct Instance {
  Params p{};
  std::vector<GF2Matrix> lin;           // rounds matrices, n x n, invertible
  std::vector<std::vector<uint8_t>> rc; // rounds constants, n bits each
  std::vector<GF2Matrix> km;            // rounds+1 matrices, n x k, full rank
};

// Deterministic instance generation with the Grain-LFSR self-shrinking
// generator (all-ones init, first 160 bits discarded; taps 0/13/23/38/51/62).
// Draw order: all linear matrices (rowwise, invertibility retry), then all
// round constants, then all key matrices (full-rank retry).
Instance generate(const Params& p);

Instance load(std::istream& is);
void save(const Instance& inst, std::ostream& os);

// Cached instance per level. If the environment variable QRE_LOWMC_DIR is set,
// instances are loaded from $QRE_LOWMC_DIR/lowmc_l<level>.txt; otherwise they
// are generated in memory (and kept for the process lifetime).
const Instance& instance_for_level(int level);

// Classical reference encryption (independent matrix-algebra path).
std::vector<uint8_t> encrypt_ref(const Instance& inst,
                                 const std::vector<uint8_t>& key_bits,
                                 const std::vector<uint8_t>& msg_bits);

enum class SboxKind { InPlace, Shallow };

// In-place S-box on wires (a, b, c): 3 CCNOT + 2 CNOT.
void sbox_inplace(Circuit& c, int a, int b, int w_c);
// Shallow S-box: writes S(a,b,c) onto three fresh wires (returned), leaving
// the inputs dirty; T-depth 1.
struct ShallowOut { int a, b, c; };
ShallowOut sbox_shallow(Circuit& c, int a, int b, int w_c);

struct ForwardResult {
  std::vector<int> state;
  size_t body_begin;
};

// Appends the forward cipher; key register is transformed in place through
// the key-update matrices (restored only by the adjoint).
ForwardResult forward(Circuit& c, const Instance& inst,
                      const std::vector<int>& key, const std::vector<int>& msg,
                      SboxKind sk);

struct FullCircuit {
  Circuit c;
  std::vector<int> key, msg, out;
};

FullCircuit full(const Instance& inst, SboxKind sk);

}  // namespace qre::lowmc
