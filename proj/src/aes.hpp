#pragma once
// Reversible AES-128/192/256 circuit construction.
//
// Wire conventions: a byte is 8 consecutive wires, bit 0 = most significant
// bit. The 128-bit state is 16 bytes in FIPS order (state row r, column c at
// byte index 4c+r). ShiftRows/RotWord are wire relabelings inside the builder
// (cost-free); a standalone REWIRE-emitting ShiftRows is provided for
// simulation demos.

#include <array>
#include <vector>

#include "circuit.hpp"
#include "gf2.hpp"

namespace qre::aes {

enum class MixColumnKind { InPlace, OutOfPlace };
enum class KeyExpandKind { InPlace, Naive };

struct Options {
  int key_bits = 128;
  MixColumnKind mc = MixColumnKind::InPlace;
  KeyExpandKind ke = KeyExpandKind::InPlace;
};

int rounds_for_key_bits(int key_bits);

// out ^= S(in). 16 fresh wires are NOT allocated here; `out` must be live
// (it may hold a non-zero value). All 120 internal helpers are uncomputed and
// released before returning.
void sbox(Circuit& c, const std::array<int, 8>& in, const std::array<int, 8>& out);

GF2Matrix mixcolumn_matrix();  // 32x32 over GF(2)

// col <- MC * col via PLU synthesis (no extra wires).
void mixcolumn_inplace(Circuit& c, const std::vector<int>& col);
// Low-depth variant: 32 fresh wires receive MC*col, the old wires are cleared
// and left allocated (holding |0>), and `col` is updated to the new wires.
void mixcolumn_outofplace(Circuit& c, std::vector<int>& col);

// Standalone ShiftRows as REWIRE ops on a 128-wire state.
void shiftrow(Circuit& c, const std::vector<int>& state);

struct ForwardResult {
  std::vector<int> state;  // 128 wires holding the ciphertext
  size_t body_begin;       // first op index of the cipher body (after the
                           // key/message ALLOCs), for append_adjoint
};

// Appends the forward cipher. key (key_bits wires) and msg (128 wires) must be
// live; the key register is expanded in place (restored only by the adjoint).
ForwardResult forward(Circuit& c, const std::vector<int>& key,
                      const std::vector<int>& msg, const Options& opt);

struct FullCircuit {
  Circuit c;
  std::vector<int> key, msg, out;
};

// Full compute / copy-out / uncompute circuit. inputs = key ++ msg,
// outputs = out. key and msg are restored; all ancillas are clean.
FullCircuit full(const Options& opt);

}  // namespace qre::aes
