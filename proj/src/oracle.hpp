#pragma once
// Grover oracle assembly: r parallel cipher instances under a shared key,
// a ciphertext comparator (balanced AND tree) that flips the target wire on a
// full match, and full uncomputation of everything except the target.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "aes.hpp"
#include "circuit.hpp"
#include "lowmc.hpp"

namespace qre::oracle {

// Flips `target` iff the wires in `data` equal the classical constant bits.
// The comparator tree and bit flips are fully uncomputed internally.
void comparator(Circuit& c, const std::vector<int>& data,
                const std::vector<uint8_t>& constant, int target);

struct KnownPlaintext {
  std::vector<uint8_t> msg_bits;     // plaintext bits (wire order)
  std::vector<uint8_t> cipher_bits;  // expected ciphertext bits
};

struct OracleCircuit {
  Circuit c;
  std::vector<int> key;
  int target;
};

// Generic oracle over `pairs.size()` cipher instances. `build_forward` appends
// one forward cipher for (key wires, msg wires) and returns the ciphertext
// wires.
using ForwardBuilder =
    std::function<std::vector<int>(Circuit&, const std::vector<int>& key,
                                   const std::vector<int>& msg)>;

OracleCircuit build(int key_bits, int block_bits,
                    const std::vector<KnownPlaintext>& pairs,
                    const ForwardBuilder& build_forward);

// Convenience constructors. For AES/LowMC the plaintexts are fixed,
// deterministic test vectors derived from the instance index; the matching
// ciphertexts are computed classically for a given hidden key.
OracleCircuit build_aes(const aes::Options& opt, int r,
                        const std::vector<uint8_t>& hidden_key_bytes);
OracleCircuit build_lowmc(int level, lowmc::SboxKind sk, int r,
                          const std::vector<uint8_t>& hidden_key_bits);

}  // namespace qre::oracle
