#pragma once
// Classical byte-oriented AES reference (encryption only), used as the
// known-answer oracle for the circuit constructions. Implemented from the
// field arithmetic up (S-box computed via GF(2^8) inversion + affine map), so
// it shares no code with the circuit builders.

#include <array>
#include <cstdint>
#include <vector>

namespace qre::aes_ref {

uint8_t sbox(uint8_t x);
uint8_t xtime(uint8_t x);

// key.size() must be 16, 24 or 32; block is 16 bytes.
std::array<uint8_t, 16> encrypt(const std::vector<uint8_t>& key,
                                const std::array<uint8_t, 16>& block);

// Expanded key schedule as 4-byte words W[0..4*(rounds+1)-1].
std::vector<std::array<uint8_t, 4>> expand_key(const std::vector<uint8_t>& key);

int rounds_for_key_bytes(size_t key_bytes);

}  // namespace qre::aes_ref
