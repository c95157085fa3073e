#include "aes_ref.hpp"

#include <stdexcept>

namespace qre::aes_ref {
namespace {

uint8_t gmul(uint8_t a, uint8_t b) {
  uint8_t p = 0;
  while (b) {
    if (b & 1) p ^= a;
    a = xtime(a);
    b >>= 1;
  }
  return p;
}

uint8_t ginv(uint8_t a) {
  if (a == 0) return 0;
  // a^254 in GF(2^8)
  uint8_t r = 1;
  uint8_t base = a;
  int e = 254;
  while (e) {
    if (e & 1) r = gmul(r, base);
    base = gmul(base, base);
    e >>= 1;
  }
  return r;
}

}  // namespace

uint8_t xtime(uint8_t x) {
  return static_cast<uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1b : 0x00));
}

uint8_t sbox(uint8_t x) {
  uint8_t y = ginv(x);
  uint8_t r = 0;
  for (int i = 0; i < 8; ++i) {
    int bit = ((y >> i) ^ (y >> ((i + 4) % 8)) ^ (y >> ((i + 5) % 8)) ^
               (y >> ((i + 6) % 8)) ^ (y >> ((i + 7) % 8)) ^ (0x63 >> i)) &
              1;
    r |= static_cast<uint8_t>(bit << i);
  }
  return r;
}

int rounds_for_key_bytes(size_t key_bytes) {
  switch (key_bytes) {
    case 16: return 10;
    case 24: return 12;
    case 32: return 14;
    default: throw std::invalid_argument("AES key must be 16, 24 or 32 bytes");
  }
}

std::vector<std::array<uint8_t, 4>> expand_key(const std::vector<uint8_t>& key) {
  int nk = static_cast<int>(key.size()) / 4;
  int rounds = rounds_for_key_bytes(key.size());
  int total = 4 * (rounds + 1);
  std::vector<std::array<uint8_t, 4>> w(static_cast<size_t>(total));
  for (int i = 0; i < nk; ++i)
    w[static_cast<size_t>(i)] = {key[static_cast<size_t>(4 * i)],
                                 key[static_cast<size_t>(4 * i + 1)],
                                 key[static_cast<size_t>(4 * i + 2)],
                                 key[static_cast<size_t>(4 * i + 3)]};
  uint8_t rc = 1;
  for (int i = nk; i < total; ++i) {
    std::array<uint8_t, 4> t = w[static_cast<size_t>(i - 1)];
    if (i % nk == 0) {
      t = {sbox(t[1]), sbox(t[2]), sbox(t[3]), sbox(t[0])};
      t[0] ^= rc;
      rc = xtime(rc);
    } else if (nk > 6 && i % nk == 4) {
      t = {sbox(t[0]), sbox(t[1]), sbox(t[2]), sbox(t[3])};
    }
    for (int b = 0; b < 4; ++b)
      w[static_cast<size_t>(i)][static_cast<size_t>(b)] =
          w[static_cast<size_t>(i - nk)][static_cast<size_t>(b)] ^ t[static_cast<size_t>(b)];
  }
  return w;
}

std::array<uint8_t, 16> encrypt(const std::vector<uint8_t>& key,
                                const std::array<uint8_t, 16>& block) {
  int rounds = rounds_for_key_bytes(key.size());
  auto w = expand_key(key);
  std::array<uint8_t, 16> s = block;  // s[4c + r] = state row r, column c

  auto add_round_key = [&](int round) {
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < 4; ++r)
        s[static_cast<size_t>(4 * c + r)] ^=
            w[static_cast<size_t>(4 * round + c)][static_cast<size_t>(r)];
  };

  add_round_key(0);
  for (int round = 1; round <= rounds; ++round) {
    for (auto& b : s) b = sbox(b);
    // ShiftRows: row r rotates left by r.
    std::array<uint8_t, 16> t;
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < 4; ++r)
        t[static_cast<size_t>(4 * c + r)] = s[static_cast<size_t>(4 * ((c + r) % 4) + r)];
    s = t;
    if (round < rounds) {
      for (int c = 0; c < 4; ++c) {
        uint8_t a0 = s[static_cast<size_t>(4 * c)], a1 = s[static_cast<size_t>(4 * c + 1)],
                a2 = s[static_cast<size_t>(4 * c + 2)], a3 = s[static_cast<size_t>(4 * c + 3)];
        s[static_cast<size_t>(4 * c)] = static_cast<uint8_t>(gmul(a0, 2) ^ gmul(a1, 3) ^ a2 ^ a3);
        s[static_cast<size_t>(4 * c + 1)] = static_cast<uint8_t>(a0 ^ gmul(a1, 2) ^ gmul(a2, 3) ^ a3);
        s[static_cast<size_t>(4 * c + 2)] = static_cast<uint8_t>(a0 ^ a1 ^ gmul(a2, 2) ^ gmul(a3, 3));
        s[static_cast<size_t>(4 * c + 3)] = static_cast<uint8_t>(gmul(a0, 3) ^ a1 ^ a2 ^ gmul(a3, 2));
      }
    }
    add_round_key(round);
  }
  return s;
}

}  // namespace qre::aes_ref
