#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aes.hpp"
#include "aes_ref.hpp"
#include "circuit.hpp"
#include "estimate.hpp"
#include "sim.hpp"

using namespace qre;

namespace {

std::vector<uint8_t> byte_to_bits(uint8_t v) {
  std::vector<uint8_t> bits(8);
  for (int i = 0; i < 8; ++i) bits[static_cast<size_t>(i)] = (v >> (7 - i)) & 1;
  return bits;
}

uint8_t bits_to_byte(const std::vector<uint8_t>& bits) {
  uint8_t v = 0;
  for (int i = 0; i < 8; ++i) v = static_cast<uint8_t>(v << 1 | bits[static_cast<size_t>(i)]);
  return v;
}

const std::vector<uint8_t> kFipsKey128 = {0x00, 0x01, 0x02, 0x03, 0x04, 0x05,
                                          0x06, 0x07, 0x08, 0x09, 0x0a, 0x0b,
                                          0x0c, 0x0d, 0x0e, 0x0f};
const std::array<uint8_t, 16> kFipsMsg = {0x00, 0x11, 0x22, 0x33, 0x44, 0x55,
                                          0x66, 0x77, 0x88, 0x99, 0xaa, 0xbb,
                                          0xcc, 0xdd, 0xee, 0xff};

std::vector<uint8_t> bytes_to_bits(const uint8_t* p, size_t n) {
  std::vector<uint8_t> bits;
  for (size_t i = 0; i < n; ++i) {
    auto b = byte_to_bits(p[i]);
    bits.insert(bits.end(), b.begin(), b.end());
  }
  return bits;
}

std::array<uint8_t, 16> run_full(const aes::FullCircuit& fc,
                                 const std::vector<uint8_t>& key,
                                 const std::array<uint8_t, 16>& msg) {
  std::vector<uint8_t> in = bytes_to_bits(key.data(), key.size());
  auto mb = bytes_to_bits(msg.data(), 16);
  in.insert(in.end(), mb.begin(), mb.end());
  auto out = run(fc.c, in);
  std::array<uint8_t, 16> ct;
  for (int i = 0; i < 16; ++i)
    ct[static_cast<size_t>(i)] = bits_to_byte(
        {out.begin() + 8 * i, out.begin() + 8 * (i + 1)});
  return ct;
}

}  // namespace

TEST_CASE("classical reference S-box and key schedule") {
  CHECK(aes_ref::sbox(0x00) == 0x63);
  CHECK(aes_ref::sbox(0x53) == 0xed);
  CHECK(aes_ref::sbox(0x9a) == 0xb8);
  auto w = aes_ref::expand_key(kFipsKey128);
  // FIPS-197 key schedule for 000102...0f: W[4..7] = d6aa74fd d2af72fa
  // daa678f1 d6ab76fe.
  CHECK(w[4] == std::array<uint8_t, 4>{0xd6, 0xaa, 0x74, 0xfd});
  CHECK(w[7] == std::array<uint8_t, 4>{0xd6, 0xab, 0x76, 0xfe});
  auto ct = aes_ref::encrypt(kFipsKey128, kFipsMsg);
  CHECK(ct == std::array<uint8_t, 16>{0x69, 0xc4, 0xe0, 0xd8, 0x6a, 0x7b, 0x04,
                                      0x30, 0xd8, 0xcd, 0xb7, 0x80, 0x70, 0xb4,
                                      0xc5, 0x5a});
}

TEST_CASE("S-box circuit computes the AES S-box and uncomputes cleanly") {
  Circuit c;
  auto in = c.allocate(8), out = c.allocate(8);
  std::array<int, 8> ia, oa;
  for (int i = 0; i < 8; ++i) {
    ia[static_cast<size_t>(i)] = in[static_cast<size_t>(i)];
    oa[static_cast<size_t>(i)] = out[static_cast<size_t>(i)];
  }
  aes::sbox(c, ia, oa);
  c.set_inputs(in);
  c.set_outputs(out);
  for (int v : {0x00, 0x53, 0x01, 0xff, 0xc2}) {
    auto res = run(c, byte_to_bits(static_cast<uint8_t>(v)));
    CHECK(bits_to_byte(res) == aes_ref::sbox(static_cast<uint8_t>(v)));
  }
  // Exhaustive check, bitsliced, and ancilla cleanliness.
  std::vector<std::vector<uint8_t>> inputs;
  for (int v = 0; v < 256; ++v) inputs.push_back(byte_to_bits(static_cast<uint8_t>(v)));
  CHECK(check_clean(c, inputs).ok());
  // S-box then adjoint restores the input and clears the outputs.
  Circuit d;
  auto din = d.allocate(8), dout = d.allocate(8);
  std::array<int, 8> dia, doa;
  for (int i = 0; i < 8; ++i) {
    dia[static_cast<size_t>(i)] = din[static_cast<size_t>(i)];
    doa[static_cast<size_t>(i)] = dout[static_cast<size_t>(i)];
  }
  size_t begin = d.size();
  aes::sbox(d, dia, doa);
  d.append_adjoint(d, begin, d.size());
  d.set_inputs(din);
  d.set_outputs(din);
  for (int v : {0x00, 0x5a, 0x99}) {
    auto bits = byte_to_bits(static_cast<uint8_t>(v));
    auto res = run_lanes(d, std::vector<uint64_t>(bits.begin(), bits.end()));
    CHECK(res.violations.empty());
    for (int i = 0; i < 8; ++i) CHECK((res.outputs[static_cast<size_t>(i)] & 1) == bits[static_cast<size_t>(i)]);
  }
}

TEST_CASE("standalone shiftrow is pure rewiring and matches classical ShiftRows") {
  Circuit c;
  auto state = c.allocate(128);
  aes::shiftrow(c, state);
  c.set_inputs(state);
  c.set_outputs(state);
  ResourceEstimate e = estimate(c);
  CHECK(e.gates() == 0);
  CHECK(e.full_depth == 0);
  std::mt19937_64 rng(4);
  std::array<uint8_t, 16> st;
  for (auto& b : st) b = static_cast<uint8_t>(rng());
  auto out = run(c, bytes_to_bits(st.data(), 16));
  // Classical: new[4c+r] = old[4((c+r)%4)+r].
  for (int col = 0; col < 4; ++col)
    for (int r = 0; r < 4; ++r)
      CHECK(bits_to_byte({out.begin() + 8 * (4 * col + r),
                          out.begin() + 8 * (4 * col + r + 1)}) ==
            st[static_cast<size_t>(4 * ((col + r) % 4) + r)]);
  // Applying shiftrow four times is the identity.
  Circuit c4;
  auto s4 = c4.allocate(128);
  for (int i = 0; i < 4; ++i) aes::shiftrow(c4, s4);
  c4.set_inputs(s4);
  c4.set_outputs(s4);
  auto out4 = run(c4, bytes_to_bits(st.data(), 16));
  CHECK(out4 == bytes_to_bits(st.data(), 16));
}

TEST_CASE("both MixColumn variants match the classical column map") {
  auto classical = [](std::array<uint8_t, 4> col) {
    auto xt = [](uint8_t v) {
      return static_cast<uint8_t>((v << 1) ^ ((v & 0x80) ? 0x1b : 0));
    };
    std::array<uint8_t, 4> o;
    o[0] = static_cast<uint8_t>(xt(col[0]) ^ xt(col[1]) ^ col[1] ^ col[2] ^ col[3]);
    o[1] = static_cast<uint8_t>(col[0] ^ xt(col[1]) ^ xt(col[2]) ^ col[2] ^ col[3]);
    o[2] = static_cast<uint8_t>(col[0] ^ col[1] ^ xt(col[2]) ^ xt(col[3]) ^ col[3]);
    o[3] = static_cast<uint8_t>(xt(col[0]) ^ col[0] ^ col[1] ^ col[2] ^ xt(col[3]));
    return o;
  };
  for (bool in_place : {true, false}) {
    Circuit c;
    auto w = c.allocate(32);
    std::vector<int> col = w;
    if (in_place) aes::mixcolumn_inplace(c, col);
    else aes::mixcolumn_outofplace(c, col);
    c.set_inputs(w);
    c.set_outputs(col);
    std::mt19937_64 rng(6);
    for (int iter = 0; iter < 1000; ++iter) {
      std::array<uint8_t, 4> in;
      for (auto& b : in) b = static_cast<uint8_t>(rng());
      auto out = run(c, bytes_to_bits(in.data(), 4));
      auto expect = classical(in);
      for (int i = 0; i < 4; ++i)
        CHECK(bits_to_byte({out.begin() + 8 * i, out.begin() + 8 * (i + 1)}) ==
              expect[static_cast<size_t>(i)]);
    }
  }
}

TEST_CASE("full circuits match FIPS-197 vectors") {
  aes::FullCircuit fc128 = aes::full({128});
  CHECK(run_full(fc128, kFipsKey128, kFipsMsg) ==
        std::array<uint8_t, 16>{0x69, 0xc4, 0xe0, 0xd8, 0x6a, 0x7b, 0x04, 0x30,
                                0xd8, 0xcd, 0xb7, 0x80, 0x70, 0xb4, 0xc5, 0x5a});
  std::vector<uint8_t> key192(24), key256(32);
  for (int i = 0; i < 24; ++i) key192[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
  for (int i = 0; i < 32; ++i) key256[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
  CHECK(run_full(aes::full({192}), key192, kFipsMsg) ==
        std::array<uint8_t, 16>{0xdd, 0xa9, 0x7c, 0xa4, 0x86, 0x4c, 0xdf, 0xe0,
                                0x6e, 0xaf, 0x70, 0xa0, 0xec, 0x0d, 0x71, 0x91});
  CHECK(run_full(aes::full({256}), key256, kFipsMsg) ==
        std::array<uint8_t, 16>{0x8e, 0xa2, 0xb7, 0xca, 0x51, 0x67, 0x45, 0xbf,
                                0xea, 0xfc, 0x49, 0x90, 0x4b, 0x49, 0x60, 0x89});
}

TEST_CASE("all four construction variants agree with the reference on random inputs") {
  std::mt19937_64 rng(8);
  for (aes::MixColumnKind mc : {aes::MixColumnKind::InPlace, aes::MixColumnKind::OutOfPlace})
    for (aes::KeyExpandKind ke : {aes::KeyExpandKind::InPlace, aes::KeyExpandKind::Naive}) {
      aes::FullCircuit fc = aes::full({128, mc, ke});
      for (int iter = 0; iter < 8; ++iter) {
        std::vector<uint8_t> key(16);
        std::array<uint8_t, 16> msg;
        for (auto& b : key) b = static_cast<uint8_t>(rng());
        for (auto& b : msg) b = static_cast<uint8_t>(rng());
        CHECK(run_full(fc, key, msg) == aes_ref::encrypt(key, msg));
      }
    }
}

TEST_CASE("full circuits leave every ancilla clean") {
  aes::FullCircuit fc = aes::full({128});
  std::mt19937_64 rng(10);
  std::vector<std::vector<uint8_t>> inputs;
  for (int iter = 0; iter < 64; ++iter) {
    std::vector<uint8_t> in(256);
    for (auto& b : in) b = rng() & 1;
    inputs.push_back(std::move(in));
  }
  CHECK(check_clean(fc.c, inputs).ok());
}

TEST_CASE("T-counts are exact and widths obey the naive-vs-in-place formula") {
  struct Row { int key_bits; uint64_t t; };
  for (Row r : {Row{128, 54400}, Row{192, 60928}, Row{256, 75072}}) {
    ResourceEstimate ip = estimate(aes::full({r.key_bits}).c);
    CHECK(ip.t == r.t);
    ResourceEstimate nv = estimate(
        aes::full({r.key_bits, aes::MixColumnKind::InPlace, aes::KeyExpandKind::Naive}).c);
    CHECK(nv.t == r.t);
    int rounds = aes::rounds_for_key_bits(r.key_bits);
    int nk = r.key_bits / 32;
    CHECK(nv.width - ip.width ==
          static_cast<uint64_t>(4 * 32 * (rounds + 1) - 32 * nk));
    CHECK(nv.width > ip.width);
  }
}
