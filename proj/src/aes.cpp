#include "aes.hpp"

#include <stdexcept>

namespace qre::aes {
namespace {

// 120-node S-box netlist (34 AND, 86 XOR helper nodes plus the output layer).
// Node ids: 0..7 = input bits (0 = msb), 8..34 = top linear layer,
// 35..97 = middle layer, 98..127 = bottom linear layer.
struct Node {
  bool is_and;
  uint8_t s1, s2;
};

constexpr Node kNetlist[120] = {
    // top linear layer (27 XOR nodes, ids 8..34)
    {false, 0, 3},   {false, 0, 5},   {false, 0, 6},   {false, 3, 5},
    {false, 4, 6},   {false, 8, 12},  {false, 1, 2},   {false, 7, 13},
    {false, 7, 14},  {false, 13, 14}, {false, 1, 5},   {false, 2, 5},
    {false, 10, 11}, {false, 13, 18}, {false, 12, 18}, {false, 12, 19},
    {false, 16, 23}, {false, 3, 7},   {false, 14, 25}, {false, 8, 26},
    {false, 6, 7},   {false, 14, 28}, {false, 9, 29},  {false, 9, 17},
    {false, 27, 24}, {false, 10, 23}, {false, 8, 19},
    // middle layer (ids 35..97)
    {true, 20, 13},  {true, 30, 15},  {false, 21, 35}, {true, 26, 7},
    {false, 38, 35}, {true, 10, 23},  {true, 29, 16},  {false, 33, 40},
    {true, 27, 24},  {false, 43, 40}, {true, 8, 22},   {true, 11, 34},
    {false, 46, 45}, {true, 9, 17},   {false, 48, 45}, {false, 37, 36},
    {false, 39, 31}, {false, 42, 41}, {false, 44, 49}, {false, 50, 47},
    {false, 51, 49}, {false, 52, 47}, {false, 53, 32}, {false, 56, 57},
    {true, 56, 54},  {false, 55, 59}, {false, 54, 55}, {false, 57, 59},
    {true, 62, 61},  {true, 60, 58},  {true, 54, 57},  {true, 61, 65},
    {false, 61, 59}, {true, 55, 56},  {true, 58, 68},  {false, 58, 59},
    {false, 55, 63}, {false, 66, 67}, {false, 57, 64}, {false, 69, 70},
    {false, 72, 74}, {false, 71, 73}, {false, 71, 72}, {false, 73, 74},
    {false, 76, 75}, {true, 78, 13},  {true, 74, 15},  {true, 73, 7},
    {true, 77, 23},  {true, 72, 16},  {true, 71, 24},  {true, 76, 22},
    {true, 79, 34},  {true, 75, 17},  {true, 78, 20},  {true, 74, 30},
    {true, 73, 26},  {true, 77, 10},  {true, 72, 29},  {true, 71, 27},
    {true, 76, 8},   {true, 79, 11},  {true, 75, 9},
    // bottom linear layer (ids 98..127)
    {false, 95, 96},  {false, 84, 90},  {false, 80, 82},  {false, 81, 89},
    {false, 88, 92},  {false, 83, 95},  {false, 96, 103}, {false, 80, 101},
    {false, 85, 93},  {false, 86, 87},  {false, 87, 102}, {false, 94, 100},
    {false, 82, 85},  {false, 84, 98},  {false, 86, 95},  {false, 89, 99},
    {false, 90, 98},  {false, 91, 99},  {false, 92, 106}, {false, 97, 102},
    {false, 98, 99},  {false, 99, 105}, {false, 101, 110}, {false, 116, 100},
    {false, 113, 107}, {false, 104, 108}, {false, 105, 107}, {false, 106, 108},
    {false, 109, 112}, {false, 109, 115},
};

struct OutBit {
  uint8_t s1, s2;
  bool invert;
};

constexpr OutBit kOut[8] = {
    {104, 122, false},  // S0
    {114, 124, true},   // S1
    {117, 126, true},   // S2
    {104, 119, false},  // S3
    {118, 120, false},  // S4
    {123, 127, false},  // S5
    {111, 125, true},   // S6
    {104, 121, true},   // S7
};

constexpr int kStateBits = 128;

std::array<int, 8> byte_wires(const std::vector<int>& reg, int byte) {
  std::array<int, 8> w;
  for (int j = 0; j < 8; ++j) w[static_cast<size_t>(j)] = reg[static_cast<size_t>(8 * byte + j)];
  return w;
}

}  // namespace

int rounds_for_key_bits(int key_bits) {
  switch (key_bits) {
    case 128: return 10;
    case 192: return 12;
    case 256: return 14;
    default: throw std::invalid_argument("AES key size must be 128/192/256");
  }
}

void sbox(Circuit& c, const std::array<int, 8>& in, const std::array<int, 8>& out) {
  int node[128];
  for (int i = 0; i < 8; ++i) node[i] = in[static_cast<size_t>(i)];

  size_t begin = c.size();
  std::vector<int> helpers = c.allocate(120);
  for (int i = 0; i < 120; ++i) {
    const Node& n = kNetlist[i];
    int w = helpers[static_cast<size_t>(i)];
    node[8 + i] = w;
    if (n.is_and) {
      c.and_gate(node[n.s1], node[n.s2], w);
    } else {
      c.cnot(node[n.s1], w);
      c.cnot(node[n.s2], w);
    }
  }
  size_t end = c.size();

  for (int i = 0; i < 8; ++i) {
    const OutBit& o = kOut[i];
    c.cnot(node[o.s1], out[static_cast<size_t>(i)]);
    c.cnot(node[o.s2], out[static_cast<size_t>(i)]);
    if (o.invert) c.x(out[static_cast<size_t>(i)]);
  }

  c.append_adjoint(c, begin, end);  // uncompute + release all 120 helpers
}

GF2Matrix mixcolumn_matrix() {
  GF2Matrix m(32, 32);
  for (int j = 0; j < 32; ++j) {
    uint8_t col[4] = {0, 0, 0, 0};
    col[j / 8] = static_cast<uint8_t>(0x80u >> (j % 8));
    auto xt = [](uint8_t v) {
      return static_cast<uint8_t>((v << 1) ^ ((v & 0x80) ? 0x1b : 0));
    };
    uint8_t out[4];
    out[0] = static_cast<uint8_t>(xt(col[0]) ^ xt(col[1]) ^ col[1] ^ col[2] ^ col[3]);
    out[1] = static_cast<uint8_t>(col[0] ^ xt(col[1]) ^ xt(col[2]) ^ col[2] ^ col[3]);
    out[2] = static_cast<uint8_t>(col[0] ^ col[1] ^ xt(col[2]) ^ xt(col[3]) ^ col[3]);
    out[3] = static_cast<uint8_t>(xt(col[0]) ^ col[0] ^ col[1] ^ col[2] ^ xt(col[3]));
    for (int i = 0; i < 32; ++i)
      if ((out[i / 8] >> (7 - i % 8)) & 1) m.set(i, j, true);
  }
  return m;
}

void mixcolumn_inplace(Circuit& c, const std::vector<int>& col) {
  // Synthesize via the transpose: if a CNOT/REWIRE network computes M^T, the
  // reversed network with each CNOT's control and target exchanged computes M
  // (transposing a product reverses it and transposes each elementary factor).
  // The transpose's PLU happens to be sparser for the MixColumn matrix.
  static const std::vector<Op> ops = [] {
    GF2Matrix mc = mixcolumn_matrix();
    GF2Matrix mct(32, 32);
    for (int i = 0; i < 32; ++i)
      for (int j = 0; j < 32; ++j) mct.set(i, j, mc.get(j, i));
    Circuit scratch;
    std::vector<int> w = scratch.allocate(32);
    synth_inplace(mct, scratch, w);
    std::vector<Op> rev;
    for (auto it = scratch.ops().rbegin(); it != scratch.ops().rend(); ++it) {
      if (it->kind == GateKind::CNOT)
        rev.push_back({GateKind::CNOT, it->b, it->a});
      else if (it->kind == GateKind::REWIRE)
        rev.push_back(*it);
    }
    return rev;
  }();
  for (const Op& op : ops)
    c.append({op.kind, col[static_cast<size_t>(op.a)],
              col[static_cast<size_t>(op.b)]});
}

void mixcolumn_outofplace(Circuit& c, std::vector<int>& col) {
  static const GF2Matrix mc = mixcolumn_matrix();
  static const GF2Matrix mc_inv = mc.inverse();
  std::vector<int> fresh = c.allocate(32);
  synth_outofplace(mc, c, col, fresh);      // fresh = MC * col
  synth_outofplace(mc_inv, c, fresh, col);  // col ^= MC^-1 * fresh == col -> 0
  // The cleared wires stay allocated (each MixColumn layer consumes fresh
  // qubits in this variant).
  col = fresh;
}

void shiftrow(Circuit& c, const std::vector<int>& state) {
  if (state.size() != kStateBits) throw std::invalid_argument("shiftrow: need 128 wires");
  // Row r rotates left by r columns; realize each row's rotation as a cycle of
  // REWIREs. new[4c+r] = old[4((c+r)%4)+r].
  for (int r = 1; r < 4; ++r) {
    // Rotation by r on 4 elements; decompose into transpositions.
    int idx[4];
    for (int cidx = 0; cidx < 4; ++cidx) idx[cidx] = 4 * cidx + r;
    // value at column cidx must move to column (cidx - r + 4) % 4
    int q[4];
    for (int cidx = 0; cidx < 4; ++cidx) q[cidx] = (cidx - r + 4) % 4;
    for (int i = 0; i < 4; ++i) {
      while (q[i] != i) {
        int j = q[i];
        for (int b = 0; b < 8; ++b)
          c.rewire(state[static_cast<size_t>(8 * idx[i] + b)],
                   state[static_cast<size_t>(8 * idx[j] + b)]);
        std::swap(q[i], q[j]);
      }
    }
  }
}

ForwardResult forward(Circuit& c, const std::vector<int>& key,
                      const std::vector<int>& msg, const Options& opt) {
  int rounds = rounds_for_key_bits(opt.key_bits);
  int nk = opt.key_bits / 32;
  int total_words = 4 * (rounds + 1);
  if (static_cast<int>(key.size()) != opt.key_bits || msg.size() != kStateBits)
    throw std::invalid_argument("aes::forward wire count mismatch");

  ForwardResult res;
  res.body_begin = c.size();
  std::vector<int> state = msg;

  // Key schedule register: in-place mode reuses the key register slots;
  // naive mode materializes every word up front.
  std::vector<std::vector<int>> w;  // w[slot or word index] = 32 wires
  auto word_of = [](const std::vector<int>& reg, int word) {
    return std::vector<int>(reg.begin() + 32 * word, reg.begin() + 32 * (word + 1));
  };
  for (int i = 0; i < nk; ++i) w.push_back(word_of(key, i));

  uint8_t rc = 1;
  // XOR f(prev) into dst where f is the word-expansion function for index i.
  auto expand_into = [&](int i, const std::vector<int>& prev, const std::vector<int>& dst) {
    if (i % nk == 0) {
      for (int b = 0; b < 4; ++b) {
        std::array<int, 8> in, out;
        for (int j = 0; j < 8; ++j) {
          in[static_cast<size_t>(j)] = prev[static_cast<size_t>(8 * ((b + 1) % 4) + j)];
          out[static_cast<size_t>(j)] = dst[static_cast<size_t>(8 * b + j)];
        }
        sbox(c, in, out);
      }
      for (int j = 0; j < 8; ++j)
        if ((rc >> (7 - j)) & 1) c.x(dst[static_cast<size_t>(j)]);
      rc = static_cast<uint8_t>((rc << 1) ^ ((rc & 0x80) ? 0x1b : 0));
    } else if (nk > 6 && i % nk == 4) {
      for (int b = 0; b < 4; ++b) {
        std::array<int, 8> in, out;
        for (int j = 0; j < 8; ++j) {
          in[static_cast<size_t>(j)] = prev[static_cast<size_t>(8 * b + j)];
          out[static_cast<size_t>(j)] = dst[static_cast<size_t>(8 * b + j)];
        }
        sbox(c, in, out);
      }
    } else {
      for (int j = 0; j < 32; ++j)
        c.cnot(prev[static_cast<size_t>(j)], dst[static_cast<size_t>(j)]);
    }
  };

  int next_word = nk;  // first unexpanded word index
  auto ensure_words = [&](int upto) {
    for (; next_word <= upto; ++next_word) {
      int i = next_word;
      if (opt.ke == KeyExpandKind::InPlace) {
        // Slot i%nk holds W[i-nk]; XOR f(W[i-1]) into it.
        expand_into(i, w[static_cast<size_t>((i - 1) % nk)],
                    w[static_cast<size_t>(i % nk)]);
      } else {
        std::vector<int> fresh = c.allocate(32);
        for (int j = 0; j < 32; ++j)
          c.cnot(w[static_cast<size_t>(i - nk)][static_cast<size_t>(j)],
                 fresh[static_cast<size_t>(j)]);
        expand_into(i, w[static_cast<size_t>(i - 1)], fresh);
        w.push_back(fresh);
      }
    }
  };
  if (opt.ke == KeyExpandKind::Naive) ensure_words(total_words - 1);

  auto round_key_word = [&](int word) -> const std::vector<int>& {
    return opt.ke == KeyExpandKind::InPlace ? w[static_cast<size_t>(word % nk)]
                                            : w[static_cast<size_t>(word)];
  };
  auto add_round_key = [&](int round) {
    for (int j = 0; j < 4; ++j) {
      const auto& kw = round_key_word(4 * round + j);
      for (int b = 0; b < 32; ++b)
        c.cnot(kw[static_cast<size_t>(b)], state[static_cast<size_t>(32 * j + b)]);
    }
  };

  add_round_key(0);
  for (int round = 1; round <= rounds; ++round) {
    // ByteSub into a fresh state register (the old one stays live/dirty until
    // the adjoint pass).
    std::vector<int> ns = c.allocate(kStateBits);
    for (int b = 0; b < 16; ++b)
      sbox(c, byte_wires(state, b), byte_wires(ns, b));
    state = ns;
    // ShiftRows as an index relabeling.
    std::vector<int> sr(kStateBits);
    for (int cc = 0; cc < 4; ++cc)
      for (int r = 0; r < 4; ++r)
        for (int b = 0; b < 8; ++b)
          sr[static_cast<size_t>(8 * (4 * cc + r) + b)] =
              state[static_cast<size_t>(8 * (4 * ((cc + r) % 4) + r) + b)];
    state = sr;
    if (round < rounds) {
      for (int cc = 0; cc < 4; ++cc) {
        std::vector<int> col(state.begin() + 32 * cc, state.begin() + 32 * (cc + 1));
        if (opt.mc == MixColumnKind::InPlace) {
          mixcolumn_inplace(c, col);
        } else {
          mixcolumn_outofplace(c, col);
          for (int b = 0; b < 32; ++b)
            state[static_cast<size_t>(32 * cc + b)] = col[static_cast<size_t>(b)];
        }
      }
    }
    if (opt.ke == KeyExpandKind::InPlace) ensure_words(4 * round + 3);
    add_round_key(round);
  }

  res.state = state;
  return res;
}

FullCircuit full(const Options& opt) {
  FullCircuit fc;
  fc.key = fc.c.allocate(opt.key_bits);
  fc.msg = fc.c.allocate(kStateBits);
  ForwardResult fwd = forward(fc.c, fc.key, fc.msg, opt);
  size_t body_end = fc.c.size();
  fc.out = fc.c.allocate_fresh(kStateBits);
  for (int i = 0; i < kStateBits; ++i)
    fc.c.cnot(fwd.state[static_cast<size_t>(i)], fc.out[static_cast<size_t>(i)]);
  fc.c.append_adjoint(fc.c, fwd.body_begin, body_end);
  std::vector<int> ins = fc.key;
  ins.insert(ins.end(), fc.msg.begin(), fc.msg.end());
  fc.c.set_inputs(ins);
  fc.c.set_outputs(fc.out);
  return fc;
}

}  // namespace qre::aes
