#include "lowmc.hpp"

#include <bitset>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qre::lowmc {
namespace {

constexpr int kSboxes = 10;

class GrainLfsr {
 public:
  GrainLfsr() {
    state_.set();
    for (int i = 0; i < 160; ++i) step();
  }
  bool bit() {
    bool choice, tmp;
    do {
      choice = step();
      tmp = step();
    } while (!choice);
    return tmp;
  }

 private:
  bool step() {
    bool tmp = state_[0] ^ state_[13] ^ state_[23] ^ state_[38] ^ state_[51] ^
               state_[62];
    state_ >>= 1;
    state_[79] = tmp;
    return tmp;
  }
  std::bitset<80> state_;
};

uint8_t sbox_ref(uint8_t v) {
  uint8_t c = v & 1, b = (v >> 1) & 1, a = (v >> 2) & 1;
  uint8_t oa = a ^ (b & c);
  uint8_t ob = a ^ b ^ (a & c);
  uint8_t oc = a ^ b ^ c ^ (a & b);
  return static_cast<uint8_t>((oa << 2) | (ob << 1) | oc);
}

std::string read_token(std::istream& is) {
  std::string tok;
  while (is >> tok) {
    if (tok[0] == '#') {
      std::string rest;
      std::getline(is, rest);
      continue;
    }
    return tok;
  }
  throw std::runtime_error("lowmc::load: unexpected end of file");
}

}  // namespace

Params params_for_level(int level) {
  switch (level) {
    case 1: return {128, 128, 20};
    case 3: return {192, 192, 30};
    case 5: return {256, 256, 38};
    default: throw std::invalid_argument("LowMC level must be 1, 3 or 5");
  }
}

Instance generate(const Params& p) {
  Instance inst;
  inst.p = p;
  GrainLfsr rng;
  auto rand_matrix = [&](int rows, int cols) {
    GF2Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.set(i, j, rng.bit());
    return m;
  };
  for (int r = 0; r < p.rounds; ++r) {
    GF2Matrix m;
    do {
      m = rand_matrix(p.block_bits, p.block_bits);
    } while (m.rank() != p.block_bits);
    inst.lin.push_back(std::move(m));
  }
  for (int r = 0; r < p.rounds; ++r) {
    std::vector<uint8_t> c(static_cast<size_t>(p.block_bits));
    for (auto& bit : c) bit = rng.bit();
    inst.rc.push_back(std::move(c));
  }
  int maxrank = std::min(p.block_bits, p.key_bits);
  for (int r = 0; r <= p.rounds; ++r) {
    GF2Matrix m;
    do {
      m = rand_matrix(p.block_bits, p.key_bits);
    } while (m.rank() != maxrank);
    inst.km.push_back(std::move(m));
  }
  return inst;
}

void save(const Instance& inst, std::ostream& os) {
  os << "lowmc " << inst.p.block_bits << ' ' << inst.p.key_bits << ' '
     << inst.p.rounds << "\n";
  for (int r = 0; r < inst.p.rounds; ++r) {
    os << "LIN " << r << "\n";
    for (int i = 0; i < inst.p.block_bits; ++i)
      os << inst.lin[static_cast<size_t>(r)].to_hex_row(i) << "\n";
  }
  for (int r = 0; r < inst.p.rounds; ++r) {
    os << "CONST " << r << "\n";
    GF2Matrix row(1, inst.p.block_bits);
    for (int i = 0; i < inst.p.block_bits; ++i)
      row.set(0, i, inst.rc[static_cast<size_t>(r)][static_cast<size_t>(i)]);
    os << row.to_hex_row(0) << "\n";
  }
  for (int r = 0; r <= inst.p.rounds; ++r) {
    os << "KEY " << r << "\n";
    for (int i = 0; i < inst.p.block_bits; ++i)
      os << inst.km[static_cast<size_t>(r)].to_hex_row(i) << "\n";
  }
}

Instance load(std::istream& is) {
  if (read_token(is) != "lowmc")
    throw std::runtime_error("lowmc::load: missing 'lowmc' header");
  Instance inst;
  inst.p.block_bits = std::stoi(read_token(is));
  inst.p.key_bits = std::stoi(read_token(is));
  inst.p.rounds = std::stoi(read_token(is));
  inst.lin.assign(static_cast<size_t>(inst.p.rounds),
                  GF2Matrix(inst.p.block_bits, inst.p.block_bits));
  inst.rc.assign(static_cast<size_t>(inst.p.rounds),
                 std::vector<uint8_t>(static_cast<size_t>(inst.p.block_bits)));
  inst.km.assign(static_cast<size_t>(inst.p.rounds) + 1,
                 GF2Matrix(inst.p.block_bits, inst.p.key_bits));
  int sections = 2 * inst.p.rounds + inst.p.rounds + 1;
  for (int s = 0; s < sections; ++s) {
    std::string kind = read_token(is);
    int idx = std::stoi(read_token(is));
    if (kind == "LIN") {
      for (int i = 0; i < inst.p.block_bits; ++i)
        inst.lin.at(static_cast<size_t>(idx)).set_hex_row(i, read_token(is));
    } else if (kind == "CONST") {
      GF2Matrix row(1, inst.p.block_bits);
      row.set_hex_row(0, read_token(is));
      for (int i = 0; i < inst.p.block_bits; ++i)
        inst.rc.at(static_cast<size_t>(idx))[static_cast<size_t>(i)] = row.get(0, i);
    } else if (kind == "KEY") {
      for (int i = 0; i < inst.p.block_bits; ++i)
        inst.km.at(static_cast<size_t>(idx)).set_hex_row(i, read_token(is));
    } else {
      throw std::runtime_error("lowmc::load: unknown section '" + kind + "'");
    }
  }
  return inst;
}

const Instance& instance_for_level(int level) {
  static std::map<int, Instance> cache;
  auto it = cache.find(level);
  if (it != cache.end()) return it->second;
  const char* dir = std::getenv("QRE_LOWMC_DIR");
  if (dir) {
    std::string path = std::string(dir) + "/lowmc_l" + std::to_string(level) + ".txt";
    std::ifstream f(path);
    if (f) return cache.emplace(level, load(f)).first->second;
  }
  return cache.emplace(level, generate(params_for_level(level))).first->second;
}

std::vector<uint8_t> encrypt_ref(const Instance& inst,
                                 const std::vector<uint8_t>& key_bits,
                                 const std::vector<uint8_t>& msg_bits) {
  int n = inst.p.block_bits;
  if (static_cast<int>(key_bits.size()) != inst.p.key_bits ||
      static_cast<int>(msg_bits.size()) != n)
    throw std::invalid_argument("encrypt_ref size mismatch");
  std::vector<uint8_t> st = msg_bits;
  auto add = [&](const std::vector<uint8_t>& v) {
    for (int i = 0; i < n; ++i) st[static_cast<size_t>(i)] ^= v[static_cast<size_t>(i)];
  };
  add(inst.km[0].apply(key_bits));
  for (int r = 1; r <= inst.p.rounds; ++r) {
    for (int s = 0; s < kSboxes; ++s) {
      uint8_t v = static_cast<uint8_t>((st[static_cast<size_t>(3 * s + 2)] << 2) |
                                       (st[static_cast<size_t>(3 * s + 1)] << 1) |
                                       st[static_cast<size_t>(3 * s)]);
      uint8_t o = sbox_ref(v);
      st[static_cast<size_t>(3 * s + 2)] = (o >> 2) & 1;
      st[static_cast<size_t>(3 * s + 1)] = (o >> 1) & 1;
      st[static_cast<size_t>(3 * s)] = o & 1;
    }
    st = inst.lin[static_cast<size_t>(r - 1)].apply(st);
    for (int i = 0; i < n; ++i)
      st[static_cast<size_t>(i)] ^= inst.rc[static_cast<size_t>(r - 1)][static_cast<size_t>(i)];
    add(inst.km[static_cast<size_t>(r)].apply(key_bits));
  }
  return st;
}

void sbox_inplace(Circuit& c, int a, int b, int w_c) {
  c.ccnot(b, w_c, a);
  c.ccnot(a, w_c, b);
  c.ccnot(a, b, w_c);
  c.cnot(a, b);
  c.cnot(b, w_c);
}

ShallowOut sbox_shallow(Circuit& c, int a, int b, int w_c) {
  int ca = c.alloc(), cb = c.alloc(), cc = c.alloc();
  c.cnot(a, ca);
  c.cnot(b, cb);
  c.cnot(w_c, cc);
  int oa = c.alloc(), ob = c.alloc(), oc = c.alloc();
  c.ccnot(b, w_c, oa);
  c.ccnot(a, cc, ob);
  c.ccnot(ca, cb, oc);
  // Linear fixups and copy uncompute, interleaved for depth.
  c.cnot(a, oa);
  c.cnot(ca, ob);
  c.cnot(cc, oc);
  c.cnot(b, ob);
  c.cnot(cb, oc);
  c.cnot(a, ca);
  c.cnot(w_c, cc);
  c.cnot(a, oc);
  c.cnot(b, cb);
  c.release(ca);
  c.release(cb);
  c.release(cc);
  return {oa, ob, oc};
}

ForwardResult forward(Circuit& c, const Instance& inst,
                      const std::vector<int>& key, const std::vector<int>& msg,
                      SboxKind sk) {
  int n = inst.p.block_bits;
  if (static_cast<int>(key.size()) != inst.p.key_bits ||
      static_cast<int>(msg.size()) != n)
    throw std::invalid_argument("lowmc::forward wire count mismatch");
  if (inst.p.key_bits != n)
    throw std::invalid_argument("in-place key schedule requires key == block size");

  ForwardResult res;
  res.body_begin = c.size();
  std::vector<int> state = msg;

  // Whitening: key register -> KM_0 * k, then state ^= key register.
  synth_inplace(inst.km[0], c, key);
  for (int i = 0; i < n; ++i) c.cnot(key[static_cast<size_t>(i)], state[static_cast<size_t>(i)]);

  for (int r = 1; r <= inst.p.rounds; ++r) {
    // S-box layer on the 30 low-order bits.
    for (int s = 0; s < kSboxes; ++s) {
      int a = state[static_cast<size_t>(3 * s + 2)];
      int b = state[static_cast<size_t>(3 * s + 1)];
      int cc = state[static_cast<size_t>(3 * s)];
      if (sk == SboxKind::InPlace) {
        sbox_inplace(c, a, b, cc);
      } else {
        ShallowOut o = sbox_shallow(c, a, b, cc);
        state[static_cast<size_t>(3 * s + 2)] = o.a;
        state[static_cast<size_t>(3 * s + 1)] = o.b;
        state[static_cast<size_t>(3 * s)] = o.c;
      }
    }
    // Key update: key register <- KM_r * KM_{r-1}^-1 * (previous contents).
    synth_inplace(inst.km[static_cast<size_t>(r)].mul(
                      inst.km[static_cast<size_t>(r - 1)].inverse()),
                  c, key);
    // Affine layer.
    synth_inplace(inst.lin[static_cast<size_t>(r - 1)], c, state);
    for (int i = 0; i < n; ++i)
      if (inst.rc[static_cast<size_t>(r - 1)][static_cast<size_t>(i)])
        c.x(state[static_cast<size_t>(i)]);
    // Key addition.
    for (int i = 0; i < n; ++i)
      c.cnot(key[static_cast<size_t>(i)], state[static_cast<size_t>(i)]);
  }
  res.state = state;
  return res;
}

FullCircuit full(const Instance& inst, SboxKind sk) {
  FullCircuit fc;
  fc.key = fc.c.allocate(inst.p.key_bits);
  fc.msg = fc.c.allocate(inst.p.block_bits);
  ForwardResult fwd = forward(fc.c, inst, fc.key, fc.msg, sk);
  size_t body_end = fc.c.size();
  fc.out = fc.c.allocate_fresh(inst.p.block_bits);
  for (int i = 0; i < inst.p.block_bits; ++i)
    fc.c.cnot(fwd.state[static_cast<size_t>(i)], fc.out[static_cast<size_t>(i)]);
  fc.c.append_adjoint(fc.c, fwd.body_begin, body_end);
  std::vector<int> ins = fc.key;
  ins.insert(ins.end(), fc.msg.begin(), fc.msg.end());
  fc.c.set_inputs(ins);
  fc.c.set_outputs(fc.out);
  return fc;
}

}  // namespace qre::lowmc
