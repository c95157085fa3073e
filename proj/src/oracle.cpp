#include "oracle.hpp"

#include <stdexcept>

#include "aes_ref.hpp"

namespace qre::oracle {
namespace {

// Deterministic per-instance plaintext bytes (arbitrary but fixed).
uint8_t pt_byte(int instance, int byte) {
  uint32_t v = static_cast<uint32_t>(instance * 0x9e37 + byte * 0x85eb + 0x1d);
  v ^= v >> 7;
  return static_cast<uint8_t>(v * 0x2545u >> 3);
}

std::vector<uint8_t> bytes_to_bits(const std::vector<uint8_t>& bytes) {
  std::vector<uint8_t> bits;
  bits.reserve(bytes.size() * 8);
  for (uint8_t b : bytes)
    for (int j = 0; j < 8; ++j) bits.push_back((b >> (7 - j)) & 1);
  return bits;
}

}  // namespace

void comparator(Circuit& c, const std::vector<int>& data,
                const std::vector<uint8_t>& constant, int target) {
  if (data.size() != constant.size())
    throw std::invalid_argument("comparator: data/constant size mismatch");
  if (data.empty()) throw std::invalid_argument("comparator: empty data");
  size_t begin = c.size();
  for (size_t i = 0; i < data.size(); ++i)
    if (!constant[i]) c.x(data[i]);
  std::vector<int> layer = data;
  while (layer.size() > 1) {
    std::vector<int> next;
    size_t i = 0;
    for (; i + 1 < layer.size(); i += 2) {
      int t = c.alloc();
      c.and_gate(layer[i], layer[i + 1], t);
      next.push_back(t);
    }
    if (i < layer.size()) next.push_back(layer[i]);  // odd leftover
    layer = next;
  }
  size_t end = c.size();
  c.cnot(layer[0], target);
  c.append_adjoint(c, begin, end);
}

OracleCircuit build(int key_bits, int block_bits,
                    const std::vector<KnownPlaintext>& pairs,
                    const ForwardBuilder& build_forward) {
  if (pairs.empty()) throw std::invalid_argument("oracle: need at least one pair");
  OracleCircuit oc;
  Circuit& c = oc.c;
  oc.key = c.allocate(key_bits);
  oc.target = c.alloc();

  size_t body_begin = c.size();
  // Key copies for instances 2..r must be taken before instance 1 runs: the
  // forward ciphers expand the key register in place.
  std::vector<std::vector<int>> keys(pairs.size(), oc.key);
  for (size_t i = 1; i < pairs.size(); ++i) {
    keys[i] = c.allocate(key_bits);
    for (int j = 0; j < key_bits; ++j)
      c.cnot(oc.key[static_cast<size_t>(j)], keys[i][static_cast<size_t>(j)]);
  }
  std::vector<int> data;
  std::vector<uint8_t> constant;
  for (size_t i = 0; i < pairs.size(); ++i) {
    const std::vector<int>& kw = keys[i];
    std::vector<int> msg = c.allocate(block_bits);
    if (static_cast<int>(pairs[i].msg_bits.size()) != block_bits ||
        static_cast<int>(pairs[i].cipher_bits.size()) != block_bits)
      throw std::invalid_argument("oracle: pair bit width mismatch");
    for (int j = 0; j < block_bits; ++j)
      if (pairs[i].msg_bits[static_cast<size_t>(j)]) c.x(msg[static_cast<size_t>(j)]);
    std::vector<int> ct = build_forward(c, kw, msg);
    data.insert(data.end(), ct.begin(), ct.end());
    constant.insert(constant.end(), pairs[i].cipher_bits.begin(),
                    pairs[i].cipher_bits.end());
  }
  size_t cmp_begin = c.size();
  comparator(c, data, constant, oc.target);
  c.append_adjoint(c, body_begin, cmp_begin);

  std::vector<int> ins = oc.key;
  ins.push_back(oc.target);
  c.set_inputs(ins);
  c.set_outputs({oc.target});
  return oc;
}

OracleCircuit build_aes(const aes::Options& opt, int r,
                        const std::vector<uint8_t>& hidden_key_bytes) {
  if (static_cast<int>(hidden_key_bytes.size()) * 8 != opt.key_bits)
    throw std::invalid_argument("build_aes: hidden key size mismatch");
  std::vector<KnownPlaintext> pairs;
  for (int i = 0; i < r; ++i) {
    std::array<uint8_t, 16> pt;
    for (int b = 0; b < 16; ++b) pt[static_cast<size_t>(b)] = pt_byte(i, b);
    auto ct = aes_ref::encrypt(hidden_key_bytes, pt);
    pairs.push_back({bytes_to_bits({pt.begin(), pt.end()}),
                     bytes_to_bits({ct.begin(), ct.end()})});
  }
  return build(opt.key_bits, 128, pairs,
               [&opt](Circuit& c, const std::vector<int>& key,
                      const std::vector<int>& msg) {
                 return aes::forward(c, key, msg, opt).state;
               });
}

OracleCircuit build_lowmc(int level, lowmc::SboxKind sk, int r,
                          const std::vector<uint8_t>& hidden_key_bits) {
  const lowmc::Instance& inst = lowmc::instance_for_level(level);
  int n = inst.p.block_bits;
  if (static_cast<int>(hidden_key_bits.size()) != inst.p.key_bits)
    throw std::invalid_argument("build_lowmc: hidden key size mismatch");
  std::vector<KnownPlaintext> pairs;
  for (int i = 0; i < r; ++i) {
    std::vector<uint8_t> pt(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
      pt[static_cast<size_t>(j)] = (pt_byte(i, j / 8) >> (7 - j % 8)) & 1;
    pairs.push_back({pt, lowmc::encrypt_ref(inst, hidden_key_bits, pt)});
  }
  return build(inst.p.key_bits, n, pairs,
               [&inst, sk](Circuit& c, const std::vector<int>& key,
                           const std::vector<int>& msg) {
                 return lowmc::forward(c, inst, key, msg, sk).state;
               });
}

}  // namespace qre::oracle
