#include "sim.hpp"

#include <algorithm>
#include <unordered_set>

namespace qre {

SimResult run_lanes(const Circuit& c, const std::vector<uint64_t>& inputs) {
  if (inputs.size() != c.inputs().size())
    throw SimError("input lane count does not match circuit input wires");
  std::vector<uint64_t> st(static_cast<size_t>(c.wire_limit()), 0);
  // Liveness replay, to know which wires exist at the end.
  std::vector<char> live(static_cast<size_t>(c.wire_limit()), 0);

  SimResult res;
  // Inputs are live from the start of the op stream (their ALLOC ops are part
  // of the stream); we stage their values and apply them at ALLOC time.
  std::vector<uint64_t> pending(static_cast<size_t>(c.wire_limit()), 0);
  std::vector<char> is_input(static_cast<size_t>(c.wire_limit()), 0);
  for (size_t i = 0; i < c.inputs().size(); ++i) {
    int w = c.inputs()[i];
    pending[static_cast<size_t>(w)] = inputs[i];
    is_input[static_cast<size_t>(w)] = 1;
  }
  std::vector<char> input_applied(static_cast<size_t>(c.wire_limit()), 0);

  for (const Op& op : c.ops()) {
    switch (op.kind) {
      case GateKind::ALLOC:
        live[op.a] = 1;
        if (is_input[op.a] && !input_applied[op.a]) {
          st[op.a] = pending[op.a];
          input_applied[op.a] = 1;
        } else {
          st[op.a] = 0;
        }
        break;
      case GateKind::RELEASE:
        if (st[op.a] != 0)
          res.violations.push_back(
              {CleanViolation::ReleasedNonZero, op.a, st[op.a]});
        st[op.a] = 0;
        live[op.a] = 0;
        break;
      case GateKind::X:
        st[op.a] = ~st[op.a];
        break;
      case GateKind::CNOT:
        st[op.b] ^= st[op.a];
        break;
      case GateKind::CCNOT:
        st[op.c] ^= st[op.a] & st[op.b];
        break;
      case GateKind::AND:
        if (st[op.c] != 0)
          throw SimError("AND target wire " + std::to_string(op.c) +
                         " is not |0>");
        st[op.c] = st[op.a] & st[op.b];
        break;
      case GateKind::AND_ADJ:
        st[op.c] ^= st[op.a] & st[op.b];
        if (st[op.c] != 0)
          throw SimError("AND_ADJ on wire " + std::to_string(op.c) +
                         " does not return it to |0>");
        break;
      case GateKind::SWAP:
      case GateKind::REWIRE:
        std::swap(st[op.a], st[op.b]);
        break;
      case GateKind::MEASURE:
        break;  // classically a no-op
    }
  }

  res.outputs.reserve(c.outputs().size());
  for (int w : c.outputs()) res.outputs.push_back(st[static_cast<size_t>(w)]);

  std::unordered_set<int> io(c.inputs().begin(), c.inputs().end());
  io.insert(c.outputs().begin(), c.outputs().end());
  for (int w = 0; w < c.wire_limit(); ++w) {
    if (live[w] && st[w] != 0 && !io.count(w))
      res.violations.push_back({CleanViolation::LiveNonZero, w, st[w]});
  }
  return res;
}

std::vector<uint8_t> run(const Circuit& c, const std::vector<uint8_t>& input) {
  std::vector<uint64_t> lanes(input.size());
  for (size_t i = 0; i < input.size(); ++i) lanes[i] = input[i] ? 1u : 0u;
  SimResult r = run_lanes(c, lanes);
  std::vector<uint8_t> out(r.outputs.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<uint8_t>(r.outputs[i] & 1);
  return out;
}

CleanReport check_clean(const Circuit& c,
                        const std::vector<std::vector<uint8_t>>& inputs) {
  CleanReport rep;
  size_t n_in = c.inputs().size();
  for (size_t base = 0; base < inputs.size(); base += 64) {
    size_t batch = std::min<size_t>(64, inputs.size() - base);
    std::vector<uint64_t> lanes(n_in, 0);
    for (size_t l = 0; l < batch; ++l) {
      if (inputs[base + l].size() != n_in)
        throw SimError("check_clean: input vector size mismatch");
      for (size_t i = 0; i < n_in; ++i)
        if (inputs[base + l][i]) lanes[i] |= (uint64_t(1) << l);
    }
    SimResult r = run_lanes(c, lanes);
    uint64_t mask = batch == 64 ? ~uint64_t(0) : ((uint64_t(1) << batch) - 1);
    for (auto v : r.violations) {
      v.lanes &= mask;
      if (v.lanes) rep.violations.push_back(v);
    }
    rep.lanes_checked += batch;
  }
  return rep;
}

}  // namespace qre
