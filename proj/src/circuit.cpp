#include "circuit.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qre {

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "X";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CCNOT: return "CCNOT";
    case GateKind::AND: return "AND";
    case GateKind::AND_ADJ: return "AND_ADJ";
    case GateKind::SWAP: return "SWAP";
    case GateKind::MEASURE: return "MEASURE";
    case GateKind::ALLOC: return "ALLOC";
    case GateKind::RELEASE: return "RELEASE";
    case GateKind::REWIRE: return "REWIRE";
  }
  return "?";
}

int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::X:
    case GateKind::MEASURE:
    case GateKind::ALLOC:
    case GateKind::RELEASE:
      return 1;
    case GateKind::CNOT:
    case GateKind::SWAP:
    case GateKind::REWIRE:
      return 2;
    case GateKind::CCNOT:
    case GateKind::AND:
    case GateKind::AND_ADJ:
      return 3;
  }
  return 0;
}

void Circuit::check_live(int w, const char* role) const {
  if (!is_live(w))
    throw CircuitError(std::string("operand '") + role + "' references wire " +
                       std::to_string(w) + " which is not live");
}

int Circuit::alloc() {
  int id;
  // Free list may contain ids resurrected by an explicit ALLOC append; skip.
  while (!free_ids_.empty() && live_[free_ids_.back()]) free_ids_.pop_back();
  if (!free_ids_.empty()) {
    id = free_ids_.back();
    free_ids_.pop_back();
  } else {
    id = next_id_++;
    live_.push_back(0);
  }
  live_[id] = 1;
  live_count_++;
  peak_live_ = std::max(peak_live_, live_count_);
  counts_[static_cast<size_t>(GateKind::ALLOC)]++;
  ops_.push_back({GateKind::ALLOC, id});
  return id;
}

std::vector<int> Circuit::allocate(int n) {
  std::vector<int> ws(static_cast<size_t>(n));
  for (auto& w : ws) w = alloc();
  return ws;
}

std::vector<int> Circuit::allocate_fresh(int n) {
  std::vector<int> ws(static_cast<size_t>(n));
  for (auto& w : ws) {
    w = next_id_;
    append({GateKind::ALLOC, w});
  }
  return ws;
}

void Circuit::release(int w) {
  check_live(w, "release");
  live_[w] = 0;
  live_count_--;
  free_ids_.push_back(w);
  counts_[static_cast<size_t>(GateKind::RELEASE)]++;
  ops_.push_back({GateKind::RELEASE, w});
}

void Circuit::release(const std::vector<int>& ws) {
  for (int w : ws) release(w);
}

void Circuit::append(Op op) {
  switch (op.kind) {
    case GateKind::ALLOC: {
      // Resurrect a specific id (used by adjoints). The id must not be live.
      int w = op.a;
      if (w < 0) throw CircuitError("ALLOC with negative wire id");
      if (w >= next_id_) {
        live_.resize(static_cast<size_t>(w) + 1, 0);
        next_id_ = w + 1;
      }
      if (live_[w])
        throw CircuitError("ALLOC of already-live wire " + std::to_string(w));
      live_[w] = 1;
      live_count_++;
      peak_live_ = std::max(peak_live_, live_count_);
      counts_[static_cast<size_t>(GateKind::ALLOC)]++;
      ops_.push_back(op);
      return;
    }
    case GateKind::RELEASE:
      release(op.a);
      return;
    default:
      break;
  }
  int arity = gate_arity(op.kind);
  check_live(op.a, "a");
  if (arity >= 2) check_live(op.b, "b");
  if (arity >= 3) check_live(op.c, "c");
  if (arity >= 2 && op.a == op.b)
    throw CircuitError(std::string(gate_name(op.kind)) + " with repeated operand " +
                       std::to_string(op.a));
  if (arity >= 3 && (op.a == op.c || op.b == op.c))
    throw CircuitError(std::string(gate_name(op.kind)) + " with repeated operand " +
                       std::to_string(op.c));
  counts_[static_cast<size_t>(op.kind)]++;
  ops_.push_back(op);
}

void Circuit::append_adjoint(const Circuit& other, size_t begin, size_t end) {
  if (begin > end || end > other.ops_.size())
    throw CircuitError("append_adjoint: bad op range");
  // Copy the range up front: `other` may alias *this.
  std::vector<Op> range(other.ops_.begin() + static_cast<long>(begin),
                        other.ops_.begin() + static_cast<long>(end));
  for (auto it = range.rbegin(); it != range.rend(); ++it) {
    Op op = *it;
    switch (op.kind) {
      case GateKind::MEASURE:
        throw CircuitError("cannot take adjoint of a range containing MEASURE");
      case GateKind::ALLOC:
        op.kind = GateKind::RELEASE;
        break;
      case GateKind::RELEASE:
        op.kind = GateKind::ALLOC;
        break;
      case GateKind::AND:
        op.kind = GateKind::AND_ADJ;
        break;
      case GateKind::AND_ADJ:
        op.kind = GateKind::AND;
        break;
      default:
        break;  // X, CNOT, CCNOT, SWAP, REWIRE are self-inverse
    }
    append(op);
  }
}

Circuit Circuit::adjoint() const {
  Circuit r;
  // Start from this circuit's final live set.
  r.next_id_ = next_id_;
  r.live_ = live_;
  r.live_count_ = live_count_;
  r.peak_live_ = live_count_;
  r.append_adjoint(*this, 0, ops_.size());
  r.inputs_ = outputs_;
  r.outputs_ = inputs_;
  return r;
}

void Circuit::dump(std::ostream& os) const {
  size_t i = 0;
  while (i < ops_.size()) {
    const Op& op = ops_[i];
    if (op.kind == GateKind::ALLOC) {
      size_t run = 0;
      while (i + run < ops_.size() && ops_[i + run].kind == GateKind::ALLOC) run++;
      os << "ALLOC " << run << "\n";
      i += run;
      continue;
    }
    os << gate_name(op.kind) << ' ' << op.a;
    if (gate_arity(op.kind) >= 2) os << ' ' << op.b;
    if (gate_arity(op.kind) >= 3) os << ' ' << op.c;
    os << "\n";
    ++i;
  }
}

std::string Circuit::dump() const {
  std::ostringstream ss;
  dump(ss);
  return ss.str();
}

}  // namespace qre
