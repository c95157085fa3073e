#pragma once
// Reversible circuit intermediate representation.
//
// A Circuit is a flat stream of operations over integer wire ids. Wires are
// created with allocate() (emits ALLOC) and destroyed with release() (emits
// RELEASE); ids become reusable after release. Gates are validated on append
// (arity, operand distinctness, liveness). The circuit carries input/output
// wire lists as metadata for simulation and composition.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace qre {

enum class GateKind : uint8_t {
  X,        // a
  CNOT,     // a -> b
  CCNOT,    // a, b -> c
  AND,      // a, b -> c (c must be |0>)
  AND_ADJ,  // uncompute of AND
  SWAP,     // a <-> b
  MEASURE,  // a
  ALLOC,    // a (wire id comes into existence, value 0)
  RELEASE,  // a (wire id ceases to exist; must hold 0)
  REWIRE,   // a <-> b relabeling (free)
};

const char* gate_name(GateKind k);
int gate_arity(GateKind k);

struct Op {
  GateKind kind;
  int32_t a = -1;
  int32_t b = -1;
  int32_t c = -1;
};

class CircuitError : public std::runtime_error {
 public:
  explicit CircuitError(const std::string& what) : std::runtime_error(what) {}
};

class Circuit {
 public:
  // -- construction ---------------------------------------------------------
  int alloc();
  std::vector<int> allocate(int n);
  // Like allocate(), but never reuses released ids. Needed when a later
  // adjoint pass will resurrect released ids by number.
  std::vector<int> allocate_fresh(int n);
  void release(int w);
  void release(const std::vector<int>& ws);

  void x(int a) { append({GateKind::X, a}); }
  void cnot(int c, int t) { append({GateKind::CNOT, c, t}); }
  void ccnot(int c1, int c2, int t) { append({GateKind::CCNOT, c1, c2, t}); }
  void and_gate(int a, int b, int t) { append({GateKind::AND, a, b, t}); }
  void and_adj(int a, int b, int t) { append({GateKind::AND_ADJ, a, b, t}); }
  void swap_gate(int a, int b) { append({GateKind::SWAP, a, b}); }
  void measure(int a) { append({GateKind::MEASURE, a}); }
  void rewire(int a, int b) { append({GateKind::REWIRE, a, b}); }

  // Checked generic append (also used internally by the helpers above).
  void append(Op op);

  // Appends the adjoint of ops [begin, end) of `other` (which may be *this).
  // AND <-> AND_ADJ, ALLOC <-> RELEASE, self-inverse gates unchanged.
  // Throws CircuitError if the range contains a bare MEASURE.
  void append_adjoint(const Circuit& other, size_t begin, size_t end);

  // Whole-circuit adjoint: a new circuit whose live-wire state matches this
  // circuit's final state and whose ops undo this circuit.
  Circuit adjoint() const;

  // -- metadata --------------------------------------------------------------
  void set_inputs(std::vector<int> ws) { inputs_ = std::move(ws); }
  void set_outputs(std::vector<int> ws) { outputs_ = std::move(ws); }
  void add_inputs(const std::vector<int>& ws) {
    inputs_.insert(inputs_.end(), ws.begin(), ws.end());
  }
  const std::vector<int>& inputs() const { return inputs_; }
  const std::vector<int>& outputs() const { return outputs_; }

  // -- introspection ----------------------------------------------------------
  const std::vector<Op>& ops() const { return ops_; }
  size_t size() const { return ops_.size(); }
  int wire_limit() const { return next_id_; }  // all ids are < wire_limit()
  bool is_live(int w) const { return w >= 0 && w < next_id_ && live_[w]; }
  int live_count() const { return live_count_; }
  // Peak simultaneously-live IR wires, in program order.
  int peak_live() const { return peak_live_; }
  size_t count(GateKind k) const { return counts_[static_cast<size_t>(k)]; }

  void dump(std::ostream& os) const;
  std::string dump() const;

 private:
  void check_live(int w, const char* role) const;

  std::vector<Op> ops_;
  std::vector<char> live_;
  std::vector<int> free_ids_;
  int next_id_ = 0;
  int live_count_ = 0;
  int peak_live_ = 0;
  size_t counts_[10] = {};
  std::vector<int> inputs_, outputs_;
};

}  // namespace qre
