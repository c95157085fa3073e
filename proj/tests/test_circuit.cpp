#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "circuit.hpp"

using namespace qre;

TEST_CASE("alloc assigns consecutive ids and tracks liveness") {
  Circuit c;
  auto w = c.allocate(3);
  CHECK(w == std::vector<int>{0, 1, 2});
  CHECK(c.live_count() == 3);
  CHECK(c.is_live(1));
  c.release(1);
  CHECK_FALSE(c.is_live(1));
  CHECK(c.live_count() == 2);
  // Released ids are reused.
  CHECK(c.alloc() == 1);
  CHECK(c.peak_live() == 3);
}

TEST_CASE("allocate_fresh never reuses released ids") {
  Circuit c;
  auto w = c.allocate(2);
  c.release(w[0]);
  auto f = c.allocate_fresh(2);
  CHECK(f == std::vector<int>{2, 3});
}

TEST_CASE("gate appends are validated") {
  Circuit c;
  auto w = c.allocate(3);
  CHECK_THROWS_AS(c.cnot(w[0], w[0]), CircuitError);       // repeated operand
  CHECK_THROWS_AS(c.ccnot(w[0], w[1], w[1]), CircuitError);
  CHECK_THROWS_AS(c.x(17), CircuitError);                  // dead wire
  c.release(w[2]);
  CHECK_THROWS_AS(c.cnot(w[0], w[2]), CircuitError);       // released wire
  CHECK_THROWS_AS(c.release(w[2]), CircuitError);          // double release
  c.cnot(w[0], w[1]);
  CHECK(c.count(GateKind::CNOT) == 1);
}

TEST_CASE("append_adjoint reverses and maps gate kinds") {
  Circuit c;
  auto w = c.allocate(2);
  size_t begin = c.size();
  int t = c.alloc();
  c.and_gate(w[0], w[1], t);
  c.cnot(w[0], w[1]);
  size_t end = c.size();
  c.append_adjoint(c, begin, end);
  const auto& ops = c.ops();
  // adjoint: CNOT, AND_ADJ, RELEASE t
  CHECK(ops[end + 0].kind == GateKind::CNOT);
  CHECK(ops[end + 1].kind == GateKind::AND_ADJ);
  CHECK(ops[end + 2].kind == GateKind::RELEASE);
  CHECK(ops[end + 2].a == t);
  CHECK_FALSE(c.is_live(t));
}

TEST_CASE("adjoint of a range containing MEASURE throws") {
  Circuit c;
  auto w = c.allocate(1);
  c.measure(w[0]);
  CHECK_THROWS_AS(c.append_adjoint(c, 0, c.size()), CircuitError);
}

TEST_CASE("whole-circuit adjoint swaps inputs and outputs") {
  Circuit c;
  auto w = c.allocate(2);
  c.cnot(w[0], w[1]);
  c.set_inputs({w[0]});
  c.set_outputs({w[1]});
  Circuit a = c.adjoint();
  CHECK(a.inputs() == std::vector<int>{w[1]});
  CHECK(a.outputs() == std::vector<int>{w[0]});
  // ALLOCs of the original become RELEASEs at the end of the adjoint.
  CHECK(a.ops().back().kind == GateKind::RELEASE);
}

TEST_CASE("dump coalesces ALLOC runs and prints operands") {
  Circuit c;
  auto w = c.allocate(3);
  c.cnot(w[0], w[1]);
  c.rewire(w[1], w[2]);
  c.release(w[2]);
  CHECK(c.dump() == "ALLOC 3\nCNOT 0 1\nREWIRE 1 2\nRELEASE 2\n");
}

TEST_CASE("empty circuit dump is empty") {
  Circuit c;
  CHECK(c.dump().empty());
}
