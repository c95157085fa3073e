#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circuit.hpp"
#include "estimate.hpp"

using namespace qre;

TEST_CASE("empty circuit estimates to all zeros") {
  ResourceEstimate e = estimate(Circuit{});
  CHECK(e.cnot == 0);
  CHECK(e.t == 0);
  CHECK(e.full_depth == 0);
  CHECK(e.t_depth == 0);
  CHECK(e.width == 0);
}

TEST_CASE("single AND gadget") {
  Circuit c;
  auto w = c.allocate(3);
  c.and_gate(w[0], w[1], w[2]);
  ResourceEstimate e = estimate(c);
  CHECK(e.t == 4);
  CHECK(e.t_depth == 1);
  CHECK(e.full_depth == 8);
  CHECK(e.width == 4);  // 3 operands + 1 transient
  CHECK(e.cnot == 8);
  CHECK(e.one_qubit == 3);
  CHECK(e.measure == 0);
  // 4 T + 11 Clifford-category gates in total.
  CHECK(e.cnot + e.one_qubit == 11);
}

TEST_CASE("AND_ADJ gadget: measurement plus correction") {
  Circuit c;
  auto w = c.allocate(3);
  c.and_gate(w[0], w[1], w[2]);
  c.and_adj(w[0], w[1], w[2]);
  ResourceEstimate e = estimate(c);
  CHECK(e.t == 4);        // adjoint adds no T
  CHECK(e.measure == 1);  // one per adjoint
}

TEST_CASE("CCNOT gadget has no measurement and T-depth 1") {
  Circuit c;
  auto w = c.allocate(3);
  c.ccnot(w[0], w[1], w[2]);
  ResourceEstimate e = estimate(c);
  CHECK(e.t == 7);
  CHECK(e.measure == 0);
  CHECK(e.t_depth == 1);
  CHECK(e.full_depth == 7);
  CHECK(e.width == 7);  // 3 operands + 4 transients
  CHECK(e.cnot == 16);
  CHECK(e.one_qubit == 2);
}

TEST_CASE("T-count and measure count are structural") {
  std::mt19937_64 rng(1);
  for (int iter = 0; iter < 50; ++iter) {
    Circuit c;
    auto w = c.allocate(8);
    uint64_t n_and = 0, n_ccnot = 0, n_adj = 0;
    std::vector<std::array<int, 3>> live_ands;
    for (int g = 0; g < 40; ++g) {
      int a = static_cast<int>(rng() % 8), b, t;
      do { b = static_cast<int>(rng() % 8); } while (b == a);
      do { t = static_cast<int>(rng() % 8); } while (t == a || t == b);
      switch (rng() % 3) {
        case 0: {
          int fresh = c.alloc();
          c.and_gate(w[a], w[b], fresh);
          live_ands.push_back({w[a], w[b], fresh});
          n_and++;
          break;
        }
        case 1:
          c.ccnot(w[a], w[b], w[t]);
          n_ccnot++;
          break;
        case 2:
          if (!live_ands.empty()) {
            auto x = live_ands.back();
            live_ands.pop_back();
            c.and_adj(x[0], x[1], x[2]);
            c.release(x[2]);
            n_adj++;
          }
          break;
      }
    }
    ResourceEstimate e = estimate(c);
    CHECK(e.t == 4 * n_and + 7 * n_ccnot);
    CHECK(e.measure == n_adj);
  }
}

TEST_CASE("rewires are free") {
  Circuit c;
  auto w = c.allocate(4);
  for (int i = 0; i < 3; ++i) c.rewire(w[i], w[i + 1]);
  ResourceEstimate e = estimate(c);
  CHECK(e.gates() == 0);
  CHECK(e.full_depth == 0);
}

TEST_CASE("serialized dummy S-box repeated 2n times gives T-depth exactly 2n*d") {
  // Dummy S-box of multiplicative depth d: a chain of d ANDs, each consuming
  // the previous target, then full uncomputation. Repeating it serially 2n
  // times on the same operand pair forbids cross-instance parallelism.
  const int d = 4, n = 5;
  Circuit c;
  auto w = c.allocate(2);
  for (int rep = 0; rep < 2 * n; ++rep) {
    std::vector<int> t;
    size_t begin = c.size();
    int prev = w[1];
    for (int i = 0; i < d; ++i) {
      int fresh = c.alloc();
      c.and_gate(w[0], prev, fresh);
      t.push_back(fresh);
      prev = fresh;
    }
    size_t end = c.size();
    // Feed the result back into the operand so the next repetition depends
    // on this one, then uncompute.
    c.cnot(prev, w[0]);
    c.append_adjoint(c, begin, end);
  }
  ResourceEstimate e = estimate(c);
  CHECK(e.t_depth == 2 * n * d);
}

TEST_CASE("depth monotonicity and sequential subadditivity") {
  std::mt19937_64 rng(2);
  Circuit c;
  auto w = c.allocate(6);
  uint64_t prev = 0;
  for (int g = 0; g < 100; ++g) {
    int a = static_cast<int>(rng() % 6), b;
    do { b = static_cast<int>(rng() % 6); } while (b == a);
    if (rng() & 1) c.cnot(w[a], w[b]);
    else c.x(w[a]);
    uint64_t cur = estimate(c).full_depth;
    CHECK(cur >= prev);
    prev = cur;
  }
  // Subadditivity: depth(C1 ∘ C2) <= depth(C1) + depth(C2).
  Circuit c1, c2;
  auto v1 = c1.allocate(4);
  auto v2 = c2.allocate(4);
  for (int g = 0; g < 30; ++g) {
    c1.cnot(v1[g % 4], v1[(g + 1) % 4]);
    c2.cnot(v2[(g + 2) % 4], v2[g % 4]);
  }
  Circuit both;
  auto vb = both.allocate(4);
  for (size_t i = 4; i < c1.ops().size(); ++i) both.append(c1.ops()[i]);
  for (size_t i = 4; i < c2.ops().size(); ++i) both.append(c2.ops()[i]);
  CHECK(estimate(both).full_depth <=
        estimate(c1).full_depth + estimate(c2).full_depth);
}

TEST_CASE("width reuses transient slots across parallel gadgets") {
  Circuit c;
  auto w = c.allocate(6);
  // Two ANDs on disjoint operands: width = 6 wires + transients.
  int t1 = c.alloc(), t2 = c.alloc();
  c.and_gate(w[0], w[1], t1);
  c.and_gate(w[2], w[3], t2);
  ResourceEstimate e = estimate(c);
  CHECK(e.width >= 8);
  CHECK(e.width <= 10);
  CHECK(e.t_depth == 1);  // the two gadgets run in parallel
}

TEST_CASE("tabulate formats") {
  std::vector<EstimateRow> rows;
  CHECK(tabulate(rows, TableFormat::Csv) ==
        "name,#CNOT,#1qCliff,#T,#M,T-depth,full depth,width\n");
  rows.push_back({"a", {1, 2, 3, 4, 1, 5, 6}});
  rows.push_back({"b", {0, 0, 0, 0, 0, 0, 0}});
  rows.push_back({"c", {9, 9, 9, 9, 9, 9, 9}});
  std::string text = tabulate(rows, TableFormat::Text);
  CHECK(text.find("#CNOT") != std::string::npos);
  CHECK(text.find("T-depth") != std::string::npos);
  std::string json = tabulate(rows, TableFormat::Json);
  size_t count = 0, pos = 0;
  while ((pos = json.find("\"name\"", pos)) != std::string::npos) {
    ++count;
    pos += 6;
  }
  CHECK(count == 3);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
  CHECK(parse_format("json") == TableFormat::Json);
}
