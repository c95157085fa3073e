#pragma once
// Grover key-search cost model under a depth limit (MAXDEPTH), evaluated in
// binary128 so that quantities up to ~2^260 keep full precision.

#include <functional>
#include <string>

namespace qre::cost {

using f128 = __float128;

f128 exp2i(int e);  // 2^e exactly

// A nonnegative cost stored as log2(value).
struct BigCost {
  f128 log2v = 0;

  static BigCost from_value(f128 v);
  static BigCost from_log2(f128 l) { return {l}; }
  f128 value() const;
  double log2() const { return static_cast<double>(log2v); }
  // "m*2^e" with m in [1.00, 2.00) rounded to two decimals (rounding to 2.00
  // normalizes to 1.00*2^(e+1)).
  std::string render() const;
  // Inverse of render(); also accepts plain decimal numbers ("42") and bare
  // powers of two ("2^40"). Throws std::invalid_argument on malformed input.
  static BigCost parse(const std::string& s);
};

enum class DepthMetric { Full, TDepth };

struct OracleCost {
  f128 cnot = 0, one_qubit = 0, t = 0, m = 0;
  f128 t_depth = 0, full_depth = 0, width = 0;

  f128 gates() const { return cnot + one_qubit + t + m; }
  f128 depth(DepthMetric dm) const {
    return dm == DepthMetric::Full ? full_depth : t_depth;
  }
};

// Probability that a Grover search over N elements with a single target
// succeeds after j iterations: sin^2((2j+1) asin(1/sqrt(N))).
f128 grover_success(f128 j, f128 n);

// Iterations needed for success probability p with S-fold inner parallelism:
// ceil((asin(sqrt(p))/asin(sqrt(S/N)) - 1)/2).
f128 grover_iterations(f128 p, f128 n, f128 s);

// Poisson model for the number of spurious keys: with lambda = 2^(k - r*n),
// P(#spurious == t) = e^-lambda * lambda^t / t!.
f128 spurious_dist(int k, int n, int r, int t);

struct Skp {
  f128 log2v;       // log2 of the spurious-key probability
  bool neg_inf;     // true iff r*n > k (rendered as -inf)
};

// SKP = 1 - exp(-2^(k - r*n) / S), evaluated stably. log2_s = log2(S).
Skp skp(int k, int n, int r, f128 log2_s);

struct AttackPlan {
  bool feasible = true;
  BigCost s;   // number of parallel machines
  BigCost j;   // Grover iterations per machine
  BigCost d;   // total depth
  BigCost w;   // total width
  BigCost g;   // total gate count
  BigCost dw;  // depth-times-width
  Skp skp_value{};  // filled by attack(); plan_attack leaves it zeroed
};

// Cost of a depth-limited attack on a k-bit key with the given oracle,
// following the inner-parallelization strategy: S machines chosen so each
// finishes within MAXDEPTH. maxdepth_log2 = log2(MAXDEPTH); p = target
// success probability (1 by default).
AttackPlan plan_attack(const OracleCost& oc, int k, f128 maxdepth_log2,
                       DepthMetric metric, f128 p = 1);

// Depth-unlimited Grover: j = floor(asin(sqrt(p))/2 * sqrt(N)) iterations,
// one machine.
AttackPlan plan_grover(const OracleCost& oc, int k, f128 p = 1);

struct Attack {
  int r;  // known-plaintext pairs used
  AttackPlan plan;
};

// Chooses the smallest r >= 1 whose SKP (with that r's oracle) is below
// 2^skp_bound_log2, then returns the plan for it. `oracle_for_r` must accept
// any r >= 1. n = cipher block bits.
Attack attack(const std::function<OracleCost(int)>& oracle_for_r, int k, int n,
              f128 maxdepth_log2, DepthMetric metric, f128 p = 1,
              f128 skp_bound_log2 = -20);

// Success probability of S outer-parallel machines, each running
// floor(pi / (4 asin(sqrt(S/N)))) iterations, over a canonically large search
// space (N = 2^64): 1 - (1 - sin^2((2j+1) asin(1/sqrt(N))))^S.
f128 outer_parallel_success(f128 s);

// Expected-iteration comparison for a single machine: probability after m
// restarts of j iterations each vs. running m*j iterations straight.
struct RepeatVsContinue {
  f128 p_repeat;
  f128 p_continue;
};
RepeatVsContinue repeat_vs_continue(f128 j, int m, f128 n);

// Number of classical machines of speed C (gates/unit-depth equivalents)
// needed to match the quantum attack: (p * C / (c_p * G_G))^2 * 2^k.
BigCost classical_crossover(f128 c_classical, const OracleCost& oc, int k,
                            f128 p = 1);

// Minimum depth beyond which communication costs dominate:
// 2^(k/4) * sqrt(c_p * c_s * G_D * sqrt(G_W)).
BigCost min_comm_depth(int k, const OracleCost& oc, DepthMetric metric,
                       f128 c_s = 1, f128 p = 1);

std::string render_log2(f128 log2v, bool neg_inf = false);  // e.g. "-69.36"

}  // namespace qre::cost
