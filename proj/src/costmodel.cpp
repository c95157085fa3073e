#include "costmodel.hpp"

#include <quadmath.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qre::cost {
namespace {

const f128 kPi = M_PIq;

f128 c_p(f128 p) { return asinq(sqrtq(p)); }  // arcsin(sqrt(p))

}  // namespace

f128 exp2i(int e) { return scalbnq(1, e); }

BigCost BigCost::from_value(f128 v) {
  if (v <= 0) throw std::domain_error("BigCost requires a positive value");
  return {log2q(v)};
}

f128 BigCost::value() const { return exp2q(log2v); }

std::string BigCost::render() const {
  f128 e = floorq(log2v);
  double m = static_cast<double>(exp2q(log2v - e));
  double mr = std::round(m * 100.0) / 100.0;
  long long ei = static_cast<long long>(e);
  if (mr >= 2.0) {
    mr = 1.0;
    ei += 1;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f*2^%lld", mr, ei);
  return buf;
}

BigCost BigCost::parse(const std::string& s) {
  double m = 1.0;
  long long e = 0;
  size_t caret = s.find("2^");
  if (caret != std::string::npos) {
    size_t star = s.find('*');
    if (star != std::string::npos && star < caret) {
      size_t pos = 0;
      m = std::stod(s.substr(0, star), &pos);
      if (pos != star) throw std::invalid_argument("BigCost::parse: " + s);
    } else if (caret != 0) {
      throw std::invalid_argument("BigCost::parse: " + s);
    }
    size_t pos = 0;
    e = std::stoll(s.substr(caret + 2), &pos);
    if (caret + 2 + pos != s.size())
      throw std::invalid_argument("BigCost::parse: " + s);
  } else {
    size_t pos = 0;
    m = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("BigCost::parse: " + s);
  }
  if (m <= 0) throw std::invalid_argument("BigCost::parse: " + s);
  return from_log2(log2q(static_cast<f128>(m)) + static_cast<f128>(e));
}

std::string render_log2(f128 log2v, bool neg_inf) {
  if (neg_inf) return "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", static_cast<double>(log2v));
  return buf;
}

f128 grover_success(f128 j, f128 n) {
  f128 theta = asinq(sqrtq(1 / n));
  f128 s = sinq((2 * j + 1) * theta);
  return s * s;
}

f128 grover_iterations(f128 p, f128 n, f128 s) {
  f128 theta = asinq(sqrtq(s / n));
  return ceilq((c_p(p) / theta - 1) / 2);
}

f128 spurious_dist(int k, int n, int r, int t) {
  f128 lambda = exp2i(k - r * n);
  f128 v = expq(-lambda);
  for (int i = 1; i <= t; ++i) v *= lambda / i;
  return v;
}

Skp skp(int k, int n, int r, f128 log2_s) {
  Skp res{};
  res.neg_inf = (static_cast<long long>(r) * n > k);
  // x = 2^(k - r*n) / S; SKP = 1 - e^-x = -expm1(-x)
  f128 log2_x = static_cast<f128>(k - static_cast<long long>(r) * n) - log2_s;
  if (log2_x < -90) {
    // 1 - e^-x == x to full precision here
    res.log2v = log2_x;
  } else {
    res.log2v = log2q(-expm1q(-exp2q(log2_x)));
  }
  return res;
}

AttackPlan plan_attack(const OracleCost& oc, int k, f128 maxdepth_log2,
                       DepthMetric metric, f128 p) {
  AttackPlan plan;
  f128 gd = oc.depth(metric), gg = oc.gates(), gw = oc.width;
  f128 n = exp2i(k);
  f128 jmax = floorq(exp2q(maxdepth_log2) / gd);
  if (jmax < 1) {
    plan.feasible = false;
    return plan;
  }
  f128 cp = c_p(p);
  f128 s_exact = n * cp * cp / ((2 * jmax + 1) * (2 * jmax + 1));
  f128 s;
  if (s_exact <= 1)
    s = 1;
  else if (s_exact < exp2i(112))
    s = ceilq(s_exact);  // beyond 2^112 the integer grid is below the ulp
  else
    s = s_exact;
  f128 j = grover_iterations(p, n, s);
  plan.s = BigCost::from_value(s);
  plan.j = BigCost::from_value(j);
  plan.d = BigCost::from_value(j * gd);
  plan.w = BigCost::from_value(s * gw);
  plan.g = BigCost::from_value(s * j * gg);
  plan.dw = BigCost::from_log2(plan.d.log2v + plan.w.log2v);
  return plan;
}

AttackPlan plan_grover(const OracleCost& oc, int k, f128 p) {
  AttackPlan plan;
  f128 n = exp2i(k);
  f128 j = floorq(c_p(p) / 2 * sqrtq(n));
  plan.s = BigCost::from_value(1);
  plan.j = BigCost::from_value(j);
  plan.d = BigCost::from_value(j * oc.depth(DepthMetric::Full));
  plan.w = BigCost::from_value(oc.width);
  plan.g = BigCost::from_value(j * oc.gates());
  plan.dw = BigCost::from_log2(plan.d.log2v + plan.w.log2v);
  return plan;
}

Attack attack(const std::function<OracleCost(int)>& oracle_for_r, int k, int n,
              f128 maxdepth_log2, DepthMetric metric, f128 p,
              f128 skp_bound_log2) {
  for (int r = 1;; ++r) {
    OracleCost oc = oracle_for_r(r);
    AttackPlan plan = plan_attack(oc, k, maxdepth_log2, metric, p);
    if (!plan.feasible) return {r, plan};
    plan.skp_value = skp(k, n, r, plan.s.log2v);
    if (plan.skp_value.log2v < skp_bound_log2) return {r, plan};
    if (r > 64) throw std::runtime_error("attack: r selection failed to converge");
  }
}

f128 outer_parallel_success(f128 s) {
  const f128 n = exp2i(64);  // canonically large search space
  f128 theta = asinq(sqrtq(1 / n));
  f128 theta_s = asinq(sqrtq(s / n));
  f128 j = floorq(kPi / (4 * theta_s));
  f128 sp = sinq((2 * j + 1) * theta);
  f128 p1 = sp * sp;
  return -expm1q(s * log1pq(-p1));
}

RepeatVsContinue repeat_vs_continue(f128 j, int m, f128 n) {
  f128 p1 = grover_success(j, n);
  RepeatVsContinue rc;
  rc.p_repeat = -expm1q(m * log1pq(-p1));
  rc.p_continue = grover_success(static_cast<f128>(m) * j, n);
  return rc;
}

BigCost classical_crossover(f128 c_classical, const OracleCost& oc, int k,
                            f128 p) {
  f128 ratio = p * c_classical / ((c_p(p) / 2) * oc.gates());
  return BigCost::from_log2(2 * log2q(ratio) + k);
}

BigCost min_comm_depth(int k, const OracleCost& oc, DepthMetric metric,
                       f128 c_s, f128 p) {
  f128 term = (c_p(p) / 2) * c_s * oc.depth(metric) * sqrtq(oc.width);
  return BigCost::from_log2(static_cast<f128>(k) / 4 + log2q(term) / 2);
}

}  // namespace qre::cost
