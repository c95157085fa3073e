#include "estimate.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace qre {
namespace {

struct Sched {
  int64_t l = 0;   // ASAP layer of the last gate touching this wire
  int64_t tl = 0;  // longest T-chain ending on this wire
};

struct Accum {
  ResourceEstimate est;
  int64_t max_l = 0;
  int64_t max_tl = 0;

  void touch(const Sched& s) {
    max_l = std::max(max_l, s.l);
    max_tl = std::max(max_tl, s.tl);
  }
  void cnot(Sched& a, Sched& b) {
    int64_t l = std::max(a.l, b.l) + 1;
    int64_t tl = std::max(a.tl, b.tl);
    a.l = b.l = l;
    a.tl = b.tl = tl;
    est.cnot++;
    max_l = std::max(max_l, l);
  }
  void oneq(Sched& a) {
    a.l += 1;
    est.one_qubit++;
    max_l = std::max(max_l, a.l);
  }
  void tgate(Sched& a) {
    a.l += 1;
    a.tl += 1;
    est.t++;
    max_l = std::max(max_l, a.l);
    max_tl = std::max(max_tl, a.tl);
  }
  void meas(Sched& a) {
    a.l += 1;
    est.measure++;
    max_l = std::max(max_l, a.l);
  }
};

// AND(a, b -> t): 8 CNOT, 3 one-qubit Cliffords, 4 T, T-depth 1, depth 8,
// one transient ancilla g.
void emit_and(Accum& acc, Sched& a, Sched& b, Sched& t) {
  Sched g;
  acc.oneq(t);        // H
  acc.cnot(a, g);
  acc.cnot(b, g);
  acc.cnot(t, a);
  acc.cnot(g, t);
  acc.cnot(a, b);
  acc.tgate(a);
  acc.tgate(b);
  acc.tgate(t);
  acc.tgate(g);
  acc.cnot(g, t);
  acc.cnot(a, b);
  acc.cnot(t, a);
  acc.oneq(t);        // S
  acc.oneq(t);        // H
}

// AND_ADJ(a, b -> t): measurement-based uncompute. H + measure on t, then a
// classically-controlled CZ correction on (a, b) counted in the CNOT category.
void emit_and_adj(Accum& acc, Sched& a, Sched& b, Sched& t) {
  acc.oneq(t);   // H
  acc.meas(t);
  acc.cnot(a, b);  // CZ correction
  t.l = 0;       // wire is reset; a reuse starts fresh
}

// CCNOT(a, b -> t): 16 CNOT, 2 H, 7 T, T-depth 1, depth 7, four transient
// ancillas.
void emit_ccnot(Accum& acc, Sched& a, Sched& b, Sched& t) {
  Sched g1, g2, g3, g4;
  acc.oneq(t);  // H
  acc.cnot(a, g1);
  acc.cnot(b, g2);
  acc.cnot(t, g3);
  acc.cnot(g1, g4);
  acc.cnot(b, a);
  acc.cnot(g2, g4);
  acc.cnot(a, g3);
  acc.cnot(t, g1);
  acc.tgate(a);
  acc.tgate(b);
  acc.tgate(t);
  acc.tgate(g1);
  acc.tgate(g2);
  acc.tgate(g3);
  acc.tgate(g4);
  acc.cnot(t, g1);
  acc.cnot(a, g3);
  acc.cnot(g2, g4);
  acc.cnot(b, a);
  acc.cnot(g1, g4);
  acc.cnot(t, g3);
  acc.oneq(t);  // H
  acc.cnot(a, g1);
  acc.cnot(b, g2);
}

}  // namespace

ResourceEstimate estimate(const Circuit& c) {
  Accum acc;
  std::vector<Sched> w(static_cast<size_t>(c.wire_limit()));
  int64_t live = 0, peak = 0;

  auto peak_with = [&](int64_t transients) {
    peak = std::max(peak, live + transients);
  };

  for (const Op& op : c.ops()) {
    switch (op.kind) {
      case GateKind::ALLOC:
        live++;
        peak = std::max(peak, live);
        w[op.a] = Sched{};
        break;
      case GateKind::RELEASE:
        live--;
        break;
      case GateKind::X:
        acc.oneq(w[op.a]);
        break;
      case GateKind::CNOT:
        acc.cnot(w[op.a], w[op.b]);
        break;
      case GateKind::CCNOT:
        peak_with(4);
        emit_ccnot(acc, w[op.a], w[op.b], w[op.c]);
        break;
      case GateKind::AND:
        peak_with(1);
        emit_and(acc, w[op.a], w[op.b], w[op.c]);
        break;
      case GateKind::AND_ADJ:
        emit_and_adj(acc, w[op.a], w[op.b], w[op.c]);
        break;
      case GateKind::SWAP: {
        // Costed as 3 CNOTs.
        acc.cnot(w[op.a], w[op.b]);
        acc.cnot(w[op.b], w[op.a]);
        acc.cnot(w[op.a], w[op.b]);
        break;
      }
      case GateKind::MEASURE:
        acc.meas(w[op.a]);
        break;
      case GateKind::REWIRE:
        std::swap(w[op.a], w[op.b]);
        break;
    }
  }

  acc.est.full_depth = static_cast<uint64_t>(acc.max_l);
  acc.est.t_depth = static_cast<uint64_t>(acc.max_tl);
  acc.est.width = static_cast<uint64_t>(peak);
  return acc.est;
}

TableFormat parse_format(const std::string& s) {
  if (s == "text") return TableFormat::Text;
  if (s == "csv") return TableFormat::Csv;
  if (s == "json") return TableFormat::Json;
  throw std::invalid_argument("unknown format: " + s);
}

std::string tabulate(const std::vector<EstimateRow>& rows, TableFormat fmt) {
  static const char* kCols[] = {"#CNOT", "#1qCliff", "#T", "#M",
                                "T-depth", "full depth", "width"};
  std::ostringstream ss;
  switch (fmt) {
    case TableFormat::Csv: {
      ss << "name";
      for (auto* col : kCols) ss << ',' << col;
      ss << '\n';
      for (const auto& r : rows) {
        ss << r.name << ',' << r.est.cnot << ',' << r.est.one_qubit << ','
           << r.est.t << ',' << r.est.measure << ',' << r.est.t_depth << ','
           << r.est.full_depth << ',' << r.est.width << '\n';
      }
      break;
    }
    case TableFormat::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows) {
        arr.push_back({{"name", r.name},
                       {"cnot", r.est.cnot},
                       {"one_qubit_clifford", r.est.one_qubit},
                       {"t", r.est.t},
                       {"m", r.est.measure},
                       {"t_depth", r.est.t_depth},
                       {"full_depth", r.est.full_depth},
                       {"width", r.est.width}});
      }
      ss << arr.dump(2) << '\n';
      break;
    }
    case TableFormat::Text: {
      size_t name_w = 4;
      for (const auto& r : rows) name_w = std::max(name_w, r.name.size());
      ss << std::left << std::setw(static_cast<int>(name_w + 2)) << "name"
         << std::right;
      for (auto* col : kCols) ss << std::setw(12) << col;
      ss << '\n';
      for (const auto& r : rows) {
        ss << std::left << std::setw(static_cast<int>(name_w + 2)) << r.name
           << std::right << std::setw(12) << r.est.cnot << std::setw(12)
           << r.est.one_qubit << std::setw(12) << r.est.t << std::setw(12)
           << r.est.measure << std::setw(12) << r.est.t_depth << std::setw(12)
           << r.est.full_depth << std::setw(12) << r.est.width << '\n';
      }
      break;
    }
  }
  return ss.str();
}

}  // namespace qre
