#include "tables.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "aes.hpp"
#include "lowmc.hpp"
#include "oracle.hpp"
#include "sim.hpp"

namespace qre::tables {
namespace {

using cost::BigCost;
using cost::DepthMetric;
using cost::f128;
using cost::OracleCost;

// -- baseline oracle-cost records -------------------------------------------

OracleRow row(const char* cipher, const char* variant, int r, double cnot,
              double oneq, double t, double m, double td, double fd, double w) {
  return {cipher, variant, r,
          OracleCost{static_cast<f128>(cnot), static_cast<f128>(oneq),
                     static_cast<f128>(t), static_cast<f128>(m),
                     static_cast<f128>(td), static_cast<f128>(fd),
                     static_cast<f128>(w)}};
}

const std::vector<OracleRow> kBaseline = {
    // AES, in-place MixColumn
    row("aes128", "in-place", 1, 292313, 84428, 54908, 13727, 121, 2816, 1665),
    row("aes192", "in-place", 1, 329697, 94316, 61436, 15359, 120, 2978, 1985),
    row("aes256", "in-place", 1, 404139, 116286, 75580, 18895, 126, 3353, 2305),
    row("aes128", "in-place", 2, 585051, 169184, 109820, 27455, 121, 2815, 3329),
    row("aes192", "in-place", 2, 659727, 188520, 122876, 30719, 120, 2981, 3969),
    row("aes256", "in-place", 2, 808071, 231124, 151164, 37791, 126, 3356, 4609),
    row("aes256", "in-place", 3, 1212905, 347766, 226748, 56687, 126, 3347, 6913),
    // AES, Maximov MixColumn
    row("aes128", "maximov", 1, 294863, 84488, 54908, 13727, 121, 2086, 2817),
    row("aes192", "maximov", 1, 332665, 94092, 61436, 15359, 120, 1879, 3393),
    row("aes256", "maximov", 1, 407667, 116062, 75580, 18895, 126, 1951, 3969),
    row("aes128", "maximov", 2, 589643, 168288, 109820, 27455, 121, 2096, 5633),
    row("aes192", "maximov", 2, 665899, 188544, 122876, 30719, 120, 1890, 6785),
    row("aes256", "maximov", 2, 815645, 231712, 151164, 37791, 126, 1952, 7937),
    row("aes256", "maximov", 3, 1223087, 346290, 226748, 56687, 126, 1956, 11905),
    // LowMC, shallow S-box
    row("lowmc-l1", "shallow", 1, 690961, 5917, 8908, 191, 41, 98709, 1585),
    row("lowmc-l3", "shallow", 1, 2273397, 10881, 13364, 286, 61, 319323, 2377),
    row("lowmc-l5", "shallow", 1, 5072343, 16209, 16980, 372, 77, 693477, 3049),
    row("lowmc-l1", "shallow", 2, 1382143, 11774, 17820, 362, 41, 98707, 3169),
    row("lowmc-l3", "shallow", 2, 4547191, 21783, 26732, 576, 61, 319329, 4753),
    row("lowmc-l5", "shallow", 2, 10145281, 32567, 33964, 783, 77, 693483, 6097),
};

// -- generic string-table rendering -----------------------------------------

struct Doc {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_doc(const Doc& d, TableFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case TableFormat::Csv: {
      for (size_t i = 0; i < d.header.size(); ++i)
        os << (i ? "," : "") << d.header[i];
      os << "\n";
      for (const auto& r : d.rows) {
        for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << "\n";
      }
      break;
    }
    case TableFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : d.rows) {
        nlohmann::ordered_json obj;
        for (size_t i = 0; i < d.header.size(); ++i) obj[d.header[i]] = r[i];
        arr.push_back(obj);
      }
      os << arr.dump(2) << "\n";
      break;
    }
    case TableFormat::Text: {
      std::vector<size_t> w(d.header.size());
      for (size_t i = 0; i < d.header.size(); ++i) w[i] = d.header[i].size();
      for (const auto& r : d.rows)
        for (size_t i = 0; i < r.size(); ++i)
          if (r[i].size() > w[i]) w[i] = r[i].size();
      auto line = [&](const std::vector<std::string>& r) {
        for (size_t i = 0; i < r.size(); ++i) {
          if (i) os << "  ";
          os << r[i] << std::string(w[i] - r[i].size(), ' ');
        }
        os << "\n";
      };
      line(d.header);
      for (const auto& r : d.rows) line(r);
      break;
    }
  }
  return os.str();
}

// -- helpers -----------------------------------------------------------------

std::vector<uint8_t> hex_to_bits(const std::string& hex) {
  std::vector<uint8_t> bits;
  bits.reserve(hex.size() * 4);
  for (char ch : hex) {
    int v;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
    else throw std::invalid_argument("bad hex digit in input");
    for (int j = 3; j >= 0; --j) bits.push_back((v >> j) & 1);
  }
  return bits;
}

std::string bits_to_hex(const std::vector<uint8_t>& bits) {
  std::string hex;
  for (size_t i = 0; i + 3 < bits.size(); i += 4) {
    int v = bits[i] << 3 | bits[i + 1] << 2 | bits[i + 2] << 1 | bits[i + 3];
    hex += "0123456789abcdef"[v];
  }
  return hex;
}

bool starts_with(const std::string& s, const std::string& p) {
  return s.rfind(p, 0) == 0;
}

bool has_suffix(std::string& s, const std::string& suf) {
  if (s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0) {
    s.erase(s.size() - suf.size());
    return true;
  }
  return false;
}

struct AesSpec {
  aes::Options opt;
};
struct LowmcSpec {
  int level;
  lowmc::SboxKind sk;
};

bool parse_aes(const std::string& name, AesSpec& spec) {
  std::string base = name;
  spec.opt = aes::Options{};
  if (has_suffix(base, "-oop-mc")) spec.opt.mc = aes::MixColumnKind::OutOfPlace;
  if (has_suffix(base, "-naive-ke")) spec.opt.ke = aes::KeyExpandKind::Naive;
  if (base == "aes128") spec.opt.key_bits = 128;
  else if (base == "aes192") spec.opt.key_bits = 192;
  else if (base == "aes256") spec.opt.key_bits = 256;
  else return false;
  return true;
}

bool parse_lowmc(const std::string& name, LowmcSpec& spec) {
  std::string base = name;
  spec.sk = lowmc::SboxKind::Shallow;
  if (has_suffix(base, "-ip")) spec.sk = lowmc::SboxKind::InPlace;
  if (base == "lowmc-l1") spec.level = 1;
  else if (base == "lowmc-l3") spec.level = 3;
  else if (base == "lowmc-l5") spec.level = 5;
  else return false;
  return true;
}

std::vector<uint8_t> fixed_key_bytes(int n) {
  std::vector<uint8_t> bytes(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    bytes[static_cast<size_t>(i)] = static_cast<uint8_t>(i * 0x11 + 0x47);
  return bytes;
}

oracle::OracleCircuit build_oracle(const std::string& cipher, int r) {
  if (r < 1) throw std::invalid_argument("oracle: r must be >= 1");
  AesSpec as;
  LowmcSpec ls;
  if (parse_aes(cipher, as))
    return oracle::build_aes(as.opt, r, fixed_key_bytes(as.opt.key_bits / 8));
  if (parse_lowmc(cipher, ls)) {
    int kb = lowmc::params_for_level(ls.level).key_bits;
    std::vector<uint8_t> key_bits(static_cast<size_t>(kb));
    auto bytes = fixed_key_bytes(kb / 8);
    for (int i = 0; i < kb; ++i)
      key_bits[static_cast<size_t>(i)] =
          (bytes[static_cast<size_t>(i / 8)] >> (7 - i % 8)) & 1;
    return oracle::build_lowmc(ls.level, ls.sk, r, key_bits);
  }
  throw std::invalid_argument("unknown cipher: " + cipher);
}

ResourceEstimate estimate_target(const std::string& name) {
  return estimate(build_target(name));
}

std::string md_label(f128 md_log2) {
  double d = static_cast<double>(md_log2);
  char buf[48];
  if (std::abs(d - std::round(d)) < 1e-9)
    std::snprintf(buf, sizeof(buf), "2^%lld", static_cast<long long>(std::llround(d)));
  else
    std::snprintf(buf, sizeof(buf), "2^%.2f", d);
  return buf;
}

std::vector<std::string> attack_cells(const AttackRow& a) {
  if (!a.feasible)
    return {a.md, "-", "-", "-", "-", "-", "-", "-"};
  const cost::AttackPlan& p = a.result.plan;
  return {a.md,
          std::to_string(a.result.r),
          p.s.render(),
          cost::render_log2(p.skp_value.log2v, p.skp_value.neg_inf),
          p.d.render(),
          p.w.render(),
          p.g.render(),
          p.dw.render()};
}

void estimate_doc_to_rows(const std::vector<std::string>& targets,
                          std::vector<EstimateRow>& out) {
  for (const auto& t : targets) out.push_back({t, estimate_target(t)});
}

std::string grover_table(TableFormat fmt) {
  struct Entry {
    const char* cipher;
    int r;
  };
  const Entry entries[] = {
      {"aes128", 1}, {"aes128", 2}, {"aes192", 2}, {"aes256", 2}, {"aes256", 3},
      {"lowmc-l1", 1}, {"lowmc-l3", 1}, {"lowmc-l5", 1},
      {"lowmc-l1", 2}, {"lowmc-l3", 2}, {"lowmc-l5", 2},
  };
  Doc d;
  d.header = {"scheme", "r",      "CNOT+1qCliff", "T", "M",  "T-depth",
              "D",      "W",      "G-cost",       "DW-cost", "p"};
  for (const Entry& e : entries) {
    CipherParams cp = cipher_params(e.cipher);
    OracleCost oc = to_oracle_cost(estimate(build_oracle(e.cipher, e.r).c));
    cost::AttackPlan plan = cost::plan_grover(oc, cp.key_bits);
    auto scaled = [&](f128 v) {
      return BigCost::from_log2(plan.j.log2v + log2q(v)).render();
    };
    f128 p0 = cost::spurious_dist(cp.key_bits, cp.block_bits, e.r, 0);
    char pbuf[32];
    std::snprintf(pbuf, sizeof(pbuf), "%.3f", static_cast<double>(p0));
    d.rows.push_back({e.cipher, std::to_string(e.r), scaled(oc.cnot + oc.one_qubit),
                      scaled(oc.t), scaled(oc.m), scaled(oc.t_depth),
                      plan.d.render(),
                      std::to_string(static_cast<long long>(oc.width)),
                      plan.g.render(), plan.dw.render(), pbuf});
  }
  return render_doc(d, fmt);
}

std::string nist_table(const std::vector<OracleRow>& rows, TableFormat fmt) {
  const char* schemes[] = {"aes128", "aes192", "aes256"};
  const int cats[] = {1, 3, 5};
  Doc d;
  d.header = {"category", "scheme", "maxdepth", "G-cost"};
  for (int i = 0; i < 3; ++i)
    for (int md : {40, 64, 96}) {
      AttackRow a = plan_for(rows, schemes[i], md, DepthMetric::Full);
      d.rows.push_back({std::to_string(cats[i]), schemes[i], md_label(md),
                        a.feasible ? a.result.plan.g.render() : "-"});
    }
  return render_doc(d, fmt);
}

std::string maxdepth_table(const std::vector<OracleRow>& rows,
                           const std::vector<std::string>& schemes,
                           TableFormat fmt) {
  Doc d;
  d.header = {"metric", "scheme", "MD", "r", "S", "log2(SKP)", "D", "W",
              "G-cost", "DW-cost"};
  for (DepthMetric metric : {DepthMetric::Full, DepthMetric::TDepth})
    for (const auto& s : schemes)
      for (int md : {40, 64, 96}) {
        AttackRow a = plan_for(rows, s, md, metric);
        std::vector<std::string> cells = attack_cells(a);
        cells.insert(cells.begin(), s);
        cells.insert(cells.begin(),
                     metric == DepthMetric::Full ? "full" : "t-depth");
        d.rows.push_back(std::move(cells));
      }
  return render_doc(d, fmt);
}

}  // namespace

const std::vector<OracleRow>& baseline_oracle_costs() { return kBaseline; }

std::vector<OracleRow> load_oracle_costs(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open oracle-cost file: " + path);
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("bad oracle-cost JSON in " + path + ": " + e.what());
  }
  if (!j.is_array())
    throw std::runtime_error("oracle-cost file must hold a JSON array: " + path);
  std::vector<OracleRow> rows;
  for (const auto& obj : j) {
    try {
      rows.push_back(row(obj.at("cipher").get<std::string>().c_str(),
                         obj.at("variant").get<std::string>().c_str(),
                         obj.at("r").get<int>(), obj.at("cnot").get<double>(),
                         obj.at("one_qubit_clifford").get<double>(),
                         obj.at("t").get<double>(), obj.at("m").get<double>(),
                         obj.at("t_depth").get<double>(),
                         obj.at("full_depth").get<double>(),
                         obj.at("width").get<double>()));
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("bad oracle-cost record in " + path + ": " +
                               e.what());
    }
  }
  return rows;
}

CipherParams cipher_params(const std::string& cipher) {
  AesSpec as;
  LowmcSpec ls;
  if (parse_aes(cipher, as)) return {as.opt.key_bits, 128};
  if (parse_lowmc(cipher, ls)) {
    lowmc::Params p = lowmc::params_for_level(ls.level);
    return {p.key_bits, p.block_bits};
  }
  throw std::invalid_argument("unknown cipher: " + cipher);
}

Circuit build_target(const std::string& name) {
  if (starts_with(name, "oracle:")) {
    size_t colon = name.find(':', 7);
    if (colon == std::string::npos)
      throw std::invalid_argument("oracle target syntax: oracle:<cipher>:<r>");
    std::string cipher = name.substr(7, colon - 7);
    int r;
    try {
      size_t pos = 0;
      r = std::stoi(name.substr(colon + 1), &pos);
      if (colon + 1 + pos != name.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad oracle instance count in: " + name);
    }
    return std::move(build_oracle(cipher, r).c);
  }
  if (name == "sbox-bp12") {
    Circuit c;
    auto in = c.allocate(8), out = c.allocate(8);
    std::array<int, 8> ia, oa;
    for (int i = 0; i < 8; ++i) {
      ia[static_cast<size_t>(i)] = in[static_cast<size_t>(i)];
      oa[static_cast<size_t>(i)] = out[static_cast<size_t>(i)];
    }
    aes::sbox(c, ia, oa);
    c.set_inputs(in);
    c.set_outputs(out);
    return c;
  }
  if (name == "sbox-lowmc-ip") {
    Circuit c;
    auto w = c.allocate(3);
    lowmc::sbox_inplace(c, w[2], w[1], w[0]);
    c.set_inputs(w);
    c.set_outputs(w);
    return c;
  }
  if (name == "sbox-lowmc-shallow") {
    Circuit c;
    auto w = c.allocate(3);
    lowmc::ShallowOut out = lowmc::sbox_shallow(c, w[2], w[1], w[0]);
    c.set_inputs(w);
    c.set_outputs({out.a, out.b, out.c});
    return c;
  }
  if (name == "mixcolumn-ip" || name == "mixcolumn-maximov") {
    Circuit c;
    auto state = c.allocate(128);
    for (int col = 0; col < 4; ++col) {
      std::vector<int> w(state.begin() + 32 * col, state.begin() + 32 * (col + 1));
      if (name == "mixcolumn-ip") {
        aes::mixcolumn_inplace(c, w);
      } else {
        aes::mixcolumn_outofplace(c, w);
        std::copy(w.begin(), w.end(), state.begin() + 32 * col);
      }
    }
    c.set_inputs(state);
    c.set_outputs(state);
    return c;
  }
  AesSpec as;
  LowmcSpec ls;
  if (parse_aes(name, as)) return std::move(aes::full(as.opt).c);
  if (parse_lowmc(name, ls))
    return std::move(lowmc::full(lowmc::instance_for_level(ls.level), ls.sk).c);
  throw std::invalid_argument("unknown target: " + name);
}

std::string simulate_cipher(const std::string& cipher, const std::string& key_hex,
                            const std::string& msg_hex) {
  CipherParams cp = cipher_params(cipher);
  std::vector<uint8_t> key = hex_to_bits(key_hex), msg = hex_to_bits(msg_hex);
  if (static_cast<int>(key.size()) != cp.key_bits)
    throw std::invalid_argument("key must be " + std::to_string(cp.key_bits / 4) +
                                " hex digits");
  if (static_cast<int>(msg.size()) != cp.block_bits)
    throw std::invalid_argument("msg must be " + std::to_string(cp.block_bits / 4) +
                                " hex digits");
  Circuit c = build_target(cipher);
  std::vector<uint8_t> input = key;
  input.insert(input.end(), msg.begin(), msg.end());
  return bits_to_hex(run(c, input));
}

cost::OracleCost to_oracle_cost(const ResourceEstimate& e) {
  return {static_cast<f128>(e.cnot),    static_cast<f128>(e.one_qubit),
          static_cast<f128>(e.t),       static_cast<f128>(e.measure),
          static_cast<f128>(e.t_depth), static_cast<f128>(e.full_depth),
          static_cast<f128>(e.width)};
}

AttackRow plan_for(const std::vector<OracleRow>& rows, const std::string& cipher,
                   cost::f128 md_log2, cost::DepthMetric metric) {
  CipherParams cp = cipher_params(cipher);
  std::vector<std::string> variants;
  for (const auto& r : rows)
    if (r.cipher == cipher &&
        std::find(variants.begin(), variants.end(), r.variant) == variants.end())
      variants.push_back(r.variant);
  if (variants.empty())
    throw std::invalid_argument("no oracle-cost records for cipher: " + cipher);

  AttackRow best;
  best.scheme = cipher;
  best.md = md_label(md_log2);
  best.feasible = false;
  for (const auto& v : variants) {
    auto oracle_for_r = [&](int want_r) -> OracleCost {
      for (const auto& r : rows)
        if (r.cipher == cipher && r.variant == v && r.r == want_r) return r.oc;
      throw std::runtime_error("no oracle-cost record for " + cipher + " (" + v +
                               ") with r=" + std::to_string(want_r));
    };
    cost::Attack a =
        cost::attack(oracle_for_r, cp.key_bits, cp.block_bits, md_log2, metric);
    if (!a.plan.feasible) continue;
    if (!best.feasible || a.plan.g.log2v < best.result.plan.g.log2v) {
      best.feasible = true;
      best.variant = v;
      best.result = a;
    }
  }
  return best;
}

std::string attack_report(const AttackRow& a, TableFormat fmt) {
  Doc d;
  d.header = {"MD", "r", "S", "log2(SKP)", "D", "W", "G-cost", "DW-cost"};
  d.rows.push_back(attack_cells(a));
  return render_doc(d, fmt);
}

std::string make_table(const std::string& which,
                       const std::vector<OracleRow>& rows, TableFormat fmt) {
  std::vector<EstimateRow> est;
  if (which == "sbox") {
    estimate_doc_to_rows({"sbox-bp12", "sbox-lowmc-ip", "sbox-lowmc-shallow"}, est);
    return tabulate(est, fmt);
  }
  if (which == "mixcolumn") {
    estimate_doc_to_rows({"mixcolumn-ip", "mixcolumn-maximov"}, est);
    return tabulate(est, fmt);
  }
  if (which == "cipher") {
    estimate_doc_to_rows({"aes128", "aes192", "aes256", "aes128-oop-mc",
                          "aes192-oop-mc", "aes256-oop-mc", "lowmc-l1",
                          "lowmc-l3", "lowmc-l5"},
                         est);
    return tabulate(est, fmt);
  }
  if (which == "oracle") {
    estimate_doc_to_rows(
        {"oracle:aes128:1", "oracle:aes192:1", "oracle:aes256:1",
         "oracle:aes128:2", "oracle:aes192:2", "oracle:aes256:2",
         "oracle:aes256:3", "oracle:lowmc-l1:1", "oracle:lowmc-l3:1",
         "oracle:lowmc-l5:1", "oracle:lowmc-l1:2", "oracle:lowmc-l3:2",
         "oracle:lowmc-l5:2"},
        est);
    return tabulate(est, fmt);
  }
  if (which == "grover") return grover_table(fmt);
  if (which == "nist") return nist_table(rows, fmt);
  if (which == "maxdepth-aes")
    return maxdepth_table(rows, {"aes128", "aes192", "aes256"}, fmt);
  if (which == "maxdepth-lowmc")
    return maxdepth_table(rows, {"lowmc-l1", "lowmc-l3", "lowmc-l5"}, fmt);
  throw std::invalid_argument("unknown table: " + which);
}

}  // namespace qre::tables
