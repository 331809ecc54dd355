#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "revshor/composites.hpp"
#include "revshor/divider.hpp"
#include "revshor/ecshor.hpp"
#include "revshor/fieldref.hpp"

using namespace revshor;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string n_list;
  std::string variant = "both";
  std::string log_mode = "log2";
  std::string ctof_mode = "four-toffoli";
  std::string seed;
  std::string format = "markdown";
  std::string modulus;
  int vectors = 100;
  std::string r0, r1;
  std::string k_range = "3..6";
  bool tamper = false;

  std::vector<int> ns;
  std::vector<Variant> variants;
  LogMode log = LogMode::Log2;
  CtofMode ctof = CtofMode::FourToffoli;
  std::uint64_t seed_value = 0xC0FFEE;
};

std::uint64_t parse_u64(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(s, &used, 0);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + ": " + s);
  }
}

std::vector<int> parse_n_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::uint64_t n = parse_u64(item, "n");
    if (n < 2 || n > 4096) throw UsageError("n must be in [2, 4096]: " + item);
    out.push_back(static_cast<int>(n));
  }
  if (out.empty()) throw UsageError("--n is empty");
  return out;
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  int lo, hi;
  if (dots == std::string::npos) {
    lo = hi = static_cast<int>(parse_u64(s, "k"));
  } else {
    lo = static_cast<int>(parse_u64(s.substr(0, dots), "k"));
    hi = static_cast<int>(parse_u64(s.substr(dots + 2), "k"));
  }
  if (lo < 1 || hi < lo || hi > 16) throw UsageError("k range must satisfy 1 <= lo <= hi <= 16: " + s);
  return {lo, hi};
}

BinPoly parse_poly(const std::string& s, const char* what) {
  try {
    return BinPoly::from_hex(s);
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + " polynomial: " + s);
  }
}

void resolve(RunConfig& cfg) {
  if (!cfg.n_list.empty()) cfg.ns = parse_n_list(cfg.n_list);
  if (cfg.variant == "both") {
    cfg.variants = {Variant::Baseline, Variant::New};
  } else if (auto v = parse_variant(cfg.variant)) {
    cfg.variants = {*v};
  } else {
    throw UsageError("unknown variant: " + cfg.variant);
  }
  auto lm = parse_log_mode(cfg.log_mode);
  if (!lm) throw UsageError("unknown log mode: " + cfg.log_mode);
  cfg.log = *lm;
  auto cm = parse_ctof_mode(cfg.ctof_mode);
  if (!cm) throw UsageError("unknown ctof mode: " + cfg.ctof_mode);
  cfg.ctof = *cm;
  if (const char* env = std::getenv("REVSHOR_SEED"); env && *env) cfg.seed_value = parse_u64(env, "REVSHOR_SEED");
  if (!cfg.seed.empty()) cfg.seed_value = parse_u64(cfg.seed, "seed");
  if (cfg.vectors < 1) throw UsageError("--vectors must be positive");
}

FieldSpec field_for(const RunConfig& cfg, int n) {
  if (cfg.modulus.empty()) return FieldSpec::standard(n);
  BinPoly m = parse_poly(cfg.modulus, "modulus");
  if (m.degree() != n) throw UsageError("modulus degree " + std::to_string(m.degree()) + " does not match n=" + std::to_string(n));
  try {
    return FieldSpec(m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

json config_json(const RunConfig& cfg) {
  char seed[32];
  std::snprintf(seed, sizeof seed, "0x%llx", static_cast<unsigned long long>(cfg.seed_value));
  json j;
  j["command"] = cfg.command;
  j["n"] = cfg.ns;
  json vs = json::array();
  for (Variant v : cfg.variants) vs.push_back(to_string(v));
  j["variants"] = vs;
  j["log_mode"] = to_string(cfg.log);
  j["ctof_mode"] = to_string(cfg.ctof);
  j["seed"] = seed;
  j["format"] = cfg.format;
  j["modulus"] = cfg.modulus.empty() ? json(nullptr) : json(cfg.modulus);
  j["vectors"] = cfg.vectors;
  return j;
}

// A flat table rendered as markdown or CSV.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(const std::string& format) const {
    if (format == "csv") {
      for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
      std::cout << '\n';
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << r[i];
        std::cout << '\n';
      }
      return;
    }
    std::cout << '|';
    for (const auto& h : header) std::cout << ' ' << h << " |";
    std::cout << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << "---|";
    std::cout << '\n';
    for (const auto& r : rows) {
      std::cout << '|';
      for (const auto& c : r) std::cout << ' ' << c << " |";
      std::cout << '\n';
    }
  }
};

struct ReferenceCell {
  long long qubits, toffoli;
};

std::optional<ReferenceCell> table2(Variant v, int n) {
  static const std::map<int, std::pair<ReferenceCell, ReferenceCell>> cells{
      {8, {{67, 2954}, {64, 3726}}},          {16, {{123, 7594}, {116, 10190}}},
      {127, {{907, 252746}, {839, 390370}}},  {163, {{1155, 409174}, {1074, 635366}}},
      {233, {{1645, 780734}, {1529, 1234566}}}, {283, {{1995, 1118134}, {1854, 1782566}}},
      {571, {{4012, 4279890}, {3727, 6945258}}},
  };
  auto it = cells.find(n);
  if (it == cells.end()) return std::nullopt;
  return v == Variant::Baseline ? it->second.first : it->second.second;
}

int cmd_estimate(const RunConfig& cfg) {
  if (cfg.ns.empty()) throw UsageError("estimate needs --n");
  json rows = json::array(), discrepancies = json::array();
  Table t{{"n", "variant", "log_mode", "qubits_formula", "qubits_layout", "toffoli_formula", "toffoli_constructed",
           "table2_qubits", "table2_toffoli", "match"},
          {}};
  CostModel constructed = CostModel::constructed();
  for (int n : cfg.ns) {
    FieldSpec F = field_for(cfg, n);
    for (Variant v : cfg.variants) {
      long long qf = qubit_formula(v, n, cfg.log, true);
      long long qf_div = qubit_formula(v, n, cfg.log, false);
      long long tf = toffoli_formula(v, n, cfg.log);
      int layout = make_division_layout(v, n).width();
      DivisionOptions opt;
      opt.ctof = cfg.ctof;
      long long tc = count_division(v, F, constructed, opt).toffoli;
      auto cell = table2(v, n);
      // The reference cells only reproduce under floor(ln n); log2 rows are not compared.
      std::string match = "n/a";
      if (cell && cfg.log == LogMode::CompatLn) {
        bool ok = true;
        auto note = [&](const char* what, long long table, long long formula) {
          if (table == formula) return;
          ok = false;
          discrepancies.push_back({{"cell", to_string(v) + " n=" + std::to_string(n) + " " + what},
                                   {"log_mode", to_string(cfg.log)},
                                   {"table", table},
                                   {"formula", formula}});
        };
        note("qubits", cell->qubits, qf);
        note("toffoli", cell->toffoli, tf);
        match = ok ? "yes" : "no";
      }
      double delta = 100.0 * static_cast<double>(tc - tf) / static_cast<double>(tf);
      rows.push_back({{"n", n},
                      {"variant", to_string(v)},
                      {"log_mode", to_string(cfg.log)},
                      {"qubits_formula", qf},
                      {"qubits_formula_division_only", qf_div},
                      {"qubits_layout", layout},
                      {"toffoli_formula", tf},
                      {"toffoli_constructed", tc},
                      {"constructed_delta_pct", std::round(delta * 100) / 100},
                      {"table2_qubits", cell ? json(cell->qubits) : json(nullptr)},
                      {"table2_toffoli", cell ? json(cell->toffoli) : json(nullptr)},
                      {"match", match}});
      t.rows.push_back({std::to_string(n), to_string(v), to_string(cfg.log), std::to_string(qf), std::to_string(layout),
                        std::to_string(tf), std::to_string(tc), cell ? std::to_string(cell->qubits) : "",
                        cell ? std::to_string(cell->toffoli) : "", match});
    }
  }
  if (cfg.format == "json") {
    std::cout << json{{"config", config_json(cfg)}, {"rows", rows}, {"discrepancies", discrepancies}}.dump(2) << '\n';
    return kExitOk;
  }
  t.print(cfg.format);
  if (cfg.format == "markdown") {
    std::cout << "\nqubits_formula includes the Shor control bit; qubits_layout is the division register file "
                 "(log2 sizing).\n";
    for (const auto& d : discrepancies)
      std::cout << "discrepancy: " << d["cell"].get<std::string>() << " table " << d["table"] << " formula "
                << d["formula"] << '\n';
  }
  return kExitOk;
}

struct Suite {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;

  void fail(const std::string& why) {
    ++failures;
    if (first_failure.empty()) first_failure = why;
  }
};

BinPoly random_poly(std::mt19937_64& rng, int n) {
  BinPoly p;
  for (int i = 0; i < n; ++i)
    if (rng() & 1) p.set_coeff(i, true);
  return p;
}

void division_suites(const RunConfig& cfg, int n, std::mt19937_64& rng, std::vector<Suite>& out) {
  FieldSpec F = field_for(cfg, n);
  DivisionOptions opt;
  opt.ctof = cfg.ctof;
  opt.tamper = cfg.tamper;
  std::vector<BinPoly> R1s;
  const bool exhaustive = n <= 6;
  if (exhaustive) {
    for (std::uint64_t r = 1; r < (std::uint64_t{1} << n); ++r) R1s.push_back(BinPoly(r));
  } else {
    while (static_cast<int>(R1s.size()) < cfg.vectors) {
      BinPoly r = random_poly(rng, n);
      if (!r.is_zero()) R1s.push_back(r);
    }
  }
  for (Variant v : cfg.variants) {
    Suite div{"division " + to_string(v) + " n=" + std::to_string(n) + (exhaustive ? " (exhaustive R1)" : "")};
    Suite mon{"mask monitor n=" + std::to_string(n)};
    DivisionLayout L = make_division_layout(v, n);
    Circuit c = build_division(v, F, opt);
    std::vector<Wire> g(L.g.begin(), L.g.end() - 1);
    for (const BinPoly& R1 : R1s) {
      BinPoly inv = modinverse(F.m, R1);
      int reps = exhaustive ? 16 : 1;
      for (int k = 0; k < reps; ++k) {
        BinPoly R2 = random_poly(rng, n), R3 = random_poly(rng, n);
        BasisState s(L.width());
        s.write(g, R1);
        s.write(L.B, R2);
        s.write(L.C, R3);
        BasisState expect = s;
        expect.write(L.C, R3 + mulmod(R2, inv, F.m));
        ++div.cases;
        try {
          apply(c, s);
          if (!(s == expect)) div.fail("R1=" + R1.to_hex() + " R2=" + R2.to_hex() + " R3=" + R3.to_hex());
        } catch (const std::exception& e) {
          div.fail("R1=" + R1.to_hex() + ": " + e.what());
        }
      }
      if (v != Variant::New) continue;
      try {
        auto snaps = trace_simulation(v, F, R1, opt);
        auto rows = trace_divsteps(F.m, R1, n);
        for (std::size_t l = 0; l < snaps.size(); ++l) {
          ++mon.cases;
          MonitorResult r = mask_noninterference_monitor(snaps[l], rows[l], L);
          if (!r.ok) mon.fail("R1=" + R1.to_hex() + " step " + std::to_string(l) + ": " + r.message);
        }
      } catch (const std::exception& e) {
        ++mon.cases;
        mon.fail("R1=" + R1.to_hex() + ": " + e.what());
      }
    }
    out.push_back(div);
    if (v == Variant::New) out.push_back(mon);
  }
}

void point_add_suite(const RunConfig& cfg, std::mt19937_64& rng, std::vector<Suite>& out) {
  Curve curve{BinPoly(0x11b), BinPoly(1), BinPoly(0x57)};
  std::vector<CurvePoint> points;
  for (const auto& p : enumerate_points(curve))
    if (!p.at_infinity) points.push_back(p);
  DivisionOptions opt;
  opt.ctof = cfg.ctof;
  opt.tamper = cfg.tamper;
  for (Variant v : cfg.variants) {
    Suite s{"point addition " + to_string(v) + " n=8"};
    CurvePoint P2 = points[rng() % points.size()];
    PointAddCircuit pa = build_point_add(curve, P2, v, opt);
    int generic = 0;
    while (generic < std::min(cfg.vectors, 50)) {
      CurvePoint P1 = points[rng() % points.size()];
      CurvePoint sum = ec_add(curve, P1, P2);
      if (P1.x == P2.x || sum.at_infinity || sum.x == P2.x) continue;
      ++generic;
      for (bool q : {true, false}) {
        BasisState st(pa.layout.width());
        st.write(pa.x1, P1.x);
        st.write(pa.y1, P1.y);
        st.set(pa.q, q);
        BasisState expect = st;
        if (q) {
          expect.write(pa.x1, sum.x);
          expect.write(pa.y1, sum.y);
        }
        ++s.cases;
        try {
          apply(pa.circuit, st);
          if (!(st == expect)) s.fail("P1.x=" + P1.x.to_hex() + " q=" + std::to_string(q));
        } catch (const std::exception& e) {
          s.fail(e.what());
        }
      }
    }
    out.push_back(s);
  }
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.ns.empty()) throw UsageError("verify needs --n");
  std::mt19937_64 rng(cfg.seed_value);
  std::vector<Suite> suites;
  for (int n : cfg.ns) division_suites(cfg, n, rng, suites);
  bool has8 = std::find(cfg.ns.begin(), cfg.ns.end(), 8) != cfg.ns.end();
  if (has8 && cfg.modulus.empty()) point_add_suite(cfg, rng, suites);

  bool ok = true;
  json rows = json::array();
  Table t{{"suite", "cases", "failures", "first_failure"}, {}};
  for (const auto& s : suites) {
    ok = ok && s.failures == 0;
    rows.push_back({{"suite", s.name}, {"cases", s.cases}, {"failures", s.failures}, {"first_failure", s.first_failure}});
    t.rows.push_back({s.name, std::to_string(s.cases), std::to_string(s.failures), s.first_failure});
  }
  if (cfg.format == "json") {
    std::cout << json{{"config", config_json(cfg)}, {"rows", rows}, {"discrepancies", json::array()}}.dump(2) << '\n';
  } else {
    t.print(cfg.format);
    if (cfg.format == "markdown") std::cout << '\n' << (ok ? "verify: PASS" : "verify: FAIL") << '\n';
  }
  return ok ? kExitOk : kExitVerify;
}

std::string bit_string(const std::vector<bool>& bits) {
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

int cmd_trace(const RunConfig& cfg) {
  if (cfg.r1.empty()) throw UsageError("trace needs --r1");
  BinPoly R0;
  if (!cfg.r0.empty()) {
    R0 = parse_poly(cfg.r0, "r0");
  } else if (!cfg.modulus.empty()) {
    R0 = parse_poly(cfg.modulus, "modulus");
  } else if (cfg.ns.size() == 1) {
    R0 = default_modulus(cfg.ns[0]);
  } else {
    throw UsageError("trace needs --r0 or a single --n");
  }
  int n = R0.degree();
  if (n < 2 || !R0.coeff(0)) throw UsageError("r0 must have degree >= 2 and a nonzero constant term");
  if (cfg.ns.size() > 1 || (cfg.ns.size() == 1 && cfg.ns[0] != n))
    throw UsageError("--n does not match deg r0 = " + std::to_string(n));
  BinPoly R1 = parse_poly(cfg.r1, "r1");
  if (R1.degree() >= n) throw UsageError("deg r1 must be below deg r0");

  DivisionOptions opt;
  opt.ctof = cfg.ctof;
  Variant v = cfg.variants.size() == 1 ? cfg.variants[0] : Variant::New;
  auto snaps = trace_simulation(v, R0, R1, opt);
  auto rows = trace_divsteps(R0, R1, n);

  json out = json::array();
  Table t{{"l", "delta", "f", "g", "m1", "Lambda", "m2", "lambda"}, {}};
  for (std::size_t l = 0; l < snaps.size(); ++l) {
    const auto& s = snaps[l];
    const auto& r = rows[l];
    t.rows.push_back({std::to_string(s.l), std::to_string(s.delta), bit_string(s.f), bit_string(s.g),
                      std::to_string(r.m1), std::to_string(r.Lambda), std::to_string(r.m2), std::to_string(r.lambda)});
    out.push_back({{"l", s.l},
                   {"delta", s.delta},
                   {"f", bit_string(s.f)},
                   {"g", bit_string(s.g)},
                   {"m1", r.m1},
                   {"Lambda", r.Lambda},
                   {"m2", r.m2},
                   {"lambda", r.lambda}});
  }
  if (cfg.format == "json") {
    std::cout << json{{"config", config_json(cfg)}, {"rows", out}, {"discrepancies", json::array()}}.dump(2) << '\n';
  } else {
    t.print(cfg.format);
  }
  return kExitOk;
}

bool exhaustive_check(const std::vector<Gate>& gates, int width,
                      const std::function<std::uint64_t(std::uint64_t)>& expected) {
  auto L = std::make_shared<RegisterLayout>();
  L->add_register("w", width);
  Circuit c(L);
  c.append_gates(gates);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << width); ++s) {
    BasisState st(width);
    st.write_u64(L->reg("w"), s);
    apply(c, st);
    if (st.read_u64(L->reg("w")) != expected(s)) return false;
  }
  return true;
}

int cmd_expand(const RunConfig& cfg) {
  auto [lo, hi] = parse_range(cfg.k_range);
  CostModel ref = CostModel::reference(), constructed = CostModel::constructed();
  constexpr int kMaxExhaustiveWidth = 20;
  bool ok = true;
  json rows = json::array(), discrepancies = json::array();
  Table t{{"gate", "k", "toffoli", "cnot", "model_toffoli", "model_cnot", "equivalence"}, {}};

  auto report = [&](const std::string& gate, int k, const ResourceCount& rc, const CostModel::Entry& model,
                    std::optional<bool> equiv) {
    std::string eq = equiv ? (*equiv ? "pass" : "FAIL") : "skipped";
    if (equiv && !*equiv) ok = false;
    t.rows.push_back({gate, std::to_string(k), std::to_string(rc.toffoli), std::to_string(rc.cnot),
                      std::to_string(model.toffoli), std::to_string(model.cnot), eq});
    rows.push_back({{"gate", gate},
                    {"k", k},
                    {"toffoli", rc.toffoli},
                    {"cnot", rc.cnot},
                    {"model_toffoli", model.toffoli},
                    {"model_cnot", model.cnot},
                    {"equivalence", eq}});
    if (rc.toffoli != model.toffoli || rc.cnot != model.cnot)
      discrepancies.push_back({{"gate", gate},
                               {"k", k},
                               {"constructed", {rc.toffoli, rc.cnot}},
                               {"model", {model.toffoli, model.cnot}}});
  };

  for (int k = lo; k <= hi; ++k) {
    std::vector<Wire> targets, borrowed;
    for (int i = 0; i < k; ++i) {
      targets.push_back(static_cast<Wire>(i));
      borrowed.push_back(static_cast<Wire>(k + i));
    }
    auto gates = expand(make_inc(targets, borrowed));
    std::optional<bool> equiv;
    if (2 * k <= kMaxExhaustiveWidth) {
      std::uint64_t mask = (std::uint64_t{1} << k) - 1;
      equiv = exhaustive_check(gates, 2 * k, [&](std::uint64_t s) { return (s & ~mask) | ((s + 1) & mask); });
    }
    report("INC", k, count_gates(gates, constructed), ref.inc(k), equiv);
  }
  for (int k = lo; k <= hi; ++k) {
    const int nb = k >= 3 ? k - 2 : 0;
    std::vector<Control> controls;
    std::vector<Wire> borrowed;
    for (int i = 0; i < k; ++i) controls.push_back({static_cast<Wire>(i), true});
    for (int i = 0; i < nb; ++i) borrowed.push_back(static_cast<Wire>(k + 1 + i));
    auto gates = cknot_borrowed(controls, static_cast<Wire>(k), borrowed);
    const int width = k + 1 + nb;
    std::optional<bool> equiv;
    if (width <= kMaxExhaustiveWidth) {
      std::uint64_t all = (std::uint64_t{1} << k) - 1;
      equiv = exhaustive_check(gates, width, [&](std::uint64_t s) {
        return (s & all) == all ? s ^ (std::uint64_t{1} << k) : s;
      });
    }
    report("CkNOT", k, count_gates(gates, constructed), ref.cknot(k), equiv);
  }

  if (cfg.format == "json") {
    std::cout << json{{"config", config_json(cfg)}, {"rows", rows}, {"discrepancies", discrepancies}}.dump(2) << '\n';
  } else {
    t.print(cfg.format);
    if (cfg.format == "markdown")
      std::cout << "\ntoffoli/cnot are counts of the emitted expansion; model columns are the reference cost model.\n";
  }
  return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Reversible GF(2^n) division circuits: estimation, verification, tracing."};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--variant", cfg.variant, "baseline, new or both")->capture_default_str();
    sub->add_option("--log-mode", cfg.log_mode, "log2 or paper-compat-ln")->capture_default_str();
    sub->add_option("--ctof-mode", cfg.ctof_mode, "four-toffoli or borrowed-v0")->capture_default_str();
    sub->add_option("--format", cfg.format, "markdown, csv or json")
        ->check(CLI::IsMember({"markdown", "csv", "json"}))
        ->capture_default_str();
    sub->add_option("--modulus", cfg.modulus, "irreducible modulus as hex, bit i = coefficient of x^i");
  };

  auto* estimate = app.add_subcommand("estimate", "Qubit and Toffoli counts per n and variant");
  estimate->add_option("--n", cfg.n_list, "comma-separated field degrees")->required();
  common(estimate);

  auto* verify = app.add_subcommand("verify", "Simulate division and point addition against classical references");
  verify->add_option("--n", cfg.n_list, "comma-separated field degrees")->required();
  verify->add_option("--vectors", cfg.vectors, "random vectors per suite")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "RNG seed (default 0xC0FFEE, or REVSHOR_SEED)");
  verify->add_flag("--tamper", cfg.tamper, "corrupt step 0 (negative control)")->group("");
  common(verify);

  auto* trace = app.add_subcommand("trace", "Per-step delta, f and g of the division circuit");
  trace->add_option("--n", cfg.n_list, "field degree");
  trace->add_option("--r0", cfg.r0, "modulus R0 as hex");
  trace->add_option("--r1", cfg.r1, "R1 as hex")->required();
  common(trace);

  auto* expandc = app.add_subcommand("expand", "Expand INC and CkNOT, count gates, check equivalence");
  expandc->add_option("--k", cfg.k_range, "range lo..hi")->capture_default_str();
  expandc->add_option("--format", cfg.format, "markdown, csv or json")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (estimate->parsed()) {
      cfg.command = "estimate";
      resolve(cfg);
      return cmd_estimate(cfg);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      resolve(cfg);
      return cmd_verify(cfg);
    }
    if (trace->parsed()) {
      cfg.command = "trace";
      if (!trace->count("--variant")) cfg.variant = "new";
      resolve(cfg);
      return cmd_trace(cfg);
    }
    cfg.command = "expand";
    resolve(cfg);
    return cmd_expand(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
