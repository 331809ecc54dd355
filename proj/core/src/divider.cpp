#include "revshor/divider.hpp"

#include <cmath>
#include <stdexcept>

namespace revshor {

std::string to_string(Variant v) { return v == Variant::Baseline ? "baseline" : "new"; }
std::string to_string(LogMode m) { return m == LogMode::Log2 ? "log2" : "paper-compat-ln"; }
std::string to_string(CtofMode m) { return m == CtofMode::FourToffoli ? "four-toffoli" : "borrowed-v0"; }

std::optional<Variant> parse_variant(const std::string& s) {
  if (s == "baseline") return Variant::Baseline;
  if (s == "new") return Variant::New;
  return std::nullopt;
}

std::optional<LogMode> parse_log_mode(const std::string& s) {
  if (s == "log2") return LogMode::Log2;
  if (s == "paper-compat-ln" || s == "paper_compat_ln" || s == "ln") return LogMode::CompatLn;
  return std::nullopt;
}

std::optional<CtofMode> parse_ctof_mode(const std::string& s) {
  if (s == "four-toffoli") return CtofMode::FourToffoli;
  if (s == "borrowed-v0") return CtofMode::BorrowedV0;
  return std::nullopt;
}

int floor_log2(int n) {
  if (n < 1) throw std::invalid_argument("floor_log2: n must be positive");
  int l = 0;
  while ((n >> (l + 1)) != 0) ++l;
  return l;
}

int floor_log(int n, LogMode mode) {
  if (mode == LogMode::Log2) return floor_log2(n);
  if (n < 1) throw std::invalid_argument("floor_log: n must be positive");
  return static_cast<int>(std::floor(std::log(static_cast<double>(n))));
}

std::vector<Wire> DivisionLayout::borrowable(std::size_t count) const {
  std::vector<Wire> out;
  for (const auto* reg : {&B, &C})
    for (Wire w : *reg)
      if (out.size() < count) out.push_back(w);
  if (out.size() < count) throw std::invalid_argument("not enough wires to borrow");
  return out;
}

DivisionLayout make_division_layout(Variant variant, int n) {
  if (n < 2) throw std::invalid_argument("division layout: n must be at least 2");
  DivisionLayout L;
  L.variant = variant;
  L.n = n;
  L.w = floor_log2(n) + 2;
  L.regs = std::make_shared<RegisterLayout>();
  auto& R = *L.regs;
  L.g = R.add_register("g", n + 1);
  L.B = R.add_register("B", n);
  L.C = R.add_register("C", n);
  L.f = R.add_register("f", n + 1);
  L.v = R.add_register("v", n + 1);
  L.delta = R.add_register("delta", L.w);
  L.a = R.add_register("a", 1)[0];
  int h = n / 2;
  if (variant == Variant::New) {
    L.mask = R.add_register("mask", n + 2 + h);
    L.b = R.add_register("b", 1)[0];
    for (int i = 0; i <= n; ++i) R.add_alias("r", i, "mask", n + h + 1 - i);
    L.r = R.reg("r");
  } else {
    L.r = R.add_register("r", n + 1);
    R.add_register("g0", n + 1);
    // g0[n+1 .. 2n-2] are g[n .. 3]
    for (int j = 1; j <= n - 2; ++j) R.add_alias("g0", n + j, "g", n + 1 - j);
    L.g0 = R.reg("g0");
  }
  L.sign = L.delta.back();
  return L;
}

StepParams StepParams::of(Variant variant, int n, int l) {
  if (l < 0 || l > 2 * n - 2) throw std::out_of_range("step index out of range");
  StepParams p;
  p.l = l;
  if (variant == Variant::Baseline) {
    p.Lambda = std::min(2 * n - 2 - l, n);
    p.lambda = std::min(l + 1, n);
  } else {
    p.Lambda = n - 1 - std::max((l - 1) / 2, 0);
    p.lambda = std::min(l, n);
  }
  return p;
}

namespace {

std::vector<Wire> prefix(const std::vector<Wire>& reg, int last) {
  return {reg.begin(), reg.begin() + last + 1};
}

void emit_new_step(Circuit& c, const DivisionLayout& L, const StepParams& p, const DivisionOptions& opt) {
  const int n = L.n;
  const Wire g0 = L.g[0];
  rightshift(c, L.v);
  c.ccx({L.sign}, {g0}, L.a);
  c.ccx({L.sign}, {g0, false}, L.b);
  for (int i = 0; i <= n; ++i) c.cswap({L.a}, L.f[i], L.g[i]);
  auto ctof = [&] {
    for (int i = 1; i <= p.Lambda; ++i) {
      if (opt.ctof == CtofMode::FourToffoli) {
        c.mcx({{g0}, {L.f[i]}, {L.mask[i]}}, L.g[i], L.borrowable(1));
      } else {
        // v[0] is 0 right after the shift
        c.ccx({L.f[i]}, {L.mask[i]}, L.v[0]);
        c.ccx({L.v[0]}, {g0}, L.g[i]);
        c.ccx({L.f[i]}, {L.mask[i]}, L.v[0]);
      }
    }
  };
  if (opt.ctof == CtofMode::BorrowedV0) ctof();
  for (int i = 0; i <= p.lambda; ++i) c.cswap({L.a}, L.r[i], L.v[i]);
  if (opt.ctof == CtofMode::FourToffoli) ctof();
  auto mask = prefix(L.mask, p.Lambda);
  mask_leftshift(c, mask, {L.b});
  c.ccx({L.sign}, {g0, false}, L.b);
  // delta = 0 exactly when its low w-1 bits are all 1
  std::vector<Wire> low(L.delta.begin(), L.delta.end() - 1);
  cn_mask_leftshift(c, mask, low, L.b, L.borrowable(low.size()));
  for (Wire d : L.delta) c.cx({L.a}, d);
  inc_gate(c, L.delta, {L.a, false}, L.borrowable(L.delta.size()), L.b);
  c.ccx({L.v[0]}, {g0}, L.a);
  for (int i = 0; i <= p.lambda; ++i) c.ccx({L.v[i]}, {g0}, L.r[i]);
  leftrotate(c, L.g);
  if (opt.tamper && p.l == 0) c.x(L.a);
}

void emit_baseline_step(Circuit& c, const DivisionLayout& L, const StepParams& p, const DivisionOptions& opt) {
  const Wire g0 = L.g[0];
  const Wire hist = L.g0[p.l];
  rightshift(c, L.v);
  c.ccx({L.sign}, {g0}, L.a);
  for (Wire d : L.delta) c.cx({L.a}, d);
  for (int i = 0; i <= p.Lambda; ++i) c.cswap({L.a}, L.f[i], L.g[i]);
  for (int i = 0; i <= p.lambda; ++i) c.cswap({L.a}, L.r[i], L.v[i]);
  inc_gate(c, L.delta, {L.a, false}, L.borrowable(L.delta.size()), hist);
  c.cx({L.v[0]}, L.a);
  c.cx({g0}, hist);
  for (int i = 0; i <= p.Lambda; ++i) c.ccx({L.f[i]}, {hist}, L.g[i]);
  for (int i = 0; i <= p.lambda; ++i) c.ccx({L.v[i]}, {hist}, L.r[i]);
  if (p.Lambda >= 1) leftrotate(c, prefix(L.g, p.Lambda));
  if (opt.tamper && p.l == 0) c.x(L.a);
}

void emit_uncompute(Circuit& c, std::size_t begin, std::size_t end) {
  for (std::size_t i = end; i-- > begin;) {
    Gate g = c.gates()[i];
    c.add(inverse(g));
  }
}

}  // namespace

void emit_division_init(Circuit& c, const DivisionLayout& L, const BinPoly& R0) {
  const int n = L.n;
  if (R0.degree() != n) throw std::invalid_argument("division init: deg R0 must equal n");
  for (int i = 0; i <= n; ++i)
    if (R0.coeff(i)) c.x(L.f[n - i]);
  if (L.variant == Variant::New)
    for (int i = 0; i < n; ++i) c.x(L.mask[i]);
  c.x(L.sign);
  c.x(L.r[0]);
  for (int i = 0; i < n / 2; ++i) c.swap(L.g[i], L.g[n - 1 - i]);
}

void emit_division_step(Circuit& c, const DivisionLayout& L, int l, const DivisionOptions& opt) {
  StepParams p = StepParams::of(L.variant, L.n, l);
  if (L.variant == Variant::New) emit_new_step(c, L, p, opt);
  else emit_baseline_step(c, L, p, opt);
}

void emit_division_final(Circuit& c, const DivisionLayout& L) {
  for (int i = 0; i < L.n / 2; ++i) c.swap(L.v[i], L.v[L.n - 1 - i]);
}

void emit_division(Circuit& c, const DivisionLayout& L, const FieldSpec& f, const DivisionOptions& opt) {
  if (f.n != L.n) throw std::invalid_argument("division: field degree does not match layout");
  const std::size_t start = c.size();
  emit_division_init(c, L, f.m);
  c.add_section("init", start, c.size());
  const std::size_t steps = c.size();
  for (int l = 0; l <= 2 * L.n - 2; ++l) {
    std::size_t s = c.size();
    emit_division_step(c, L, l, opt);
    c.add_section("step:" + std::to_string(l), s, c.size());
  }
  c.add_section("steps", steps, c.size());
  std::size_t fin = c.size();
  emit_division_final(c, L);
  c.add_section("final", fin, c.size());
  const std::size_t forward_end = c.size();
  std::vector<Wire> V(L.v.begin(), L.v.end() - 1);
  modmult(c, V, L.B, L.C, f);
  c.add_section("modmult", forward_end, c.size());
  std::size_t un = c.size();
  emit_uncompute(c, start, forward_end);
  c.add_section("uncompute", un, c.size());
}

Circuit build_division(Variant variant, const FieldSpec& f, const DivisionOptions& opt) {
  DivisionLayout L = make_division_layout(variant, f.n);
  Circuit c(L.regs);
  emit_division(c, L, f, opt);
  c.metadata["n"] = std::to_string(f.n);
  c.metadata["variant"] = to_string(variant);
  c.metadata["modulus"] = f.m.to_hex();
  return c;
}

Circuit step_circuit(const DivisionLayout& L, int l, const DivisionOptions& opt) {
  Circuit c(L.regs);
  emit_division_step(c, L, l, opt);
  return c;
}

ResourceCount count_division(Variant variant, const FieldSpec& f, const CostModel& model, const DivisionOptions& opt) {
  DivisionLayout L = make_division_layout(variant, f.n);
  ResourceCount total;
  auto add_segment = [&](const Circuit& c) {
    ResourceCount rc = count(c, model);
    total.toffoli += 2 * rc.toffoli;  // forward and uncompute
    total.cnot += 2 * rc.cnot;
    total.nots += 2 * rc.nots;
    total.borrowed_peak = std::max(total.borrowed_peak, rc.borrowed_peak);
  };
  {
    Circuit c(L.regs);
    emit_division_init(c, L, f.m);
    add_segment(c);
  }
  for (int l = 0; l <= 2 * f.n - 2; ++l) add_segment(step_circuit(L, l, opt));
  {
    Circuit c(L.regs);
    emit_division_final(c, L);
    add_segment(c);
  }
  total.width = L.width();
  return total;
}

long long decode_delta(const BasisState& s, const DivisionLayout& L) {
  // offset binary: E = delta - 1 + 2^(w-1)
  long long E = static_cast<long long>(s.read_u64(L.delta));
  return E - (1LL << (L.w - 1)) + 1;
}

std::vector<TraceSnapshot> trace_simulation(Variant variant, const FieldSpec& f, const BinPoly& R1,
                                            const DivisionOptions& opt) {
  return trace_simulation(variant, f.m, R1, opt);
}

std::vector<TraceSnapshot> trace_simulation(Variant variant, const BinPoly& R0, const BinPoly& R1,
                                            const DivisionOptions& opt) {
  const int n = R0.degree();
  if (R1.is_zero() || R1.degree() >= n) throw std::invalid_argument("trace: need 0 != R1 with deg R1 < deg R0");
  DivisionLayout L = make_division_layout(variant, n);
  BasisState s(L.width());
  s.write(std::vector<Wire>(L.g.begin(), L.g.end() - 1), R1);
  Circuit init(L.regs);
  emit_division_init(init, L, R0);
  apply(init, s);
  std::vector<TraceSnapshot> out;
  auto snap = [&](int l) {
    TraceSnapshot t;
    t.l = l;
    t.delta = decode_delta(s, L);
    for (Wire w : L.f) t.f.push_back(s.get(w));
    for (Wire w : L.g) t.g.push_back(s.get(w));
    t.state = s;
    out.push_back(std::move(t));
  };
  snap(0);
  for (int l = 0; l <= 2 * n - 2; ++l) {
    apply(step_circuit(L, l, opt), s);
    snap(l + 1);
  }
  return out;
}

MonitorResult mask_noninterference_monitor(const TraceSnapshot& snap, const TraceRow& row, const DivisionLayout& L) {
  auto fail = [&](const std::string& why) {
    return MonitorResult{false, "step " + std::to_string(snap.l) + ": " + why};
  };
  if (L.variant != Variant::New) return fail("monitor applies to the new variant only");
  const int n = L.n;
  const int l = snap.l;
  const int lam = std::min(l, n);
  const int top = n + n / 2 + 1;
  std::vector<bool> r_owned(L.mask.size(), false);
  for (int i = 0; i <= lam; ++i) r_owned[static_cast<std::size_t>(top - i)] = true;
  for (int p = n - l / 2; p <= n - 1; ++p)
    if (!r_owned[static_cast<std::size_t>(p)] && snap.state.get(L.mask[static_cast<std::size_t>(p)]))
      return fail("mask[" + std::to_string(p) + "] is not 0");
  bool in_prefix = true;
  for (std::size_t p = 0; p < L.mask.size(); ++p) {
    if (r_owned[p]) continue;
    bool bit = snap.state.get(L.mask[p]);
    if (bit && !in_prefix) return fail("mask is not a 1-prefix");
    if (bit && static_cast<int>(p) > row.Lambda) return fail("mask extends past Lambda");
    if (!bit) in_prefix = false;
  }
  if (row.m1 > row.Lambda) return fail("m1 > Lambda");
  if (row.m2 > row.lambda) return fail("m2 > lambda");
  return {};
}

long long toffoli_formula(Variant variant, int n, LogMode mode) {
  long long N = n, Lg = floor_log(n, mode);
  if (variant == Variant::Baseline) return 12 * N * N + 116 * N - 62 + (88 * N - 44) * Lg;
  return 20 * N * N + 120 * N - 74 + (104 * N - 52) * Lg;
}

long long qubit_formula(Variant variant, int n, LogMode mode, bool include_shor_bit) {
  long long N = n, Lg = floor_log(n, mode);
  long long q = variant == Variant::Baseline ? 7 * N + Lg + 8 : 6 * N + N / 2 + Lg + 9;
  return q + (include_shor_bit ? 1 : 0);
}

}  // namespace revshor
