#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "revshor/fieldref.hpp"
#include "revshor/gfgates.hpp"
#include "revshor/revcirc.hpp"

namespace revshor {

enum class Variant { Baseline, New };
// Log2 sizes the registers; CompatLn evaluates the closed forms with floor(ln n).
enum class LogMode { Log2, CompatLn };
enum class CtofMode { FourToffoli, BorrowedV0 };

std::string to_string(Variant v);
std::string to_string(LogMode m);
std::string to_string(CtofMode m);
std::optional<Variant> parse_variant(const std::string& s);
std::optional<LogMode> parse_log_mode(const std::string& s);
std::optional<CtofMode> parse_ctof_mode(const std::string& s);

int floor_log2(int n);
int floor_log(int n, LogMode mode);

struct DivisionLayout {
  Variant variant = Variant::New;
  int n = 0;
  int w = 0;  // delta width, floor(log2 n) + 2
  std::shared_ptr<RegisterLayout> regs;

  std::vector<Wire> g, B, C, f, v, delta, r;
  std::vector<Wire> mask;  // new variant
  std::vector<Wire> g0;    // baseline, 2n-1 positions, the tail aliased onto g
  Wire a = 0;
  Wire b = 0;  // new variant
  Wire sign = 0;

  int width() const { return regs->width(); }
  // Dirty wires drawn from B then C, for increments and large controlled NOTs.
  std::vector<Wire> borrowable(std::size_t count) const;
};

// Input registers g (n+1), B (n), C (n) come first.
DivisionLayout make_division_layout(Variant variant, int n);

struct StepParams {
  int l = 0;
  int Lambda = 0;
  int lambda = 0;
  static StepParams of(Variant variant, int n, int l);
};

struct DivisionOptions {
  CtofMode ctof = CtofMode::FourToffoli;
  // Leaves a set after the first step; a negative control for the verifier.
  bool tamper = false;
};

// Register setup before the first step: f <- reversed m, sign, r[0], mask fill, g reversal.
void emit_division_init(Circuit& c, const DivisionLayout& L, const BinPoly& R0);
void emit_division_step(Circuit& c, const DivisionLayout& L, int l, const DivisionOptions& opt = {});
// Reverses v so that it holds V.
void emit_division_final(Circuit& c, const DivisionLayout& L);

// C ^= B / g mod m; everything else restored. Sections: "init", "step:<l>", "steps", "final",
// "modmult" and "uncompute".
void emit_division(Circuit& c, const DivisionLayout& L, const FieldSpec& f, const DivisionOptions& opt = {});
Circuit build_division(Variant variant, const FieldSpec& f, const DivisionOptions& opt = {});
Circuit step_circuit(const DivisionLayout& L, int l, const DivisionOptions& opt = {});

// Count of the division circuit without MODMULT, built one segment at a time so that
// large n stays cheap.
ResourceCount count_division(Variant variant, const FieldSpec& f, const CostModel& model,
                             const DivisionOptions& opt = {});

struct TraceSnapshot {
  int l = 0;
  long long delta = 0;
  std::vector<bool> f;  // f[0..n]
  std::vector<bool> g;  // g[0..n]
  BasisState state;
};

long long decode_delta(const BasisState& s, const DivisionLayout& L);

// Register contents before step 0 and after every step, R0 = m of the field.
std::vector<TraceSnapshot> trace_simulation(Variant variant, const FieldSpec& f, const BinPoly& R1,
                                            const DivisionOptions& opt = {});
// Same for an arbitrary (possibly reducible) R0 of degree n.
std::vector<TraceSnapshot> trace_simulation(Variant variant, const BinPoly& R0, const BinPoly& R1,
                                            const DivisionOptions& opt = {});

struct MonitorResult {
  bool ok = true;
  std::string message;
};

// New variant only. Checks the snapshot after l steps against the classical trace row:
// mask[n-1 .. n-floor(l/2)] = 0, the non-r part of mask is a 1-prefix ending at or
// below Lambda, and the row has m1 <= Lambda and m2 <= lambda.
MonitorResult mask_noninterference_monitor(const TraceSnapshot& snap, const TraceRow& row,
                                           const DivisionLayout& L);

long long toffoli_formula(Variant variant, int n, LogMode mode);
long long qubit_formula(Variant variant, int n, LogMode mode, bool include_shor_bit);

}  // namespace revshor
