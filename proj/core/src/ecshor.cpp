#include "revshor/ecshor.hpp"

#include <stdexcept>

#include "revshor/gfgates.hpp"

namespace revshor {

PointAddCircuit build_point_add(const Curve& curve, const CurvePoint& P2, Variant variant, const DivisionOptions& opt) {
  if (P2.at_infinity) throw std::invalid_argument("point add: P2 must be an affine point");
  if (!on_curve(curve, P2)) throw std::invalid_argument("point add: P2 is not on the curve");
  FieldSpec field(curve.m);
  const int n = field.n;
  DivisionLayout L = make_division_layout(variant, n);
  Wire q = L.regs->add_register("q", 1)[0];
  PointAddCircuit out{L, {L.g.begin(), L.g.end() - 1}, L.B, L.C, q, Circuit(L.regs)};
  Circuit& c = out.circuit;
  const auto& x1 = out.x1;
  const auto& y1 = out.y1;
  const auto& lam = out.lambda;
  BinPoly x2 = P2.x.mod(field.m), y2 = P2.y.mod(field.m);
  Control ctl{q};

  auto division = [&](int k) {
    std::size_t s = c.size();
    emit_division(c, L, field, opt);
    c.add_section("division:" + std::to_string(k), s, c.size());
  };

  const_add(c, x1, x2);
  const_add(c, y1, y2, ctl);
  division(0);  // lambda = y1 / x1
  modmult(c, x1, lam, y1, field);  // y1 = 0
  const_add(c, x1, (curve.a + x2).mod(field.m), ctl);
  square(c, lam, y1, field);
  add(c, y1, x1, ctl);
  add(c, lam, x1, ctl);  // x1 = x3 + x2 when q = 1
  square(c, lam, y1, field);
  modmult(c, x1, lam, y1, field);
  division(1);  // lambda = 0
  const_add(c, x1, x2);
  const_add(c, y1, y2, ctl);
  add(c, x1, y1, ctl);

  c.metadata["n"] = std::to_string(n);
  c.metadata["variant"] = to_string(variant);
  return out;
}

long long point_add_nondivision_toffoli(int n) {
  long long N = n;
  return 2 * N * N + 3 * N;
}

ShorEstimate shor_rollup(int n, Variant variant, LogMode mode) {
  ShorEstimate e;
  e.n = n;
  e.variant = variant;
  e.log_mode = mode;
  e.division_qubits = qubit_formula(variant, n, mode, false);
  e.total_qubits = qubit_formula(variant, n, mode, true);
  e.division_toffoli = toffoli_formula(variant, n, mode);
  long long N = n;
  // each division box also carries its own MODMULT, which the closed form leaves out
  e.per_addition_toffoli = 2 * (e.division_toffoli + N * N) + point_add_nondivision_toffoli(n);
  e.additions = 2 * N + 2;
  e.total_toffoli = e.additions * e.per_addition_toffoli;
  e.coarse_toffoli = 4 * N * e.division_toffoli;
  return e;
}

}  // namespace revshor
