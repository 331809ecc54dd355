#pragma once

#include <vector>

#include "revshor/divider.hpp"
#include "revshor/fieldref.hpp"
#include "revshor/revcirc.hpp"

namespace revshor {

// Controlled addition of a constant point. x1 is the divisor register g, y1 is B and
// lambda is C of the division layout; q is one extra wire.
struct PointAddCircuit {
  DivisionLayout layout;
  std::vector<Wire> x1, y1, lambda;
  Wire q = 0;
  Circuit circuit;
};

// (x1, y1) <- (x1, y1) + P2 when q = 1, unchanged when q = 0. Valid for x1 != x2 and
// x1 + P2 != (x2, *). Sections "division:0" and "division:1" mark the two division boxes.
PointAddCircuit build_point_add(const Curve& curve, const CurvePoint& P2, Variant variant,
                                const DivisionOptions& opt = {});

// Toffoli count of one point addition outside the two division boxes: two MODMULTs and
// three controlled register additions.
long long point_add_nondivision_toffoli(int n);

struct ShorEstimate {
  int n = 0;
  Variant variant = Variant::New;
  LogMode log_mode = LogMode::Log2;
  long long division_qubits = 0;
  long long total_qubits = 0;  // division qubits plus the recycled control qubit
  long long division_toffoli = 0;
  long long per_addition_toffoli = 0;
  long long additions = 0;
  long long total_toffoli = 0;
  long long coarse_toffoli = 0;  // 4n times the division count
};

ShorEstimate shor_rollup(int n, Variant variant, LogMode mode);

}  // namespace revshor
