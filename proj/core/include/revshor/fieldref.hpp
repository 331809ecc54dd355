#pragma once

#include <array>
#include <utility>
#include <vector>

#include "revshor/binpoly.hpp"

namespace revshor {

// Arithmetic in GF(2)[x] / m.
BinPoly mulmod(const BinPoly& a, const BinPoly& b, const BinPoly& m);
BinPoly sqrmod(const BinPoly& a, const BinPoly& m);
BinPoly poly_gcd(BinPoly a, BinPoly b);
// Rabin's test.
bool is_irreducible(const BinPoly& m);
// Low-weight irreducible polynomial of degree n: the standard ones for common sizes,
// otherwise the first irreducible trinomial or pentanomial found.
BinPoly default_modulus(int n);

struct DivstepState {
  long long delta = 1;
  BinPoly f;
  BinPoly g;
  friend bool operator==(const DivstepState&, const DivstepState&) = default;
};

DivstepState divstep(const DivstepState& s);

// The two divstep transition matrices. Over GF(2) the signs vanish, so
// T = [[0,1],[g0/x, f0/x]] on the swap branch and [[1,0],[g0/x, f0/x]] otherwise.
struct TransitionMatrices {
  bool swap = false;
  int f0 = 1;
  int g0 = 0;
  std::array<std::array<int, 2>, 2> S{};

  // Applies T to a column (a, b). The second row must be divisible by x.
  std::pair<BinPoly, BinPoly> apply_T(const BinPoly& a, const BinPoly& b) const;
  // Applies S to (1, delta).
  std::pair<long long, long long> apply_S(long long one, long long delta) const;
};

TransitionMatrices transition_matrices(const DivstepState& s);

// Inverse of R1 modulo R0 through 2d-1 divsteps on the reversed polynomials.
BinPoly modinverse(const BinPoly& R0, const BinPoly& R1);

struct GcdResult {
  BinPoly G;  // monic gcd
  BinPoly V;  // V * R1 = G mod R0, deg V < d - deg G
  long long final_delta = 0;
};

GcdResult divstep_gcd(const BinPoly& R0, const BinPoly& R1);

struct TraceRow {
  int l = 0;
  long long delta = 0;
  BinPoly f;
  BinPoly g;
  int m1 = 0;
  int Lambda = 0;
  int m2 = 0;
  int lambda = 0;
};

// State after l divsteps for l = 0 .. 2n-1 together with the degree bounds
// (m1, Lambda) on f, g and (m2, lambda) on v, r.
std::vector<TraceRow> trace_divsteps(const BinPoly& R0, const BinPoly& R1, int n);

// Curve y^2 + xy = x^3 + a x^2 + b over GF(2^n) = GF(2)[x]/m.
struct Curve {
  BinPoly m;
  BinPoly a;
  BinPoly b;
};

struct CurvePoint {
  BinPoly x;
  BinPoly y;
  bool at_infinity = false;
  static CurvePoint infinity() { return {{}, {}, true}; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

bool on_curve(const Curve& c, const CurvePoint& p);
CurvePoint ec_neg(const Curve& c, const CurvePoint& p);
CurvePoint ec_double(const Curve& c, const CurvePoint& p);
CurvePoint ec_add(const Curve& c, const CurvePoint& p, const CurvePoint& q);
// All affine points plus the point at infinity. Only for small n.
std::vector<CurvePoint> enumerate_points(const Curve& c);

}  // namespace revshor
