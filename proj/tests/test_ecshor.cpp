#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "revshor/ecshor.hpp"

using namespace revshor;

namespace {

Curve curve8() { return {BinPoly(0x11b), BinPoly(1), BinPoly(0x57)}; }

CurvePoint random_point(const Curve& c, std::mt19937_64& rng) {
  int n = c.m.degree();
  for (;;) {
    BinPoly x = oracle::random_poly(rng, n);
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
      CurvePoint p{x, BinPoly(y), false};
      if (on_curve(c, p)) return p;
    }
  }
}

BasisState load(const PointAddCircuit& pa, const CurvePoint& P1, bool q) {
  BasisState s(pa.layout.width());
  s.write(pa.x1, P1.x);
  s.write(pa.y1, P1.y);
  s.set(pa.q, q);
  return s;
}

}  // namespace

TEST(PointAdd, MatchesGroupLaw) {
  Curve c = curve8();
  std::mt19937_64 rng(81);
  CurvePoint P2 = random_point(c, rng);
  PointAddCircuit pa = build_point_add(c, P2, Variant::New);
  int tested = 0;
  while (tested < 20) {
    CurvePoint P1 = random_point(c, rng);
    CurvePoint sum = ec_add(c, P1, P2);
    if (P1.x == P2.x || sum.at_infinity || sum.x == P2.x) continue;
    BasisState s = load(pa, P1, true);
    apply(pa.circuit, s);
    BasisState expect = load(pa, sum, true);
    EXPECT_EQ(s, expect);
    EXPECT_TRUE(on_curve(c, {s.read(pa.x1), s.read(pa.y1), false}));
    ++tested;
  }
}

TEST(PointAdd, ControlOffIsIdentity) {
  Curve c = curve8();
  std::mt19937_64 rng(82);
  CurvePoint P2 = random_point(c, rng);
  PointAddCircuit pa = build_point_add(c, P2, Variant::Baseline);
  for (int t = 0; t < 20; ++t) {
    CurvePoint P1 = random_point(c, rng);
    if (P1.x == P2.x) continue;
    BasisState s = load(pa, P1, false);
    EXPECT_EQ(simulate(pa.circuit, s), s);
  }
}

TEST(PointAdd, ReverseUndoes) {
  Curve c = curve8();
  std::mt19937_64 rng(83);
  PointAddCircuit pa = build_point_add(c, random_point(c, rng), Variant::New);
  Circuit back = reverse(pa.circuit);
  for (int t = 0; t < 5; ++t) {
    BasisState s = load(pa, random_point(c, rng), true);
    EXPECT_EQ(simulate(back, simulate(pa.circuit, s)), s);
  }
}

TEST(PointAdd, RejectsInfinity) {
  EXPECT_THROW(build_point_add(curve8(), CurvePoint::infinity(), Variant::New), std::invalid_argument);
}

TEST(PointAdd, NondivisionCountMatchesCircuit) {
  Curve c = curve8();
  std::mt19937_64 rng(84);
  PointAddCircuit pa = build_point_add(c, random_point(c, rng), Variant::New);
  const Section* d0 = pa.circuit.find_section("division:0");
  const Section* d1 = pa.circuit.find_section("division:1");
  ASSERT_TRUE(d0 && d1);
  CostModel ref = CostModel::reference();
  long long outside = count_range(pa.circuit, ref, 0, d0->begin).toffoli +
                      count_range(pa.circuit, ref, d0->end, d1->begin).toffoli +
                      count_range(pa.circuit, ref, d1->end, pa.circuit.size()).toffoli;
  EXPECT_EQ(outside, point_add_nondivision_toffoli(8));
  EXPECT_EQ(pa.layout.width(), qubit_formula(Variant::New, 8, LogMode::Log2, true));
}

TEST(Rollup, Conventions) {
  for (int n : {8, 16, 163, 571}) {
    for (LogMode m : {LogMode::Log2, LogMode::CompatLn}) {
      ShorEstimate b = shor_rollup(n, Variant::Baseline, m), e = shor_rollup(n, Variant::New, m);
      EXPECT_EQ(e.additions, 2 * n + 2);
      EXPECT_EQ(e.total_qubits, e.division_qubits + 1);
      EXPECT_EQ(b.total_qubits - e.total_qubits, (n + 1) / 2 - 1);
      EXPECT_EQ(e.coarse_toffoli, 4LL * n * toffoli_formula(Variant::New, n, m));
      EXPECT_EQ(e.total_toffoli, e.additions * e.per_addition_toffoli);
    }
  }
  EXPECT_EQ(shor_rollup(8, Variant::New, LogMode::CompatLn).total_qubits, 64);
}
