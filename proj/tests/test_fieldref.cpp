#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "revshor/fieldref.hpp"

using namespace revshor;

namespace {

const BinPoly kTableR0{0x117};  // x^8+x^4+x^2+x+1, reducible
const BinPoly kTableR1{0x91};   // x^7+x^4+1

BinPoly rev(std::uint64_t p, int d) { return BinPoly(p).reversed(d); }

}  // namespace

TEST(BinPoly, DegreeAndZero) {
  EXPECT_EQ(BinPoly().degree(), BinPoly::kMinusInfinity);
  EXPECT_TRUE(BinPoly().is_zero());
  EXPECT_EQ(BinPoly(1).degree(), 0);
  EXPECT_EQ(BinPoly::monomial(130).degree(), 130);
  EXPECT_TRUE(BinPoly(1).is_one());
}

TEST(BinPoly, AdditionIsXor) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    BinPoly p = oracle::random_poly(rng, 200);
    EXPECT_TRUE((p + p).is_zero());
  }
}

TEST(BinPoly, MultiplyMatchesOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    std::uint64_t a = rng() >> 33, b = rng() >> 33;
    EXPECT_EQ(BinPoly(a) * BinPoly(b), BinPoly(oracle::mul_trunc(a, b)));
  }
}

TEST(BinPoly, DivmodMatchesOracle) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    std::uint64_t a = rng(), b = rng() >> (rng() % 60);
    if (!b) continue;
    auto [q, r] = BinPoly(a).divmod(BinPoly(b));
    auto [oq, orr] = oracle::divmod(a, b);
    EXPECT_EQ(q, BinPoly(oq));
    EXPECT_EQ(r, BinPoly(orr));
  }
}

TEST(BinPoly, WideDivmodReconstructs) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    BinPoly a = oracle::random_poly(rng, 400), b = oracle::random_nonzero(rng, 150);
    auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(BinPoly, HexRoundTrip) {
  EXPECT_EQ(BinPoly::from_hex("0x117"), BinPoly(0x117));
  EXPECT_EQ(BinPoly::from_hex("91"), BinPoly(0x91));
  EXPECT_EQ(BinPoly().to_hex(), "0x0");
  BinPoly big = BinPoly::monomial(571) + BinPoly(0x425);
  EXPECT_EQ(BinPoly::from_hex(big.to_hex()), big);
  EXPECT_THROW(BinPoly::from_hex("0xzz"), std::invalid_argument);
}

TEST(BinPoly, ShiftsAndReverse) {
  BinPoly p(0b1011);
  EXPECT_EQ(p.shifted_up(70).shifted_down(70), p);
  EXPECT_EQ(p.shifted_down(1), BinPoly(0b101));
  EXPECT_EQ(p.reversed(3), BinPoly(0b1101));
  EXPECT_EQ(p.reversed(5), BinPoly(0b110100));
  EXPECT_THROW(p.reversed(2), std::invalid_argument);
}

TEST(Irreducible, SmallDegreesMatchBruteForce) {
  for (std::uint64_t m = 4; m < (1u << 11); ++m) {
    int d = oracle::deg(m);
    bool irreducible = true;
    for (std::uint64_t q = 2; oracle::deg(q) <= d / 2 && irreducible; ++q)
      if (oracle::divmod(m, q).second == 0) irreducible = false;
    EXPECT_EQ(is_irreducible(BinPoly(m)), irreducible) << std::hex << m;
  }
}

TEST(Irreducible, DefaultModuli) {
  for (int n : {2, 3, 4, 5, 8, 16, 17, 32, 64, 127, 163, 233, 283, 409, 571}) {
    BinPoly m = default_modulus(n);
    EXPECT_EQ(m.degree(), n);
    if (n <= 283) EXPECT_TRUE(is_irreducible(m)) << n;
  }
  EXPECT_EQ(default_modulus(8), BinPoly(0x11b));
  EXPECT_EQ(default_modulus(4), BinPoly(0x13));
  EXPECT_FALSE(is_irreducible(kTableR0));
}

TEST(Divstep, TableFirstStep) {
  DivstepState s{1, rev(0x117, 8), rev(0x91, 7)};
  DivstepState t = divstep(s);
  EXPECT_EQ(t.delta, 0);
  EXPECT_EQ(t.f, s.g);
}

TEST(Divstep, ZeroGKeepsG) {
  DivstepState s{5, BinPoly(0b1011), BinPoly()};
  DivstepState t = divstep(s);
  EXPECT_EQ(t.delta, 6);
  EXPECT_EQ(t.f, s.f);
  EXPECT_TRUE(t.g.is_zero());
}

TEST(Divstep, HandEvaluated) {
  DivstepState t = divstep({1, BinPoly(0b11), BinPoly(1)});
  EXPECT_EQ(t.delta, 0);
  EXPECT_EQ(t.f, BinPoly(1));
  EXPECT_EQ(t.g, BinPoly(1));
}

TEST(Divstep, EvenFFollowsFormula) {
  // (f(0)g + g(0)f)/x with f = x, g = 1 is 1.
  DivstepState t = divstep({0, BinPoly(0b10), BinPoly(1)});
  EXPECT_EQ(t.delta, 1);
  EXPECT_EQ(t.f, BinPoly(0b10));
  EXPECT_EQ(t.g, BinPoly(1));
}

TEST(TransitionMatrices, BranchForms) {
  auto swap = transition_matrices({3, BinPoly(1), BinPoly(0b11)});
  EXPECT_TRUE(swap.swap);
  EXPECT_EQ(swap.S[1][0], 1);
  EXPECT_EQ(swap.S[1][1], -1);
  auto keep = transition_matrices({3, BinPoly(1), BinPoly(0b10)});
  EXPECT_FALSE(keep.swap);
  EXPECT_EQ(keep.S[1][1], 1);
  EXPECT_FALSE(transition_matrices({-2, BinPoly(1), BinPoly(1)}).swap);
}

TEST(TransitionMatrices, AgreeWithDivstep) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    DivstepState s;
    s.delta = static_cast<long long>(rng() % 21) - 10;
    s.f = oracle::random_poly(rng, 40);
    s.f.set_coeff(0, true);
    s.g = oracle::random_poly(rng, 40);
    DivstepState next = divstep(s);
    TransitionMatrices T = transition_matrices(s);
    auto [f, g] = T.apply_T(s.f, s.g);
    auto [one, delta] = T.apply_S(1, s.delta);
    EXPECT_EQ(f, next.f);
    EXPECT_EQ(g, next.g);
    EXPECT_EQ(one, 1);
    EXPECT_EQ(delta, next.delta);
  }
}

TEST(Modinverse, SmallCases) {
  EXPECT_EQ(modinverse(BinPoly(0x11b), BinPoly(1)), BinPoly(1));
  EXPECT_EQ(modinverse(BinPoly(0x13), BinPoly(0b10)), BinPoly(0b1001));
}

TEST(Modinverse, RejectsBadInput) {
  EXPECT_THROW(modinverse(BinPoly(1), BinPoly(1)), std::invalid_argument);
  EXPECT_THROW(modinverse(BinPoly(0x13), BinPoly()), std::invalid_argument);
  EXPECT_THROW(modinverse(BinPoly(0x13), BinPoly(0x13)), std::invalid_argument);
  EXPECT_THROW(modinverse(BinPoly(0x15), BinPoly(0b111)), std::invalid_argument);  // common factor
}

TEST(Modinverse, ExhaustiveDegreeFour) {
  const std::uint64_t m = 0x13;
  for (std::uint64_t a = 1; a < 16; ++a) {
    BinPoly V = modinverse(BinPoly(m), BinPoly(a));
    EXPECT_EQ(V, BinPoly(oracle::inverse(a, m)));
    EXPECT_LT(V.degree(), 4);
  }
}

TEST(Modinverse, RandomMatchesEuclid) {
  std::mt19937_64 rng(31);
  for (int n : {8, 16, 32}) {
    std::uint64_t m = default_modulus(n).low_word();
    for (int t = 0; t < 200; ++t) {
      std::uint64_t a = 0;
      while (!a) a = rng() & ((std::uint64_t{1} << n) - 1);
      BinPoly V = modinverse(BinPoly(m), BinPoly(a));
      EXPECT_EQ(V, BinPoly(oracle::inverse(a, m)));
      EXPECT_EQ(mulmod(V, BinPoly(a), BinPoly(m)), BinPoly(1));
    }
  }
}

TEST(DivstepGcd, MultipleGivesDivisor) {
  BinPoly R1(0b1101);
  GcdResult r = divstep_gcd(R1.shifted_up(1), R1);
  EXPECT_EQ(r.G, R1);
  EXPECT_EQ(r.final_delta % 2, 0);
  EXPECT_EQ(r.G.degree(), r.final_delta / 2);
}

TEST(DivstepGcd, TableVectorIsCoprime) {
  GcdResult r = divstep_gcd(kTableR0, kTableR1);
  EXPECT_EQ(r.final_delta, 0);
  EXPECT_TRUE(r.G.is_one());
}

TEST(DivstepGcd, ExhaustiveAgainstEuclid) {
  for (int d = 1; d <= 8; ++d) {
    for (std::uint64_t R0 = std::uint64_t{1} << d; R0 < (std::uint64_t{2} << d); ++R0) {
      for (std::uint64_t R1 = 0; R1 < (std::uint64_t{1} << d); ++R1) {
        GcdResult r = divstep_gcd(BinPoly(R0), BinPoly(R1));
        std::uint64_t G = oracle::gcd(R0, R1);
        ASSERT_EQ(r.G, BinPoly(G)) << R0 << " " << R1;
        ASSERT_EQ(r.final_delta, 2 * oracle::deg(G));
        ASSERT_LT(r.V.degree(), d - oracle::deg(G));
        ASSERT_EQ(oracle::mulmod(r.V.low_word(), R1, R0), oracle::divmod(G, R0).second);
      }
    }
  }
}

TEST(Trace, TableDeltaColumn) {
  auto rows = trace_divsteps(kTableR0, kTableR1, 8);
  ASSERT_EQ(rows.size(), 16u);
  std::vector<long long> expect{1, 0, 1, 2, -1, 0, 1, 0, 1, 2, 3, 4, -3, -2, -1, 0};
  for (int l = 0; l < 16; ++l) EXPECT_EQ(rows[static_cast<std::size_t>(l)].delta, expect[static_cast<std::size_t>(l)]);
}

TEST(Trace, TableBoundColumns) {
  auto rows = trace_divsteps(kTableR0, kTableR1, 8);
  std::vector<int> m1{7, 7, 6, 5, 5, 5, 3, 3, 3, 2, 1, 0, 0, 0, 0, 0};
  std::vector<int> Lam{8, 7, 7, 6, 6, 5, 5, 4, 4, 3, 3, 2, 2, 1, 1, 0};
  std::vector<int> m2{0, 1, 2, 3, 3, 3, 3, 4, 5, 6, 7, 8, 8, 8, 8, 8};
  for (std::size_t l = 0; l < 16; ++l) {
    EXPECT_EQ(rows[l].m1, m1[l]) << l;
    EXPECT_EQ(rows[l].Lambda, Lam[l]) << l;
    EXPECT_EQ(rows[l].m2, m2[l]) << l;
    EXPECT_EQ(rows[l].lambda, std::min<int>(static_cast<int>(l), 8));
  }
}

TEST(Trace, BoundsHoldOnRandomInputs) {
  std::mt19937_64 rng(41);
  for (int n : {4, 8, 16, 32}) {
    BinPoly m = default_modulus(n);
    for (int t = 0; t < 50; ++t) {
      BinPoly R1 = oracle::random_nonzero(rng, n);
      for (const auto& row : trace_divsteps(m, R1, n)) {
        ASSERT_LE(row.m1, row.Lambda) << n << " " << row.l;
        ASSERT_LE(row.m2, row.lambda) << n << " " << row.l;
      }
    }
  }
}

namespace {

Curve small_curve() { return {BinPoly(0x13), BinPoly(1), BinPoly(1)}; }

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

}  // namespace

TEST(Curve, IdentityAndNegation) {
  Curve c = small_curve();
  for (const auto& p : enumerate_points(c)) {
    EXPECT_EQ(ec_add(c, p, CurvePoint::infinity()), p);
    EXPECT_TRUE(ec_add(c, p, ec_neg(c, p)).at_infinity);
  }
}

TEST(Curve, ClosureAndLagrange) {
  Curve c = small_curve();
  auto pts = enumerate_points(c);
  std::size_t order = pts.size();
  for (const auto& p : pts) {
    CurvePoint acc = CurvePoint::infinity();
    for (std::size_t k = 0; k < order; ++k) acc = ec_add(c, acc, p);
    EXPECT_TRUE(acc.at_infinity);
    for (const auto& q : pts) EXPECT_TRUE(on_curve(c, ec_add(c, p, q)));
  }
}

TEST(Curve, DoublingMatchesAddition) {
  Curve c = small_curve();
  for (const auto& p : enumerate_points(c)) EXPECT_EQ(ec_double(c, p), ec_add(c, p, p));
}

TEST(Curve, Associativity) {
  Curve c = curve8();
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    CurvePoint p = random_point(c, rng), q = random_point(c, rng), r = random_point(c, rng);
    EXPECT_EQ(ec_add(c, ec_add(c, p, q), r), ec_add(c, p, ec_add(c, q, r)));
  }
}

TEST(Curve, RejectsPointsOffCurve) {
  Curve c = small_curve();
  std::set<std::pair<std::uint64_t, std::uint64_t>> on;
  for (const auto& p : enumerate_points(c))
    if (!p.at_infinity) on.insert({p.x.low_word(), p.y.low_word()});
  for (std::uint64_t x = 0; x < 16; ++x)
    for (std::uint64_t y = 0; y < 16; ++y)
      if (!on.count({x, y})) {
        EXPECT_THROW(ec_neg(c, {BinPoly(x), BinPoly(y), false}), std::invalid_argument);
        return;
      }
}
