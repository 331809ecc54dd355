#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "revshor/composites.hpp"
#include "revshor/fieldref.hpp"
#include "revshor/gfgates.hpp"

using namespace revshor;

namespace {

struct Regs {
  std::shared_ptr<RegisterLayout> layout = std::make_shared<RegisterLayout>();
  std::vector<Wire> add(const std::string& name, int size) { return layout->add_register(name, size); }
};

std::vector<bool> bits_of(const BasisState& s, const std::vector<Wire>& reg) {
  std::vector<bool> out;
  for (Wire w : reg) out.push_back(s.get(w));
  return out;
}

void set_bits(BasisState& s, const std::vector<Wire>& reg, const std::vector<bool>& v) {
  for (std::size_t i = 0; i < reg.size(); ++i) s.set(reg[i], v[i]);
}

}  // namespace

TEST(FieldSpec, RejectsReducible) {
  EXPECT_THROW(FieldSpec(BinPoly(0x117)), std::invalid_argument);
  EXPECT_NO_THROW(FieldSpec(BinPoly(0x11b)));
  EXPECT_EQ(FieldSpec::standard(163).n, 163);
}

TEST(ConstAdd, PlacesNots) {
  Regs R;
  auto reg = R.add("r", 8);
  auto q = R.add("q", 1);
  Circuit empty(R.layout);
  const_add(empty, reg, BinPoly());
  EXPECT_EQ(empty.size(), 0u);

  Circuit c(R.layout);
  const_add(c, reg, BinPoly(0b101));
  BasisState s(R.layout->width());
  apply(c, s);
  EXPECT_EQ(s.read(reg), BinPoly(0b101));

  Circuit cc(R.layout);
  const_add(cc, reg, BinPoly(0xff), Control{q[0]});
  BasisState t(R.layout->width());
  t.write(reg, BinPoly(0x5a));
  EXPECT_EQ(simulate(cc, t), t);
  EXPECT_THROW(const_add(c, reg, BinPoly(0x100)), std::invalid_argument);
}

TEST(Add, XorAndInvolution) {
  Regs R;
  auto a = R.add("a", 8), b = R.add("b", 8);
  Circuit c(R.layout);
  add(c, a, b);
  BasisState s(R.layout->width());
  s.write(a, BinPoly(0x3c));
  s.write(b, BinPoly(0x0f));
  BasisState once = simulate(c, s);
  EXPECT_EQ(once.read(b), BinPoly(0x33));
  EXPECT_EQ(simulate(c, once), s);
  EXPECT_THROW(add(c, a, a), std::invalid_argument);
}

TEST(Square, MatchesFieldref) {
  std::mt19937_64 rng(61);
  for (int n : {8, 16}) {
    FieldSpec F = FieldSpec::standard(n);
    Regs R;
    auto src = R.add("s", n), dst = R.add("d", n);
    Circuit c(R.layout);
    square(c, src, dst, F);
    for (const auto& gate : c.gates()) EXPECT_EQ(gate.kind, GateKind::Cnot);
    for (int t = 0; t < 100; ++t) {
      BinPoly x = oracle::random_poly(rng, n), y = oracle::random_poly(rng, n);
      BasisState s(R.layout->width());
      s.write(src, x);
      s.write(dst, y);
      apply(c, s);
      EXPECT_EQ(s.read(dst), y + sqrmod(x, F.m));
      EXPECT_EQ(s.read(src), x);
    }
  }
  FieldSpec F(BinPoly(0x11b));
  Regs R;
  auto src = R.add("s", 8), dst = R.add("d", 8);
  Circuit c(R.layout);
  square(c, src, dst, F);
  BasisState s(R.layout->width());
  s.write(src, BinPoly::monomial(4));
  apply(c, s);
  EXPECT_EQ(s.read(dst), BinPoly(0b11011));
}

TEST(Modmult, MatchesFieldref) {
  std::mt19937_64 rng(62);
  for (int n : {4, 8, 16}) {
    FieldSpec F = FieldSpec::standard(n);
    Regs R;
    auto a = R.add("a", n), b = R.add("b", n), out = R.add("c", n);
    Circuit c(R.layout);
    modmult(c, a, b, out, F);
    EXPECT_EQ(count(c, CostModel::reference()).toffoli, static_cast<long long>(n) * n);
    for (int t = 0; t < 100; ++t) {
      BinPoly x = oracle::random_poly(rng, n), y = oracle::random_poly(rng, n), z = oracle::random_poly(rng, n);
      if (t == 0) x = BinPoly();
      if (t == 1) x = BinPoly(1);
      BasisState s(R.layout->width());
      s.write(a, x);
      s.write(b, y);
      s.write(out, z);
      apply(c, s);
      EXPECT_EQ(s.read(out), z + mulmod(x, y, F.m));
      EXPECT_EQ(s.read(a), x);
      EXPECT_EQ(s.read(b), y);
    }
  }
}

TEST(Shifts, LeftRotate) {
  Regs R;
  auto reg = R.add("r", 4);
  auto q = R.add("q", 1);
  Circuit c(R.layout);
  leftrotate(c, reg);
  BasisState s(R.layout->width());
  set_bits(s, reg, {1, 0, 0, 1});
  apply(c, s);
  EXPECT_EQ(bits_of(s, reg), (std::vector<bool>{0, 0, 1, 1}));

  Circuit cq(R.layout);
  leftrotate_q(cq, reg, {q[0]});
  BasisState t(R.layout->width());
  set_bits(t, reg, {1, 0, 0, 1});
  EXPECT_EQ(simulate(cq, t), t);
  t.set(q[0], true);
  apply(cq, t);
  EXPECT_EQ(bits_of(t, reg), (std::vector<bool>{0, 0, 1, 1}));
  EXPECT_THROW(leftrotate(c, {reg[0]}), std::invalid_argument);
}

TEST(Shifts, RightShiftMultipliesByX) {
  std::mt19937_64 rng(63);
  Regs R;
  auto v = R.add("v", 9);
  Circuit c(R.layout);
  rightshift(c, v);
  for (int t = 0; t < 50; ++t) {
    BinPoly p = oracle::random_poly(rng, 8);
    BasisState s(R.layout->width());
    s.write(v, p);
    apply(c, s);
    EXPECT_EQ(s.read(v), p.shifted_up(1));
  }
  BasisState s(R.layout->width());
  s.set(v.back(), true);
  EXPECT_THROW(apply(c, s), std::logic_error);
}

TEST(MaskLeftshift, Cases) {
  Regs R;
  auto A = R.add("A", 4);
  auto q = R.add("q", 1);
  Circuit c(R.layout);
  mask_leftshift(c, A, {q[0]});
  BasisState s(R.layout->width());
  set_bits(s, A, {1, 1, 1, 0});
  EXPECT_EQ(simulate(c, s), s);
  s.set(q[0], true);
  apply(c, s);
  EXPECT_EQ(bits_of(s, A), (std::vector<bool>{1, 1, 0, 0}));

  Circuit single(R.layout);
  mask_leftshift(single, {A[0]}, {q[0]});
  EXPECT_EQ(single.size(), 0u);
}

TEST(MaskLeftshift, PreservesMaskShapeExhaustively) {
  for (int m = 2; m <= 12; ++m) {
    Regs R;
    auto A = R.add("A", m);
    auto q = R.add("q", 1);
    Circuit c(R.layout);
    mask_leftshift(c, A, {q[0]});
    for (int ones = 0; ones <= m; ++ones) {
      BasisState s(R.layout->width());
      for (int i = 0; i < ones; ++i) s.set(A[static_cast<std::size_t>(i)], true);
      s.set(q[0], true);
      apply(c, s);
      // A lone 1 has nothing to cancel against and rotates to the top wire.
      for (int i = 0; i < m; ++i) {
        bool expect = ones == 1 ? i == m - 1 : i < std::max(ones - 1, 0);
        EXPECT_EQ(s.get(A[static_cast<std::size_t>(i)]), expect) << m << " " << ones;
      }
    }
  }
}

TEST(CnMaskLeftshift, ReferenceCostEntry) {
  Regs R;
  auto mask = R.add("mask", 9), d = R.add("d", 5), b = R.add("b", 1), borrow = R.add("x", 4);
  Circuit c(R.layout);
  cn_mask_leftshift(c, mask, d, b[0], borrow);
  ResourceCount rc = count(c, CostModel::reference());
  EXPECT_EQ(rc.toffoli, 22);
  EXPECT_EQ(rc.cnot, 16);
  EXPECT_EQ(count(c, CostModel::constructed()).toffoli, 2 * 4 * 3 + 9);
  EXPECT_EQ(count(expand(c), CostModel::constructed()).toffoli, 2 * 4 * 3 + 9);
}

TEST(CnMaskLeftshift, ExpansionExhaustive) {
  for (int l = 2; l <= 4; ++l) {
    for (int m = 1; m <= 6; ++m) {
      for (bool pol : {true, false}) {
        Regs R;
        auto mask = R.add("mask", m), d = R.add("d", l), b = R.add("b", 1), borrow = R.add("x", std::max(l - 2, 0));
        Circuit c(R.layout);
        cn_mask_leftshift(c, mask, d, b[0], borrow, pol);
        Circuit e = expand(c);
        const int W = R.layout->width();
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << W); ++s) {
          BasisState in(W);
          for (int i = 0; i < W; ++i) in.set(static_cast<Wire>(i), (s >> i) & 1);
          if (in.get(b[0])) continue;
          BasisState x = simulate(c, in), y = simulate(e, in);
          ASSERT_EQ(x, y);
          bool fire = true;
          for (Wire w : d) fire = fire && in.get(w) == pol;
          if (!fire) ASSERT_EQ(x, in);
        }
      }
    }
  }
}

TEST(IncGate, SwapBranchComplementIdentity) {
  // complementing delta's offset code and skipping the increment maps delta to 1 - delta
  for (int w = 2; w <= 6; ++w) {
    Regs R;
    auto d = R.add("d", w), a = R.add("a", 1), anc = R.add("anc", 1), borrow = R.add("x", w);
    Circuit c(R.layout);
    for (Wire x : d) c.cx({a[0]}, x);
    inc_gate(c, d, {a[0], false}, borrow, anc[0]);
    long long half = 1LL << (w - 1);
    for (long long delta = 1 - half; delta <= half; ++delta) {
      for (int av = 0; av <= 1; ++av) {
        BasisState s(R.layout->width());
        s.write_u64(d, static_cast<std::uint64_t>(delta - 1 + half));
        s.set(a[0], av != 0);
        apply(c, s);
        long long out = static_cast<long long>(s.read_u64(d)) - half + 1;
        long long expect = av ? 1 - delta : 1 + delta;
        if (expect > half) continue;  // wraps in the register
        EXPECT_EQ(out, expect) << w << " " << delta << " " << av;
      }
    }
  }
}

TEST(IncGate, Wraparound) {
  Regs R;
  auto d = R.add("d", 3), a = R.add("a", 1), anc = R.add("anc", 1), borrow = R.add("x", 3);
  Circuit c(R.layout);
  inc_gate(c, d, {a[0], false}, borrow, anc[0]);
  BasisState s(R.layout->width());
  s.write_u64(d, 7);
  apply(c, s);
  EXPECT_EQ(s.read_u64(d), 0u);
  s.write_u64(d, 5);
  apply(c, s);
  EXPECT_EQ(s.read_u64(d), 6u);
  EXPECT_THROW(inc_gate(c, d, {a[0]}, {borrow[0]}, anc[0]), std::invalid_argument);
}
