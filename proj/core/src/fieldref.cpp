#include "revshor/fieldref.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace revshor {

namespace {

int degree_or(const BinPoly& p, int fallback) {
  return p.is_zero() ? fallback : p.degree();
}

// Runs 2d-1 divsteps from (1, rev_d(R0), rev_{d-1}(R1)). P tracks x^k * v_k so that
// every intermediate is an ordinary polynomial.
struct DivstepRun {
  long long delta = 1;
  BinPoly f;
  BinPoly P;
};

DivstepRun run_divsteps(const BinPoly& R0, const BinPoly& R1) {
  int d = R0.degree();
  if (R0.is_zero() || d <= 0) throw std::invalid_argument("divsteps: deg R0 must be positive");
  if (R1.degree() >= d) throw std::invalid_argument("divsteps: deg R1 must be below deg R0");
  BinPoly f = R0.reversed(d);
  BinPoly g = R1.reversed(d - 1);
  BinPoly P, Q{1};
  long long delta = 1;
  for (int k = 0; k < 2 * d - 1; ++k) {
    if (delta > 0 && g.coeff(0)) {
      delta = -delta;
      std::swap(f, g);
      std::swap(P, Q);
    }
    bool g0 = g.coeff(0);
    delta += 1;
    if (g0) {
      g += f;
      Q += P;
    }
    g = g.shifted_down(1);
    P = P.shifted_up(1);
  }
  return {delta, f, P};
}

}  // namespace

BinPoly mulmod(const BinPoly& a, const BinPoly& b, const BinPoly& m) { return (a * b).mod(m); }

BinPoly sqrmod(const BinPoly& a, const BinPoly& m) { return (a * a).mod(m); }

BinPoly poly_gcd(BinPoly a, BinPoly b) {
  while (!b.is_zero()) {
    BinPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const BinPoly& m) {
  int n = m.degree();
  if (m.is_zero() || n < 1) return false;
  if (n == 1) return true;
  if (!m.coeff(0)) return false;
  BinPoly x{2};
  // frob[k] = x^(2^k) mod m
  std::vector<BinPoly> frob{x.mod(m)};
  for (int k = 1; k <= n; ++k) frob.push_back(sqrmod(frob.back(), m));
  if (frob[static_cast<std::size_t>(n)] != x.mod(m)) return false;
  std::vector<int> primes;
  int rest = n;
  for (int p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) primes.push_back(rest);
  for (int p : primes) {
    BinPoly t = frob[static_cast<std::size_t>(n / p)] + x;
    if (!poly_gcd(m, t).is_one()) return false;
  }
  return true;
}

BinPoly default_modulus(int n) {
  if (n < 1) throw std::invalid_argument("default_modulus: n must be positive");
  static const std::map<int, std::vector<int>> known = {
      {8, {8, 4, 3, 1, 0}},     {16, {16, 5, 3, 1, 0}},   {163, {163, 7, 6, 3, 0}},
      {233, {233, 74, 0}},      {283, {283, 12, 7, 5, 0}}, {409, {409, 87, 0}},
      {571, {571, 10, 5, 2, 0}},
  };
  auto build = [](const std::vector<int>& exps) {
    BinPoly p;
    for (int e : exps) p.flip_coeff(e);
    return p;
  };
  if (auto it = known.find(n); it != known.end()) return build(it->second);
  BinPoly top = BinPoly::monomial(n) + BinPoly{1};
  if (n == 1) return BinPoly{2};
  for (int k = 1; k < n; ++k) {
    BinPoly p = top + BinPoly::monomial(k);
    if (is_irreducible(p)) return p;
  }
  for (int k3 = 3; k3 < n; ++k3)
    for (int k2 = 2; k2 < k3; ++k2)
      for (int k1 = 1; k1 < k2; ++k1) {
        BinPoly p = top + BinPoly::monomial(k1) + BinPoly::monomial(k2) + BinPoly::monomial(k3);
        if (is_irreducible(p)) return p;
      }
  throw std::runtime_error("default_modulus: no low-weight irreducible polynomial found");
}

DivstepState divstep(const DivstepState& s) {
  bool g0 = s.g.coeff(0);
  bool f0 = s.f.coeff(0);
  DivstepState out;
  BinPoly num;
  if (s.delta > 0 && g0) {
    out.delta = 1 - s.delta;
    out.f = s.g;
    if (g0) num += s.f;
    if (f0) num += s.g;
  } else {
    out.delta = 1 + s.delta;
    out.f = s.f;
    if (f0) num += s.g;
    if (g0) num += s.f;
  }
  if (num.coeff(0)) throw std::logic_error("divstep: numerator not divisible by x");
  out.g = num.shifted_down(1);
  return out;
}

std::pair<BinPoly, BinPoly> TransitionMatrices::apply_T(const BinPoly& a, const BinPoly& b) const {
  BinPoly top = swap ? b : a;
  BinPoly num;
  if (g0) num += a;
  if (f0) num += b;
  if (num.coeff(0)) throw std::logic_error("apply_T: second row not divisible by x");
  return {top, num.shifted_down(1)};
}

std::pair<long long, long long> TransitionMatrices::apply_S(long long one, long long delta) const {
  return {S[0][0] * one + S[0][1] * delta, S[1][0] * one + S[1][1] * delta};
}

TransitionMatrices transition_matrices(const DivstepState& s) {
  TransitionMatrices t;
  t.f0 = s.f.coeff(0) ? 1 : 0;
  t.g0 = s.g.coeff(0) ? 1 : 0;
  t.swap = s.delta > 0 && t.g0 != 0;
  if (t.swap) t.S = {{{1, 0}, {1, -1}}};
  else t.S = {{{1, 0}, {1, 1}}};
  return t;
}

GcdResult divstep_gcd(const BinPoly& R0, const BinPoly& R1) {
  int d = R0.degree();
  DivstepRun run = run_divsteps(R0, R1);
  if (run.delta < 0 || run.delta % 2 != 0)
    throw std::logic_error("divstep_gcd: final delta is not a nonnegative even number");
  int degG = static_cast<int>(run.delta / 2);
  if (!run.f.coeff(0)) throw std::logic_error("divstep_gcd: f(0) = 0");
  GcdResult res;
  res.final_delta = run.delta;
  res.G = run.f.reversed(degG);
  res.V = run.P.reversed(d + degG);
  return res;
}

BinPoly modinverse(const BinPoly& R0, const BinPoly& R1) {
  if (R0.is_zero() || R0.degree() <= 0) throw std::invalid_argument("modinverse: deg R0 must be positive");
  if (R1.is_zero()) throw std::invalid_argument("modinverse: R1 is zero");
  if (R1.degree() >= R0.degree()) throw std::invalid_argument("modinverse: deg R1 >= deg R0");
  GcdResult r = divstep_gcd(R0, R1);
  if (!r.G.is_one()) throw std::invalid_argument("modinverse: R1 is not invertible modulo R0");
  return r.V;
}

std::vector<TraceRow> trace_divsteps(const BinPoly& R0, const BinPoly& R1, int n) {
  int d = R0.degree();
  if (R0.is_zero() || d <= 0 || R1.is_zero() || R1.degree() >= d)
    throw std::invalid_argument("trace_divsteps: need deg R0 > deg R1 and R1 != 0");
  DivstepState s{1, R0.reversed(d), R1.reversed(d - 1)};
  // v and r as the circuit holds them: v is multiplied by x every step, r is never divided.
  BinPoly v, r{1};
  std::vector<TraceRow> rows;
  for (int l = 0; l < 2 * n; ++l) {
    TraceRow row;
    row.l = l;
    row.delta = s.delta;
    row.f = s.f;
    row.g = s.g;
    int df = degree_or(s.f, -1);
    row.m1 = s.g.is_zero() ? df : std::min(df, s.g.degree());
    // floor((l-1)/2) with true floor, so row 0 reports n.
    int half = (l - 1) >= 0 ? (l - 1) / 2 : -1;
    row.Lambda = n - 1 - half;
    row.m2 = std::max(degree_or(v.shifted_up(1), -1), degree_or(r, -1));
    row.lambda = std::min(l, n);
    rows.push_back(row);

    v = v.shifted_up(1);
    TransitionMatrices t = transition_matrices(s);
    if (t.swap) std::swap(v, r);
    // after a swap g(0) is the old f(0)
    bool g0 = t.swap ? t.f0 != 0 : t.g0 != 0;
    if (g0) r += v;
    s = divstep(s);
  }
  return rows;
}

bool on_curve(const Curve& c, const CurvePoint& p) {
  if (p.at_infinity) return true;
  const BinPoly& m = c.m;
  BinPoly x = p.x.mod(m), y = p.y.mod(m);
  BinPoly x2 = sqrmod(x, m);
  BinPoly lhs = sqrmod(y, m) + mulmod(x, y, m);
  BinPoly rhs = mulmod(x2, x, m) + mulmod(c.a, x2, m) + c.b.mod(m);
  return lhs == rhs;
}

CurvePoint ec_neg(const Curve& c, const CurvePoint& p) {
  if (!on_curve(c, p)) throw std::invalid_argument("ec_neg: point not on curve");
  if (p.at_infinity) return p;
  return {p.x, p.y + p.x, false};
}

CurvePoint ec_double(const Curve& c, const CurvePoint& p) {
  if (!on_curve(c, p)) throw std::invalid_argument("ec_double: point not on curve");
  if (p.at_infinity || p.x.is_zero()) return CurvePoint::infinity();
  const BinPoly& m = c.m;
  BinPoly lam = p.x + mulmod(p.y, modinverse(m, p.x), m);
  BinPoly x3 = sqrmod(lam, m) + lam + c.a;
  BinPoly y3 = sqrmod(p.x, m) + mulmod(lam + BinPoly{1}, x3, m);
  return {x3.mod(m), y3.mod(m), false};
}

CurvePoint ec_add(const Curve& c, const CurvePoint& p, const CurvePoint& q) {
  if (!on_curve(c, p) || !on_curve(c, q)) throw std::invalid_argument("ec_add: point not on curve");
  if (p.at_infinity) return q;
  if (q.at_infinity) return p;
  const BinPoly& m = c.m;
  if (p.x == q.x) {
    if (p.y == q.y) return ec_double(c, p);
    return CurvePoint::infinity();  // q = -p
  }
  BinPoly lam = mulmod(p.y + q.y, modinverse(m, p.x + q.x), m);
  BinPoly x3 = sqrmod(lam, m) + lam + p.x + q.x + c.a;
  BinPoly y3 = mulmod(q.x + x3, lam, m) + x3 + q.y;
  return {x3.mod(m), y3.mod(m), false};
}

std::vector<CurvePoint> enumerate_points(const Curve& c) {
  int n = c.m.degree();
  if (n > 12) throw std::invalid_argument("enumerate_points: field too large");
  std::vector<CurvePoint> pts{CurvePoint::infinity()};
  std::uint64_t q = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < q; ++x)
    for (std::uint64_t y = 0; y < q; ++y) {
      CurvePoint p{BinPoly{x}, BinPoly{y}, false};
      if (on_curve(c, p)) pts.push_back(p);
    }
  return pts;
}

}  // namespace revshor
