#include "revshor/gfgates.hpp"

#include <set>
#include <stdexcept>

#include "revshor/composites.hpp"
#include "revshor/fieldref.hpp"

namespace revshor {

namespace {

void require_width(const std::vector<Wire>& reg, int n, const char* what) {
  if (static_cast<int>(reg.size()) != n) throw std::invalid_argument(std::string(what) + ": register width mismatch");
}

void require_disjoint(std::initializer_list<const std::vector<Wire>*> regs, const char* what) {
  std::set<Wire> seen;
  for (const auto* r : regs)
    for (Wire w : *r)
      if (!seen.insert(w).second) throw std::invalid_argument(std::string(what) + ": registers overlap");
}

}  // namespace

FieldSpec::FieldSpec(BinPoly modulus) : n(modulus.degree()), m(std::move(modulus)) {
  if (m.is_zero() || n < 1) throw std::invalid_argument("FieldSpec: modulus must have positive degree");
  bool trusted = n > 32 && default_modulus(n) == m;
  if (!trusted && !is_irreducible(m)) throw std::invalid_argument("FieldSpec: modulus is reducible");
}

FieldSpec FieldSpec::standard(int n) { return FieldSpec(default_modulus(n)); }

void const_add(Circuit& c, const std::vector<Wire>& reg, const BinPoly& k, std::optional<Control> ctrl) {
  if (k.degree() >= static_cast<int>(reg.size())) throw std::invalid_argument("const_add: constant wider than register");
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (!k.coeff(static_cast<int>(i))) continue;
    if (ctrl) c.cx(*ctrl, reg[i]);
    else c.x(reg[i]);
  }
}

void add(Circuit& c, const std::vector<Wire>& src, const std::vector<Wire>& dst, std::optional<Control> ctrl) {
  require_width(dst, static_cast<int>(src.size()), "add");
  require_disjoint({&src, &dst}, "add");
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (ctrl) c.ccx(*ctrl, {src[i]}, dst[i]);
    else c.cx({src[i]}, dst[i]);
  }
}

void square(Circuit& c, const std::vector<Wire>& src, const std::vector<Wire>& dst, const FieldSpec& f) {
  require_width(src, f.n, "square");
  require_width(dst, f.n, "square");
  require_disjoint({&src, &dst}, "square");
  // column j of the squaring matrix is x^(2j) mod m
  for (int j = 0; j < f.n; ++j) {
    BinPoly col = BinPoly::monomial(2 * j).mod(f.m);
    for (int k = 0; k < f.n; ++k)
      if (col.coeff(k)) c.cx({src[static_cast<std::size_t>(j)]}, dst[static_cast<std::size_t>(k)]);
  }
}

void mul_x(Circuit& c, const std::vector<Wire>& reg, const FieldSpec& f, bool inverse) {
  require_width(reg, f.n, "mul_x");
  // after the rotation reg[0] holds the old top coefficient t, and t * x^n = t * (m - x^n)
  auto fold = [&] {
    for (int k = 1; k < f.n; ++k)
      if (f.m.coeff(k)) c.cx({reg[0]}, reg[static_cast<std::size_t>(k)]);
  };
  if (!inverse) {
    c.add(make_rotate(reg, false));
    fold();
  } else {
    fold();
    c.add(make_rotate(reg, true));
  }
}

void modmult(Circuit& c, const std::vector<Wire>& a, const std::vector<Wire>& b, const std::vector<Wire>& out,
             const FieldSpec& f) {
  require_width(a, f.n, "modmult");
  require_width(b, f.n, "modmult");
  require_width(out, f.n, "modmult");
  require_disjoint({&a, &b, &out}, "modmult");
  // Horner: out <- x^-n out, then out <- x out + a_i b for i = n-1 .. 0
  for (int i = 0; i < f.n; ++i) mul_x(c, out, f, true);
  for (int i = f.n - 1; i >= 0; --i) {
    mul_x(c, out, f);
    for (int j = 0; j < f.n; ++j)
      c.ccx({a[static_cast<std::size_t>(i)]}, {b[static_cast<std::size_t>(j)]}, out[static_cast<std::size_t>(j)]);
  }
}

void rightshift(Circuit& c, const std::vector<Wire>& reg) {
  if (reg.size() < 2) throw std::invalid_argument("rightshift: width below 2");
  c.add(make_rotate(reg, false, true));
}

void leftrotate(Circuit& c, const std::vector<Wire>& reg) {
  if (reg.size() < 2) throw std::invalid_argument("leftrotate: width below 2");
  c.add(make_rotate(reg, true));
}

void leftrotate_q(Circuit& c, const std::vector<Wire>& reg, Control q) {
  if (reg.size() < 2) throw std::invalid_argument("leftrotate_q: width below 2");
  for (std::size_t i = 0; i + 1 < reg.size(); ++i) c.cswap(q, reg[i], reg[i + 1]);
}

void mask_leftshift(Circuit& c, const std::vector<Wire>& A, Control q) {
  c.append_gates(mask_leftshift_gates(A, q));
}

void cn_mask_leftshift(Circuit& c, const std::vector<Wire>& mask, const std::vector<Wire>& delta, Wire b,
                       const std::vector<Wire>& borrowed, bool polarity) {
  if (delta.empty()) throw std::invalid_argument("cn_mask_leftshift: empty condition register");
  std::vector<Control> controls;
  for (Wire w : delta) controls.push_back({w, polarity});
  c.add(make_cn_mask_leftshift(mask, controls, b, borrowed));
}

void inc_gate(Circuit& c, const std::vector<Wire>& delta, Control ctrl, const std::vector<Wire>& borrowed,
              Wire ancilla) {
  if (borrowed.size() < delta.size()) throw std::invalid_argument("inc_gate: needs one borrowed wire per bit");
  std::vector<Wire> use(borrowed.begin(), borrowed.begin() + static_cast<std::ptrdiff_t>(delta.size()));
  c.add(make_cinc(delta, ctrl, use, ancilla));
}

}  // namespace revshor
