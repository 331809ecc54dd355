#include "revshor/composites.hpp"

#include <stdexcept>

namespace revshor {

namespace {

Gate prim(std::vector<Control> controls, Wire t) {
  Gate g;
  g.kind = controls.empty() ? GateKind::Not : controls.size() == 1 ? GateKind::Cnot : GateKind::Toffoli;
  g.controls = std::move(controls);
  g.targets = {t};
  return g;
}

void add_to(BasisState& s, const std::vector<Wire>& w, bool decrement) {
  if (w.size() > 63) {
    // ripple for wide registers
    if (!decrement) {
      for (Wire x : w) {
        s.flip(x);
        if (s.get(x)) return;
      }
    } else {
      for (Wire x : w) {
        s.flip(x);
        if (!s.get(x)) return;
      }
    }
    return;
  }
  std::uint64_t mask = (std::uint64_t{1} << w.size()) - 1;
  std::uint64_t v = s.read_u64(w);
  v = (decrement ? v - 1 : v + 1) & mask;
  s.write_u64(w, v);
}

class IncOp final : public CompositeOp {
 public:
  std::string name() const override { return "INC"; }
  void apply(BasisState& s, const Gate& g, bool inverse) const override {
    add_to(s, g.targets, inverse);
  }
  bool expandable() const override { return true; }
  std::vector<Gate> expand(const Gate& g) const override {
    auto gates = increment_borrowed(g.targets, g.borrowed);
    if (g.inverse) return {gates.rbegin(), gates.rend()};
    return gates;
  }
};

class CincOp final : public CompositeOp {
 public:
  std::string name() const override { return "CINC"; }
  void apply(BasisState& s, const Gate& g, bool inverse) const override {
    const Control& c = g.controls.at(0);
    if (s.get(g.ancillas.at(0))) throw std::logic_error("CINC: ancilla is not clean");
    if (s.get(c.wire) == c.polarity) add_to(s, g.targets, inverse);
  }
  bool expandable() const override { return true; }
  std::vector<Gate> expand(const Gate& g) const override {
    auto gates = add_control(increment_borrowed(g.targets, g.borrowed), g.controls.at(0), g.ancillas.at(0));
    if (g.inverse) return {gates.rbegin(), gates.rend()};
    return gates;
  }
};

class RotateOp final : public CompositeOp {
 public:
  RotateOp(bool left, bool checked) : left_(left), checked_(checked) {}
  std::string name() const override { return "ROTATE"; }
  void apply(BasisState& s, const Gate& g, bool inverse) const override {
    const auto& t = g.targets;
    if (t.size() < 2) return;
    bool left = left_ != inverse;
    // a checked rotation is a shift: the wire that wraps around must hold 0
    if (checked_ && s.get(left ? t.front() : t.back()))
      throw std::logic_error("shift: wrapped-around wire is not 0");
    if (left) {
      for (std::size_t i = 0; i + 1 < t.size(); ++i) s.swap(t[i], t[i + 1]);
    } else {
      for (std::size_t i = t.size() - 1; i > 0; --i) s.swap(t[i], t[i - 1]);
    }
  }

 private:
  bool left_;
  bool checked_;
};

class MaskShiftOp final : public CompositeOp {
 public:
  std::string name() const override { return "CN_MASK_LEFTSHIFT"; }
  void apply(BasisState& s, const Gate& g, bool inverse) const override {
    if (s.get(g.ancillas.at(0))) throw std::logic_error("CN_MASK_LEFTSHIFT: ancilla is not clean");
    for (const auto& c : g.controls)
      if (s.get(c.wire) != c.polarity) return;
    mask_leftshift_value(s, g.targets, inverse);
  }
  bool expandable() const override { return true; }
  std::vector<Gate> expand(const Gate& g) const override {
    Wire q = g.ancillas.at(0);
    auto ck = cknot_borrowed(g.controls, q, g.borrowed);
    std::vector<Gate> out = ck;
    auto shift = mask_leftshift_gates(g.targets, {q});
    out.insert(out.end(), shift.begin(), shift.end());
    out.insert(out.end(), ck.begin(), ck.end());
    if (g.inverse) return {out.rbegin(), out.rend()};
    return out;
  }
};

}  // namespace

Gate make_inc(const std::vector<Wire>& targets, const std::vector<Wire>& borrowed) {
  static const auto op = std::make_shared<IncOp>();
  Gate g;
  g.kind = GateKind::Composite;
  g.op = op;
  g.targets = targets;
  g.borrowed = borrowed;
  return g;
}

Gate make_cinc(const std::vector<Wire>& targets, Control control, const std::vector<Wire>& borrowed,
               Wire ancilla) {
  static const auto op = std::make_shared<CincOp>();
  Gate g;
  g.kind = GateKind::Composite;
  g.op = op;
  g.targets = targets;
  g.controls = {control};
  g.borrowed = borrowed;
  g.ancillas = {ancilla};
  return g;
}

Gate make_rotate(const std::vector<Wire>& targets, bool left, bool checked) {
  static const std::shared_ptr<const CompositeOp> ops[2][2] = {
      {std::make_shared<RotateOp>(false, false), std::make_shared<RotateOp>(false, true)},
      {std::make_shared<RotateOp>(true, false), std::make_shared<RotateOp>(true, true)}};
  Gate g;
  g.kind = GateKind::Composite;
  g.op = ops[left][checked];
  g.targets = targets;
  return g;
}

Gate make_cn_mask_leftshift(const std::vector<Wire>& mask, const std::vector<Control>& controls, Wire ancilla,
                            const std::vector<Wire>& borrowed) {
  static const auto op = std::make_shared<MaskShiftOp>();
  Gate g;
  g.kind = GateKind::Composite;
  g.op = op;
  g.targets = mask;
  g.controls = controls;
  g.ancillas = {ancilla};
  std::size_t need = controls.size() >= 3 ? controls.size() - 2 : 0;
  if (borrowed.size() < need) throw std::invalid_argument("CN_MASK_LEFTSHIFT: insufficient borrowed wires");
  g.borrowed.assign(borrowed.begin(), borrowed.begin() + static_cast<std::ptrdiff_t>(need));
  return g;
}

void mask_leftshift_value(BasisState& s, const std::vector<Wire>& A, bool inverse) {
  if (A.size() < 2) return;
  if (!inverse) {
    if (s.get(A[1])) s.flip(A[0]);
    for (std::size_t i = 0; i + 1 < A.size(); ++i) s.swap(A[i], A[i + 1]);
  } else {
    for (std::size_t i = A.size() - 1; i > 0; --i) s.swap(A[i], A[i - 1]);
    if (s.get(A[1])) s.flip(A[0]);
  }
}

std::vector<Gate> mask_leftshift_gates(const std::vector<Wire>& A, Control q) {
  std::vector<Gate> out;
  if (A.size() < 2) return out;
  out.push_back(prim({{A[1]}, q}, A[0]));
  for (std::size_t i = 0; i + 1 < A.size(); ++i) {
    Gate g;
    g.kind = GateKind::Cswap;
    g.controls = {q};
    g.targets = {A[i], A[i + 1]};
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Gate> adder_no_ancilla(const std::vector<Wire>& a, const std::vector<Wire>& b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("adder: operand widths differ");
  std::size_t n = a.size();
  std::vector<Gate> g;
  if (n == 1) {
    g.push_back(prim({{a[0]}}, b[0]));
    return g;
  }
  for (std::size_t i = 1; i < n; ++i) g.push_back(prim({{a[i]}}, b[i]));
  for (std::size_t i = n - 2; i >= 1; --i) g.push_back(prim({{a[i]}}, a[i + 1]));
  for (std::size_t i = 0; i + 1 < n; ++i) g.push_back(prim({{a[i]}, {b[i]}}, a[i + 1]));
  for (std::size_t i = n - 1; i >= 1; --i) {
    g.push_back(prim({{a[i]}}, b[i]));
    g.push_back(prim({{a[i - 1]}, {b[i - 1]}}, a[i]));
  }
  for (std::size_t i = 1; i + 1 < n; ++i) g.push_back(prim({{a[i]}}, a[i + 1]));
  for (std::size_t i = 0; i < n; ++i) g.push_back(prim({{a[i]}}, b[i]));
  return g;
}

std::vector<Gate> increment_borrowed(const std::vector<Wire>& v, const std::vector<Wire>& g) {
  if (g.size() < v.size()) throw std::invalid_argument("increment: needs one borrowed wire per target");
  std::vector<Wire> gw(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(v.size()));
  auto add = adder_no_ancilla(gw, v);
  std::vector<Gate> sub(add.rbegin(), add.rend());
  std::vector<Gate> out;
  for (int pass = 0; pass < 2; ++pass) {
    out.insert(out.end(), sub.begin(), sub.end());
    for (Wire w : gw) out.push_back(prim({}, w));
  }
  return out;
}

std::vector<Gate> cknot_borrowed(const std::vector<Control>& c, Wire target, const std::vector<Wire>& d) {
  std::size_t k = c.size();
  if (k == 0) return {prim({}, target)};
  if (k <= 2) return {prim(c, target)};
  if (d.size() < k - 2) throw std::invalid_argument("cknot: needs k-2 borrowed wires");
  // d[j] collects the conjunction of c[0..j+1].
  std::vector<Gate> half;
  half.push_back(prim({c[k - 1], {d[k - 3]}}, target));
  for (std::size_t j = k - 3; j-- > 0;) half.push_back(prim({c[j + 2], {d[j]}}, d[j + 1]));
  half.push_back(prim({c[0], c[1]}, d[0]));
  for (std::size_t j = 0; j + 3 < k; ++j) half.push_back(prim({c[j + 2], {d[j]}}, d[j + 1]));
  std::vector<Gate> out = half;
  out.insert(out.end(), half.begin(), half.end());
  return out;
}

std::vector<Gate> add_control(const std::vector<Gate>& gates, Control control, Wire ancilla) {
  std::vector<Gate> out;
  for (const Gate& g : gates) {
    switch (g.kind) {
      case GateKind::Not:
        out.push_back(prim({control}, g.targets[0]));
        break;
      case GateKind::Cnot:
        out.push_back(prim({control, g.controls[0]}, g.targets[0]));
        break;
      case GateKind::Toffoli:
        out.push_back(prim({control, g.controls[0]}, ancilla));
        out.push_back(prim({{ancilla}, g.controls[1]}, g.targets[0]));
        out.push_back(prim({control, g.controls[0]}, ancilla));
        break;
      default:
        throw std::invalid_argument("add_control: only NOT/CNOT/Toffoli sequences");
    }
  }
  return out;
}

}  // namespace revshor
