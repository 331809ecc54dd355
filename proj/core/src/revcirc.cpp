#include "revshor/revcirc.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "revshor/composites.hpp"

namespace revshor {

// ---- RegisterLayout ----

const std::vector<Wire>& RegisterLayout::add_register(const std::string& name, int size) {
  if (size < 0) throw std::invalid_argument("add_register: negative size");
  if (regs_.count(name)) throw std::invalid_argument("add_register: duplicate register " + name);
  auto& wires = regs_[name];
  for (int i = 0; i < size; ++i) {
    wires.push_back(static_cast<Wire>(owner_.size()));
    owner_.emplace_back(name, i);
  }
  order_.push_back(name);
  return wires;
}

void RegisterLayout::add_alias(const std::string& name, int position, const std::string& owner,
                               int owner_position) {
  Wire w = at(owner, owner_position);
  auto it = regs_.find(name);
  if (it == regs_.end()) {
    it = regs_.emplace(name, std::vector<Wire>{}).first;
    order_.push_back(name);
  }
  auto& wires = it->second;
  if (position < 0) throw std::invalid_argument("add_alias: negative position");
  if (std::find(wires.begin(), wires.end(), w) != wires.end())
    throw std::invalid_argument("add_alias: wire already present in register " + name);
  constexpr Wire kUnset = ~Wire{0};
  if (static_cast<std::size_t>(position) >= wires.size()) wires.resize(static_cast<std::size_t>(position) + 1, kUnset);
  if (wires[static_cast<std::size_t>(position)] != kUnset)
    throw std::invalid_argument("add_alias: position already defined");
  wires[static_cast<std::size_t>(position)] = w;
  aliases_.push_back({name, position, owner, owner_position});
}

const std::vector<Wire>& RegisterLayout::reg(const std::string& name) const {
  auto it = regs_.find(name);
  if (it == regs_.end()) throw std::out_of_range("unknown register " + name);
  return it->second;
}

Wire RegisterLayout::at(const std::string& name, int position) const {
  const auto& r = reg(name);
  if (position < 0 || static_cast<std::size_t>(position) >= r.size())
    throw std::out_of_range(name + "[" + std::to_string(position) + "] out of range");
  return r[static_cast<std::size_t>(position)];
}

std::string RegisterLayout::wire_name(Wire w) const {
  if (w >= owner_.size()) return "w" + std::to_string(w);
  const auto& [name, pos] = owner_[w];
  return name + "[" + std::to_string(pos) + "]";
}

// ---- Gate ----

std::string Gate::kind_name() const {
  switch (kind) {
    case GateKind::Not: return "NOT";
    case GateKind::Cnot: return "CNOT";
    case GateKind::Toffoli: return "TOFFOLI";
    case GateKind::CkNot: return "CKNOT";
    case GateKind::Swap: return "SWAP";
    case GateKind::Cswap: return "CSWAP";
    case GateKind::Composite: return op->name() + (inverse ? "^-1" : "");
  }
  return "?";
}

bool operator==(const Gate& a, const Gate& b) {
  return a.kind == b.kind && a.targets == b.targets && a.controls == b.controls && a.borrowed == b.borrowed &&
         a.ancillas == b.ancillas && a.op == b.op && a.inverse == b.inverse;
}

// ---- BasisState ----

BinPoly BasisState::read(const std::vector<Wire>& reg) const {
  BinPoly p;
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (get(reg[i])) p.set_coeff(static_cast<int>(i), true);
  return p;
}

void BasisState::write(const std::vector<Wire>& reg, const BinPoly& value) {
  if (value.degree() >= static_cast<int>(reg.size())) throw std::invalid_argument("write: value wider than register");
  for (std::size_t i = 0; i < reg.size(); ++i) set(reg[i], value.coeff(static_cast<int>(i)));
}

std::uint64_t BasisState::read_u64(const std::vector<Wire>& reg) const {
  if (reg.size() > 64) throw std::invalid_argument("read_u64: register wider than 64 bits");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (get(reg[i])) v |= std::uint64_t{1} << i;
  return v;
}

void BasisState::write_u64(const std::vector<Wire>& reg, std::uint64_t value) {
  if (reg.size() > 64) throw std::invalid_argument("write_u64: register wider than 64 bits");
  for (std::size_t i = 0; i < reg.size(); ++i) set(reg[i], (value >> i) & 1);
}

// ---- CompositeOp ----

std::vector<Gate> CompositeOp::expand(const Gate&) const {
  throw std::logic_error(name() + " has no gate expansion");
}

// ---- Circuit ----

Circuit::Circuit(std::shared_ptr<const RegisterLayout> layout) : layout_(std::move(layout)) {
  if (!layout_) throw std::invalid_argument("Circuit: null layout");
}

void Circuit::add(Gate g) {
  int W = layout_->width();
  std::set<Wire> seen;
  auto claim = [&](Wire w) {
    if (static_cast<int>(w) >= W) throw std::out_of_range("gate touches undefined wire " + std::to_string(w));
    if (!seen.insert(w).second)
      throw std::invalid_argument("gate wire sets overlap at " + layout_->wire_name(w));
  };
  for (Wire w : g.targets) claim(w);
  for (const auto& c : g.controls) claim(c.wire);
  for (Wire w : g.borrowed) claim(w);
  for (Wire w : g.ancillas) claim(w);
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("malformed gate: ") + what);
  };
  switch (g.kind) {
    case GateKind::Not: need(g.targets.size() == 1 && g.controls.empty(), "NOT"); break;
    case GateKind::Cnot: need(g.targets.size() == 1 && g.controls.size() == 1, "CNOT"); break;
    case GateKind::Toffoli: need(g.targets.size() == 1 && g.controls.size() == 2, "TOFFOLI"); break;
    case GateKind::CkNot:
      need(g.targets.size() == 1 && !g.controls.empty(), "CKNOT");
      if (g.controls.size() >= 3 && g.borrowed.size() < g.controls.size() - 2)
        throw std::invalid_argument("CkNOT: insufficient borrowed wires");
      break;
    case GateKind::Swap: need(g.targets.size() == 2 && g.controls.empty(), "SWAP"); break;
    case GateKind::Cswap: need(g.targets.size() == 2 && g.controls.size() == 1, "CSWAP"); break;
    case GateKind::Composite: need(g.op != nullptr, "COMPOSITE without op"); break;
  }
  gates_.push_back(std::move(g));
}

void Circuit::x(Wire t) { mcx({}, t); }
void Circuit::cx(Control c, Wire t) { mcx({c}, t); }
void Circuit::ccx(Control a, Control b, Wire t) { mcx({a, b}, t); }

void Circuit::mcx(const std::vector<Control>& controls, Wire t, const std::vector<Wire>& borrowed) {
  Gate g;
  g.targets = {t};
  g.controls = controls;
  switch (controls.size()) {
    case 0: g.kind = GateKind::Not; break;
    case 1: g.kind = GateKind::Cnot; break;
    case 2: g.kind = GateKind::Toffoli; break;
    default:
      g.kind = GateKind::CkNot;
      g.borrowed = borrowed;
  }
  add(std::move(g));
}

void Circuit::swap(Wire a, Wire b) {
  Gate g;
  g.kind = GateKind::Swap;
  g.targets = {a, b};
  add(std::move(g));
}

void Circuit::cswap(Control c, Wire a, Wire b) {
  Gate g;
  g.kind = GateKind::Cswap;
  g.targets = {a, b};
  g.controls = {c};
  add(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.layout_->width() > layout_->width()) throw std::invalid_argument("append: incompatible layouts");
  std::size_t base = gates_.size();
  for (const auto& g : other.gates_) gates_.push_back(g);
  for (const auto& s : other.sections_) sections_.push_back({s.name, s.begin + base, s.end + base});
}

void Circuit::append_gates(const std::vector<Gate>& gates) {
  for (const auto& g : gates) add(g);
}

void Circuit::add_section(const std::string& name, std::size_t begin, std::size_t end) {
  if (begin > end || end > gates_.size()) throw std::out_of_range("add_section: bad range");
  sections_.push_back({name, begin, end});
}

const Section* Circuit::find_section(const std::string& name) const {
  for (const auto& s : sections_)
    if (s.name == name) return &s;
  return nullptr;
}

// ---- simulation ----

namespace {

bool fires(const std::vector<Control>& cs, const BasisState& s) {
  for (const auto& c : cs)
    if (s.get(c.wire) != c.polarity) return false;
  return true;
}

}  // namespace

void apply_gate(const Gate& g, BasisState& s, bool inverse) {
  switch (g.kind) {
    case GateKind::Not:
    case GateKind::Cnot:
    case GateKind::Toffoli:
    case GateKind::CkNot:
      if (fires(g.controls, s)) s.flip(g.targets[0]);
      break;
    case GateKind::Swap:
      s.swap(g.targets[0], g.targets[1]);
      break;
    case GateKind::Cswap:
      if (fires(g.controls, s)) s.swap(g.targets[0], g.targets[1]);
      break;
    case GateKind::Composite:
      g.op->apply(s, g, g.inverse != inverse);
      break;
  }
}

void apply_range(const Circuit& c, BasisState& s, std::size_t begin, std::size_t end, bool inverse) {
  if (s.width() != c.layout().width()) throw std::invalid_argument("apply: state width does not match circuit");
  const auto& gs = c.gates();
  if (!inverse) {
    for (std::size_t i = begin; i < end; ++i) apply_gate(gs[i], s, false);
  } else {
    for (std::size_t i = end; i-- > begin;) apply_gate(gs[i], s, true);
  }
}

void apply(const Circuit& c, BasisState& s) { apply_range(c, s, 0, c.size()); }

BasisState simulate(const Circuit& c, const BasisState& s) {
  BasisState out = s;
  apply(c, out);
  return out;
}

Gate inverse(const Gate& g) {
  Gate r = g;
  if (g.kind == GateKind::Composite) {
    if (!g.op->invertible()) throw std::logic_error(g.op->name() + " lacks an inverse");
    r.inverse = !g.inverse;
  }
  return r;
}

Circuit reverse(const Circuit& c) {
  Circuit r(c.layout_ptr());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) r.add(inverse(*it));
  std::size_t n = c.size();
  for (const auto& s : c.sections()) r.add_section(s.name, n - s.end, n - s.begin);
  r.metadata = c.metadata;
  return r;
}

// ---- counting ----

ResourceCount& ResourceCount::operator+=(const ResourceCount& o) {
  toffoli += o.toffoli;
  cnot += o.cnot;
  nots += o.nots;
  width = std::max(width, o.width);
  borrowed_peak = std::max(borrowed_peak, o.borrowed_peak);
  return *this;
}

CostModel CostModel::reference() {
  CostModel m;
  m.label_ = "reference";
  m.reference_ = true;
  return m;
}

CostModel CostModel::constructed() {
  CostModel m;
  m.label_ = "constructed";
  m.reference_ = false;
  return m;
}

CostModel::Entry CostModel::cknot(int k) const {
  if (k <= 0) return {0, 0, 1};
  if (k == 1) return {0, 1, 0};
  if (k == 2) return {1, 0, 0};
  return {reference_ ? 3LL * k - 6 : 4LL * (k - 2), 0, 0};
}

CostModel::Entry CostModel::inc(int k) const {
  if (k <= 0) return {};
  long long kk = k;
  if (reference_) return {4 * kk - 4, 10 * kk - 6, 2 * kk};
  if (k == 1) return {0, 2, 2};
  return {4 * kk - 4, 10 * kk - 12, 2 * kk};
}

CostModel::Entry CostModel::cost(const Gate& g) const {
  switch (g.kind) {
    case GateKind::Not: return {0, 0, 1};
    case GateKind::Cnot: return {0, 1, 0};
    case GateKind::Toffoli: return {1, 0, 0};
    case GateKind::CkNot: return cknot(static_cast<int>(g.controls.size()));
    case GateKind::Swap: return {0, 3, 0};
    case GateKind::Cswap: return {1, 2, 0};
    case GateKind::Composite: break;
  }
  std::string name = g.op->name();
  if (auto it = rules_.find(name); it != rules_.end()) return it->second(g);
  int k = static_cast<int>(g.targets.size());
  if (name == "INC") return inc(k);
  if (name == "CINC") {
    // every gate of the increment gains the control
    Entry e = inc(k);
    return {3 * e.toffoli + e.cnot, e.nots, 0};
  }
  if (name == "ROTATE") return {};
  if (name == "CN_MASK_LEFTSHIFT") {
    long long l = static_cast<long long>(g.controls.size());
    long long m = static_cast<long long>(g.targets.size());
    if (reference_) return {4 * l + m - 7, 2 * m - 2, 0};
    Entry ck = cknot(static_cast<int>(l));
    long long shift = m >= 2 ? m : 0;
    return {2 * ck.toffoli + shift, 2 * ck.cnot + 2 * (shift ? m - 1 : 0), 2 * ck.nots};
  }
  throw std::invalid_argument("cost model has no entry for composite " + name);
}

ResourceCount count_gates(const std::vector<Gate>& gates, const CostModel& model) {
  ResourceCount r;
  for (const auto& g : gates) {
    auto e = model.cost(g);
    r.toffoli += e.toffoli;
    r.cnot += e.cnot;
    r.nots += e.nots;
    r.borrowed_peak = std::max(r.borrowed_peak, static_cast<int>(g.borrowed.size()));
  }
  return r;
}

ResourceCount count_range(const Circuit& c, const CostModel& model, std::size_t begin, std::size_t end) {
  ResourceCount r;
  const auto& gs = c.gates();
  for (std::size_t i = begin; i < end; ++i) {
    auto e = model.cost(gs[i]);
    r.toffoli += e.toffoli;
    r.cnot += e.cnot;
    r.nots += e.nots;
    r.borrowed_peak = std::max(r.borrowed_peak, static_cast<int>(gs[i].borrowed.size()));
  }
  r.width = c.layout().width();
  return r;
}

ResourceCount count(const Circuit& c, const CostModel& model) { return count_range(c, model, 0, c.size()); }

// ---- expansion ----

std::vector<Gate> expand(const Gate& g) {
  if (g.kind == GateKind::CkNot) return cknot_borrowed(g.controls, g.targets[0], g.borrowed);
  if (g.kind == GateKind::Composite && g.op->expandable()) return g.op->expand(g);
  throw std::invalid_argument("expand: " + g.kind_name() + " is not an expandable gate");
}

Circuit expand(const Circuit& c) {
  Circuit out(c.layout_ptr());
  for (const auto& g : c.gates()) {
    bool exp = g.kind == GateKind::CkNot || (g.kind == GateKind::Composite && g.op->expandable());
    if (exp) out.append_gates(expand(g));
    else out.add(g);
  }
  out.metadata = c.metadata;
  return out;
}

std::string dump(const Circuit& c) {
  std::ostringstream os;
  const auto& L = c.layout();
  for (const auto& g : c.gates()) {
    os << g.kind_name();
    for (Wire t : g.targets) os << ' ' << L.wire_name(t);
    os << " |";
    for (const auto& ctl : g.controls) os << ' ' << L.wire_name(ctl.wire) << '(' << (ctl.polarity ? 1 : 0) << ')';
    os << " |";
    for (Wire b : g.borrowed) os << ' ' << L.wire_name(b);
    if (!g.ancillas.empty()) {
      os << " |";
      for (Wire a : g.ancillas) os << ' ' << L.wire_name(a);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace revshor
