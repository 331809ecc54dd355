#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "revshor/binpoly.hpp"

namespace revshor {

using Wire = std::uint32_t;

// Named registers over a dense wire space. A register position either owns a freshly
// allocated wire or aliases a position of another register.
class RegisterLayout {
 public:
  struct Alias {
    std::string name;
    int position;
    std::string owner;
    int owner_position;
  };

  const std::vector<Wire>& add_register(const std::string& name, int size);
  // Makes name[position] resolve to owner[owner_position]. Creates the register on first use.
  void add_alias(const std::string& name, int position, const std::string& owner, int owner_position);

  bool has(const std::string& name) const { return regs_.count(name) != 0; }
  const std::vector<Wire>& reg(const std::string& name) const;
  Wire at(const std::string& name, int position) const;
  int width() const { return static_cast<int>(owner_.size()); }
  // Owner-qualified name, e.g. "g[3]".
  std::string wire_name(Wire w) const;
  const std::vector<std::string>& names() const { return order_; }
  const std::vector<Alias>& aliases() const { return aliases_; }

 private:
  std::map<std::string, std::vector<Wire>> regs_;
  std::vector<std::string> order_;
  std::vector<std::pair<std::string, int>> owner_;
  std::vector<Alias> aliases_;
};

enum class GateKind { Not, Cnot, Toffoli, CkNot, Swap, Cswap, Composite };

struct Control {
  Wire wire;
  bool polarity = true;  // true: fires on 1, false: fires on 0
  friend bool operator==(const Control&, const Control&) = default;
};

class CompositeOp;

struct Gate {
  GateKind kind = GateKind::Not;
  std::vector<Wire> targets;
  std::vector<Control> controls;
  std::vector<Wire> borrowed;  // any value on entry, restored on exit
  std::vector<Wire> ancillas;  // zero on entry, zero on exit
  std::shared_ptr<const CompositeOp> op;
  bool inverse = false;

  std::string kind_name() const;
  friend bool operator==(const Gate& a, const Gate& b);
};

class BasisState {
 public:
  BasisState() = default;
  explicit BasisState(int width) : bits_(static_cast<std::size_t>(width), 0) {}

  int width() const { return static_cast<int>(bits_.size()); }
  bool get(Wire w) const { return bits_[w] != 0; }
  void set(Wire w, bool v) { bits_[w] = v ? 1 : 0; }
  void flip(Wire w) { bits_[w] ^= 1; }
  void swap(Wire a, Wire b) { std::swap(bits_[a], bits_[b]); }

  BinPoly read(const std::vector<Wire>& reg) const;
  void write(const std::vector<Wire>& reg, const BinPoly& value);
  std::uint64_t read_u64(const std::vector<Wire>& reg) const;
  void write_u64(const std::vector<Wire>& reg, std::uint64_t value);

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// A composite gate: functional semantics for simulation and, optionally, an
// expansion into NOT/CNOT/Toffoli gates.
class CompositeOp {
 public:
  virtual ~CompositeOp() = default;
  virtual std::string name() const = 0;
  virtual void apply(BasisState& s, const Gate& g, bool inverse) const = 0;
  virtual bool invertible() const { return true; }
  virtual bool expandable() const { return false; }
  virtual std::vector<Gate> expand(const Gate& g) const;
};

struct Section {
  std::string name;
  std::size_t begin;
  std::size_t end;
};

class Circuit {
 public:
  explicit Circuit(std::shared_ptr<const RegisterLayout> layout);

  const RegisterLayout& layout() const { return *layout_; }
  const std::shared_ptr<const RegisterLayout>& layout_ptr() const { return layout_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  // Validates wire ranges, disjointness and borrowed-wire sufficiency.
  void add(Gate g);
  void x(Wire t);
  void cx(Control c, Wire t);
  void ccx(Control a, Control b, Wire t);
  // NOT with any number of controls; 3 or more controls need k-2 borrowed wires.
  void mcx(const std::vector<Control>& controls, Wire t, const std::vector<Wire>& borrowed = {});
  void swap(Wire a, Wire b);
  void cswap(Control c, Wire a, Wire b);
  void append(const Circuit& other);
  void append_gates(const std::vector<Gate>& gates);

  void add_section(const std::string& name, std::size_t begin, std::size_t end);
  const std::vector<Section>& sections() const { return sections_; }
  const Section* find_section(const std::string& name) const;

  std::map<std::string, std::string> metadata;

 private:
  std::shared_ptr<const RegisterLayout> layout_;
  std::vector<Gate> gates_;
  std::vector<Section> sections_;
};

void apply_gate(const Gate& g, BasisState& s, bool inverse = false);
void apply(const Circuit& c, BasisState& s);
void apply_range(const Circuit& c, BasisState& s, std::size_t begin, std::size_t end, bool inverse = false);
// Returns the output state, leaving s untouched.
BasisState simulate(const Circuit& c, const BasisState& s);

Gate inverse(const Gate& g);
Circuit reverse(const Circuit& c);

struct ResourceCount {
  long long toffoli = 0;
  long long cnot = 0;
  long long nots = 0;
  int width = 0;
  int borrowed_peak = 0;

  ResourceCount& operator+=(const ResourceCount& o);
  friend bool operator==(const ResourceCount&, const ResourceCount&) = default;
};

// Per-gate costs. The reference preset charges 4k-4 Toffoli / 10k-6 CNOT for the
// increment and 3k-6 Toffoli for the large controlled NOT; the constructed preset
// uses the counts of the expansions this library emits.
class CostModel {
 public:
  struct Entry {
    long long toffoli = 0;
    long long cnot = 0;
    long long nots = 0;
  };
  using Rule = std::function<Entry(const Gate&)>;

  static CostModel reference();
  static CostModel constructed();

  const std::string& label() const { return label_; }
  Entry cknot(int k) const;
  Entry inc(int k) const;
  Entry cost(const Gate& g) const;
  void set_rule(const std::string& composite, Rule rule) { rules_[composite] = std::move(rule); }

 private:
  std::string label_;
  bool reference_ = true;
  std::map<std::string, Rule> rules_;
};

ResourceCount count(const Circuit& c, const CostModel& model);
ResourceCount count_range(const Circuit& c, const CostModel& model, std::size_t begin, std::size_t end);
ResourceCount count_gates(const std::vector<Gate>& gates, const CostModel& model);

// Expands one CkNOT or expandable composite into NOT/CNOT/Toffoli gates.
std::vector<Gate> expand(const Gate& g);
// Expands every expandable gate of a circuit. Relabeling composites are kept.
Circuit expand(const Circuit& c);

// One gate per line: KIND targets.. | controls(polarity).. | borrowed..
std::string dump(const Circuit& c);

}  // namespace revshor
