#pragma once

#include <optional>
#include <vector>

#include "revshor/binpoly.hpp"
#include "revshor/revcirc.hpp"

namespace revshor {

// GF(2^n) = GF(2)[x]/m.
struct FieldSpec {
  int n = 0;
  BinPoly m;

  // Rejects reducible m. The check runs for n <= 32 and for any m not in the
  // default table; larger default moduli are trusted.
  explicit FieldSpec(BinPoly modulus);
  static FieldSpec standard(int n);
};

// Builders append to c. Registers are wire lists indexed by coefficient.

// reg ^= k, each NOT optionally controlled.
void const_add(Circuit& c, const std::vector<Wire>& reg, const BinPoly& k, std::optional<Control> ctrl = {});
// dst ^= src, one CNOT per bit; with a control, one Toffoli per bit.
void add(Circuit& c, const std::vector<Wire>& src, const std::vector<Wire>& dst,
         std::optional<Control> ctrl = {});
// dst ^= src^2 mod m as a CNOT network.
void square(Circuit& c, const std::vector<Wire>& src, const std::vector<Wire>& dst, const FieldSpec& f);
// reg <- x * reg mod m (or x^-1 * reg when inverse). One relabeling plus CNOTs.
void mul_x(Circuit& c, const std::vector<Wire>& reg, const FieldSpec& f, bool inverse = false);
// c ^= a * b mod m without ancilla, n^2 Toffolis.
void modmult(Circuit& c, const std::vector<Wire>& a, const std::vector<Wire>& b, const std::vector<Wire>& out,
             const FieldSpec& f);

// reg[i+1] <- reg[i]; the top wire must be 0 and moves to reg[0].
void rightshift(Circuit& c, const std::vector<Wire>& reg);
// reg[i] <- reg[i+1 mod len].
void leftrotate(Circuit& c, const std::vector<Wire>& reg);
// leftrotate when q fires, as a CSWAP ladder.
void leftrotate_q(Circuit& c, const std::vector<Wire>& reg, Control q);
// A[0] ^= A[1] and leftrotate, both controlled on q. Identity for a single wire.
void mask_leftshift(Circuit& c, const std::vector<Wire>& A, Control q);
// mask_leftshift applied iff every delta wire equals polarity. b must be clean;
// needs delta.size()-2 borrowed wires.
void cn_mask_leftshift(Circuit& c, const std::vector<Wire>& mask, const std::vector<Wire>& delta, Wire b,
                       const std::vector<Wire>& borrowed, bool polarity = true);
// delta += 1 mod 2^w when the control fires. Needs w borrowed wires and one clean ancilla.
void inc_gate(Circuit& c, const std::vector<Wire>& delta, Control ctrl, const std::vector<Wire>& borrowed,
              Wire ancilla);

}  // namespace revshor
