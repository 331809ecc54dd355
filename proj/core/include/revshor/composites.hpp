#pragma once

#include <memory>
#include <vector>

#include "revshor/revcirc.hpp"

namespace revshor {

// targets += 1 mod 2^k using k borrowed wires.
Gate make_inc(const std::vector<Wire>& targets, const std::vector<Wire>& borrowed);
// targets += 1 mod 2^k when the control fires. k borrowed wires plus one clean ancilla.
Gate make_cinc(const std::vector<Wire>& targets, Control control, const std::vector<Wire>& borrowed,
               Wire ancilla);
// Cyclic rotation by wire relabeling. left: t[i] <- t[i+1]; right: t[i+1] <- t[i].
// A checked rotation is a shift and throws during simulation if the wrapped-around
// wire is not 0.
Gate make_rotate(const std::vector<Wire>& targets, bool left, bool checked = false);
// MASK_LEFTSHIFT of mask when every control matches its polarity. The condition is
// computed into the clean ancilla by a borrowed-wire CkNOT and uncomputed afterwards.
Gate make_cn_mask_leftshift(const std::vector<Wire>& mask, const std::vector<Control>& controls, Wire ancilla,
                            const std::vector<Wire>& borrowed);

// A[0] ^= A[1], then rotate left. Identity below two wires.
void mask_leftshift_value(BasisState& s, const std::vector<Wire>& A, bool inverse = false);
// The same, controlled on q: one Toffoli and a CSWAP ladder.
std::vector<Gate> mask_leftshift_gates(const std::vector<Wire>& A, Control q);

// Building blocks of the expansions, exposed for tests.
// b += a mod 2^n without ancilla; a is restored.
std::vector<Gate> adder_no_ancilla(const std::vector<Wire>& a, const std::vector<Wire>& b);
// v += 1 via v -= g; g = ~g; v -= g; g = ~g.
std::vector<Gate> increment_borrowed(const std::vector<Wire>& v, const std::vector<Wire>& g);
// k-controlled NOT using k-2 borrowed wires, 4(k-2) Toffolis for k >= 3.
std::vector<Gate> cknot_borrowed(const std::vector<Control>& controls, Wire target,
                                 const std::vector<Wire>& borrowed);
// Adds a control to every gate of a NOT/CNOT/Toffoli sequence. Toffolis become
// three Toffolis through the clean ancilla.
std::vector<Gate> add_control(const std::vector<Gate>& gates, Control control, Wire ancilla);

}  // namespace revshor
