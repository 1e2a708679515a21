// Copyright 2026 The qlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Two- and three-qutrit constructions from TCX/TCZ gates. Each one comes with
// the matrix it is supposed to implement; `verify` compares the two.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qlogic/circuit.hpp"

namespace qlogic {

struct NamedSynthesis {
  Circuit circuit;
  ComplexMatrix target;
  std::string label;
};

inline PhaseMatch verify(const NamedSynthesis& s, double tol = kUnitaryTol) {
  return equal_up_to_phase(circuit_unitary(s.circuit), s.target, tol);
}

/// Matrix of the basis permutation |x⟩ → |f(x)⟩ on `width` qudits.
inline ComplexMatrix permutation_target(std::size_t d, std::size_t width,
                                        const std::function<std::vector<std::size_t>(std::vector<std::size_t>)>& f) {
  const std::size_t n = ipow(d, width);
  ComplexMatrix m(n);
  std::vector<std::size_t> digits(width);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t w = width, rest = x; w-- > 0; rest /= d) digits[w] = rest % d;
    std::size_t y = 0;
    for (auto v : f(digits)) y = y * d + v;
    m(y, x) = 1.0;
  }
  return m;
}

// ---------------------------------------------------------------------------
// TCX rewrites.

inline SubspacePair ordered(std::size_t a, std::size_t b) { return a < b ? SubspacePair{a, b} : SubspacePair{b, a}; }

/// Moves the control value of a controlled gate from n to n′ by conjugating
/// the control wire with X^(n n′).
inline std::vector<CircuitGate> transform_tcx_control(const CircuitGate& g, std::size_t new_value) {
  if (!g.control) throw Error(ErrorCode::BadWire, "transform_tcx_control: gate has no control");
  const std::size_t n = g.control->value;
  if (n == new_value) return {g};
  const auto swap = on(g.control->wire, gate::XPair{ordered(n, new_value)});
  CircuitGate moved = g;
  moved.control->value = new_value;
  return {swap, moved, swap};
}

/// Level permutation p with p·X^(ij)·p† = X^(i′j′), identity-like elsewhere.
inline gate::Perm pair_relabel(std::size_t d, SubspacePair from, SubspacePair to) {
  std::vector<std::size_t> perm(d, d);
  perm[from.j] = to.j;
  perm[from.k] = to.k;
  std::size_t next = 0;
  for (std::size_t l = 0; l < d; ++l) {
    if (perm[l] != d) continue;
    while (next == to.j || next == to.k) ++next;
    perm[l] = next++;
  }
  return {perm};
}

/// Rewrites a controlled X^(ij) as p, controlled X^(i′j′), p† in time order,
/// where p·X^(ij)·p† = X^(i′j′). The product equals the input gate.
inline std::vector<CircuitGate> transform_tcx_target(const CircuitGate& g, SubspacePair new_pair, std::size_t d = 3) {
  const auto* x = std::get_if<gate::XPair>(&g.op);
  if (!x) throw Error(ErrorCode::BadSubspace, "transform_tcx_target: target is not an X gate");
  check_pair(d, new_pair);
  if (x->pair == new_pair) return {g};
  const auto p = pair_relabel(d, x->pair, new_pair);
  CircuitGate moved = g;
  moved.op = gate::XPair{new_pair};
  return {on(g.target, p), moved, on(g.target, inverse(p))};
}

/// Controlled Z^[m] (control value n) on wires (0, 1), built from one TCX and
/// H conjugation. Level 0 borrows the (0,1) construction and X^(01).
inline NamedSynthesis tcz_from_tcx(std::size_t n, std::size_t m, std::size_t d = 3) {
  check_level(d, n);
  check_level(d, m);
  if (d < 2) throw Error(ErrorCode::BadDimension, "tcz_from_tcx: d must be >= 2");
  NamedSynthesis s{{d, 2, {}}, controlled_gate(d, n, gate::ZLevel{m}), "tcz"};
  const SubspacePair p{0, m == 0 ? 1 : m};
  if (m == 0) s.circuit.add(on(1, gate::XPair{{0, 1}}));
  s.circuit.add(on(1, gate::HPair{p}));
  s.circuit.add(ctrl(0, n, gate::XPair{p}, 1));
  s.circuit.add(on(1, gate::HPair{p}));
  if (m == 0) s.circuit.add(on(1, gate::XPair{{0, 1}}));
  return s;
}

// ---------------------------------------------------------------------------
// Two-qutrit arithmetic gates. Control is wire 0, target wire 1.

inline NamedSynthesis synth_feynman() {
  NamedSynthesis s{{3, 2, {}},
                   permutation_target(3, 2, [](auto v) { return std::vector<std::size_t>{v[0], (v[0] + v[1]) % 3}; }),
                   "feynman"};
  const SubspacePair p01{0, 1}, p12{1, 2};
  // +1 is X^(12) then X^(01) in time order; +2 is the reverse.
  s.circuit.add(ctrl(0, 1, gate::XPair{p12}, 1)).add(ctrl(0, 1, gate::XPair{p01}, 1));
  s.circuit.add(ctrl(0, 2, gate::XPair{p01}, 1)).add(ctrl(0, 2, gate::XPair{p12}, 1));
  return s;
}

/// |a, b⟩ → |a, a − b mod 3⟩. For fixed a, b ↦ a − b is a transposition.
inline NamedSynthesis synth_gxor() {
  NamedSynthesis s{{3, 2, {}},
                   permutation_target(3, 2, [](auto v) { return std::vector<std::size_t>{v[0], (v[0] + 3 - v[1]) % 3}; }),
                   "gxor"};
  s.circuit.add(ctrl(0, 0, gate::XPair{{1, 2}}, 1));
  s.circuit.add(ctrl(0, 1, gate::XPair{{0, 1}}, 1));
  s.circuit.add(ctrl(0, 2, gate::XPair{{0, 2}}, 1));
  return s;
}

/// Conditional swap |i,j⟩ ↔ |j,i⟩ on wires (a, b), three TCX.
inline std::vector<CircuitGate> conditional_swap(SubspacePair p, std::size_t a = 0, std::size_t b = 1) {
  return {ctrl(a, p.j, gate::XPair{p}, b), ctrl(b, p.j, gate::XPair{p}, a), ctrl(a, p.j, gate::XPair{p}, b)};
}

inline NamedSynthesis synth_swap() {
  NamedSynthesis s{{3, 2, {}},
                   permutation_target(3, 2, [](auto v) { return std::vector<std::size_t>{v[1], v[0]}; }),
                   "swap"};
  for (SubspacePair p : {SubspacePair{0, 1}, SubspacePair{0, 2}, SubspacePair{1, 2}})
    for (auto& g : conditional_swap(p)) s.circuit.add(g);
  return s;
}

// ---------------------------------------------------------------------------
// Three-qutrit Toffoli gates on wires (0, 1) controlling wire 2.

/// X^(ij) on wire 2 iff wires 0 and 1 read n and n′.
inline NamedSynthesis synth_toffoli_elementary(std::size_t n = 2, std::size_t n2 = 2, SubspacePair pair = {0, 1}) {
  check_level(3, n);
  check_level(3, n2);
  check_pair(3, pair);
  NamedSynthesis s{{3, 3, {}}, {}, "toffoli-elem"};
  s.target = permutation_target(3, 3, [&](auto v) {
    if (v[0] == n && v[1] == n2) v[2] = v[2] == pair.j ? pair.k : (v[2] == pair.k ? pair.j : v[2]);
    return v;
  });

  // Reference circuit fires on |0,0⟩ and flips levels (0,1) of wire 2; the
  // level maps below relabel it onto (n, n′, pair).
  const std::array<std::size_t, 3> la{n, (n + 1) % 3, (n + 2) % 3};
  const std::array<std::size_t, 3> lb{n2, (n2 + 1) % 3, (n2 + 2) % 3};
  const std::array<std::size_t, 3> lc{pair.j, pair.k, 3 - pair.j - pair.k};
  auto x = [](const std::array<std::size_t, 3>& l, std::size_t p, std::size_t q) {
    return gate::XPair{ordered(l[p], l[q])};
  };
  auto phase = [](const std::array<std::size_t, 3>& l, std::size_t level, double phi) {
    return gate::LevelPhase{l[level], phi};
  };
  const double pi = std::numbers::pi;
  const gate::HPair h{pair};

  s.circuit.add(on(2, h));
  s.circuit.add(on(0, phase(la, 0, pi))).add(on(1, phase(lb, 1, pi))).add(on(2, phase(lc, 0, -pi / 2)));
  s.circuit.add(ctrl(1, lb[0], x(lc, 0, 2), 2)).add(on(2, phase(lc, 0, pi / 2)));
  s.circuit.add(ctrl(0, la[0], x(lc, 0, 2), 2)).add(on(2, phase(lc, 0, -pi / 2)));
  s.circuit.add(ctrl(1, lb[0], x(lc, 0, 2), 2)).add(on(2, phase(lc, 0, pi / 2)));
  s.circuit.add(ctrl(0, la[0], x(lc, 0, 2), 2));
  s.circuit.add(ctrl(0, la[0], x(lb, 1, 2), 1)).add(on(1, phase(lb, 1, pi))).add(ctrl(0, la[0], x(lb, 1, 2), 1));
  s.circuit.add(on(2, h));
  return s;
}

/// |1,1,c⟩ → |1,1,c+1 mod 3⟩. The cycle X^(12)·X^(01) is a group commutator
/// of the two singly-controlled transpositions.
inline NamedSynthesis synth_toffoli_typical() {
  NamedSynthesis s{{3, 3, {}}, {}, "toffoli-typical"};
  s.target = permutation_target(3, 3, [](auto v) {
    if (v[0] == 1 && v[1] == 1) v[2] = (v[2] + 1) % 3;
    return v;
  });
  for (int rep = 0; rep < 2; ++rep) {
    s.circuit.add(ctrl(0, 1, gate::XPair{{0, 1}}, 2));
    s.circuit.add(ctrl(1, 1, gate::XPair{{1, 2}}, 2));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Muthukrishnan-Stroud gates, control value 2 on wire 0.

struct MSParams {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double phi0 = 0.0;
  double phi1 = 0.0;

  /// (c₀, c₁, c₂); unit norm by construction.
  std::array<Complex, 3> coefficients() const {
    return {std::polar(std::cos(theta1), phi0), std::polar(std::sin(theta1) * std::cos(theta2), phi1),
            Complex(std::sin(theta1) * std::sin(theta2))};
  }
};

/// ℤ = P·Q, sending (c₀, c₁, c₂) to |2⟩.
inline ComplexMatrix ms_z_matrix(const MSParams& p) {
  const double s1 = std::sin(p.theta1), c1 = std::cos(p.theta1);
  const double s2 = std::sin(p.theta2), c2 = std::cos(p.theta2);
  const ComplexMatrix pm{{s1, 0, -c1 * std::polar(1.0, p.phi0)},
                         {0, 1, 0},
                         {c1 * std::polar(1.0, -p.phi0), 0, s1}};
  const ComplexMatrix qm{{1, 0, 0},
                         {0, s2, -c2 * std::polar(1.0, p.phi1)},
                         {0, c2 * std::polar(1.0, -p.phi1), s2}};
  return pm * qm;
}

/// Γ₂(ℤ): each of P, Q is V·TCZ·V†·TCZ with TCZ = controlled Z^[2], so four
/// TCZ gates in total.
inline NamedSynthesis synth_ms_z(const MSParams& p) {
  NamedSynthesis s{{3, 2, {}}, {}, "ms-z"};
  auto target = ComplexMatrix::identity(9);
  const auto z = ms_z_matrix(p);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) target(6 + r, 6 + c) = z(r, c);
  s.target = target;

  const auto tcz = ctrl(0, 2, gate::ZLevel{2}, 1);
  // V = R_z(−φ)·R_y(π/2 − θ)·R_z(φ); time order reverses it.
  auto v = [&](SubspacePair pair, double theta, double phi, bool dag) {
    const double y = std::numbers::pi / 2 - theta;
    s.circuit.add(on(1, gate::Rot{Axis::Z, pair, phi}));
    s.circuit.add(on(1, gate::Rot{Axis::Y, pair, dag ? -y : y}));
    s.circuit.add(on(1, gate::Rot{Axis::Z, pair, -phi}));
  };
  const SubspacePair p12{1, 2}, p02{0, 2};
  s.circuit.add(tcz);
  v(p12, p.theta2, p.phi1, true);
  s.circuit.add(tcz);
  v(p12, p.theta2, p.phi1, false);
  s.circuit.add(tcz);
  v(p02, p.theta1, p.phi0, true);
  s.circuit.add(tcz);
  v(p02, p.theta1, p.phi0, false);
  return s;
}

/// Γ₂(Φ) = diag(I₈, e^{iφ}). X·R_z(−a)·X = R_z(a) doubles the angle on the
/// firing branch and cancels otherwise.
inline NamedSynthesis synth_ms_phase(double phi) {
  NamedSynthesis s{{3, 2, {}}, ms_phase_gate(phi), "ms-phase"};
  const double a = phi / 3;
  for (SubspacePair p : {SubspacePair{0, 2}, SubspacePair{1, 2}}) {
    s.circuit.add(ctrl(0, 2, gate::XPair{p}, 1));
    s.circuit.add(on(1, gate::Rot{Axis::Z, p, -a}));
    s.circuit.add(ctrl(0, 2, gate::XPair{p}, 1));
    s.circuit.add(on(1, gate::Rot{Axis::Z, p, a}));
  }
  s.circuit.add(on(0, gate::LevelPhase{2, a}));
  return s;
}

}  // namespace qlogic
