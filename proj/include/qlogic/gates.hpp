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

#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qlogic/numerics.hpp"

namespace qlogic {

/// Two levels (j, k) spanning a 2-dimensional subspace, j < k.
struct SubspacePair {
  std::size_t j = 0;
  std::size_t k = 1;

  auto operator<=>(const SubspacePair&) const = default;
};

enum class Axis { X, Y, Z };

constexpr char axis_name(Axis a) { return a == Axis::X ? 'x' : (a == Axis::Y ? 'y' : 'z'); }

namespace gate {

struct XPair {
  SubspacePair pair;
  bool operator==(const XPair&) const = default;
};
struct ZLevel {
  std::size_t level = 0;
  bool operator==(const ZLevel&) const = default;
};
struct HPair {
  SubspacePair pair;
  bool operator==(const HPair&) const = default;
};
/// Level permutation; the gate sends |i⟩ to |perm[i]⟩.
struct Perm {
  std::vector<std::size_t> perm;
  bool operator==(const Perm&) const = default;
};
/// exp(−iθσ_axis/2) inside the pair, identity elsewhere.
struct Rot {
  Axis axis = Axis::Z;
  SubspacePair pair;
  double theta = 0.0;
  bool operator==(const Rot&) const = default;
};
/// |n⟩ → e^{iφ}|n⟩.
struct LevelPhase {
  std::size_t level = 0;
  double phi = 0.0;
  bool operator==(const LevelPhase&) const = default;
};
struct GlobalPhase {
  double alpha = 0.0;
  bool operator==(const GlobalPhase&) const = default;
};

}  // namespace gate

using GateKind = std::variant<gate::XPair, gate::ZLevel, gate::HPair, gate::Perm, gate::Rot,
                              gate::LevelPhase, gate::GlobalPhase>;

/// Short lowercase tag, shared with the circuit text format.
inline std::string_view kind_name(const GateKind& g) {
  struct {
    std::string_view operator()(const gate::XPair&) const { return "x"; }
    std::string_view operator()(const gate::ZLevel&) const { return "z"; }
    std::string_view operator()(const gate::HPair&) const { return "h"; }
    std::string_view operator()(const gate::Perm&) const { return "perm"; }
    std::string_view operator()(const gate::Rot&) const { return "rot"; }
    std::string_view operator()(const gate::LevelPhase&) const { return "lphase"; }
    std::string_view operator()(const gate::GlobalPhase&) const { return "gphase"; }
  } v;
  return std::visit(v, g);
}

inline void check_pair(std::size_t d, SubspacePair p) {
  if (!(p.j < p.k && p.k < d))
    throw Error(ErrorCode::BadSubspace, "pair (" + std::to_string(p.j) + "," + std::to_string(p.k) +
                                            ") invalid for d=" + std::to_string(d));
}

inline void check_level(std::size_t d, std::size_t n) {
  if (n >= d)
    throw Error(ErrorCode::BadSubspace, "level " + std::to_string(n) + " invalid for d=" + std::to_string(d));
}

/// Throws BadSubspace unless g is well formed for dimension d.
inline void validate(std::size_t d, const GateKind& g) {
  if (d < 1) throw Error(ErrorCode::BadDimension, "d must be >= 1");
  if (auto* x = std::get_if<gate::XPair>(&g)) check_pair(d, x->pair);
  else if (auto* h = std::get_if<gate::HPair>(&g)) check_pair(d, h->pair);
  else if (auto* r = std::get_if<gate::Rot>(&g)) check_pair(d, r->pair);
  else if (auto* z = std::get_if<gate::ZLevel>(&g)) check_level(d, z->level);
  else if (auto* l = std::get_if<gate::LevelPhase>(&g)) check_level(d, l->level);
  else if (auto* p = std::get_if<gate::Perm>(&g)) {
    if (p->perm.size() != d) throw Error(ErrorCode::BadSubspace, "permutation length differs from d");
    std::vector<bool> seen(d, false);
    for (auto v : p->perm) {
      if (v >= d || seen[v]) throw Error(ErrorCode::BadSubspace, "not a permutation of levels");
      seen[v] = true;
    }
  }
}

namespace detail {

inline ComplexMatrix embed_block(std::size_t d, SubspacePair p, Complex a, Complex b, Complex c, Complex e) {
  auto m = ComplexMatrix::identity(d);
  m(p.j, p.j) = a;
  m(p.j, p.k) = b;
  m(p.k, p.j) = c;
  m(p.k, p.k) = e;
  return m;
}

}  // namespace detail

/// d×d matrix of a one-qudit gate.
inline ComplexMatrix gate_matrix(std::size_t d, const GateKind& g) {
  validate(d, g);
  using namespace std::complex_literals;
  struct Visitor {
    std::size_t d;
    ComplexMatrix operator()(const gate::XPair& x) const { return detail::embed_block(d, x.pair, 0, 1, 1, 0); }
    ComplexMatrix operator()(const gate::ZLevel& z) const {
      auto m = ComplexMatrix::identity(d);
      m(z.level, z.level) = -1.0;
      return m;
    }
    ComplexMatrix operator()(const gate::HPair& h) const {
      const double s = 1.0 / std::numbers::sqrt2;
      return detail::embed_block(d, h.pair, s, s, s, -s);
    }
    ComplexMatrix operator()(const gate::Perm& p) const {
      ComplexMatrix m(d);
      for (std::size_t i = 0; i < d; ++i) m(p.perm[i], i) = 1.0;
      return m;
    }
    ComplexMatrix operator()(const gate::Rot& r) const {
      const double c = std::cos(r.theta / 2), s = std::sin(r.theta / 2);
      switch (r.axis) {
        case Axis::X: return detail::embed_block(d, r.pair, c, -1i * s, -1i * s, c);
        case Axis::Y: return detail::embed_block(d, r.pair, c, -s, s, c);
        case Axis::Z: break;
      }
      return detail::embed_block(d, r.pair, std::polar(1.0, -r.theta / 2), 0, 0, std::polar(1.0, r.theta / 2));
    }
    ComplexMatrix operator()(const gate::LevelPhase& l) const {
      auto m = ComplexMatrix::identity(d);
      m(l.level, l.level) = std::polar(1.0, l.phi);
      return m;
    }
    ComplexMatrix operator()(const gate::GlobalPhase& gp) const {
      return std::polar(1.0, gp.alpha) * ComplexMatrix::identity(d);
    }
  };
  return std::visit(Visitor{d}, g);
}

/// Inverse of a one-qudit gate, as another GateKind.
inline GateKind inverse(const GateKind& g) {
  if (auto* r = std::get_if<gate::Rot>(&g)) return gate::Rot{r->axis, r->pair, -r->theta};
  if (auto* l = std::get_if<gate::LevelPhase>(&g)) return gate::LevelPhase{l->level, -l->phi};
  if (auto* gp = std::get_if<gate::GlobalPhase>(&g)) return gate::GlobalPhase{-gp->alpha};
  if (auto* p = std::get_if<gate::Perm>(&g)) {
    std::vector<std::size_t> inv(p->perm.size());
    for (std::size_t i = 0; i < inv.size(); ++i) inv[p->perm[i]] = i;
    return gate::Perm{inv};
  }
  return g;  // X, Z and H are involutions
}

// ---------------------------------------------------------------------------
// Qutrit shift gates: the six elements of S3 acting on levels.

enum class Shift { Id, Plus1, Plus2, Swap01, Swap02, Swap12 };

inline constexpr Shift kAllShifts[] = {Shift::Id, Shift::Plus1, Shift::Plus2,
                                       Shift::Swap01, Shift::Swap02, Shift::Swap12};

inline gate::Perm shift_perm(Shift s) {
  switch (s) {
    case Shift::Id: return {{0, 1, 2}};
    case Shift::Plus1: return {{1, 2, 0}};
    case Shift::Plus2: return {{2, 0, 1}};
    case Shift::Swap01: return {{1, 0, 2}};
    case Shift::Swap02: return {{2, 1, 0}};
    case Shift::Swap12: return {{0, 2, 1}};
  }
  return {{0, 1, 2}};
}

inline ComplexMatrix shift_gate(Shift s) { return gate_matrix(3, shift_perm(s)); }

// ---------------------------------------------------------------------------
// Two-qudit controlled gates, control wire as the more significant factor.

/// Σ_{a≠n}|a⟩⟨a|⊗I + |n⟩⟨n|⊗G. TCX/TCZ at d=3, GCX/GCZ otherwise.
inline ComplexMatrix controlled_gate(std::size_t d, std::size_t control_value, const GateKind& target_op) {
  if (std::holds_alternative<gate::GlobalPhase>(target_op))
    throw Error(ErrorCode::BadSubspace, "a global phase cannot be the target of a controlled gate");
  check_level(d, control_value);
  const auto g = gate_matrix(d, target_op);
  ComplexMatrix m(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        m(a * d + r, a * d + c) = a == control_value ? g(r, c) : (r == c ? Complex(1.0) : Complex{});
  return m;
}

/// Γ₂(Φ) = diag(I₈, e^{iφ}) on two qutrits.
inline ComplexMatrix ms_phase_gate(double phi) {
  auto m = ComplexMatrix::identity(9);
  m(8, 8) = std::polar(1.0, phi);
  return m;
}

}  // namespace qlogic
