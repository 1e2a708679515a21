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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlogic/gates.hpp"

namespace qlogic {

struct Control {
  std::size_t wire = 0;
  std::size_t value = 0;
  bool operator==(const Control&) const = default;
};

/// A gate placed on a circuit. GlobalPhase ignores `target` and takes no control.
struct CircuitGate {
  std::size_t target = 0;
  GateKind op;
  std::optional<Control> control;

  bool operator==(const CircuitGate&) const = default;
};

inline CircuitGate on(std::size_t wire, GateKind op) { return {wire, std::move(op), std::nullopt}; }

inline CircuitGate ctrl(std::size_t control_wire, std::size_t control_value, GateKind op, std::size_t target) {
  return {target, std::move(op), Control{control_wire, control_value}};
}

inline CircuitGate global_phase(double alpha) { return {0, gate::GlobalPhase{alpha}, std::nullopt}; }

/// Ordered gate list over `width` qudits of dimension `d`. Gates run in list
/// order, so the unitary is G_last ⋯ G_first. Wire 0 is the most significant
/// digit of a basis index.
struct Circuit {
  std::size_t d = 3;
  std::size_t width = 1;
  std::vector<CircuitGate> gates;

  bool operator==(const Circuit&) const = default;

  Circuit& add(CircuitGate g) {
    gates.push_back(std::move(g));
    return *this;
  }

  Circuit& append(const Circuit& other) {
    if (other.d != d || other.width != width)
      throw Error(ErrorCode::DimMismatch, "append: circuits differ in d or width");
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    return *this;
  }
};

inline void validate(const Circuit& c, const CircuitGate& g) {
  if (std::holds_alternative<gate::GlobalPhase>(g.op)) {
    if (g.control) throw Error(ErrorCode::BadWire, "global phase cannot be controlled");
    return;
  }
  if (g.target >= c.width) throw Error(ErrorCode::BadWire, "target wire " + std::to_string(g.target) + " out of range");
  if (g.control) {
    if (g.control->wire >= c.width)
      throw Error(ErrorCode::BadWire, "control wire " + std::to_string(g.control->wire) + " out of range");
    if (g.control->wire == g.target) throw Error(ErrorCode::BadWire, "control and target share a wire");
    if (g.control->value >= c.d) throw Error(ErrorCode::BadWire, "control value out of range");
  }
  validate(c.d, g.op);
}

inline void validate(const Circuit& c) {
  if (c.d < 1 || c.width < 1) throw Error(ErrorCode::BadDimension, "circuit needs d >= 1 and width >= 1");
  for (const auto& g : c.gates) validate(c, g);
}

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

namespace detail {

/// Permutation matrix P with P|x⟩ = |y⟩ where y's wire p carries x's digit on
/// wire order[p].
inline ComplexMatrix wire_permutation(std::size_t d, std::size_t width, const std::vector<std::size_t>& order) {
  const std::size_t n = ipow(d, width);
  ComplexMatrix p(n);
  std::vector<std::size_t> digits(width);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (std::size_t w = width; w-- > 0;) {
      digits[w] = rest % d;
      rest /= d;
    }
    std::size_t y = 0;
    for (std::size_t pos = 0; pos < width; ++pos) y = y * d + digits[order[pos]];
    p(y, x) = 1.0;
  }
  return p;
}

}  // namespace detail

/// Full d^width matrix of a single placed gate: the local matrix tensored with
/// identities, conjugated by the wire permutation that brings (control,
/// target) to the front.
inline ComplexMatrix embedded_matrix(const Circuit& c, const CircuitGate& g) {
  validate(c, g);
  const std::size_t n = ipow(c.d, c.width);
  if (auto* gp = std::get_if<gate::GlobalPhase>(&g.op))
    return std::polar(1.0, gp->alpha) * ComplexMatrix::identity(n);

  std::vector<std::size_t> order;
  ComplexMatrix local = g.control ? controlled_gate(c.d, g.control->value, g.op) : gate_matrix(c.d, g.op);
  if (g.control) order.push_back(g.control->wire);
  order.push_back(g.target);
  for (std::size_t w = 0; w < c.width; ++w)
    if (std::find(order.begin(), order.end(), w) == order.end()) order.push_back(w);

  const std::size_t rest = c.width - (g.control ? 2 : 1);
  ComplexMatrix full = rest ? tensor(local, ComplexMatrix::identity(ipow(c.d, rest))) : local;
  const auto p = detail::wire_permutation(c.d, c.width, order);
  return dagger(p) * full * p;
}

inline ComplexMatrix circuit_unitary(const Circuit& c) {
  validate(c);
  ComplexMatrix u = ComplexMatrix::identity(ipow(c.d, c.width));
  for (const auto& g : c.gates) u = embedded_matrix(c, g) * u;
  return u;
}

// ---------------------------------------------------------------------------
// State vectors.

struct StateVector {
  std::size_t d = 3;
  std::size_t width = 1;
  std::vector<Complex> amplitudes;

  static StateVector basis(std::size_t d, const std::vector<std::size_t>& digits) {
    StateVector s{d, digits.size(), std::vector<Complex>(ipow(d, digits.size()))};
    std::size_t idx = 0;
    for (auto v : digits) {
      if (v >= d) throw Error(ErrorCode::BadWire, "basis digit out of range");
      idx = idx * d + v;
    }
    s.amplitudes[idx] = 1.0;
    return s;
  }

  double norm() const {
    double n = 0.0;
    for (const auto& a : amplitudes) n += std::norm(a);
    return std::sqrt(n);
  }

  /// Digit string of a basis index, wire 0 first.
  std::string label(std::size_t index) const {
    std::string s(width, '0');
    for (std::size_t w = width; w-- > 0;) {
      s[w] = static_cast<char>('0' + index % d);
      index /= d;
    }
    return s;
  }
};

/// Parses `|12⟩`, `|12>` or a bare digit string into a basis state.
inline StateVector parse_ket(std::size_t d, std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '|') body.remove_prefix(1);
  if (body.ends_with("⟩")) body.remove_suffix(std::string_view("⟩").size());
  else if (body.ends_with(">")) body.remove_suffix(1);
  if (body.empty()) throw Error(ErrorCode::ParseError, "empty ket");
  std::vector<std::size_t> digits;
  for (char ch : body) {
    if (ch < '0' || ch > '9') throw Error(ErrorCode::ParseError, "bad ket '" + std::string(text) + "'");
    digits.push_back(static_cast<std::size_t>(ch - '0'));
  }
  return StateVector::basis(d, digits);
}

inline std::vector<Complex> mat_vec(const ComplexMatrix& m, const std::vector<Complex>& v) {
  if (m.dim() != v.size()) throw Error(ErrorCode::DimMismatch, "mat_vec: dimension mismatch");
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

/// Runs the circuit gate by gate on the state without forming the full unitary.
inline StateVector apply(const Circuit& c, StateVector s) {
  validate(c);
  if (s.d != c.d || s.width != c.width || s.amplitudes.size() != ipow(c.d, c.width))
    throw Error(ErrorCode::DimMismatch, "state does not match circuit");
  const std::size_t d = c.d, n = s.amplitudes.size();
  std::vector<Complex> block(d), out(d);
  for (const auto& g : c.gates) {
    if (auto* gp = std::get_if<gate::GlobalPhase>(&g.op)) {
      const Complex f = std::polar(1.0, gp->alpha);
      for (auto& a : s.amplitudes) a *= f;
      continue;
    }
    const auto m = gate_matrix(d, g.op);
    const std::size_t tstride = ipow(d, c.width - 1 - g.target);
    const std::size_t cstride = g.control ? ipow(d, c.width - 1 - g.control->wire) : 0;
    for (std::size_t base = 0; base < n; ++base) {
      if ((base / tstride) % d != 0) continue;
      if (g.control && (base / cstride) % d != g.control->value) continue;
      for (std::size_t t = 0; t < d; ++t) block[t] = s.amplitudes[base + t * tstride];
      for (std::size_t r = 0; r < d; ++r) {
        Complex acc{};
        for (std::size_t t = 0; t < d; ++t) acc += m(r, t) * block[t];
        out[r] = acc;
      }
      for (std::size_t r = 0; r < d; ++r) s.amplitudes[base + r * tstride] = out[r];
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

struct GateCounts {
  std::size_t two_qudit = 0;
  std::size_t one_qudit = 0;
  /// Uncontrolled subspace rotations, a subset of one_qudit.
  std::size_t rotations = 0;
  /// Keyed by kind name; controlled gates are prefixed with "c".
  std::map<std::string, std::size_t> by_kind;

  bool operator==(const GateCounts&) const = default;
};

inline GateCounts gate_counts(const Circuit& c) {
  GateCounts counts;
  for (const auto& g : c.gates) {
    std::string key(kind_name(g.op));
    if (g.control) {
      ++counts.two_qudit;
      key = "c" + key;
    } else if (!std::holds_alternative<gate::GlobalPhase>(g.op)) {
      ++counts.one_qudit;
      if (std::holds_alternative<gate::Rot>(g.op)) ++counts.rotations;
    }
    ++counts.by_kind[key];
  }
  return counts;
}

}  // namespace qlogic
