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

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "qlogic/circuit_text.hpp"
#include "qlogic/synthlib.hpp"

namespace qlogic {
namespace {

constexpr double kPi = std::numbers::pi;
const SubspacePair kPairs[] = {{0, 1}, {0, 2}, {1, 2}};

ComplexMatrix unitary_of(std::size_t d, std::size_t width, const std::vector<CircuitGate>& gates) {
  return circuit_unitary(Circuit{d, width, gates});
}

std::vector<Complex> run(const Circuit& c, const std::string& ket) { return apply(c, parse_ket(c.d, ket)).amplitudes; }

std::vector<Complex> target_on(const NamedSynthesis& s, const std::string& ket) {
  return mat_vec(s.target, parse_ket(s.circuit.d, ket).amplitudes);
}

std::vector<Complex> ket(const std::string& digits) { return parse_ket(3, digits).amplitudes; }

void expect_verified(const NamedSynthesis& s, double tol = 1e-10) {
  const auto m = verify(s, tol);
  EXPECT_TRUE(m.equal) << s.label << " error " << m.error;
}

MSParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> a(-kPi, kPi);
  return {a(rng), a(rng), a(rng), a(rng)};
}

// ---------------------------------------------------------------------------

TEST(TransformTest, ControlViaX12) {
  const auto g = ctrl(0, 2, gate::XPair{{0, 1}}, 1);
  const auto seq = transform_tcx_control(g, 1);
  ASSERT_EQ(seq.size(), 3u);
  EXPECT_EQ(seq[0], on(0, gate::XPair{{1, 2}}));
  EXPECT_EQ(seq[1].control->value, 1u);
  EXPECT_EQ(unitary_of(3, 2, seq), unitary_of(3, 2, {g}));
}

TEST(TransformTest, SameValueOrPairIsUnchanged) {
  const auto g = ctrl(1, 0, gate::XPair{{1, 2}}, 0);
  EXPECT_EQ(transform_tcx_control(g, 0), std::vector<CircuitGate>{g});
  EXPECT_EQ(transform_tcx_target(g, {1, 2}), std::vector<CircuitGate>{g});
}

TEST(TransformTest, RelabelMatchesBruteForceOverS3) {
  for (auto from : kPairs)
    for (auto to : kPairs) {
      const auto x = gate_matrix(3, gate::XPair{from}), want = gate_matrix(3, gate::XPair{to});
      std::vector<ComplexMatrix> solutions;
      for (Shift s : kAllShifts) {
        const auto p = shift_gate(s);
        if (p * x * dagger(p) == want) solutions.push_back(p);
      }
      ASSERT_FALSE(solutions.empty());
      const auto ours = gate_matrix(3, pair_relabel(3, from, to));
      EXPECT_NE(std::find(solutions.begin(), solutions.end(), ours), solutions.end());
    }
}

TEST(TransformTest, TargetOracleAllPairs) {
  for (std::size_t n = 0; n < 3; ++n)
    for (auto from : kPairs)
      for (auto to : kPairs) {
        const auto g = ctrl(0, n, gate::XPair{from}, 1);
        const auto seq = transform_tcx_target(g, to);
        EXPECT_EQ(unitary_of(3, 2, seq), controlled_gate(3, n, gate::XPair{from}));
        for (const auto& h : seq)
          if (h.control) {
            EXPECT_EQ(h.op, GateKind(gate::XPair{to}));
          }
      }
}

TEST(TransformTest, NineTcxFormsMutuallyReachable) {
  for (std::size_t n = 0; n < 3; ++n)
    for (auto p : kPairs)
      for (std::size_t n2 = 0; n2 < 3; ++n2)
        for (auto p2 : kPairs) {
          // Rewrite TCX(n′, p′) into TCX(n, p): control first, then target of the middle gate.
          const auto start = ctrl(0, n2, gate::XPair{p2}, 1);
          auto seq = transform_tcx_control(start, n);
          const std::size_t mid = seq.size() == 3 ? 1 : 0;
          const auto inner = transform_tcx_target(seq[mid], p);
          seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(mid));
          seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(mid), inner.begin(), inner.end());
          for (const auto& g : seq)
            if (g.control) {
              EXPECT_EQ(g.control->value, n);
              EXPECT_EQ(std::get<gate::XPair>(g.op).pair, p);
            }
          EXPECT_LT(max_abs_diff(unitary_of(3, 2, seq), controlled_gate(3, n2, gate::XPair{p2})), 1e-12);
        }
}

TEST(TransformTest, QuditTarget) {
  const auto g = ctrl(1, 3, gate::XPair{{0, 1}}, 0);
  const auto seq = transform_tcx_target(g, {2, 3}, 4);
  ASSERT_EQ(seq.size(), 3u);
  EXPECT_EQ(seq[1], ctrl(1, 3, gate::XPair{{2, 3}}, 0));
  EXPECT_EQ(unitary_of(4, 2, seq), unitary_of(4, 2, {g}));
  EXPECT_THROW(transform_tcx_target(ctrl(0, 0, gate::ZLevel{1}, 1), {0, 1}), Error);
  EXPECT_THROW(transform_tcx_control(on(0, gate::XPair{{0, 1}}), 1), Error);
}

// ---------------------------------------------------------------------------

TEST(TczTest, AllNineForms) {
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t m = 0; m < 3; ++m) {
      const auto s = tcz_from_tcx(n, m);
      EXPECT_EQ(gate_counts(s.circuit).two_qudit, 1u);
      EXPECT_EQ(s.target, controlled_gate(3, n, gate::ZLevel{m}));
      const auto v = verify(s, 1e-12);
      EXPECT_TRUE(v.equal);
      EXPECT_NEAR(v.phase, 0.0, 1e-12);
    }
}

TEST(TczTest, HxhIsZ1) {
  const auto h = gate_matrix(3, gate::HPair{{0, 1}});
  EXPECT_LT(max_abs_diff(h * gate_matrix(3, gate::XPair{{0, 1}}) * h, ComplexMatrix::diagonal({1, -1, 1})), 1e-15);
  const auto s = tcz_from_tcx(2, 1);
  EXPECT_EQ(s.circuit.gates.front(), on(1, gate::HPair{{0, 1}}));
}

TEST(TczTest, BinaryCz) {
  const auto s = tcz_from_tcx(1, 1, 2);
  EXPECT_LT(max_abs_diff(circuit_unitary(s.circuit), ComplexMatrix::diagonal({1, 1, 1, -1})), 1e-15);
}

TEST(TczTest, QuditForms) {
  for (std::size_t n = 0; n < 4; ++n)
    for (std::size_t m = 0; m < 4; ++m) expect_verified(tcz_from_tcx(n, m, 4));
}

// ---------------------------------------------------------------------------

TEST(FeynmanTest, TargetAndCircuit) {
  const auto s = synth_feynman();
  EXPECT_EQ(target_on(s, "22"), ket("21"));
  for (const std::string b : {"00", "01", "02"}) EXPECT_EQ(target_on(s, b), ket(b));
  EXPECT_EQ(run(s.circuit, "22"), ket("21"));
  expect_verified(s);
  EXPECT_LE(gate_counts(s.circuit).two_qudit, 4u);
  EXPECT_EQ(gate_counts(s.circuit).one_qudit, 0u);
}

TEST(GxorTest, TargetAndCircuit) {
  const auto s = synth_gxor();
  EXPECT_EQ(target_on(s, "21"), ket("21"));
  EXPECT_EQ(target_on(s, "01"), ket("02"));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      const std::string in{char('0' + a), char('0' + b)}, out{char('0' + a), char('0' + (a + 3 - b) % 3)};
      EXPECT_EQ(run(s.circuit, in), ket(out));
    }
  expect_verified(s);
}

TEST(SwapTest, NineTcx) {
  const auto s = synth_swap();
  EXPECT_EQ(target_on(s, "12"), ket("21"));
  EXPECT_EQ(target_on(s, "00"), ket("00"));
  expect_verified(s);
  EXPECT_EQ(gate_counts(s.circuit).two_qudit, 9u);
  EXPECT_EQ(gate_counts(s.circuit).one_qudit, 0u);
}

TEST(SwapTest, ConditionalSwapsCommute) {
  std::vector<ComplexMatrix> w;
  for (auto p : kPairs) w.push_back(unitary_of(3, 2, conditional_swap(p)));
  std::vector<int> order{0, 1, 2};
  const auto reference = w[0] * w[1] * w[2];
  int perms = 0;
  do {
    EXPECT_EQ(w[order[0]] * w[order[1]] * w[order[2]], reference);
    ++perms;
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(perms, 6);
  EXPECT_EQ(reference, synth_swap().target);
}

// ---------------------------------------------------------------------------

TEST(ToffoliTest, ElementaryAll27) {
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t n2 = 0; n2 < 3; ++n2)
      for (auto p : kPairs) {
        const auto s = synth_toffoli_elementary(n, n2, p);
        expect_verified(s);
        const auto counts = gate_counts(s.circuit);
        EXPECT_EQ(counts.two_qudit, 6u);
        EXPECT_LE(counts.one_qudit, 10u);
        const std::string a(1, char('0' + n)), b(1, char('0' + n2));
        EXPECT_EQ(target_on(s, a + b + char('0' + p.j)), ket(a + b + char('0' + p.k)));
        const std::string other(1, char('0' + (n2 + 1) % 3));
        EXPECT_EQ(target_on(s, a + other + char('0' + p.j)), ket(a + other + char('0' + p.j)));
      }
}

TEST(ToffoliTest, ElementaryBasisActionBySimulation) {
  const auto s = synth_toffoli_elementary(1, 2, {0, 2});
  for (std::size_t x = 0; x < 27; ++x) {
    StateVector in = StateVector::basis(3, {x / 9, (x / 3) % 3, x % 3});
    const auto got = apply(s.circuit, in).amplitudes;
    const auto want = mat_vec(s.target, in.amplitudes);
    for (std::size_t i = 0; i < 27; ++i) EXPECT_LT(std::abs(got[i] - want[i]), 1e-12);
  }
}

TEST(ToffoliTest, Typical) {
  const auto s = synth_toffoli_typical();
  EXPECT_EQ(target_on(s, "112"), ket("110"));
  for (const std::string k : {"010", "011", "012", "100", "222"}) EXPECT_EQ(target_on(s, k), ket(k));
  expect_verified(s);
  const auto counts = gate_counts(s.circuit);
  EXPECT_LE(counts.two_qudit, 6u);
  EXPECT_LE(counts.one_qudit, 8u);
}

TEST(ToffoliTest, Errors) {
  EXPECT_THROW(synth_toffoli_elementary(3, 0, {0, 1}), Error);
  EXPECT_THROW(synth_toffoli_elementary(0, 0, {1, 0}), Error);
}

// ---------------------------------------------------------------------------

TEST(MsZTest, VFactorsMatchExplicitMatrices) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    const auto p = random_params(rng);
    const double h2 = kPi / 4 - p.theta2 / 2;
    const ComplexMatrix v1{{1, 0, 0},
                           {0, std::cos(h2), -std::sin(h2) * std::polar(1.0, p.phi1)},
                           {0, std::sin(h2) * std::polar(1.0, -p.phi1), std::cos(h2)}};
    const auto v1_rot = gate_matrix(3, gate::Rot{Axis::Z, {1, 2}, -p.phi1}) *
                        gate_matrix(3, gate::Rot{Axis::Y, {1, 2}, kPi / 2 - p.theta2}) *
                        gate_matrix(3, gate::Rot{Axis::Z, {1, 2}, p.phi1});
    EXPECT_LT(max_abs_diff(v1, v1_rot), 1e-14);
    const double h1 = kPi / 4 - p.theta1 / 2;
    const ComplexMatrix v2{{std::cos(h1), 0, -std::sin(h1) * std::polar(1.0, p.phi0)},
                           {0, 1, 0},
                           {std::sin(h1) * std::polar(1.0, -p.phi0), 0, std::cos(h1)}};
    const auto v2_rot = gate_matrix(3, gate::Rot{Axis::Z, {0, 2}, -p.phi0}) *
                        gate_matrix(3, gate::Rot{Axis::Y, {0, 2}, kPi / 2 - p.theta1}) *
                        gate_matrix(3, gate::Rot{Axis::Z, {0, 2}, p.phi0});
    EXPECT_LT(max_abs_diff(v2, v2_rot), 1e-14);
  }
}

TEST(MsZTest, FixedPoint) {
  const MSParams p{kPi / 2, kPi / 2, 0, 0};
  EXPECT_LT(max_abs_diff(ms_z_matrix(p), ComplexMatrix::identity(3)), 1e-15);
  const auto s = synth_ms_z(p);
  expect_verified(s);
  EXPECT_TRUE(equal_up_to_phase(circuit_unitary(s.circuit), ComplexMatrix::identity(9)).equal);
}

TEST(MsZTest, OneGoesToTwo) {
  const auto z = ms_z_matrix({kPi / 2, 0, 0, 0});
  const auto out = mat_vec(z, {0, 1, 0});
  EXPECT_LT(std::abs(out[0]), 1e-15);
  EXPECT_LT(std::abs(out[1]), 1e-15);
  EXPECT_NEAR(std::abs(out[2]), 1.0, 1e-15);
}

TEST(MsZTest, RandomParams) {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 200; ++rep) {
    const auto p = random_params(rng);
    const auto s = synth_ms_z(p);
    expect_verified(s);
    const auto counts = gate_counts(s.circuit);
    EXPECT_EQ(counts.two_qudit, 4u);
    EXPECT_EQ(counts.by_kind.at("cz"), 4u);

    const auto c = p.coefficients();
    EXPECT_NEAR(std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]), 1.0, 1e-14);
    const auto out = mat_vec(ms_z_matrix(p), {c[0], c[1], c[2]});
    EXPECT_LT(std::abs(out[0]), 1e-14);
    EXPECT_LT(std::abs(out[1]), 1e-14);
    EXPECT_NEAR(std::abs(out[2]), 1.0, 1e-14);

    // Control |2⟩ with the target in (c₀, c₁, c₂) lands on |2,2⟩.
    StateVector in{3, 2, std::vector<Complex>(9)};
    for (std::size_t i = 0; i < 3; ++i) in.amplitudes[6 + i] = c[i];
    const auto got = apply(s.circuit, in).amplitudes;
    for (std::size_t i = 0; i < 8; ++i) EXPECT_LT(std::abs(got[i]), 1e-12);
    EXPECT_NEAR(std::abs(got[8]), 1.0, 1e-12);
  }
}

TEST(MsPhaseTest, Cases) {
  const auto zero = synth_ms_phase(0.0);
  EXPECT_LT(max_abs_diff(circuit_unitary(zero.circuit), ComplexMatrix::identity(9)), 1e-15);
  auto minus = ComplexMatrix::identity(9);
  minus(8, 8) = -1.0;
  const auto pi = synth_ms_phase(kPi);
  EXPECT_LT(max_abs_diff(pi.target, minus), 1e-15);
  expect_verified(pi);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> phi(-2 * kPi, 2 * kPi);
  for (int rep = 0; rep < 50; ++rep) {
    const auto s = synth_ms_phase(phi(rng));
    expect_verified(s);
    EXPECT_LT(max_abs_diff(circuit_unitary(s.circuit), s.target), 1e-12);
  }
}

TEST(NamedSynthesisTest, ExportReparsesAndReverifies) {
  for (const auto& s : {synth_feynman(), synth_gxor(), synth_swap(), synth_toffoli_elementary(),
                        synth_toffoli_typical(), synth_ms_z({0.3, 0.7, 0.1, 0.2}), synth_ms_phase(0.9)}) {
    NamedSynthesis copy = s;
    copy.circuit = parse_circuit(emit_circuit(s.circuit));
    EXPECT_EQ(copy.circuit, s.circuit);
    expect_verified(copy);
  }
}

}  // namespace
}  // namespace qlogic
