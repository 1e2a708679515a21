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

// One-qudit compilation into two-level rotations.
//
// Three layers:
//   euler_decompose   single 2-level block -> phase, R_a R_y R_a
//   cartan_csd_2_1    d-level unitary -> K1 · R_y(β) · K2 with K's in U(d-1)⊕U(1)
//   decompose_*       the above glued into rotation circuits on one wire

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "qlogic/circuit.hpp"

namespace qlogic {

enum class EulerMode { ZYZ, XYX };

/// U = e^{iα}·R_a(φ₁)·R_y(θ)·R_a(φ₂) inside `subspace`, with a = z (ZYZ) or
/// x (XYX). Matrix order, so R_a(φ₂) runs first.
struct EulerAngles {
  EulerMode mode = EulerMode::ZYZ;
  SubspacePair subspace;
  double phi1 = 0.0;
  double theta = 0.0;
  double phi2 = 0.0;
  double alpha = 0.0;
};

struct CartanFactors {
  ComplexMatrix K1;
  ComplexMatrix A;
  ComplexMatrix K2;
  /// A = R_y^(core)(beta), beta in [0, π].
  double beta = 0.0;
  SubspacePair core;
  /// Size of the leading block of the (d-1, 1) partition.
  std::size_t block = 0;
};

enum class Template { Eq4, Eq5, QuditRecursive };

constexpr std::string_view template_name(Template t) {
  switch (t) {
    case Template::Eq4: return "eq4";
    case Template::Eq5: return "eq5";
    case Template::QuditRecursive: return "qudit";
  }
  return "?";
}

struct DecompositionResult {
  /// One wire; rotations and a leading GlobalPhase only.
  Circuit circuit;
  Template template_kind = Template::Eq5;
  /// max |circuit_unitary − input|, global phase included.
  double residual = 0.0;
  /// Pair family of the template, whether or not every pair got a nonzero angle.
  std::set<SubspacePair> subspaces_used;
};

inline constexpr double kQutritResidual = 1e-9;
inline constexpr double kQuditResidual = 1e-8;
inline constexpr std::size_t kMaxQuditDim = 6;

namespace detail {

inline constexpr double kDegenerate = 1e-12;
inline constexpr double kDropAngle = 1e-15;

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) e(r, c) = m(r, c);
  return e;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
  ComplexMatrix m(static_cast<std::size_t>(e.rows()));
  for (Eigen::Index r = 0; r < e.rows(); ++r)
    for (Eigen::Index c = 0; c < e.cols(); ++c) m(r, c) = e(r, c);
  return m;
}

/// Maps an angle into (−2π, 2π], the period of R_a(θ) being 4π.
inline double wrap_4pi(double theta) {
  constexpr double two_pi = 2 * std::numbers::pi;
  theta = std::remainder(theta, 2 * two_pi);  // now in [−2π, 2π]
  if (theta <= -two_pi) theta += 2 * two_pi;
  return theta;
}

inline double wrap_2pi(double alpha) {
  alpha = std::remainder(alpha, 2 * std::numbers::pi);
  if (alpha <= -std::numbers::pi) alpha += 2 * std::numbers::pi;
  return alpha;
}

inline ComplexMatrix rot(std::size_t d, Axis axis, SubspacePair p, double theta) {
  return gate_matrix(d, gate::Rot{axis, p, theta});
}

inline ComplexMatrix leading_block(const ComplexMatrix& m, std::size_t n) {
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = m(r, c);
  return out;
}

/// ZYZ angles of a 2×2 unitary block [[a, b], [c, e]].
inline std::array<double, 4> zyz_block(Complex a, Complex b, Complex c, Complex e) {
  const double alpha = std::arg(a * e - b * c) / 2;
  const Complex unphase = std::polar(1.0, -alpha);
  const Complex v00 = a * unphase, v10 = c * unphase, v11 = e * unphase;
  double phi1, theta, phi2;
  if (std::abs(v10) < kDegenerate) {
    theta = 0.0;
    phi2 = 0.0;
    phi1 = 2 * std::arg(v11);
  } else if (std::abs(v00) < kDegenerate) {
    theta = std::numbers::pi;
    phi2 = 0.0;
    phi1 = 2 * std::arg(v10);
  } else {
    theta = 2 * std::atan2(std::abs(v10), std::abs(v00));
    const double sum = 2 * std::arg(v11), diff = 2 * std::arg(v10);
    phi1 = (sum + diff) / 2;
    phi2 = (sum - diff) / 2;
  }
  return {phi1, theta, phi2, alpha};
}

}  // namespace detail

inline ComplexMatrix euler_matrix(std::size_t d, const EulerAngles& e) {
  const Axis outer = e.mode == EulerMode::ZYZ ? Axis::Z : Axis::X;
  auto m = detail::rot(d, outer, e.subspace, e.phi1) * detail::rot(d, Axis::Y, e.subspace, e.theta) *
           detail::rot(d, outer, e.subspace, e.phi2);
  // The phase acts on the block only.
  m(e.subspace.j, e.subspace.j) *= std::polar(1.0, e.alpha);
  m(e.subspace.j, e.subspace.k) *= std::polar(1.0, e.alpha);
  m(e.subspace.k, e.subspace.j) *= std::polar(1.0, e.alpha);
  m(e.subspace.k, e.subspace.k) *= std::polar(1.0, e.alpha);
  return m;
}

/// Euler angles of a unitary that acts only inside levels (j, k).
/// Middle angle θ ∈ [0, π]; degenerate blocks take φ₂ = 0.
inline EulerAngles euler_decompose(const ComplexMatrix& u, SubspacePair p, EulerMode mode = EulerMode::ZYZ) {
  const std::size_t d = u.dim();
  check_pair(d, p);
  if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "euler_decompose: input is not unitary");
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const bool in_block = (r == p.j || r == p.k) && (c == p.j || c == p.k);
      if (in_block) continue;
      const Complex want = r == c ? Complex(1.0) : Complex{};
      if (std::abs(u(r, c) - want) > kUnitaryTol)
        throw Error(ErrorCode::NotSubspaceConfined, "euler_decompose: matrix acts outside the pair");
    }

  Complex a = u(p.j, p.j), b = u(p.j, p.k), c = u(p.k, p.j), e = u(p.k, p.k);
  if (mode == EulerMode::XYX) {
    // R_x = W R_z W† with W = R_y(π/2); decompose W† U W as ZYZ.
    const double s = 1.0 / std::numbers::sqrt2;
    const Complex ta = s * (a + c), tb = s * (b + e), tc = s * (c - a), te = s * (e - b);  // W† U
    a = s * (ta + tb);
    b = s * (tb - ta);
    c = s * (tc + te);
    e = s * (te - tc);
  }
  const auto [phi1, theta, phi2, alpha] = detail::zyz_block(a, b, c, e);
  return {mode, p, phi1, theta, phi2, alpha};
}

/// (d−1, 1) cosine-sine split M = K1·A·K2. The core pair is (core_low, d−1);
/// the default core_low is d−2.
inline CartanFactors cartan_csd_2_1(const ComplexMatrix& m, std::size_t core_low) {
  const std::size_t d = m.dim();
  if (d < 2) throw Error(ErrorCode::BadDimension, "cartan_csd_2_1: d must be >= 2");
  if (core_low > d - 2) throw Error(ErrorCode::BadSubspace, "cartan_csd_2_1: core_low out of range");
  if (!is_unitary(m)) throw Error(ErrorCode::NotUnitary, "cartan_csd_2_1: input is not unitary");

  const Eigen::Index n = static_cast<Eigen::Index>(d - 1);
  const Eigen::MatrixXcd full = detail::to_eigen(m);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(full.topLeftCorner(n, n), Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXcd u1 = svd.matrixU(), v1 = svd.matrixV();

  // Singular values come sorted descending; the one cosine below 1 moves to core_low.
  const auto lo = static_cast<Eigen::Index>(core_low);
  const auto& sv = svd.singularValues();
  if (lo != n - 1 && sv(lo) - sv(n - 1) > 1e-15) {
    u1.col(lo).swap(u1.col(n - 1));
    v1.col(lo).swap(v1.col(n - 1));
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    if (std::abs(u1(j, j)) < 1e-14) continue;
    const Complex f = std::polar(1.0, -std::arg(u1(j, j)));
    u1.col(j) *= f;
    v1.col(j) *= f;
  }

  Eigen::MatrixXcd left = Eigen::MatrixXcd::Identity(d, d), right = Eigen::MatrixXcd::Identity(d, d);
  left.topLeftCorner(n, n) = u1.adjoint();
  right.topLeftCorner(n, n) = v1;
  const Eigen::MatrixXcd core = left * full * right;

  const double cosine = std::clamp(core(lo, lo).real(), 0.0, 1.0);
  const Complex y = core(lo, n), z = core(n, lo), last = core(n, n);
  Complex u2, v2;
  if (std::abs(z) > detail::kDegenerate && std::abs(y) > detail::kDegenerate) {
    u2 = z / std::abs(z);
    v2 = -y / std::abs(y);
  } else {
    u2 = std::abs(last) > 0 ? last / std::abs(last) : Complex(1.0);
    v2 = 1.0;
  }
  const double sine = std::min(1.0, 0.5 * (std::abs(y) + std::abs(z)));
  const double beta = 2 * std::atan2(sine, cosine);

  Eigen::MatrixXcd k1 = Eigen::MatrixXcd::Zero(d, d), k2 = Eigen::MatrixXcd::Zero(d, d);
  k1.topLeftCorner(n, n) = u1;
  k1(n, n) = u2;
  k2.topLeftCorner(n, n) = v1.adjoint();
  k2(n, n) = v2;
  const SubspacePair pair{core_low, d - 1};
  return {detail::from_eigen(k1), detail::rot(d, Axis::Y, pair, beta), detail::from_eigen(k2), beta, pair, d - 1};
}

inline CartanFactors cartan_csd_2_1(const ComplexMatrix& m) {
  if (m.dim() < 2) throw Error(ErrorCode::BadDimension, "cartan_csd_2_1: d must be >= 2");
  return cartan_csd_2_1(m, m.dim() - 2);
}

namespace detail {

/// Global phase plus rotations in time order, all on one wire.
struct RotSeq {
  double phase = 0.0;
  std::vector<gate::Rot> rots;

  void push(Axis axis, SubspacePair p, double theta) {
    theta = wrap_4pi(theta);
    if (std::abs(theta) >= kDropAngle) rots.push_back({axis, p, theta});
  }

  void push_euler(const EulerAngles& e) {
    const Axis outer = e.mode == EulerMode::ZYZ ? Axis::Z : Axis::X;
    phase += e.alpha;
    push(outer, e.subspace, e.phi2);
    push(Axis::Y, e.subspace, e.theta);
    push(outer, e.subspace, e.phi1);
  }

  void append(const RotSeq& other) {
    phase += other.phase;
    rots.insert(rots.end(), other.rots.begin(), other.rots.end());
  }
};

/// M = e^{iγ}·M₀ with det M₀ = 1. Of the d admissible γ, picks the one that
/// maximizes Re tr M₀, so that e^{iλ}M yields the same M₀.
inline std::pair<double, ComplexMatrix> split_global_phase(const ComplexMatrix& m) {
  const auto d = static_cast<double>(m.dim());
  const Complex det = to_eigen(m).determinant();
  const Complex tr = trace(m);
  double best = 0.0, best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const double g = std::arg(det) / d + 2 * std::numbers::pi * static_cast<double>(k) / d;
    const double score = (tr * std::polar(1.0, -g)).real();
    if (score > best_score + 1e-12) {
      best = g;
      best_score = score;
    }
  }
  return {best, std::polar(1.0, -best) * m};
}

inline ComplexMatrix embed_leading(const ComplexMatrix& block, std::size_t d) {
  auto m = ComplexMatrix::identity(d);
  for (std::size_t r = 0; r < block.dim(); ++r)
    for (std::size_t c = 0; c < block.dim(); ++c) m(r, c) = block(r, c);
  return m;
}

/// Qutrit with core on (0, 2): phase, Euler(0,1), Euler(0,2), Euler(0,1).
inline RotSeq qutrit_eq5(const ComplexMatrix& m) {
  const auto f = cartan_csd_2_1(m, 0);
  // K = diag(P, p) = e^{ia}·S·R_z^(02)(x) with S ∈ SU(2) on (0,1).
  auto split = [](const ComplexMatrix& k, bool left) {
    const Complex det = k(0, 0) * k(1, 1) - k(0, 1) * k(1, 0);
    const double a = (std::arg(k(2, 2)) + std::arg(det)) / 3;
    const double x = 2 * (std::arg(k(2, 2)) - a);
    const Complex ph = std::polar(1.0, x / 2), un = std::polar(1.0, -a);
    ComplexMatrix s = ComplexMatrix::identity(3);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        // Left factor: S = e^{−ia}·P·diag(e^{ix/2}, 1). Right: S = e^{−ia}·diag(e^{ix/2}, 1)·Q.
        const bool scaled = left ? c == 0 : r == 0;
        s(r, c) = un * k(r, c) * (scaled ? ph : Complex(1.0));
      }
    return std::tuple{a, x, s};
  };
  const auto [a, x, s1] = split(f.K1, true);
  const auto [b, y, s2] = split(f.K2, false);
  const SubspacePair p01{0, 1}, p02{0, 2};
  const auto mid = rot(3, Axis::Z, p02, x) * f.A * rot(3, Axis::Z, p02, y);

  RotSeq seq;
  seq.phase = a + b;
  seq.push_euler(euler_decompose(s2, p01));
  seq.push_euler(euler_decompose(mid, p02));
  seq.push_euler(euler_decompose(s1, p01));
  return seq;
}

/// Pair family on m levels: (m−2, m−1), ..., (2, 3), then (0, 1), (0, 2).
inline std::vector<SubspacePair> qudit_pairs(std::size_t m) {
  std::vector<SubspacePair> out;
  if (m >= 2) out.push_back({0, 1});
  if (m >= 3) out.push_back({0, 2});
  for (std::size_t k = 3; k < m; ++k) out.push_back({k - 1, k});
  return out;
}

/// Realizes diag(e^{iφ_0}, ..., e^{iφ_{m−1}}) as a global phase times
/// R_z rotations on the family pairs. R_z^(jk)(θ) puts −θ/2 on level j and
/// +θ/2 on level k, so this is one square linear solve.
inline RotSeq diagonal_phases(const std::vector<double>& phi) {
  const std::size_t m = phi.size();
  const auto pairs = qudit_pairs(m);
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(m, m);
  Eigen::VectorXd rhs(m);
  for (std::size_t l = 0; l < m; ++l) {
    sys(l, 0) = 1.0;
    rhs(l) = phi[l];
  }
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    sys(pairs[e].j, e + 1) = -0.5;
    sys(pairs[e].k, e + 1) = 0.5;
  }
  const Eigen::VectorXd sol = sys.fullPivLu().solve(rhs);
  RotSeq seq;
  seq.phase = sol(0);
  for (std::size_t e = 0; e < pairs.size(); ++e) seq.push(Axis::Z, pairs[e], sol(e + 1));
  return seq;
}

inline RotSeq qudit_recursive(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 2) {
    RotSeq seq;
    seq.push_euler(euler_decompose(m, {0, 1}));
    return seq;
  }
  if (n == 3) return qutrit_eq5(m);

  const auto f = cartan_csd_2_1(m, n - 2);
  const auto sp = qudit_recursive(leading_block(f.K1, n - 1));
  const auto sq = qudit_recursive(leading_block(f.K2, n - 1));
  // K1 = diag(C_P, 1)·diag(e^{iγ_P}·I, p) where C_P is the recursed circuit.
  auto block_phases = [n](double inner, Complex last) {
    std::vector<double> phi(n, inner);
    phi[n - 1] = std::arg(last);
    return diagonal_phases(phi);
  };
  RotSeq seq;
  seq.rots = sq.rots;
  seq.append(block_phases(sq.phase, f.K2(n - 1, n - 1)));
  seq.push(Axis::Y, f.core, f.beta);
  seq.append(block_phases(sp.phase, f.K1(n - 1, n - 1)));
  seq.rots.insert(seq.rots.end(), sp.rots.begin(), sp.rots.end());
  return seq;
}

/// Real SO(3) matrix as G01(u1)·G02(v)·G01(u2), G the plane rotation by u,
/// i.e. R_y with angle 2u. Returns {u1, v, u2}.
inline std::array<double, 3> so3_angles(const Eigen::Matrix3d& o) {
  const double sv = std::hypot(o(2, 0), o(2, 1));
  const double v = std::atan2(sv, o(2, 2));
  if (sv < kDegenerate) {
    if (o(2, 2) > 0) return {std::atan2(o(1, 0), o(0, 0)), 0.0, 0.0};
    return {std::atan2(-o(1, 0), -o(0, 0)), std::numbers::pi, 0.0};
  }
  return {std::atan2(-o(1, 2), -o(0, 2)), v, std::atan2(-o(2, 1), o(2, 0))};
}

/// M₀ ∈ SU(3) as O1·D·O2 with O's real orthogonal and D diagonal. Always
/// eight rotations: Ry01 Ry02 Ry01 Rz01 Rz02 Ry01 Ry02 Ry01.
inline RotSeq qutrit_eq4(const ComplexMatrix& m0) {
  const Eigen::Matrix3cd m = to_eigen(m0);
  const Eigen::Matrix3cd s = m.transpose() * m;  // symmetric unitary; Re S and Im S commute
  const Eigen::Matrix3d re = s.real(), im = s.imag();

  Eigen::Matrix3d v;
  double best = std::numeric_limits<double>::infinity();
  for (double kappa : {0.5772156649, 1.3247179572, -0.7390851332, 2.6854520010}) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(re + kappa * im);
    const Eigen::Matrix3d cand = es.eigenvectors();
    Eigen::Matrix3cd lam = cand.transpose().cast<Complex>() * s * cand.cast<Complex>();
    const double off = (lam - Eigen::Matrix3cd(lam.diagonal().asDiagonal())).cwiseAbs().maxCoeff();
    if (off < best) {
      best = off;
      v = cand;
    }
    if (off < 1e-13) break;
  }
  if (v.determinant() < 0) v.col(0) *= -1;

  const Eigen::Vector3cd lam = (v.transpose().cast<Complex>() * s * v.cast<Complex>()).diagonal();
  Eigen::Vector3cd dg;
  for (int i = 0; i < 3; ++i) dg(i) = std::polar(1.0, std::arg(lam(i)) / 2);
  Eigen::Matrix3d o1 = (m * v.cast<Complex>() * dg.cwiseInverse().asDiagonal()).real();
  if (o1.determinant() < 0) {
    o1.col(0) *= -1;
    dg(0) *= -1;
  }
  const Eigen::Matrix3d o2 = v.transpose();

  std::array<double, 3> lambda;
  for (int i = 0; i < 3; ++i) lambda[i] = std::arg(dg(i));
  const double alpha = (lambda[0] + lambda[1] + lambda[2]) / 3;
  const SubspacePair p01{0, 1}, p02{0, 2};

  RotSeq seq;
  seq.phase = alpha;
  auto push_all = [&](Axis axis, SubspacePair p, double theta) { seq.rots.push_back({axis, p, wrap_4pi(theta)}); };
  auto push_so3 = [&](const Eigen::Matrix3d& o) {
    const auto [u1, vv, u2] = so3_angles(o);
    push_all(Axis::Y, p01, 2 * u2);
    push_all(Axis::Y, p02, 2 * vv);
    push_all(Axis::Y, p01, 2 * u1);
  };
  push_so3(o2);
  push_all(Axis::Z, p01, 2 * (lambda[1] - alpha));
  push_all(Axis::Z, p02, 2 * (lambda[2] - alpha));
  push_so3(o1);
  return seq;
}

inline DecompositionResult finish(const ComplexMatrix& m, RotSeq seq, double gamma, Template t,
                                  double limit) {
  DecompositionResult r;
  r.template_kind = t;
  r.circuit.d = m.dim();
  r.circuit.width = 1;
  r.circuit.add(global_phase(wrap_2pi(seq.phase + gamma)));
  for (const auto& g : seq.rots) r.circuit.add(on(0, g));
  r.residual = max_abs_diff(circuit_unitary(r.circuit), m);
  const auto fam = t == Template::QuditRecursive ? qudit_pairs(m.dim()) : qudit_pairs(3);
  r.subspaces_used = {fam.begin(), fam.end()};
  if (!(r.residual <= limit))
    throw Error(ErrorCode::ReconstructionFailed, "residual " + format_double(r.residual) + " exceeds " +
                                                     format_double(limit));
  return r;
}

}  // namespace detail

/// Qutrit unitary as a rotation circuit on pairs (0,1) and (0,2).
inline DecompositionResult decompose_qutrit(const ComplexMatrix& m, Template t = Template::Eq5) {
  if (m.dim() != 3) throw Error(ErrorCode::BadDimension, "decompose_qutrit: expected a 3x3 matrix");
  if (!is_unitary(m)) throw Error(ErrorCode::NotUnitary, "decompose_qutrit: input is not unitary");
  if (t == Template::QuditRecursive) t = Template::Eq5;
  const auto [gamma, m0] = detail::split_global_phase(m);
  auto seq = t == Template::Eq4 ? detail::qutrit_eq4(m0) : detail::qutrit_eq5(m0);
  return detail::finish(m, std::move(seq), gamma, t, kQutritResidual);
}

/// Recursive (d−1, 1) split for 2 ≤ d ≤ 6; d−1 subspace pairs.
inline DecompositionResult decompose_qudit(const ComplexMatrix& m) {
  const std::size_t d = m.dim();
  if (d < 2) throw Error(ErrorCode::BadDimension, "decompose_qudit: d must be >= 2");
  if (d > kMaxQuditDim)
    throw Error(ErrorCode::TooLarge, "decompose_qudit: d=" + std::to_string(d) + " exceeds " +
                                         std::to_string(kMaxQuditDim));
  if (!is_unitary(m)) throw Error(ErrorCode::NotUnitary, "decompose_qudit: input is not unitary");
  const auto [gamma, m0] = detail::split_global_phase(m);
  return detail::finish(m, detail::qudit_recursive(m0), gamma, Template::QuditRecursive, kQuditResidual);
}

inline DecompositionResult decompose(const ComplexMatrix& m, Template t) {
  return t == Template::QuditRecursive ? decompose_qudit(m) : decompose_qutrit(m, t);
}

}  // namespace qlogic
