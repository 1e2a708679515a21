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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/error.hpp"

namespace qlogic {

using Complex = std::complex<double>;

inline constexpr double kUnitaryTol = 1e-10;

/// Dense square complex matrix, row-major. Every gate and circuit unitary in
/// the library is one of these.
class ComplexMatrix {
 public:
  ComplexMatrix() : ComplexMatrix(1) {}

  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw Error(ErrorCode::BadDimension, "matrix dimension must be >= 1");
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : ComplexMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) throw Error(ErrorCode::DimMismatch, "ragged matrix literal");
      std::copy(row.begin(), row.end(), entries_.begin() + r * dim_);
      ++r;
    }
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(const std::vector<Complex>& diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  bool operator==(const ComplexMatrix&) const = default;

  ComplexMatrix& operator*=(Complex scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
  }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

inline ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
  m *= scalar;
  return m;
}

inline ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "mat_mul: dimension mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_mul(a, b); }

/// Kronecker product, first factor most significant.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t ar = 0; ar < da; ++ar)
    for (std::size_t ac = 0; ac < da; ++ac) {
      const Complex v = a(ar, ac);
      if (v == Complex{}) continue;
      for (std::size_t br = 0; br < db; ++br)
        for (std::size_t bc = 0; bc < db; ++bc) out(ar * db + br, ac * db + bc) = v * b(br, bc);
    }
  return out;
}

inline ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

inline Complex trace(const ComplexMatrix& a) {
  Complex t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

/// Entrywise max-modulus distance. All equality checks in the library use it.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

inline bool is_unitary(const ComplexMatrix& a, double tol = kUnitaryTol) {
  return max_abs_diff(dagger(a) * a, ComplexMatrix::identity(a.dim())) <= tol;
}

struct PhaseMatch {
  bool equal = false;
  /// λ such that e^{iλ}·a ≈ b.
  double phase = 0.0;
  /// ‖e^{iλ}a − b‖_max, or +inf when the overlap trace vanishes.
  double error = 0.0;
};

/// Compares two matrices up to a global phase. The phase is read off
/// arg(tr(a†b)); a vanishing overlap counts as "not equal".
inline PhaseMatch equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b,
                                    double tol = kUnitaryTol) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "equal_up_to_phase: dimension mismatch");
  Complex overlap{};
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    overlap += std::conj(a.entries()[i]) * b.entries()[i];
  if (std::abs(overlap) < static_cast<double>(a.dim()) * 1e-12)
    return {false, 0.0, std::numeric_limits<double>::infinity()};
  const double lambda = std::arg(overlap);
  const double err = max_abs_diff(std::polar(1.0, lambda) * a, b);
  return {err <= tol, lambda, err};
}

/// Haar-distributed unitary: complex Gaussian matrix, modified Gram-Schmidt
/// on the columns. Gram-Schmidt already yields R with a positive real
/// diagonal, which is the normalization that makes the law Haar.
inline ComplexMatrix haar_random_unitary(std::size_t d, std::uint64_t seed) {
  if (d < 1) throw Error(ErrorCode::BadDimension, "haar_random_unitary: d must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<Complex>> cols(d, std::vector<Complex>(d));
  for (auto& col : cols)
    for (auto& z : col) z = Complex(gauss(rng), gauss(rng));

  for (std::size_t j = 0; j < d; ++j) {
    // Two passes keep the columns orthogonal to ~1e-15 even for unlucky draws.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj{};
        for (std::size_t i = 0; i < d; ++i) proj += std::conj(cols[k][i]) * cols[j][i];
        for (std::size_t i = 0; i < d; ++i) cols[j][i] -= proj * cols[k][i];
      }
    }
    double norm = 0.0;
    for (const auto& z : cols[j]) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto& z : cols[j]) z /= norm;
  }
  ComplexMatrix u(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) u(i, j) = cols[j][i];
  return u;
}

// ---------------------------------------------------------------------------
// Matrix text format: first line d, then d rows of d `re,im` tokens.

namespace detail {

inline double parse_double(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad number '" +
                                           std::string(tok) + "'");
  return v;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

inline std::string format_double(double v) {
  // Shortest representation that round-trips.
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace detail

inline ComplexMatrix parse_matrix(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> std::vector<std::string> {
    while (std::getline(in, line)) {
      ++lineno;
      auto toks = detail::split_ws(line);
      if (!toks.empty()) return toks;
    }
    throw Error(ErrorCode::ParseError, "unexpected end of matrix after line " + std::to_string(lineno));
  };
  auto header = next_line();
  if (header.size() != 1) throw Error(ErrorCode::ParseError, "line 1: expected dimension");
  const double dval = detail::parse_double(header[0], lineno);
  if (dval < 1 || dval != std::floor(dval))
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad dimension");
  const auto d = static_cast<std::size_t>(dval);
  ComplexMatrix m(d);
  for (std::size_t r = 0; r < d; ++r) {
    auto toks = next_line();
    if (toks.size() != d)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected " +
                                             std::to_string(d) + " entries");
    for (std::size_t c = 0; c < d; ++c) {
      const auto comma = toks[c].find(',');
      if (comma == std::string::npos)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": entry must be re,im");
      std::string_view tok(toks[c]);
      m(r, c) = Complex(detail::parse_double(tok.substr(0, comma), lineno),
                        detail::parse_double(tok.substr(comma + 1), lineno));
    }
  }
  return m;
}

inline ComplexMatrix parse_matrix(const std::string& text) {
  std::istringstream is(text);
  return parse_matrix(is);
}

inline std::string format_matrix(const ComplexMatrix& m) {
  std::string out = std::to_string(m.dim()) + "\n";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) out += ' ';
      out += detail::format_double(m(r, c).real()) + "," + detail::format_double(m(r, c).imag());
    }
    out += '\n';
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m) { return os << format_matrix(m); }

}  // namespace qlogic
