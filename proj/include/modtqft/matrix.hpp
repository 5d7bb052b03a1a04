// Copyright 2026 The modtqft Authors
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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modtqft/cyclo.hpp"

namespace modtqft {

/// Dense row-major matrix over a cyclotomic field. All entries are held in
/// one common conductor.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, CycScalar(0)) {}
  CycMatrix(std::size_t rows, std::size_t cols, std::vector<CycScalar> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
      throw Error(Errc::dimension_mismatch, "entry count does not match shape");
    unify();
  }

  static CycMatrix identity(std::size_t n) {
    CycMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CycScalar(1);
    return m;
  }
  static CycMatrix diagonal(const std::vector<CycScalar>& d) {
    CycMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    m.unify();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  unsigned conductor() const noexcept { return conductor_; }

  const CycScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  // Writing through this accessor may leave entries in mixed conductors
  // until the next unify(); arithmetic handles that transparently.
  CycScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  /// Embeds all entries into the lcm of their conductors.
  void unify() {
    std::uint64_t l = 1;
    for (const auto& x : data_) l = detail::lcm_u(l, x.conductor());
    conductor_ = static_cast<unsigned>(l);
    for (auto& x : data_)
      if (x.conductor() != conductor_) x = x.embed(conductor_);
  }

  CycMatrix transpose() const {
    CycMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    t.conductor_ = conductor_;
    return t;
  }

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(Errc::dimension_mismatch, "matrix product shape mismatch",
                  {static_cast<long long>(a.cols_), static_cast<long long>(b.rows_)});
    CycMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const CycScalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    out.unify();
    return out;
  }

  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(Errc::dimension_mismatch, "matrix sum shape mismatch");
    CycMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    out.unify();
    return out;
  }

  friend CycMatrix operator*(const CycScalar& c, const CycMatrix& a) {
    CycMatrix out = a;
    for (auto& x : out.data_) x = c * x;
    out.unify();
    return out;
  }

  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycScalar> data_;
  unsigned conductor_ = 1;
};

inline CycScalar trace(const CycMatrix& m) {
  if (!m.square()) throw Error(Errc::dimension_mismatch, "trace of non-square matrix");
  CycScalar t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Gauss-Jordan elimination over the field. Returns the inverse, or throws
/// singular-matrix with the failing pivot column as witness.
inline CycMatrix inverse(const CycMatrix& m) {
  if (!m.square()) throw Error(Errc::dimension_mismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  CycMatrix a = m;
  CycMatrix inv_m = CycMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n)
      throw Error(Errc::singular_matrix, "no pivot", {static_cast<long long>(col)});
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv_m(pivot, j), inv_m(col, j));
      }
    const CycScalar scale = inv(a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv_m(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const CycScalar f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
        if (!inv_m(col, j).is_zero()) inv_m(r, j) -= f * inv_m(col, j);
      }
    }
  }
  inv_m.unify();
  return inv_m;
}

inline bool is_invertible(const CycMatrix& m) {
  try {
    (void)inverse(m);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::singular_matrix) return false;
    throw;
  }
}

/// Integer power; negative exponents go through the exact inverse.
inline CycMatrix mat_pow(const CycMatrix& m, long long e) {
  if (!m.square()) throw Error(Errc::dimension_mismatch, "power of non-square matrix");
  if (e < 0) return mat_pow(inverse(m), -e);
  CycMatrix result = CycMatrix::identity(m.rows());
  CycMatrix base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

/// If m is a 0/1 permutation matrix, returns perm with m(i, perm[i]) = 1.
inline std::optional<std::vector<std::size_t>> is_permutation(const CycMatrix& m) {
  if (!m.square()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < n; ++j) {
      const CycScalar& x = m(i, j);
      if (x.is_zero()) continue;
      if (x != CycScalar(1) || hit) return std::nullopt;
      hit = j;
    }
    if (!hit || used[*hit]) return std::nullopt;
    used[*hit] = true;
    perm[i] = *hit;
  }
  return perm;
}

inline CycMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  CycMatrix m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(i, perm[i]) = CycScalar(1);
  return m;
}

}  // namespace modtqft
