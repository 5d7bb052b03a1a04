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
#include <vector>

#include "modtqft/error.hpp"
#include "modtqft/mtc.hpp"

namespace modtqft {

struct SurfaceSpec {
  std::size_t genus = 0;
  std::vector<Label> boundary;
};

namespace detail {

using IntMatrix = std::vector<std::vector<Integer>>;

inline void check_labels(const Category& C, const std::vector<Label>& labels) {
  for (Label a : labels)
    if (a >= C.rank())
      throw Error(Errc::invalid_label, "label out of range", {static_cast<long long>(a)});
}

// (N_i)_{jk} = N_{ij}^k
inline IntMatrix fusion_matrix(const FusionData& F, Label i) {
  const std::size_t n = F.rank();
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (Label j = 0; j < n; ++j)
    for (Label k = 0; k < n; ++k) m[j][k] = F.N(i, j, k);
  return m;
}

inline IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace detail

/// dim Hom(S_target, S_{b1} (x) ... (x) S_{bn}); the empty product is the unit.
inline Integer hom_dim(const Category& C, Label target, const std::vector<Label>& tensorands) {
  detail::check_labels(C, {target});
  detail::check_labels(C, tensorands);
  const auto& F = C.fusion();
  if (tensorands.empty()) return F.is_unit(target) ? 1 : 0;
  const std::size_t n = C.rank();
  std::vector<Integer> mult(n, 0);
  mult[tensorands[0]] = 1;
  for (std::size_t t = 1; t < tensorands.size(); ++t) {
    std::vector<Integer> next(n, 0);
    for (Label j = 0; j < n; ++j) {
      if (mult[j] == 0) continue;
      for (Label k = 0; k < n; ++k)
        if (long m = F.N(j, tensorands[t], k); m != 0) next[k] += mult[j] * m;
    }
    mult = std::move(next);
  }
  return mult[target];
}

/// State-space dimension of a genus-g surface with labeled boundary:
/// sum over unit summands u of e_u^T N_{a1} ... N_{an} K^g e_u, with
/// K = sum_i N_i N_{dual(i)}.
inline Integer surface_dim(const Category& C, const SurfaceSpec& spec) {
  detail::check_labels(C, spec.boundary);
  const auto& F = C.fusion();
  const std::size_t n = C.rank();
  if (spec.genus == 0 && spec.boundary.size() <= 1) {
    if (spec.boundary.empty()) return static_cast<unsigned long>(F.unit_summands().size());
    Integer total = 0;
    for (Label u : F.unit_summands()) total += hom_dim(C, u, spec.boundary);
    return total;
  }
  detail::IntMatrix M(n, std::vector<Integer>(n, 0));
  for (Label i = 0; i < n; ++i) M[i][i] = 1;
  for (Label a : spec.boundary) M = detail::int_mul(M, detail::fusion_matrix(F, a));
  if (spec.genus > 0) {
    detail::IntMatrix K(n, std::vector<Integer>(n, 0));
    for (Label i = 0; i < n; ++i) {
      auto term = detail::int_mul(detail::fusion_matrix(F, i), detail::fusion_matrix(F, F.dual(i)));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) K[r][c] += term[r][c];
    }
    for (std::size_t g = 0; g < spec.genus; ++g) M = detail::int_mul(M, K);
  }
  Integer total = 0;
  for (Label u : F.unit_summands()) total += M[u][u];
  return total;
}

/// Independent count over a fixed pants decomposition. The surface is cut
/// into its boundary circles and g one-holed tori, joined along a linear
/// chain of pants; every internal circle gets a simple label and each pair
/// of pants contributes dim Hom(1, x (x) y (x) z).
inline Integer surface_dim_bruteforce(const Category& C, const SurfaceSpec& spec,
                                      std::size_t max_labelings = 10'000'000) {
  detail::check_labels(C, spec.boundary);
  const auto& F = C.fusion();
  const std::size_t n = C.rank();
  const std::size_t g = spec.genus;

  // W[x][y][z] = dim Hom(1, x (x) y (x) z) with 1 the full unit.
  std::vector<Integer> W(n * n * n, 0);
  auto w = [&](Label x, Label y, Label z) -> const Integer& { return W[(x * n + y) * n + z]; };
  for (Label x = 0; x < n; ++x)
    for (Label y = 0; y < n; ++y)
      for (Label z = 0; z < n; ++z) {
        Integer t = 0;
        for (Label u : F.unit_summands()) t += hom_dim(C, u, {x, y, z});
        W[(x * n + y) * n + z] = t;
      }
  auto hom_unit = [&](const std::vector<Label>& xs) {
    Integer t = 0;
    for (Label u : F.unit_summands()) t += hom_dim(C, u, xs);
    return t;
  };

  // Leaves of the chain: each boundary circle contributes its label; each
  // handle contributes a free circle label e (seen as dual(e) from the
  // chain) carrying a one-holed torus of weight sum_i Hom(1, e (x) i (x) i*).
  const std::size_t leaves = spec.boundary.size() + g;
  if (leaves == 0) return static_cast<unsigned long>(F.unit_summands().size());
  if (g == 1 && spec.boundary.empty()) {
    Integer t = 0;
    for (Label i = 0; i < n; ++i) t += hom_unit({i, F.dual(i)});
    return t;
  }

  const std::size_t internal = 2 * g + (leaves >= 3 ? leaves - 3 : 0);
  {
    long double count = 1;
    for (std::size_t e = 0; e < internal; ++e) count *= static_cast<long double>(n);
    if (count > static_cast<long double>(max_labelings))
      throw Error(Errc::too_large_instance, "pants labeling enumeration exceeds limit",
                  {static_cast<long long>(internal)});
  }

  // Edge variables: handle boundary e_h and handle loop i_h for each handle,
  // then chain circles y_1..y_{leaves-3}.
  std::vector<Label> handle_edge(g), handle_loop(g), chain(leaves >= 3 ? leaves - 3 : 0);
  Integer total = 0;

  auto leaf_label = [&](std::size_t idx) -> Label {
    if (idx < spec.boundary.size()) return spec.boundary[idx];
    return F.dual(handle_edge[idx - spec.boundary.size()]);
  };
  auto evaluate = [&]() -> Integer {
    Integer weight = 1;
    for (std::size_t h = 0; h < g; ++h) {
      const Label i = handle_loop[h];
      weight *= w(handle_edge[h], i, F.dual(i));
      if (weight == 0) return 0;
    }
    if (leaves == 1) return weight * hom_unit({leaf_label(0)});
    if (leaves == 2) return weight * hom_unit({leaf_label(0), leaf_label(1)});
    // Pants: (l0, l1, y1*), (y1, l2, y2*), ..., (y_{L-3}, l_{L-2}, l_{L-1}).
    const std::size_t L = leaves;
    if (L == 3) return weight * w(leaf_label(0), leaf_label(1), leaf_label(2));
    weight *= w(leaf_label(0), leaf_label(1), F.dual(chain[0]));
    for (std::size_t p = 1; p + 1 < L - 2 && weight != 0; ++p)
      weight *= w(chain[p - 1], leaf_label(p + 1), F.dual(chain[p]));
    if (weight == 0) return 0;
    return weight * w(chain[L - 4], leaf_label(L - 2), leaf_label(L - 1));
  };

  std::vector<Label*> vars;
  for (auto& x : handle_edge) vars.push_back(&x);
  for (auto& x : handle_loop) vars.push_back(&x);
  for (auto& x : chain) vars.push_back(&x);
  // Odometer over all labelings.
  while (true) {
    total += evaluate();
    std::size_t v = 0;
    while (v < vars.size()) {
      if (++*vars[v] < n) break;
      *vars[v] = 0;
      ++v;
    }
    if (v == vars.size()) break;
  }
  return total;
}

}  // namespace modtqft
