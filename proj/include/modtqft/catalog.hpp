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
#include <string>
#include <string_view>
#include <vector>

#include "modtqft/cyclo.hpp"
#include "modtqft/error.hpp"
#include "modtqft/format.hpp"
#include "modtqft/mtc.hpp"

namespace modtqft {

namespace detail {

inline RawCategoryFile abelian_shell(std::string name, unsigned conductor, std::size_t rank) {
  RawCategoryFile f;
  f.name = std::move(name);
  f.conductor = conductor;
  f.rank = rank;
  f.dual.resize(rank);
  f.twist.assign(rank, CycScalar(1));
  f.dim.assign(rank, CycScalar(1));
  return f;
}

inline RawCategoryFile cyclic_group(std::string name, unsigned conductor, std::size_t order) {
  RawCategoryFile f = abelian_shell(std::move(name), conductor, order);
  for (Label a = 0; a < order; ++a) {
    f.dual[a] = (order - a) % order;
    for (Label b = 0; b < order; ++b) f.fusion.push_back({a, b, (a + b) % order, 1});
  }
  std::sort(f.fusion.begin(), f.fusion.end());
  return f;
}

inline RawCategoryFile make_semion(bool conjugate) {
  RawCategoryFile f = cyclic_group(conjugate ? "semion-bar" : "semion", 4, 2);
  f.twist[1] = CycScalar::zeta(4, conjugate ? 3 : 1);
  return f;
}

inline RawCategoryFile make_toric_code() {
  // Labels 0 = 1, 1 = e, 2 = m, 3 = em; fusion is XOR of the bit pairs.
  RawCategoryFile f = abelian_shell("toric_code", 1, 4);
  for (Label a = 0; a < 4; ++a) {
    f.dual[a] = a;
    for (Label b = 0; b < 4; ++b) f.fusion.push_back({a, b, a ^ b, 1});
  }
  std::sort(f.fusion.begin(), f.fusion.end());
  f.twist[3] = CycScalar(-1);
  return f;
}

inline RawCategoryFile make_fibonacci() {
  RawCategoryFile f = abelian_shell("fibonacci", 5, 2);
  f.dual = {0, 1};
  f.fusion = {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}};
  f.twist[1] = CycScalar::zeta(5, 2);
  f.dim[1] = -(CycScalar::zeta(5, 2) + CycScalar::zeta(5, 3));
  return f;
}

inline RawCategoryFile make_ising() {
  // 0 = 1, 1 = sigma, 2 = psi.
  RawCategoryFile f = abelian_shell("ising", 16, 3);
  f.dual = {0, 1, 2};
  f.fusion = {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {1, 0, 1, 1}, {1, 1, 0, 1},
              {1, 1, 2, 1}, {1, 2, 1, 1}, {2, 0, 2, 1}, {2, 1, 1, 1}, {2, 2, 0, 1}};
  f.twist[1] = CycScalar::zeta(16, 1);
  f.twist[2] = CycScalar(-1);
  f.dim[1] = CycScalar::zeta(8, 1) + CycScalar::zeta(8, -1);
  return f;
}

// Z_N anyons with theta_a = zeta_{2N}^{q a^2}.
inline RawCategoryFile make_z_n(unsigned order, unsigned q) {
  const std::string name = "z_n(" + std::to_string(order) + "," + std::to_string(q) + ")";
  const bool even_q = q % 2 == 0;
  const unsigned conductor = even_q ? order : 2 * order;
  RawCategoryFile f = cyclic_group(name, conductor == 2 ? 1 : conductor, order);
  for (Label a = 0; a < order; ++a) {
    const long long e = static_cast<long long>(a) * static_cast<long long>(a) * (even_q ? q / 2 : q);
    f.twist[a] = CycScalar::zeta(conductor, e % conductor);
  }
  return f;
}

inline bool parse_z_n(std::string_view name, unsigned& order, unsigned& q) {
  constexpr std::string_view prefix = "z_n(";
  if (name.substr(0, prefix.size()) != prefix || name.back() != ')') return false;
  std::string_view body = name.substr(prefix.size(), name.size() - prefix.size() - 1);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) return false;
  auto num = [](std::string_view s, unsigned& out) {
    if (s.empty() || s.size() > 4 || s.find_first_not_of("0123456789") != std::string_view::npos)
      return false;
    out = static_cast<unsigned>(std::stoul(std::string(s)));
    return true;
  };
  return num(body.substr(0, comma), order) && num(body.substr(comma + 1), q) && order >= 1;
}

}  // namespace detail

/// Names listed by `catalog list`. Any z_n(N,q) with modular data is also
/// accepted by builtin().
inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "trivial", "semion",       "semion-bar",   "toric_code",  "fibonacci",
      "ising",   "z_n(3,2)",     "z_n(4,1)",     "z_n(5,2)",
  };
  return names;
}

inline RawCategoryFile builtin(std::string_view name) {
  if (name == "trivial") return detail::cyclic_group("trivial", 1, 1);
  if (name == "semion") return detail::make_semion(false);
  if (name == "semion-bar") return detail::make_semion(true);
  if (name == "toric_code") return detail::make_toric_code();
  if (name == "fibonacci") return detail::make_fibonacci();
  if (name == "ising") return detail::make_ising();
  unsigned order = 0, q = 0;
  if (detail::parse_z_n(name, order, q)) {
    RawCategoryFile f = detail::make_z_n(order, q);
    require_modular(to_category(f));
    return f;
  }
  throw Error(Errc::unknown_name, "no builtin category named '" + std::string(name) + "'");
}

/// Category whose unit splits as the units of a and b. Labels of b are
/// shifted by a.rank.
inline RawCategoryFile direct_sum(const RawCategoryFile& a, const RawCategoryFile& b) {
  RawCategoryFile f;
  f.name = a.name + "+" + b.name;
  f.conductor = static_cast<unsigned>(detail::lcm_u(a.conductor, b.conductor));
  if (f.conductor == 2) f.conductor = 1;
  f.rank = a.rank + b.rank;
  const Label shift = a.rank;
  f.units = a.units;
  for (Label u : b.units) f.units.push_back(u + shift);
  f.dual = a.dual;
  for (Label d : b.dual) f.dual.push_back(d + shift);
  f.fusion = a.fusion;
  for (auto e : b.fusion) f.fusion.push_back({e.i + shift, e.j + shift, e.k + shift, e.mult});
  f.twist = a.twist;
  f.twist.insert(f.twist.end(), b.twist.begin(), b.twist.end());
  f.dim = a.dim;
  f.dim.insert(f.dim.end(), b.dim.begin(), b.dim.end());
  for (auto& x : f.twist) x = x.embed(f.conductor);
  for (auto& x : f.dim) x = x.embed(f.conductor);
  return f;
}

}  // namespace modtqft
