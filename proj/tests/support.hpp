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

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "modtqft/modtqft.hpp"

namespace testing_support {

using modtqft::CycScalar;
using modtqft::Rational;
using cplx = std::complex<double>;

inline modtqft::Category load(const std::string& name) {
  return modtqft::to_category(modtqft::builtin(name));
}

/// Evaluates sum c_k z^k at z = exp(2 pi i / n), independently of the library.
inline cplx evaluate_at_root(unsigned n, const std::vector<Rational>& coeffs) {
  const double pi = std::acos(-1.0);
  cplx acc = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    acc += coeffs[k].get_d() * std::polar(1.0, 2 * pi * static_cast<double>(k) / n);
  return acc;
}

inline bool close(cplx a, cplx b, double tol = 1e-8) { return std::abs(a - b) <= tol * (1 + std::abs(b)); }

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// Random element given by a raw polynomial of degree < 2n, with the raw
/// coefficients returned alongside for the numeric oracle.
inline std::pair<CycScalar, std::vector<Rational>> random_scalar(std::mt19937_64& rng, unsigned n) {
  std::uniform_int_distribution<unsigned> len(1, 2 * n);
  std::vector<Rational> raw(len(rng));
  for (auto& c : raw) c = random_rational(rng);
  return {CycScalar::canonicalize(n, raw), raw};
}

/// Random token- and byte-level edits of a category file.
inline std::string mutate(std::string text, std::mt19937_64& rng) {
  static const std::vector<std::string> fragments = {
      " ", "\n", "#", "->", "z", "^", "-", "+", "/", "*", "0", "1", "2", "7", "99999", "1/0",
      "z^-1", "dual", "fusion", "twist", "dim", "unit", "rank", "mtc", "conductor", "smatrix",
      ",", "\t", "\r\n", "--", "z^123456789012", "1/2", "0,1", "\xff", std::string(1, '\0')};
  const int edits = 1 + static_cast<int>(rng() % 4);
  for (int e = 0; e < edits && !text.empty(); ++e) {
    const std::size_t at = rng() % text.size();
    const std::size_t before = text.rfind('\n', at);
    const std::size_t line_start = before == std::string::npos ? 0 : before + 1;
    const std::size_t line_end = std::min(text.find('\n', at), text.size());
    switch (rng() % 6) {
      case 0: text.erase(at, 1 + rng() % 6); break;
      case 1: text.insert(at, fragments[rng() % fragments.size()]); break;
      case 2: text[at] = static_cast<char>(rng() % 256); break;
      case 3: text.erase(line_start, line_end - line_start); break;
      case 4: text += "\n" + text.substr(line_start, line_end - line_start); break;
      default: text.resize(at); break;
    }
  }
  return text;
}

inline std::vector<std::string> builtin_names() { return modtqft::catalog_names(); }

}  // namespace testing_support
