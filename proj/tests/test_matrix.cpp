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

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace modtqft;
using namespace testing_support;

namespace {

CycMatrix ints(std::size_t n, std::initializer_list<int> xs) {
  std::vector<CycScalar> v;
  for (int x : xs) v.emplace_back(x);
  return CycMatrix(n, xs.size() / n, std::move(v));
}

CycMatrix random_matrix(std::mt19937_64& rng, std::size_t n, unsigned conductor) {
  CycMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(rng, conductor).first;
  m.unify();
  return m;
}

}  // namespace

TEST_CASE("inverse of the 2x2 Hadamard matrix", "[matrix]") {
  const CycMatrix h = ints(2, {1, 1, 1, -1});
  const CycMatrix expected = CycScalar(Rational(1, 2)) * h;
  CHECK(inverse(h) == expected);
  CHECK(h * inverse(h) == CycMatrix::identity(2));
}

TEST_CASE("trace of the identity", "[matrix]") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(trace(CycMatrix::identity(n)) == CycScalar(static_cast<long>(n)));
}

TEST_CASE("singular matrices are rejected", "[matrix]") {
  const CycMatrix ones = ints(2, {1, 1, 1, 1});
  CHECK_FALSE(is_invertible(ones));
  try {
    inverse(ones);
    FAIL("expected singular-matrix");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::singular_matrix);
  }
  CHECK_THROWS_AS(inverse(CycMatrix(2, 3)), Error);
  CHECK_THROWS_AS(CycMatrix(2, 2) * CycMatrix(3, 3), Error);
}

TEST_CASE("random cyclotomic matrices invert exactly", "[matrix][property]") {
  std::mt19937_64 rng(19);
  for (unsigned n : {1u, 5u, 8u, 12u}) {
    for (int trial = 0; trial < 6; ++trial) {
      const CycMatrix m = random_matrix(rng, 3, n);
      if (!is_invertible(m)) continue;
      const CycMatrix mi = inverse(m);
      CHECK(m * mi == CycMatrix::identity(3));
      CHECK(mi * m == CycMatrix::identity(3));
      CHECK(mat_pow(m, -2) == mi * mi);
      CHECK(mat_pow(m, 3) == m * m * m);
      CHECK(mat_pow(m, 0) == CycMatrix::identity(3));
      CHECK((m * m).transpose() == m.transpose() * m.transpose());
      CHECK(trace(m * mi * m) == trace(m));
    }
  }
}

TEST_CASE("permutation matrices are recognized", "[matrix]") {
  const std::vector<std::size_t> perm{2, 0, 1};
  const CycMatrix p = permutation_matrix(perm);
  auto back = is_permutation(p);
  REQUIRE(back);
  CHECK(*back == perm);
  CHECK_FALSE(is_permutation(ints(2, {1, 1, 0, 1})));
  CHECK_FALSE(is_permutation(ints(2, {2, 0, 0, 1})));
}

TEST_CASE("mixed conductors are unified to the lcm", "[matrix]") {
  CycMatrix m(1, 2);
  m(0, 0) = CycScalar::zeta(4);
  m(0, 1) = CycScalar::zeta(3);
  m.unify();
  CHECK(m.conductor() == 12u);
  CHECK(m(0, 0).conductor() == 12u);
  CHECK(m(0, 0) == CycScalar::zeta(12, 3));
}
