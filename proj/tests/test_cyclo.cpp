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

std::vector<Rational> coeffs_of(const CycScalar& x) { return {x.coeffs().begin(), x.coeffs().end()}; }

}  // namespace

TEST_CASE("canonicalize reduces modulo the cyclotomic polynomial", "[cyclo]") {
  auto i = CycScalar::canonicalize(4, {0, 1});
  CHECK(coeffs_of(i) == std::vector<Rational>{0, 1});
  auto z2 = CycScalar::canonicalize(4, {0, 0, 1});
  CHECK(coeffs_of(z2) == std::vector<Rational>{-1, 0});
  auto r = CycScalar::canonicalize(1, {Rational(7, 2)});
  CHECK(r.is_rational());
  CHECK(r.constant_term() == Rational(7, 2));
  CHECK(r.conductor() == 1u);
  CHECK(CycScalar::canonicalize(2, {0, 1}) == CycScalar(-1));
  CHECK_THROWS_AS(CycScalar::canonicalize(0, {1}), Error);
}

TEST_CASE("canonical form has phi(N) coefficients and agrees numerically", "[cyclo]") {
  std::mt19937_64 rng(7);
  for (unsigned n : {3u, 4u, 5u, 8u, 9u, 12u, 15u, 16u, 20u, 24u, 30u}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto [x, raw] = random_scalar(rng, n);
      CHECK(x.coeffs().size() == detail::totient(n));
      CHECK(close(x.to_complex(), evaluate_at_root(n, raw)));
    }
  }
}

TEST_CASE("cyclotomic polynomials match known small cases", "[cyclo]") {
  CHECK(detail::cyclotomic(1) == std::vector<long>{-1, 1});
  CHECK(detail::cyclotomic(4) == std::vector<long>{1, 0, 1});
  CHECK(detail::cyclotomic(6) == std::vector<long>{1, -1, 1});
  CHECK(detail::cyclotomic(12) == std::vector<long>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p = detail::cyclotomic(105);
  CHECK(p.size() == 49);
  CHECK(std::count(p.begin(), p.end(), -2) == 2);
}

TEST_CASE("arithmetic examples in Q(i)", "[cyclo]") {
  const CycScalar i = CycScalar::zeta(4);
  CHECK((CycScalar(1) + i) * (CycScalar(1) - i) == CycScalar(2));
  CHECK(inv(i) == -i);
  CHECK(conj(i) == -i);
  CHECK_THROWS_AS(inv(CycScalar(0)), Error);
  CHECK_THROWS_AS(CycScalar(1) / CycScalar::canonicalize(4, {0}), Error);
}

TEST_CASE("field axioms hold on random elements", "[cyclo][property]") {
  std::mt19937_64 rng(11);
  for (unsigned n : {1u, 3u, 5u, 8u, 12u, 16u}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto x = random_scalar(rng, n).first;
      auto y = random_scalar(rng, n).first;
      auto z = random_scalar(rng, n).first;
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x - x == CycScalar(0));
      if (!x.is_zero()) CHECK(x * inv(x) == CycScalar(1));
      CHECK(conj(conj(x)) == x);
      CHECK(conj(x * y) == conj(x) * conj(y));
      CHECK(close((x * y).to_complex(), x.to_complex() * y.to_complex()));
      CHECK(close(conj(x).to_complex(), std::conj(x.to_complex())));
    }
  }
}

TEST_CASE("embedding is a ring homomorphism", "[cyclo][property]") {
  CHECK(CycScalar::zeta(4).embed(8) == CycScalar::zeta(8, 2));
  CHECK(to_string(CycScalar::zeta(4).embed(8)) == "z^2");
  CHECK(CycScalar(Rational(3, 5)).embed(7) == CycScalar(Rational(3, 5)));
  CHECK_THROWS_MATCHES(CycScalar::zeta(4).embed(3), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == Errc::incompatible_conductor; }));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_scalar(rng, 6).first;
    auto y = random_scalar(rng, 6).first;
    CHECK((x * y).embed(24) == x.embed(24) * y.embed(24));
    CHECK((x + y).embed(24) == x.embed(24) + y.embed(24));
    CHECK(close(x.embed(24).to_complex(), x.to_complex()));
  }
  // Mixed conductors meet in the lcm.
  auto s = CycScalar::zeta(4) + CycScalar::zeta(3);
  CHECK(s.conductor() == 12u);
  CHECK(close(s.to_complex(), CycScalar::zeta(4).to_complex() + CycScalar::zeta(3).to_complex()));
}

TEST_CASE("roots of unity are detected with their minimal order", "[cyclo]") {
  const CycScalar i = CycScalar::zeta(4);
  auto r = root_of_unity_order(i);
  REQUIRE(r);
  CHECK(r->order == 4u);
  CHECK(r->exponent == 1u);
  CHECK_FALSE(root_of_unity_order(CycScalar(2)));
  CHECK_FALSE(root_of_unity_order(CycScalar(0)));
  auto q = root_of_unity_order((CycScalar(1) + i) / (CycScalar(1) - i));
  REQUIRE(q);
  CHECK(q->order == 4u);
  CHECK(q->exponent == 1u);
  auto m = root_of_unity_order(CycScalar(-1));
  REQUIRE(m);
  CHECK(m->order == 2u);
  // zeta_5^2 written at conductor 10 keeps order 5.
  auto f = root_of_unity_order(CycScalar::zeta(5, 2).embed(10));
  REQUIRE(f);
  CHECK(f->order == 5u);
  CHECK(f->exponent == 2u);
  CHECK(f->value() == CycScalar::zeta(5, 2));
}

TEST_CASE("kth roots enumerate all solutions", "[cyclo]") {
  auto one = kth_roots({1, 0}, 2);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == CycScalar(1));
  CHECK(one[1] == CycScalar(-1));
  auto sq = kth_roots({4, 1}, 2);
  REQUIRE(sq.size() == 2);
  CHECK(sq[0] == CycScalar::zeta(8, 1));
  CHECK(sq[1] == CycScalar::zeta(8, 5));
  for (unsigned k : {2u, 3u, 6u}) {
    for (RootOfUnity x : {RootOfUnity{1, 0}, RootOfUnity{4, 1}, RootOfUnity{5, 2}, RootOfUnity{10, 7}}) {
      auto roots = kth_roots(x, k);
      CHECK(roots.size() == k);
      for (std::size_t a = 0; a < roots.size(); ++a) {
        CHECK(pow(roots[a], k) == x.value());
        for (std::size_t b = a + 1; b < roots.size(); ++b) CHECK(roots[a] != roots[b]);
      }
    }
  }
}

TEST_CASE("decimal rendering", "[cyclo]") {
  CHECK(format_complex(CycScalar::zeta(4), 6) == "0.000000 + 1.000000i");
  CHECK(format_complex(CycScalar::zeta(5) + CycScalar::zeta(5, 4), 6) == "0.618034 + 0i");
  CHECK(format_complex(CycScalar(Rational(1, 3)), 6) == "0.333333 + 0i");
  CHECK(format_complex(-CycScalar::zeta(8), 3) == "-0.707 - 0.707i");
}

TEST_CASE("scalar text round-trips", "[cyclo]") {
  std::mt19937_64 rng(5);
  for (unsigned n : {1u, 4u, 5u, 16u, 24u}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto x = random_scalar(rng, n).first.embed(n);
      CHECK(parse_scalar(to_string(x), n) == x);
    }
  }
  CHECK(parse_scalar("z", 4) == CycScalar::zeta(4));
  CHECK(parse_scalar("-z^3 - z^2", 5) == -(CycScalar::zeta(5, 3) + CycScalar::zeta(5, 2)));
  CHECK(parse_scalar("1/2*z^3 - z + 2", 8) == CycScalar(Rational(1, 2)) * CycScalar::zeta(8, 3) -
                                                    CycScalar::zeta(8) + CycScalar(2));
  CHECK(to_string(CycScalar(0)) == "0");
  for (const char* bad : {"", "z^", "1 +", "2/0", "q", "z^-", "((z)", "1//2"}) {
    CHECK_THROWS_AS(parse_scalar(bad, 4), Error);
  }
}
