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

// Z/2 fusion with the given twist and dimension of the generator.
std::string z2_file(const std::string& conductor, const std::string& twist1, const std::string& dim1) {
  return "mtc z2\nconductor " + conductor +
         "\nrank 2\ndual 0->0\ndual 1->1\n"
         "fusion 0 0 0 1\nfusion 0 1 1 1\nfusion 1 0 1 1\nfusion 1 1 0 1\n"
         "twist 0 1\ntwist 1 " + twist1 + "\ndim 0 1\ndim 1 " + dim1 + "\n";
}

Errc code_of(const std::function<void()>& f, std::vector<long long>* witness = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (witness) *witness = e.witness();
    return e.code();
  }
  FAIL("no error raised");
  return Errc::syntax_error;
}

// Independent floating-point evaluation of the unnormalized S-matrix.
std::vector<std::vector<cplx>> numeric_s(const Category& C) {
  const std::size_t n = C.rank();
  std::vector<std::vector<cplx>> S(n, std::vector<cplx>(n));
  for (Label i = 0; i < n; ++i)
    for (Label j = 0; j < n; ++j) {
      cplx acc = 0;
      for (Label k = 0; k < n; ++k)
        acc += double(C.fusion().N(C.fusion().dual(i), j, k)) * C.twist(k).to_complex() *
               C.qdim(k).to_complex();
      S[i][j] = acc / (C.twist(i).to_complex() * C.twist(j).to_complex());
    }
  return S;
}

}  // namespace

TEST_CASE("validate accepts the trivial and semion data", "[mtc]") {
  const Category t = load("trivial");
  CHECK(t.rank() == 1);
  CHECK(t.factors().size() == 1);
  const Category s = to_category(parse(z2_file("4", "z", "1")));
  CHECK(s.rank() == 2);
  CHECK(s.twist(1) == CycScalar::zeta(4));
}

TEST_CASE("validate names the failing axiom and its witness", "[mtc]") {
  std::vector<long long> w;
  // Fibonacci without the channel tau x tau -> 1.
  auto fib = builtin("fibonacci");
  std::erase_if(fib.fusion, [](const FusionEntry& e) { return e.i == 1 && e.j == 1 && e.k == 0; });
  CHECK(code_of([&] { to_category(fib); }, &w) == Errc::rigidity_failure);
  CHECK(w == std::vector<long long>{1});

  CHECK(code_of([&] { to_category(parse(z2_file("4", "z", "2"))); }) == Errc::dimension_failure);
  CHECK(code_of([&] { to_category(parse(z2_file("1", "0", "1"))); }) == Errc::twist_failure);
  // theta = -1 on Z/2 has p+ = 0.
  CHECK(code_of([&] { to_category(parse(z2_file("1", "-1", "1"))); }, &w) == Errc::degenerate_category);

  auto bad_dual = builtin("z_n(3,2)");
  bad_dual.dual = {0, 1, 1};
  CHECK(code_of([&] { to_category(bad_dual); }) == Errc::duality_failure);

  auto bad_unit = builtin("semion");
  bad_unit.fusion.push_back({0, 1, 0, 1});
  std::sort(bad_unit.fusion.begin(), bad_unit.fusion.end());
  CHECK(code_of([&] { to_category(bad_unit); }) == Errc::unit_law_failure);

  // Z/3 with 1 x 1 -> 1 instead of 2 is still rigid but not associative.
  auto z3 = builtin("z_n(3,2)");
  for (auto& e : z3.fusion)
    if (e.i == 1 && e.j == 1) e.k = 1;
  std::sort(z3.fusion.begin(), z3.fusion.end());
  CHECK(code_of([&] { to_category(z3); }, &w) == Errc::associativity_failure);
  CHECK(w == std::vector<long long>{1, 1});

  // Rigid but non-associative: 1 x 1 = 0, 2 x 2 = 0, 1 x 2 = 2 x 1 = 1,
  // so (2 x 1) x 1 = 0 while 2 x (1 x 1) = 2.
  RawCategoryFile na;
  na.name = "na";
  na.rank = 3;
  na.dual = {0, 1, 2};
  na.fusion = {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {1, 0, 1, 1}, {1, 1, 0, 1},
               {1, 2, 1, 1}, {2, 0, 2, 1}, {2, 1, 1, 1}, {2, 2, 0, 1}};
  na.twist = {CycScalar(1), CycScalar(1), CycScalar(1)};
  na.dim = {CycScalar(1), CycScalar(1), CycScalar(1)};
  CHECK(code_of([&] { to_category(na); }) == Errc::associativity_failure);

  auto overlap = direct_sum(builtin("semion"), builtin("trivial"));
  overlap.fusion.push_back({2, 1, 1, 1});
  overlap.fusion.push_back({1, 2, 1, 1});
  std::sort(overlap.fusion.begin(), overlap.fusion.end());
  const Errc oc = code_of([&] { to_category(overlap); });
  CHECK((oc == Errc::unit_law_failure || oc == Errc::factor_partition_failure));
}

TEST_CASE("unnormalized S-matrix examples", "[mtc]") {
  CHECK(s_tilde_of(load("trivial")) == CycMatrix::identity(1));
  const CycMatrix s = s_tilde_of(load("semion"));
  CHECK(s == CycMatrix(2, 2, {CycScalar(1), CycScalar(1), CycScalar(1), CycScalar(-1)}));
  std::vector<CycScalar> tc;
  for (int x : {1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1}) tc.emplace_back(x);
  CHECK(s_tilde_of(load("toric_code")) == CycMatrix(4, 4, tc));
}

TEST_CASE("S-matrix agrees with a floating-point evaluation", "[mtc]") {
  for (const auto& name : builtin_names()) {
    INFO(name);
    const Category C = load(name);
    const CycMatrix S = s_tilde_of(C);
    const auto N = numeric_s(C);
    for (Label i = 0; i < C.rank(); ++i)
      for (Label j = 0; j < C.rank(); ++j) CHECK(close(S(i, j).to_complex(), N[i][j]));
  }
}

TEST_CASE("modularity check", "[mtc]") {
  CHECK(verify_modular(load("semion")).modular);
  CHECK(verify_modular(load("trivial")).modular);
  const auto bad = verify_modular(to_category(parse(z2_file("1", "1", "1"))));
  CHECK_FALSE(bad.modular);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == 1);
  std::vector<long long> w;
  CHECK(code_of([&] { require_modular(to_category(parse(z2_file("1", "1", "1")))); }, &w) ==
        Errc::not_modular);
  CHECK(w == std::vector<long long>{1});
}

TEST_CASE("Gauss sums and anomaly", "[mtc]") {
  const auto t = load("trivial").sums(0);
  CHECK(t.p_plus == CycScalar(1));
  CHECK(t.p_minus == CycScalar(1));
  CHECK(t.anomaly == CycScalar(1));
  CHECK(t.global_dim == CycScalar(1));
  const CycScalar i = CycScalar::zeta(4);
  const auto s = load("semion").sums(0);
  CHECK(s.p_plus == CycScalar(1) + i);
  CHECK(s.p_minus == CycScalar(1) - i);
  CHECK(s.anomaly == i);
  CHECK(s.global_dim == CycScalar(2));
  const auto tc = load("toric_code").sums(0);
  CHECK(tc.p_plus == CycScalar(2));
  CHECK(tc.p_minus == CycScalar(2));
  CHECK(tc.anomaly == CycScalar(1));
  CHECK(tc.global_dim == CycScalar(4));
  // Numeric oracle on every builtin.
  for (const auto& name : builtin_names()) {
    INFO(name);
    const Category C = load(name);
    cplx pp = 0, pm = 0;
    for (Label k = 0; k < C.rank(); ++k) {
      const cplx d = C.qdim(k).to_complex(), th = C.twist(k).to_complex();
      pp += th * d * d;
      pm += d * d / th;
    }
    CHECK(close(C.sums(0).p_plus.to_complex(), pp));
    CHECK(close(C.sums(0).p_minus.to_complex(), pm));
    CHECK(C.sums(0).anomaly * C.sums(0).p_minus == C.sums(0).p_plus);
  }
}

TEST_CASE("admissible structures", "[mtc]") {
  const auto t = admissibility(load("trivial"));
  CHECK(t.oriented);
  CHECK(t.csig);
  CHECK(t.signature);
  CHECK(t.p1);
  REQUIRE(t.factors[0].square_roots.size() == 2);
  CHECK(t.factors[0].square_roots[0].root == CycScalar(1));
  CHECK(t.factors[0].square_roots[1].root == CycScalar(-1));

  const auto s = admissibility(load("semion"));
  CHECK_FALSE(s.oriented);
  CHECK(s.signature);
  REQUIRE(s.factors[0].square_roots.size() == 2);
  CHECK(s.factors[0].square_roots[0].root == CycScalar::zeta(8, 1));
  CHECK(s.factors[0].square_roots[1].root == CycScalar::zeta(8, 5));
  REQUIRE(s.factors[0].sixth_roots.size() == 6);
  for (const auto& r : s.factors[0].sixth_roots) {
    CHECK(r.root.conductor() == 24u);
    CHECK(pow(r.root, 6) == CycScalar::zeta(4));
    CHECK(r.p * pow(r.root, 3) == s.factors[0].sums.p_plus);
  }

  const auto tc = admissibility(load("toric_code"));
  CHECK(tc.oriented);
  CHECK(tc.factors[0].square_roots[0].p == CycScalar(2));

  // Signature needs one anomaly shared by all factors.
  const Category mixed = to_category(direct_sum(builtin("semion"), builtin("semion-bar")));
  const auto m = admissibility(mixed);
  CHECK_FALSE(m.signature);
  CHECK_FALSE(m.oriented);
  CHECK(m.csig);
  const Category same = to_category(direct_sum(builtin("semion"), builtin("semion")));
  CHECK(admissibility(same).signature);
  CHECK(admissibility(same).signature_roots.size() == 2);
}

TEST_CASE("normalizing constant p", "[mtc]") {
  CHECK(choose_p(load("trivial"), 0, 0) == CycScalar(1));
  CHECK(choose_p(load("trivial"), 0, 1) == CycScalar(-1));
  CHECK(choose_p(load("toric_code"), 0, 0) == CycScalar(2));
  const CycScalar p = choose_p(load("semion"), 0, 0);
  CHECK(p == (CycScalar(1) + CycScalar::zeta(4)) / CycScalar::zeta(8));
  CHECK(p * p == CycScalar(2));
  CHECK(close(p.to_complex(), std::sqrt(2.0)));
  std::vector<long long> w;
  CHECK(code_of([&] { choose_p(load("semion"), 0, 2); }) == Errc::index_out_of_range);
  CHECK(code_of([&] { choose_p(load("semion"), 1, 0); }) == Errc::index_out_of_range);
}

TEST_CASE("Verlinde formula reconstructs fusion", "[mtc]") {
  for (const auto& name : builtin_names()) {
    INFO(name);
    const Category C = load(name);
    CHECK(verlinde_fusion(C) == C.fusion());
  }
  const Category t = load("trivial");
  CHECK(verlinde_fusion(t).N(0, 0, 0) == 1);
}

TEST_CASE("non-simple units split into factors", "[mtc]") {
  const Category C = to_category(direct_sum(builtin("fibonacci"), builtin("semion")));
  REQUIRE(C.factors().size() == 2);
  CHECK(C.factors()[0].unit == 0);
  CHECK(C.factors()[1].unit == 2);
  CHECK(C.factor_of(3) == 1);
  CHECK(C.sums(0).p_plus == load("fibonacci").sums(0).p_plus);
  CHECK(C.sums(1).p_plus == load("semion").sums(0).p_plus);
  CHECK(verify_modular(C).modular);
  CHECK(verlinde_fusion(C) == C.fusion());
  const CycMatrix S = s_tilde_of(C);
  CHECK(S(0, 2).is_zero());
  CHECK(S(1, 3).is_zero());
}

TEST_CASE("a carried S-matrix is checked for shape and used as given", "[mtc]") {
  auto f = builtin("semion");
  f.smatrix = {{0, 0, CycScalar(1)}, {0, 1, CycScalar(1)}, {1, 0, CycScalar(1)}, {1, 1, CycScalar(-1)}};
  CHECK(s_tilde_of(to_category(f)) == s_tilde_of(load("semion")));
  auto asym = f;
  asym.smatrix[1].value = CycScalar(2);
  CHECK(code_of([&] { to_category(asym); }) == Errc::smatrix_failure);
  auto wrong_unit_row = f;
  wrong_unit_row.smatrix[1].value = CycScalar(3);
  wrong_unit_row.smatrix[2].value = CycScalar(3);
  CHECK(code_of([&] { to_category(wrong_unit_row); }) == Errc::smatrix_failure);
  // A symmetric matrix with the right unit row but a wrong entry is caught by modularity.
  auto ones = f;
  ones.smatrix[3].value = CycScalar(1);
  CHECK_FALSE(verify_modular(to_category(ones)).modular);
}
