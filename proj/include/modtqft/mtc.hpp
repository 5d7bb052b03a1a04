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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modtqft/cyclo.hpp"
#include "modtqft/error.hpp"
#include "modtqft/matrix.hpp"

namespace modtqft {

using Label = std::size_t;

/// Fusion rules on labels 0..rank-1: multiplicities N_{ij}^k, the dual
/// involution and the simple summands of the unit.
class FusionData {
 public:
  FusionData() = default;
  FusionData(std::size_t rank, std::vector<Label> unit_summands, std::vector<Label> dual)
      : rank_(rank),
        units_(std::move(unit_summands)),
        dual_(std::move(dual)),
        table_(rank * rank * rank, 0) {}

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Label>& unit_summands() const noexcept { return units_; }
  const std::vector<Label>& duals() const noexcept { return dual_; }
  Label dual(Label i) const { return dual_.at(i); }
  bool is_unit(Label i) const { return std::find(units_.begin(), units_.end(), i) != units_.end(); }

  long N(Label i, Label j, Label k) const { return table_[(i * rank_ + j) * rank_ + k]; }
  void set(Label i, Label j, Label k, long mult) { table_.at((i * rank_ + j) * rank_ + k) = mult; }

  friend bool operator==(const FusionData&, const FusionData&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Label> units_;
  std::vector<Label> dual_;
  std::vector<long> table_;
};

/// Ribbon data attached to the labels.
struct ModularDatum {
  std::vector<CycScalar> twist;
  std::vector<CycScalar> qdim;
  std::optional<CycMatrix> s_tilde;
};

/// A unit summand s together with the simple labels it preserves, [s].
struct Factor {
  Label unit = 0;
  std::vector<Label> members;
};

struct GaussSums {
  CycScalar p_plus;
  CycScalar p_minus;
  CycScalar anomaly;
  CycScalar global_dim;
};

class Category;
Category validate(FusionData fusion, ModularDatum data);

/// Validated fusion and ribbon data. Only constructible through validate().
class Category {
 public:
  const FusionData& fusion() const noexcept { return fusion_; }
  const ModularDatum& data() const noexcept { return data_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return fusion_.rank(); }

  const CycScalar& twist(Label i) const { return data_.twist.at(i); }
  const CycScalar& qdim(Label i) const { return data_.qdim.at(i); }

  /// Index into factors() of the factor containing label i.
  std::size_t factor_of(Label i) const { return factor_index_.at(i); }

  const GaussSums& sums(std::size_t factor) const { return sums_.at(factor); }

  /// lcm of the conductors of all twists and dimensions.
  unsigned conductor() const {
    std::uint64_t l = 1;
    for (const auto& x : data_.twist) l = detail::lcm_u(l, x.conductor());
    for (const auto& x : data_.qdim) l = detail::lcm_u(l, x.conductor());
    return static_cast<unsigned>(l);
  }

 private:
  friend Category validate(FusionData fusion, ModularDatum data);
  Category() = default;

  FusionData fusion_;
  ModularDatum data_;
  std::vector<Factor> factors_;
  std::vector<std::size_t> factor_index_;
  std::vector<GaussSums> sums_;
};

namespace detail {

inline long long as_ll(std::size_t v) { return static_cast<long long>(v); }

inline GaussSums compute_gauss_sums(const std::vector<CycScalar>& twist,
                                    const std::vector<CycScalar>& qdim, const Factor& f) {
  GaussSums g;
  for (Label i : f.members) {
    const CycScalar d2 = qdim[i] * qdim[i];
    g.p_plus += twist[i] * d2;
    g.p_minus += inv(twist[i]) * d2;
  }
  g.global_dim = g.p_plus * g.p_minus;
  if (!g.p_minus.is_zero()) g.anomaly = g.p_plus / g.p_minus;
  return g;
}

inline void check_fusion(const FusionData& F) {
  const std::size_t n = F.rank();
  if (n == 0) throw Error(Errc::shape_failure, "rank must be positive");
  if (F.duals().size() != n) throw Error(Errc::shape_failure, "dual table has wrong length");
  if (F.unit_summands().empty()) throw Error(Errc::shape_failure, "no unit summand declared");
  for (std::size_t a = 0; a < F.unit_summands().size(); ++a) {
    const Label s = F.unit_summands()[a];
    if (s >= n) throw Error(Errc::invalid_label, "unit summand out of range", {as_ll(s)});
    for (std::size_t b = 0; b < a; ++b)
      if (F.unit_summands()[b] == s)
        throw Error(Errc::shape_failure, "unit summand repeated", {as_ll(s)});
  }
  for (Label i = 0; i < n; ++i) {
    const Label di = F.dual(i);
    if (di >= n) throw Error(Errc::invalid_label, "dual out of range", {as_ll(i)});
    if (F.dual(di) != i) throw Error(Errc::duality_failure, "dual is not an involution", {as_ll(i)});
    for (Label j = 0; j < n; ++j)
      for (Label k = 0; k < n; ++k)
        if (F.N(i, j, k) < 0)
          throw Error(Errc::shape_failure, "negative multiplicity",
                      {as_ll(i), as_ll(j), as_ll(k)});
  }
  for (Label s : F.unit_summands()) {
    if (F.dual(s) != s) throw Error(Errc::duality_failure, "dual moves a unit summand", {as_ll(s)});
    for (Label i = 0; i < n; ++i)
      for (Label j = 0; j < n; ++j) {
        const long left = F.N(s, i, j), right = F.N(i, s, j);
        if (left != right || left < 0 || left > 1 || (j != i && left != 0))
          throw Error(Errc::unit_law_failure, "s (x) i is not a partial identity",
                      {as_ll(s), as_ll(i)});
      }
    for (Label t : F.unit_summands())
      for (Label k = 0; k < n; ++k) {
        const long want = (s == t && k == s) ? 1 : 0;
        if (F.N(s, t, k) != want)
          throw Error(Errc::unit_law_failure, "unit summands do not annihilate",
                      {as_ll(s), as_ll(t)});
      }
  }
}

inline std::vector<Factor> compute_factors(const FusionData& F, std::vector<std::size_t>& index) {
  const std::size_t n = F.rank();
  std::vector<Factor> factors;
  index.assign(n, 0);
  std::vector<int> hits(n, 0);
  for (Label s : F.unit_summands()) {
    Factor f{s, {}};
    for (Label i = 0; i < n; ++i)
      if (F.N(s, i, i) == 1) {
        f.members.push_back(i);
        index[i] = factors.size();
        ++hits[i];
      }
    factors.push_back(std::move(f));
  }
  for (Label i = 0; i < n; ++i)
    if (hits[i] != 1)
      throw Error(Errc::factor_partition_failure,
                  "label preserved by " + std::to_string(hits[i]) + " unit summands", {as_ll(i)});
  return factors;
}

inline void check_rigidity_and_associativity(const FusionData& F,
                                             const std::vector<Factor>& factors,
                                             const std::vector<std::size_t>& index) {
  const std::size_t n = F.rank();
  for (Label i = 0; i < n; ++i) {
    const Label own = factors[index[i]].unit;
    for (Label s : F.unit_summands())
      for (Label j = 0; j < n; ++j) {
        const long want = (s == own && j == F.dual(i)) ? 1 : 0;
        if (F.N(i, j, s) != want)
          throw Error(Errc::rigidity_failure, "N_{i j}^s must equal delta_{j, dual(i)}",
                      {as_ll(i)});
      }
  }
  // (N_i N_j)_{ab} = sum_c N_{ia}^c N_{jc}^b against sum_k N_{ij}^k N_{ka}^b.
  for (Label i = 0; i < n; ++i)
    for (Label j = 0; j < n; ++j)
      for (Label a = 0; a < n; ++a)
        for (Label b = 0; b < n; ++b) {
          long lhs = 0, rhs = 0;
          for (Label c = 0; c < n; ++c) lhs += F.N(i, a, c) * F.N(j, c, b);
          for (Label k = 0; k < n; ++k) rhs += F.N(i, j, k) * F.N(k, a, b);
          if (lhs != rhs)
            throw Error(Errc::associativity_failure, "N_i N_j != sum_k N_ij^k N_k",
                        {as_ll(i), as_ll(j)});
        }
}

inline void check_ribbon(const FusionData& F, const ModularDatum& D,
                         const std::vector<Factor>& factors,
                         const std::vector<std::size_t>& index) {
  const std::size_t n = F.rank();
  if (D.twist.size() != n) throw Error(Errc::shape_failure, "twist table has wrong length");
  if (D.qdim.size() != n) throw Error(Errc::shape_failure, "dimension table has wrong length");
  for (Label i = 0; i < n; ++i) {
    if (D.twist[i].is_zero()) throw Error(Errc::twist_failure, "twist must be invertible", {as_ll(i)});
    if (D.twist[F.dual(i)] != D.twist[i])
      throw Error(Errc::twist_failure, "theta_{dual(i)} != theta_i", {as_ll(i)});
    if (D.qdim[i].is_zero()) throw Error(Errc::dimension_failure, "zero quantum dimension", {as_ll(i)});
    if (D.qdim[F.dual(i)] != D.qdim[i])
      throw Error(Errc::dimension_failure, "d_{dual(i)} != d_i", {as_ll(i)});
  }
  for (Label s : F.unit_summands()) {
    if (D.twist[s] != CycScalar(1))
      throw Error(Errc::twist_failure, "twist of a unit summand must be 1", {as_ll(s)});
    if (D.qdim[s] != CycScalar(1))
      throw Error(Errc::dimension_failure, "dimension of a unit summand must be 1", {as_ll(s)});
  }
  for (Label i = 0; i < n; ++i)
    for (Label j = 0; j < n; ++j) {
      if (index[i] != index[j]) continue;  // i (x) j = 0 across factors
      CycScalar rhs;
      for (Label k = 0; k < n; ++k)
        if (F.N(i, j, k) != 0) rhs += CycScalar(F.N(i, j, k)) * D.qdim[k];
      if (D.qdim[i] * D.qdim[j] != rhs)
        throw Error(Errc::dimension_failure, "d_i d_j != sum_k N_ij^k d_k", {as_ll(i), as_ll(j)});
    }
  if (D.s_tilde) {
    const CycMatrix& S = *D.s_tilde;
    if (S.rows() != n || S.cols() != n)
      throw Error(Errc::smatrix_failure, "S-matrix has wrong shape");
    for (Label i = 0; i < n; ++i)
      for (Label j = 0; j < n; ++j) {
        if (S(i, j) != S(j, i))
          throw Error(Errc::smatrix_failure, "S-matrix not symmetric", {as_ll(i), as_ll(j)});
        if (index[i] != index[j] && !S(i, j).is_zero())
          throw Error(Errc::smatrix_failure, "S-matrix couples distinct factors",
                      {as_ll(i), as_ll(j)});
      }
    for (const Factor& f : factors)
      for (Label i : f.members)
        if (S(f.unit, i) != D.qdim[i])
          throw Error(Errc::smatrix_failure, "S-matrix unit row must equal d",
                      {as_ll(f.unit), as_ll(i)});
  }
}

}  // namespace detail

/// Checks every fusion and ribbon axiom and computes factors and Gauss sums.
/// Pre-modular data is accepted; zero global dimension is not.
inline Category validate(FusionData fusion, ModularDatum data) {
  detail::check_fusion(fusion);
  std::vector<std::size_t> index;
  auto factors = detail::compute_factors(fusion, index);
  detail::check_rigidity_and_associativity(fusion, factors, index);
  detail::check_ribbon(fusion, data, factors, index);

  Category c;
  c.sums_.reserve(factors.size());
  for (const Factor& f : factors) {
    GaussSums g = detail::compute_gauss_sums(data.twist, data.qdim, f);
    if (g.global_dim.is_zero())
      throw Error(Errc::degenerate_category, "global dimension of factor is zero",
                  {detail::as_ll(f.unit)});
    c.sums_.push_back(std::move(g));
  }
  c.fusion_ = std::move(fusion);
  c.data_ = std::move(data);
  c.factors_ = std::move(factors);
  c.factor_index_ = std::move(index);
  return c;
}

inline const GaussSums& gauss_sums(const Category& C, std::size_t factor) {
  return C.sums(factor);
}

/// The unnormalized Hopf-link matrix. Uses the carried matrix when present,
/// otherwise S_{ij} = theta_i^{-1} theta_j^{-1} sum_k N_{dual(i) j}^k theta_k d_k
/// within each factor.
inline CycMatrix s_tilde_of(const Category& C) {
  if (C.data().s_tilde) return *C.data().s_tilde;
  const std::size_t n = C.rank();
  const auto& F = C.fusion();
  std::vector<CycScalar> inv_twist(n);
  std::vector<CycScalar> weight(n);
  for (Label i = 0; i < n; ++i) {
    inv_twist[i] = inv(C.twist(i));
    weight[i] = C.twist(i) * C.qdim(i);
  }
  CycMatrix S(n, n);
  for (Label i = 0; i < n; ++i)
    for (Label j = 0; j < n; ++j) {
      if (C.factor_of(i) != C.factor_of(j)) continue;
      CycScalar sum;
      for (Label k = 0; k < n; ++k)
        if (long m = F.N(F.dual(i), j, k); m != 0) sum += CycScalar(m) * weight[k];
      S(i, j) = inv_twist[i] * inv_twist[j] * sum;
    }
  S.unify();
  for (Label i = 0; i < n; ++i)
    for (Label j = 0; j < i; ++j)
      if (S(i, j) != S(j, i))
        throw Error(Errc::convention_inconsistency, "computed S-matrix is not symmetric",
                    {detail::as_ll(i), detail::as_ll(j)});
  return S;
}

struct ModularityCheck {
  bool modular = false;
  std::optional<Label> witness;  // first label violating the killing identity
  std::string reason;
};

/// Modularity of every factor: the killing identity
/// sum_j d_j S_{ji} = p+ p- delta_{i,unit} and invertibility of each S block.
inline ModularityCheck verify_modular(const Category& C) {
  CycMatrix S;
  try {
    S = s_tilde_of(C);
  } catch (const Error& e) {
    return {false, std::nullopt, e.what()};
  }
  for (std::size_t fi = 0; fi < C.factors().size(); ++fi) {
    const Factor& f = C.factors()[fi];
    const CycScalar& D2 = C.sums(fi).global_dim;
    // Non-unit labels first: a transparent simple object is the informative witness.
    std::vector<Label> order;
    for (Label i : f.members)
      if (i != f.unit) order.push_back(i);
    order.push_back(f.unit);
    for (Label i : order) {
      CycScalar sum;
      for (Label j : f.members) sum += C.qdim(j) * S(j, i);
      const CycScalar want = i == f.unit ? D2 : CycScalar(0);
      if (sum != want) return {false, i, "killing identity fails at label " + std::to_string(i)};
    }
    std::vector<CycScalar> block;
    for (Label i : f.members)
      for (Label j : f.members) block.push_back(S(i, j));
    if (!is_invertible(CycMatrix(f.members.size(), f.members.size(), std::move(block))))
      return {false, std::nullopt, "S-matrix block of factor " + std::to_string(f.unit) + " is singular"};
  }
  return {true, std::nullopt, {}};
}

inline void require_modular(const Category& C) {
  auto check = verify_modular(C);
  if (!check.modular) {
    std::vector<long long> w;
    if (check.witness) w.push_back(static_cast<long long>(*check.witness));
    throw Error(Errc::not_modular, check.reason, std::move(w));
  }
}

/// Anomaly of a factor as a root of unity; throws
/// root-enumeration-unsupported if it is not one.
inline RootOfUnity anomaly_root(const Category& C, std::size_t factor) {
  auto r = root_of_unity_order(C.sums(factor).anomaly);
  if (!r)
    throw Error(Errc::root_enumeration_unsupported,
                "anomaly " + to_string(C.sums(factor).anomaly) + " is not a root of unity",
                {static_cast<long long>(C.factors().at(factor).unit)});
  return *r;
}

/// The normalizing constant p of a factor: p = p+ / a for the root_index-th
/// square root a of the anomaly (ascending exponent order). Index 0 gives
/// p = p+ when the anomaly is 1.
inline CycScalar choose_p(const Category& C, std::size_t factor, std::size_t root_index) {
  if (factor >= C.factors().size())
    throw Error(Errc::index_out_of_range, "no such factor", {static_cast<long long>(factor)});
  if (root_index >= 2)
    throw Error(Errc::index_out_of_range, "square-root index must be 0 or 1",
                {static_cast<long long>(root_index)});
  require_modular(C);
  const auto roots = kth_roots(anomaly_root(C, factor), 2);
  return C.sums(factor).p_plus / roots[root_index];
}

struct RootChoice {
  CycScalar root;  // a
  CycScalar p;     // the normalizing constant it determines
};

struct FactorStructure {
  Label unit = 0;
  GaussSums sums;
  std::optional<RootOfUnity> anomaly;
  std::vector<RootChoice> square_roots;  // a^2 = anomaly, p = p+ / a
  std::vector<RootChoice> sixth_roots;   // a^6 = anomaly, p = p+ / a^3
};

struct SignatureChoice {
  CycScalar root;             // a, common to all factors
  std::vector<CycScalar> p;   // p_s = p+_s / a, per factor
};

/// Which bordism structures the category supports and with which root data.
struct StructureReport {
  std::vector<FactorStructure> factors;
  bool oriented = false;   // every anomaly is 1
  bool csig = true;        // always, given a square root per factor
  bool signature = false;  // all anomalies equal
  bool p1 = true;          // always, given a sixth root per factor
  std::vector<SignatureChoice> signature_roots;
};

/// Thrown by admissibility() when some anomaly is not a root of unity; the
/// partial report still carries every Gauss sum.
class RootEnumerationUnsupported : public Error {
 public:
  RootEnumerationUnsupported(StructureReport partial, Label unit)
      : Error(Errc::root_enumeration_unsupported, "anomaly is not a root of unity",
              {static_cast<long long>(unit)}),
        report(std::move(partial)) {}
  StructureReport report;
};

inline StructureReport admissibility(const Category& C) {
  require_modular(C);
  StructureReport rep;
  std::optional<Label> unsupported;
  for (std::size_t fi = 0; fi < C.factors().size(); ++fi) {
    FactorStructure fs;
    fs.unit = C.factors()[fi].unit;
    fs.sums = C.sums(fi);
    fs.anomaly = root_of_unity_order(fs.sums.anomaly);
    if (fs.anomaly) {
      for (auto& a : kth_roots(*fs.anomaly, 2)) {
        CycScalar p = fs.sums.p_plus / a;
        fs.square_roots.push_back({std::move(a), std::move(p)});
      }
      for (auto& a : kth_roots(*fs.anomaly, 6)) {
        CycScalar p = fs.sums.p_plus / pow(a, 3);
        fs.sixth_roots.push_back({std::move(a), std::move(p)});
      }
    } else if (!unsupported) {
      unsupported = fs.unit;
    }
    rep.factors.push_back(std::move(fs));
  }
  rep.oriented = std::all_of(rep.factors.begin(), rep.factors.end(), [](const FactorStructure& f) {
    return f.sums.anomaly == CycScalar(1);
  });
  rep.signature = std::all_of(rep.factors.begin(), rep.factors.end(), [&](const FactorStructure& f) {
    return f.sums.anomaly == rep.factors.front().sums.anomaly;
  });
  if (unsupported) {
    rep.csig = rep.p1 = false;
    throw RootEnumerationUnsupported(std::move(rep), *unsupported);
  }
  if (rep.signature)
    for (const auto& choice : rep.factors.front().square_roots) {
      SignatureChoice sc{choice.root, {}};
      for (const auto& f : rep.factors) sc.p.push_back(f.sums.p_plus / choice.root);
      rep.signature_roots.push_back(std::move(sc));
    }
  return rep;
}

/// Fusion multiplicities reconstructed from S through the Verlinde formula,
/// N'_{ij}^k = (p+ p-)^{-1} sum_r S_{ir} S_{jr} conj(S_{kr}) / d_r per factor.
inline FusionData verlinde_fusion(const Category& C) {
  require_modular(C);
  const std::size_t n = C.rank();
  const CycMatrix S = s_tilde_of(C);
  FusionData out(n, C.fusion().unit_summands(), C.fusion().duals());
  for (std::size_t fi = 0; fi < C.factors().size(); ++fi) {
    const auto& members = C.factors()[fi].members;
    const CycScalar scale = inv(C.sums(fi).global_dim);
    std::vector<CycScalar> inv_d(n);
    for (Label r : members) inv_d[r] = inv(C.qdim(r));
    for (Label i : members)
      for (Label j : members) {
        std::vector<CycScalar> ij(n);
        for (Label r : members) ij[r] = S(i, r) * S(j, r) * inv_d[r];
        for (Label k : members) {
          CycScalar sum;
          for (Label r : members) sum += ij[r] * conj(S(k, r));
          sum *= scale;
          if (!sum.is_rational() || sum.constant_term().get_den() != 1 ||
              sgn(sum.constant_term()) < 0)
            throw Error(Errc::verlinde_mismatch,
                        "reconstructed multiplicity " + to_string(sum) + " is not a natural number",
                        {static_cast<long long>(i), static_cast<long long>(j),
                         static_cast<long long>(k)});
          out.set(i, j, k, sum.constant_term().get_num().get_si());
        }
      }
  }
  return out;
}

}  // namespace modtqft
