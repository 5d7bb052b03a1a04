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

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modtqft/cyclo.hpp"
#include "modtqft/error.hpp"
#include "modtqft/matrix.hpp"
#include "modtqft/mtc.hpp"

namespace modtqft {

// ---------------------------------------------------------------------------
// Genus-one representation

/// Genus-one matrices for a chosen normalizing constant p in each factor,
/// one block per factor: s = S~/p, t = diag(theta).
///
/// With S = (0,1;-1,0) and T = (1,1;0,1) on homology, the assignment
/// S -> s^{-1} = C s, T -> t is a representation ((s^{-1} t)^3 = (p+/p) I),
/// whereas S -> s is not once C != I. So the S letter and the meridian twist
/// a = t^{-1} s^{-1} t^{-1} use s^{-1}; for self-dual labels s^{-1} = s.
struct TorusRep {
  std::vector<std::size_t> root_indices;
  std::vector<CycScalar> p;                   // per factor
  std::vector<std::vector<Label>> blocks;     // factor members
  std::vector<CycScalar> twist;
  CycMatrix s, t, a;
  CycMatrix s_inv, t_inv, a_inv;
};

/// Root index per factor; an empty list selects index 0 everywhere.
inline TorusRep torus_rep(const Category& C, std::vector<std::size_t> root_indices = {}) {
  require_modular(C);
  const std::size_t nf = C.factors().size();
  if (root_indices.empty()) root_indices.assign(nf, 0);
  if (root_indices.size() != nf)
    throw Error(Errc::index_out_of_range, "need one root index per factor",
                {static_cast<long long>(root_indices.size()), static_cast<long long>(nf)});
  TorusRep rep;
  rep.root_indices = root_indices;
  const std::size_t n = C.rank();
  const CycMatrix S = s_tilde_of(C);
  rep.s = CycMatrix(n, n);
  for (std::size_t fi = 0; fi < nf; ++fi) {
    rep.p.push_back(choose_p(C, fi, root_indices[fi]));
    const CycScalar inv_p = inv(rep.p.back());
    rep.blocks.push_back(C.factors()[fi].members);
    for (Label i : C.factors()[fi].members)
      for (Label j : C.factors()[fi].members) rep.s(i, j) = S(i, j) * inv_p;
  }
  rep.s.unify();
  for (Label i = 0; i < n; ++i) rep.twist.push_back(C.twist(i));
  rep.t = CycMatrix::diagonal(rep.twist);
  std::vector<CycScalar> inv_twist;
  for (const auto& th : rep.twist) inv_twist.push_back(inv(th));
  rep.t_inv = CycMatrix::diagonal(inv_twist);
  rep.s_inv = inverse(rep.s);
  rep.a = rep.t_inv * rep.s_inv * rep.t_inv;
  rep.a_inv = rep.t * rep.s * rep.t;
  return rep;
}

// ---------------------------------------------------------------------------
// Words in the mapping class group of the torus

enum class Generator { S, T, A };

struct Letter {
  Generator gen;
  long long power;  // nonzero; negative powers are inverses
  friend bool operator==(const Letter&, const Letter&) = default;
};

using MCGWord = std::vector<Letter>;

/// Appends gen^power, merging with a trailing letter of the same generator.
inline void append(MCGWord& w, Generator gen, long long power) {
  if (power == 0) return;
  if (!w.empty() && w.back().gen == gen) {
    w.back().power += power;
    if (w.back().power == 0) w.pop_back();
    return;
  }
  w.push_back({gen, power});
}

inline std::string to_string(const MCGWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.gen == Generator::S ? 'S' : l.gen == Generator::T ? 'T' : 'A';
    if (l.power != 1) out += "^" + std::to_string(l.power);
  }
  return out;
}

/// Parses e.g. "S T^3 A^-1". Errors carry the 1-based column.
inline MCGWord parse_word(std::string_view text) {
  MCGWord w;
  std::size_t pos = 0;
  auto fail = [&](const std::string& expected) {
    return Error(Errc::syntax_error, "expected " + expected, {static_cast<long long>(pos + 1)});
  };
  while (true) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '*')) ++pos;
    if (pos == text.size()) break;
    Generator g;
    switch (text[pos]) {
      case 'S': g = Generator::S; break;
      case 'T': g = Generator::T; break;
      case 'A': g = Generator::A; break;
      default: throw fail("S, T or A");
    }
    ++pos;
    long long power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool neg = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (pos == start || pos - start > 12) throw fail("exponent");
      power = std::stoll(std::string(text.substr(start, pos - start)));
      if (neg) power = -power;
    }
    append(w, g, power);
  }
  return w;
}

inline CycMatrix letter_matrix(const TorusRep& rep, const Letter& l) {
  switch (l.gen) {
    case Generator::T: {
      std::vector<CycScalar> d;
      for (const auto& th : rep.twist) d.push_back(pow(th, l.power));
      return CycMatrix::diagonal(d);
    }
    case Generator::S:
      return l.power >= 0 ? mat_pow(rep.s_inv, l.power % 4) : mat_pow(rep.s, (-l.power) % 4);
    case Generator::A:
      return l.power >= 0 ? mat_pow(rep.a, l.power) : mat_pow(rep.a_inv, -l.power);
  }
  return CycMatrix::identity(rep.s.rows());
}

/// Product of the letter matrices, left to right.
inline CycMatrix evaluate_word(const TorusRep& rep, const MCGWord& w) {
  CycMatrix m = CycMatrix::identity(rep.s.rows());
  for (const auto& l : w) m = m * letter_matrix(rep, l);
  return m;
}

// ---------------------------------------------------------------------------
// SL(2, Z)

struct SL2Z {
  long long a = 1, b = 0, c = 0, d = 1;
  friend bool operator==(const SL2Z&, const SL2Z&) = default;
};

namespace detail {

inline long long checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(Errc::not_sl2z, "integer overflow in SL(2,Z) product");
  return static_cast<long long>(v);
}

}  // namespace detail

inline SL2Z make_sl2z(long long a, long long b, long long c, long long d) {
  if (static_cast<__int128>(a) * d - static_cast<__int128>(b) * c != 1)
    throw Error(Errc::not_sl2z, "determinant must be 1");
  return {a, b, c, d};
}

inline SL2Z operator*(const SL2Z& x, const SL2Z& y) {
  using detail::checked;
  using I = __int128;
  return {checked(I(x.a) * y.a + I(x.b) * y.c), checked(I(x.a) * y.b + I(x.b) * y.d),
          checked(I(x.c) * y.a + I(x.d) * y.c), checked(I(x.c) * y.b + I(x.d) * y.d)};
}

inline SL2Z inverse(const SL2Z& m) { return {m.d, -m.b, -m.c, m.a}; }

/// Integral matrix of a word: S = (0,1;-1,0), T = (1,1;0,1), A = (1,0;-1,1).
inline SL2Z word_matrix(const MCGWord& w) {
  SL2Z m;
  for (const auto& l : w) {
    SL2Z g;
    switch (l.gen) {
      case Generator::T: g = {1, l.power, 0, 1}; break;
      case Generator::A: g = {1, 0, -l.power, 1}; break;
      case Generator::S: {
        const long long k = ((l.power % 4) + 4) % 4;
        static constexpr SL2Z powers[4] = {{1, 0, 0, 1}, {0, 1, -1, 0}, {-1, 0, 0, -1}, {0, -1, 1, 0}};
        g = powers[k];
        break;
      }
    }
    m = m * g;
  }
  return m;
}

/// Word in S, T whose integral product is m, via the Euclidean algorithm on
/// the first column.
inline MCGWord decompose_sl2z(const SL2Z& m) {
  make_sl2z(m.a, m.b, m.c, m.d);
  SL2Z cur = m;
  MCGWord left_inverses;  // L_1^{-1} L_2^{-1} ... in order
  while (cur.c != 0) {
    if (std::llabs(cur.a) < std::llabs(cur.c)) {
      cur = SL2Z{cur.c, cur.d, -cur.a, -cur.b};  // S * cur
      append(left_inverses, Generator::S, -1);
    } else {
      const long long k = cur.a / cur.c;
      cur = SL2Z{cur.a - k * cur.c, cur.b - k * cur.d, cur.c, cur.d};  // T^{-k} * cur
      append(left_inverses, Generator::T, k);
    }
  }
  MCGWord w = left_inverses;
  if (cur.a == 1) {
    append(w, Generator::T, cur.b);
  } else {  // (-1, b; 0, -1) = S^2 T^{-b}
    append(w, Generator::S, 2);
    append(w, Generator::T, -cur.b);
  }
  for (auto& l : w)
    if (l.gen == Generator::S) l.power = ((l.power % 4) + 4) % 4;
  std::erase_if(w, [](const Letter& l) { return l.power == 0; });
  if (word_matrix(w) != m)
    throw Error(Errc::not_sl2z, "internal error: decomposition does not reproduce the matrix");
  return w;
}

// ---------------------------------------------------------------------------
// Negative continued fractions

struct NegContFrac {
  long long p = 1;
  long long q = 1;
  std::vector<long long> terms;  // innermost first: m_n - 1/(... - 1/m_1)
};

/// Evaluates m_n - 1/(m_{n-1} - 1/(... - 1/m_1)).
inline Rational evaluate_terms(const std::vector<long long>& terms) {
  if (terms.empty()) throw Error(Errc::empty_terms, "no continued-fraction terms");
  Rational x(static_cast<long>(terms[0]));
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (x == 0) throw Error(Errc::division_by_zero, "continued fraction hits zero");
    x = Rational(static_cast<long>(terms[i])) - Rational(1) / x;
  }
  return x;
}

/// Canonical expansion of p/q with every term >= 2 (p = q = 1 gives [1]);
/// q is reduced modulo p first.
inline NegContFrac neg_continued_fraction(long long p, long long q) {
  if (p < 1) throw Error(Errc::not_coprime, "p must be positive", {p, q});
  if (std::gcd(p, q < 0 ? -q : q) != 1) throw Error(Errc::not_coprime, "gcd(p, q) != 1", {p, q});
  long long r = ((q % p) + p) % p;
  if (p == 1) r = 1;
  NegContFrac out{p, r, {}};
  long long P = p, Q = r;
  while (Q != 0) {
    const long long m = (P + Q - 1) / Q;
    out.terms.push_back(m);
    const long long next = m * Q - P;
    P = Q;
    Q = next;
  }
  std::reverse(out.terms.begin(), out.terms.end());
  return out;
}

// ---------------------------------------------------------------------------
// Closed 3-manifold invariants

/// Per-factor values and their sum over factors.
struct ClosedInvariant {
  std::vector<CycScalar> per_factor;
  CycScalar aggregate;
  bool framing_dependent = false;
};

namespace detail {

inline ClosedInvariant collect(std::vector<CycScalar> values) {
  ClosedInvariant out;
  for (const auto& v : values) out.aggregate += v;
  out.per_factor = std::move(values);
  return out;
}

}  // namespace detail

/// (s t^{m_n} s ... s t^{m_1} s)_{uu} for each factor unit u.
inline CycScalar lens_value(const TorusRep& rep, Label unit, const std::vector<long long>& terms) {
  const std::size_t n = rep.s.rows();
  std::vector<CycScalar> v(n);
  for (Label i = 0; i < n; ++i) v[i] = rep.s(i, unit);
  for (long long m : terms) {
    for (Label i = 0; i < n; ++i)
      if (!v[i].is_zero()) v[i] *= pow(rep.twist[i], m);
    std::vector<CycScalar> next(n);
    for (Label i = 0; i < n; ++i)
      for (Label j = 0; j < n; ++j)
        if (!v[j].is_zero() && !rep.s(i, j).is_zero()) next[i] += rep.s(i, j) * v[j];
    v = std::move(next);
  }
  return v[unit];
}

inline ClosedInvariant lens_invariant(const Category& C, const std::vector<std::size_t>& root_indices,
                                      long long p, long long q) {
  const NegContFrac cf = neg_continued_fraction(p, q);
  const TorusRep rep = torus_rep(C, root_indices);
  std::vector<CycScalar> values;
  for (const Factor& f : C.factors()) values.push_back(lens_value(rep, f.unit, cf.terms));
  return detail::collect(std::move(values));
}

/// Surgery on a linear chain of unknots with framings m_1..m_n: the sum over
/// labelings of d_{i1} theta^{m1} S_{i1 i2} ... S_{i(n-1) in} theta^{mn} d_{in},
/// divided by p^{n+1}. Evaluated label by label along the chain.
inline CycScalar chain_link_oracle(const Category& C, std::size_t factor, const CycScalar& p,
                                   const std::vector<long long>& terms) {
  if (terms.empty()) throw Error(Errc::empty_terms, "chain needs at least one component");
  const CycMatrix S = s_tilde_of(C);
  const auto& members = C.factors().at(factor).members;
  std::vector<CycScalar> w(C.rank());
  for (Label i : members) w[i] = C.qdim(i) * pow(C.twist(i), terms[0]);
  for (std::size_t k = 1; k < terms.size(); ++k) {
    std::vector<CycScalar> next(C.rank());
    for (Label j : members) {
      CycScalar acc;
      for (Label i : members) acc += w[i] * S(i, j);
      next[j] = acc * pow(C.twist(j), terms[k]);
    }
    w = std::move(next);
  }
  CycScalar total;
  for (Label i : members) total += w[i] * C.qdim(i);
  return total / pow(p, static_cast<long long>(terms.size()) + 1);
}

inline bool anomaly_free(const Category& C) {
  for (std::size_t fi = 0; fi < C.factors().size(); ++fi)
    if (C.sums(fi).anomaly != CycScalar(1)) return false;
  return true;
}

/// Trace of the word's matrix on each factor block.
inline ClosedInvariant torus_bundle_invariant(const Category& C,
                                              const std::vector<std::size_t>& root_indices,
                                              const MCGWord& w) {
  const TorusRep rep = torus_rep(C, root_indices);
  const CycMatrix M = evaluate_word(rep, w);
  std::vector<CycScalar> values;
  for (const auto& block : rep.blocks) {
    CycScalar tr;
    for (Label i : block) tr += M(i, i);
    values.push_back(tr);
  }
  ClosedInvariant out = detail::collect(std::move(values));
  out.framing_dependent = !anomaly_free(C);
  return out;
}

/// Matrix input is only meaningful when the genus-one representation is
/// honest, i.e. every anomaly is 1, unless allow_framing is set.
inline ClosedInvariant torus_bundle_invariant(const Category& C,
                                              const std::vector<std::size_t>& root_indices,
                                              const SL2Z& m, bool allow_framing = false) {
  make_sl2z(m.a, m.b, m.c, m.d);
  if (!allow_framing && !anomaly_free(C))
    throw Error(Errc::anomalous_data_matrix_input,
                "anomaly is not 1; the torus representation is only projective");
  return torus_bundle_invariant(C, root_indices, decompose_sl2z(m));
}

}  // namespace modtqft
