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

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "modtqft/error.hpp"

namespace modtqft {

using Rational = mpq_class;
using Integer = mpz_class;

namespace detail {

inline std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
inline std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

inline unsigned totient(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Phi_n with ascending integer coefficients, obtained by dividing x^n - 1 by
// Phi_d for every proper divisor d of n.
inline std::vector<long> compute_cyclotomic(unsigned n);

inline const std::vector<long>& cyclotomic(unsigned n) {
  thread_local std::unordered_map<unsigned, std::vector<long>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto poly = compute_cyclotomic(n);
  return cache.emplace(n, std::move(poly)).first->second;
}

inline std::vector<long> compute_cyclotomic(unsigned n) {
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d : divisors(n)) {
    if (d == n) break;
    std::vector<long> den = cyclotomic(d);  // copy: cache may rehash
    const std::size_t dd = den.size() - 1;
    std::vector<long> q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      long c = num[k];
      q[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    num = std::move(q);
  }
  return num;
}

inline void trim(std::vector<Rational>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Reduce p (any degree) modulo Phi_n in place; result has exactly phi(n)
// coefficients.
inline void reduce_mod_cyclotomic(std::vector<Rational>& p, unsigned n) {
  if (p.size() > n) {
    for (std::size_t k = n; k < p.size(); ++k)
      if (p[k] != 0) p[k % n] += p[k];
    p.resize(n);
  }
  const auto& phi = cyclotomic(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = p.size(); k-- > deg;) {
    if (p[k] == 0) continue;
    Rational c = p[k];
    for (std::size_t j = 0; j < deg; ++j)
      if (phi[j] != 0) p[k - deg + j] -= c * phi[j];
    p[k] = 0;
  }
  p.resize(deg, Rational(0));
}

inline bool poly_is_zero(const std::vector<Rational>& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
}

// Quotient and remainder over Q; b must be nonzero after trimming.
inline std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
    std::vector<Rational> a, std::vector<Rational> b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) return {{Rational(0)}, a};
  const std::size_t db = b.size() - 1;
  std::vector<Rational> q(a.size() - db, Rational(0));
  const Rational lead = b.back();
  for (std::size_t k = a.size() - 1;; --k) {
    Rational c = a[k] / lead;
    q[k - db] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    if (k == db) break;
  }
  a.resize(db > 0 ? db : 1);
  trim(a);
  return {q, a};
}

inline std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline std::vector<Rational> poly_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline Rational parse_rational(std::string_view s) {
  Rational r(std::string(s), 10);
  r.canonicalize();
  return r;
}

}  // namespace detail

/// Exact element of the cyclotomic field Q(zeta_N), stored as the reduced
/// coefficient vector of 1, z, ..., z^{phi(N)-1} with z = exp(2 pi i / N).
///
/// Values of different conductor are comparable and combinable; binary
/// operations embed both sides into Q(zeta_lcm). Conductor 2 is folded into
/// conductor 1 since both fields are Q.
class CycScalar {
 public:
  CycScalar() : n_(1), c_{Rational(0)} {}
  CycScalar(int v) : CycScalar(Rational(v)) {}
  CycScalar(long v) : CycScalar(Rational(v)) {}
  CycScalar(long long v) : CycScalar(Rational(std::to_string(v))) {}
  CycScalar(Rational v) : n_(1), c_{std::move(v)} { c_[0].canonicalize(); }

  /// Reduce an arbitrary polynomial in z modulo Phi_N.
  static CycScalar canonicalize(unsigned conductor, std::vector<Rational> raw) {
    if (conductor == 0) throw Error(Errc::invalid_conductor, "conductor must be positive");
    if (raw.empty()) raw.push_back(Rational(0));
    for (auto& c : raw) c.canonicalize();
    detail::reduce_mod_cyclotomic(raw, conductor);
    CycScalar out;
    if (conductor == 2) conductor = 1;
    out.n_ = conductor;
    out.c_ = std::move(raw);
    return out;
  }

  /// zeta_N^e.
  static CycScalar zeta(unsigned conductor, long long e = 1) {
    if (conductor == 0) throw Error(Errc::invalid_conductor, "conductor must be positive");
    long long m = e % static_cast<long long>(conductor);
    if (m < 0) m += conductor;
    std::vector<Rational> raw(static_cast<std::size_t>(m) + 1, Rational(0));
    raw[static_cast<std::size_t>(m)] = 1;
    return canonicalize(conductor, std::move(raw));
  }

  unsigned conductor() const noexcept { return n_; }
  std::span<const Rational> coeffs() const noexcept { return c_; }

  bool is_zero() const { return detail::poly_is_zero(c_); }
  bool is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& c) { return c == 0; });
  }
  const Rational& constant_term() const { return c_[0]; }

  /// Value-preserving map into Q(zeta_target); requires conductor | target.
  CycScalar embed(unsigned target) const {
    if (target == 0) throw Error(Errc::invalid_conductor, "conductor must be positive");
    if (target == 2) target = 1;
    if (target == n_) return *this;
    if (target % n_ != 0)
      throw Error(Errc::incompatible_conductor,
                  "cannot embed conductor " + std::to_string(n_) + " into " +
                      std::to_string(target));
    const unsigned step = target / n_;
    std::vector<Rational> raw((c_.size() - 1) * step + 1, Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) raw[k * step] = c_[k];
    return canonicalize(target, std::move(raw));
  }

  friend CycScalar operator+(const CycScalar& x, const CycScalar& y) {
    if (x.n_ != y.n_) return unify(x, y, [](auto& a, auto& b) { return a + b; });
    CycScalar out = x;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += y.c_[i];
    return out;
  }
  friend CycScalar operator-(const CycScalar& x, const CycScalar& y) {
    if (x.n_ != y.n_) return unify(x, y, [](auto& a, auto& b) { return a - b; });
    CycScalar out = x;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= y.c_[i];
    return out;
  }
  friend CycScalar operator-(const CycScalar& x) {
    CycScalar out = x;
    for (auto& c : out.c_) c = -c;
    return out;
  }
  friend CycScalar operator*(const CycScalar& x, const CycScalar& y) {
    if (x.n_ != y.n_) {
      // Multiplying by a rational never needs the common field.
      if (y.n_ == 1) return x.scaled(y.c_[0]);
      if (x.n_ == 1) return y.scaled(x.c_[0]);
      return unify(x, y, [](auto& a, auto& b) { return a * b; });
    }
    if (x.n_ == 1) return CycScalar(x.c_[0] * y.c_[0]);
    return canonicalize(x.n_, detail::poly_mul(x.c_, y.c_));
  }
  friend CycScalar operator/(const CycScalar& x, const CycScalar& y) { return x * inv(y); }

  CycScalar& operator+=(const CycScalar& y) { return *this = *this + y; }
  CycScalar& operator-=(const CycScalar& y) { return *this = *this - y; }
  CycScalar& operator*=(const CycScalar& y) { return *this = *this * y; }
  CycScalar& operator/=(const CycScalar& y) { return *this = *this / y; }

  friend CycScalar inv(const CycScalar& x) {
    if (x.is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
    if (x.n_ == 1) return CycScalar(Rational(1) / x.c_[0]);
    const auto& phi = detail::cyclotomic(x.n_);
    std::vector<Rational> r0(phi.begin(), phi.end());
    std::vector<Rational> r1 = x.c_;
    detail::trim(r1);
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
    while (!detail::poly_is_zero(r1)) {
      auto [q, r] = detail::poly_divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      auto next = detail::poly_sub(s0, detail::poly_mul(q, s1));
      s0 = std::move(s1);
      s1 = std::move(next);
    }
    detail::trim(r0);
    // Phi_N is irreducible, so the gcd is a nonzero constant.
    const Rational g = r0[0];
    for (auto& c : s0) c /= g;
    return canonicalize(x.n_, std::move(s0));
  }

  /// Complex conjugation, z -> z^{N-1}.
  friend CycScalar conj(const CycScalar& x) {
    if (x.n_ == 1) return x;
    std::vector<Rational> raw(x.n_, Rational(0));
    for (std::size_t k = 0; k < x.c_.size(); ++k) raw[(x.n_ - k) % x.n_] += x.c_[k];
    return canonicalize(x.n_, std::move(raw));
  }

  friend CycScalar pow(const CycScalar& x, long long e) {
    if (e < 0) return pow(inv(x), -e);
    CycScalar result(1);
    CycScalar base = x;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  friend bool operator==(const CycScalar& x, const CycScalar& y) {
    if (x.n_ == y.n_) return x.c_ == y.c_;
    const unsigned l = static_cast<unsigned>(detail::lcm_u(x.n_, y.n_));
    return x.embed(l).c_ == y.embed(l).c_;
  }

  /// Floating-point value with z = exp(2 pi i / N).
  std::complex<double> to_complex() const {
    const long double two_pi = 2.0L * std::acos(-1.0L);
    long double re = 0, im = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      const long double v = static_cast<long double>(c_[k].get_d());
      const long double ang = two_pi * static_cast<long double>(k) / n_;
      re += v * std::cos(ang);
      im += v * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
  }

 private:
  CycScalar scaled(const Rational& r) const {
    CycScalar out = *this;
    for (auto& c : out.c_) c *= r;
    return out;
  }

  template <class Op>
  static CycScalar unify(const CycScalar& x, const CycScalar& y, Op op) {
    const unsigned l = static_cast<unsigned>(detail::lcm_u(x.n_, y.n_));
    CycScalar a = x.embed(l), b = y.embed(l);
    return op(a, b);
  }

  unsigned n_;
  std::vector<Rational> c_;
};

/// zeta_order^exponent with (order, exponent) reduced: gcd(exponent, order) = 1,
/// or order = 1 and exponent = 0.
struct RootOfUnity {
  std::uint64_t order = 1;
  std::uint64_t exponent = 0;

  CycScalar value() const {
    return CycScalar::zeta(static_cast<unsigned>(order), static_cast<long long>(exponent));
  }
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Returns (m, a) with x = zeta_m^a when x^{2N} = 1 for the conductor N of x.
inline std::optional<RootOfUnity> root_of_unity_order(const CycScalar& x) {
  const unsigned n2 = 2 * x.conductor();
  if (x.is_zero() || pow(x, n2) != CycScalar(1)) return std::nullopt;
  for (unsigned m : detail::divisors(n2)) {
    if (pow(x, m) != CycScalar(1)) continue;
    for (unsigned a = 0; a < m; ++a) {
      if (std::gcd(a, m) != 1 && !(m == 1 && a == 0)) continue;
      if (CycScalar::zeta(m, a) == x) return RootOfUnity{m, a};
    }
  }
  return std::nullopt;  // unreachable for a genuine root of unity
}

/// The k k-th roots of x, zeta_{km}^{a + j m} for j = 0..k-1.
inline std::vector<CycScalar> kth_roots(const RootOfUnity& x, unsigned k) {
  if (k == 0) throw Error(Errc::index_out_of_range, "root degree must be positive");
  std::vector<CycScalar> out;
  out.reserve(k);
  const auto km = static_cast<unsigned>(k * x.order);
  for (unsigned j = 0; j < k; ++j)
    out.push_back(CycScalar::zeta(km, static_cast<long long>(x.exponent + j * x.order)));
  return out;
}

// ---------------------------------------------------------------------------
// Scalar text syntax: signed sum of `R`, `R*z^E`, `z^E`, `z`, `R*z`.

namespace detail {

inline std::string rational_str(const Rational& r) { return r.get_str(10); }

}  // namespace detail

/// Renders x in the scalar grammar relative to its own conductor, highest
/// power of z first.
inline std::string to_string(const CycScalar& x) {
  std::string out;
  auto c = x.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    Rational mag = abs(c[k]);
    const bool neg = sgn(c[k]) < 0;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += detail::rational_str(mag);
      continue;
    }
    if (mag != 1) out += detail::rational_str(mag) + "*";
    out += 'z';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

/// Parses the scalar grammar in Q(zeta_conductor). Errors carry the 1-based
/// column of the offending character as witness.
inline CycScalar parse_scalar(std::string_view text, unsigned conductor) {
  if (conductor == 0) throw Error(Errc::invalid_conductor, "conductor must be positive");
  std::size_t pos = 0;
  auto fail = [&](const std::string& expected) -> Error {
    return Error(Errc::syntax_error, "expected " + expected,
                 {static_cast<long long>(pos + 1)});
  };
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto digits = [&]() -> std::string_view {
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    return text.substr(start, pos - start);
  };
  std::vector<Rational> raw(1, Rational(0));
  bool first = true;
  skip();
  if (pos == text.size()) throw fail("scalar");
  while (true) {
    skip();
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip();
    } else if (!first) {
      throw fail("'+' or '-'");
    }
    first = false;
    Rational coef(1);
    bool have_coef = false;
    if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      std::string num(digits());
      skip();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip();
        std::string_view den = digits();
        if (den.empty()) throw fail("denominator");
        if (den.find_first_not_of('0') == std::string_view::npos) throw fail("nonzero denominator");
        num += "/";
        num += den;
      }
      coef = detail::parse_rational(num);
      have_coef = true;
      skip();
    }
    std::size_t exponent = 0;
    bool have_z = false;
    if (have_coef && pos < text.size() && text[pos] == '*') {
      ++pos;
      skip();
      if (pos >= text.size() || text[pos] != 'z') throw fail("'z'");
    }
    if (pos < text.size() && text[pos] == 'z') {
      have_z = true;
      ++pos;
      exponent = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        std::string_view e = digits();
        if (e.empty()) throw fail("exponent");
        if (e.size() > 9) throw fail("exponent below 10^9");
        exponent = std::stoul(std::string(e));
        skip();
      }
    }
    if (!have_coef && !have_z) throw fail("rational or 'z'");
    if (have_z) exponent %= conductor;
    if (raw.size() <= exponent) raw.resize(exponent + 1, Rational(0));
    raw[exponent] += sign * coef;
    skip();
    if (pos == text.size()) break;
  }
  return CycScalar::canonicalize(conductor, std::move(raw));
}

/// Decimal rendering `re + im i` with `digits` places after the point,
/// evaluated at 100 significant digits.
inline std::string format_complex(const CycScalar& x, unsigned digits) {
  using Big = boost::multiprecision::cpp_dec_float_100;
  if (digits > 50) digits = 50;
  const Big two_pi = 2 * boost::multiprecision::acos(Big(-1));
  Big re = 0, im = 0;
  auto c = x.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    Big v = Big(c[k].get_num().get_str()) / Big(c[k].get_den().get_str());
    const Big ang = two_pi * Big(static_cast<unsigned long long>(k)) / Big(x.conductor());
    re += v * boost::multiprecision::cos(ang);
    im += v * boost::multiprecision::sin(ang);
  }
  Big half_ulp = Big(5) / boost::multiprecision::pow(Big(10), static_cast<int>(digits) + 1);
  auto fixed = [&](const Big& v) {
    std::string s = v.str(static_cast<std::streamsize>(digits), std::ios::fixed);
    return s;
  };
  std::string out = abs(re) < half_ulp ? fixed(Big(0)) : fixed(re);
  if (abs(im) < half_ulp) return out + " + 0i";
  out += im < 0 ? " - " : " + ";
  out += fixed(abs(im)) + "i";
  return out;
}

}  // namespace modtqft
