// Copyright the supergrade developers
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

/**
 * Exact arithmetic in cyclotomic fields Q(zeta_m).
 *
 * A scalar is a dense polynomial in a fixed primitive m-th root of unity,
 * reduced modulo the m-th cyclotomic polynomial Phi_m, with arbitrary
 * precision rational coefficients.  All operations are exact; there is no
 * floating point anywhere in this library.
 *
 * Every scalar carries its ambient order m.  Binary operations lift the
 * operand of smaller order when one order divides the other (the embedding
 * zeta_m = zeta_{m'}^{m'/m}), and refuse to combine incomparable orders.
 * Rational constants live at order 1 and therefore mix with everything.
 */

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace supergrade {

using Rational = mpq_class;

/** Rational from numerator/denominator, canonicalized. */
inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/** Euler totient by trial division.  phi(1) = 1. */
inline long euler_phi(long m) {
  if (m <= 0) throw std::invalid_argument("euler_phi: order must be positive");
  long result = m;
  long n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

// Dense polynomials over Q, ascending coefficients, no trailing zeros.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly &p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly &a, const Poly &b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  poly_trim(c);
  return c;
}

// Euclidean division by a nonzero divisor; returns quotient, leaves the
// remainder in `a`.
inline Poly poly_divmod(Poly &a, const Poly &d) {
  if (d.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
  poly_trim(a);
  if (a.size() < d.size()) return {};
  Poly q(a.size() - d.size() + 1, Rational(0));
  const Rational &lead = d.back();
  for (std::size_t k = a.size() - 1; k + 1 >= d.size(); --k) {
    if (a[k] != 0) {
      Rational f = a[k] / lead;
      std::size_t shift = k - (d.size() - 1);
      q[shift] = f;
      for (std::size_t j = 0; j < d.size(); ++j) a[shift + j] -= f * d[j];
    }
    if (k + 1 == d.size()) break;
  }
  poly_trim(a);
  poly_trim(q);
  return q;
}

inline Poly poly_mod(Poly a, const Poly &d) {
  poly_divmod(a, d);
  return a;
}

// Extended Euclid: returns g = gcd(a, b) together with u satisfying
// u*a = g (mod b).  Used only with b = Phi_m, which is irreducible, so g
// is a nonzero constant whenever a != 0 mod b.
inline void poly_ext_gcd(Poly a, Poly b, Poly &g, Poly &u) {
  Poly u0{Rational(1)}, u1{};
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = a;
    Poly q = poly_divmod(r, b);
    // u_next = u0 - q*u1
    Poly qu = poly_mul(q, u1);
    Poly un = u0;
    if (un.size() < qu.size()) un.resize(qu.size(), Rational(0));
    for (std::size_t i = 0; i < qu.size(); ++i) un[i] -= qu[i];
    poly_trim(un);
    a = b;
    b = r;
    u0 = u1;
    u1 = un;
  }
  g = a;
  u = u0;
}

}  // namespace detail

/**
 * Monic m-th cyclotomic polynomial, ascending coefficients (size phi(m)+1).
 *
 * Computed as (x^m - 1) / prod_{d | m, d < m} Phi_d by exact division and
 * memoized process-wide.
 */
inline const std::vector<Rational> &cyclotomic_polynomial(long m) {
  if (m <= 0) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  static std::map<long, detail::Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // Iterative over divisors in increasing order so dependencies are ready.
  for (long d = 1; d <= m; ++d) {
    if (m % d != 0 || cache.count(d)) continue;
    detail::Poly num(d + 1, Rational(0));
    num[0] = -1;
    num[d] = 1;  // x^d - 1
    for (long e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      detail::Poly rem = num;
      detail::Poly q = detail::poly_divmod(rem, cache.at(e));
      if (!rem.empty())
        throw std::logic_error("cyclotomic_polynomial: non-exact division");
      num = q;
    }
    cache.emplace(d, std::move(num));
  }
  return cache.at(m);
}

/**
 * An element of Q(zeta_m), reduced modulo Phi_m.
 *
 * Canonical form: the coefficient vector has exactly phi(m) entries in the
 * basis 1, z, ..., z^{phi(m)-1}; two scalars of the same order are equal iff
 * their coefficient vectors are equal.  Values are immutable.
 */
class CycScalar {
 public:
  CycScalar() : order_(1), coeff_{Rational(0)} {}
  CycScalar(long value) : order_(1), coeff_{Rational(value)} {}
  explicit CycScalar(Rational value) : order_(1), coeff_{std::move(value)} {}

  static CycScalar zero(long order) { return with_order(order, {}); }
  static CycScalar one(long order) { return with_order(order, {Rational(1)}); }

  /** zeta_order^k, exponent taken modulo order. */
  static CycScalar root_of_unity(long k, long order) {
    if (order <= 0) throw std::invalid_argument("root_of_unity: order must be positive");
    long e = ((k % order) + order) % order;
    detail::Poly p(e + 1, Rational(0));
    p[e] = 1;
    return with_order(order, std::move(p));
  }

  long order() const { return order_; }
  const std::vector<Rational> &coefficients() const { return coeff_; }

  bool is_zero() const {
    for (const auto &c : coeff_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeff_.size(); ++i)
      if (coeff_[i] != 0) return false;
    return true;
  }

  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("rational_value: scalar is irrational");
    return coeff_[0];
  }

  /** Embed into Q(zeta_new_order); requires order() | new_order. */
  CycScalar lifted(long new_order) const {
    if (new_order == order_) return *this;
    if (new_order <= 0 || new_order % order_ != 0)
      throw std::domain_error("lifted: ambient order " + std::to_string(order_) +
                              " does not divide " + std::to_string(new_order));
    long t = new_order / order_;
    detail::Poly raw(coeff_.size() * t, Rational(0));
    bool any = false;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
      if (coeff_[i] == 0) continue;
      raw[i * t] = coeff_[i];
      any = true;
    }
    if (!any) return zero(new_order);
    return with_order(new_order, std::move(raw));
  }

  friend CycScalar operator+(const CycScalar &a, const CycScalar &b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < y.coeff_.size(); ++i) x.coeff_[i] += y.coeff_[i];
    return x;
  }
  friend CycScalar operator-(const CycScalar &a, const CycScalar &b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < y.coeff_.size(); ++i) x.coeff_[i] -= y.coeff_[i];
    return x;
  }
  CycScalar operator-() const {
    CycScalar r = *this;
    for (auto &c : r.coeff_) c = -c;
    return r;
  }
  friend CycScalar operator*(const CycScalar &a, const CycScalar &b) {
    auto [x, y] = aligned(a, b);
    detail::Poly p = detail::poly_mul(x.coeff_, y.coeff_);
    return with_order(x.order_, std::move(p));
  }
  CycScalar &operator+=(const CycScalar &o) { return *this = *this + o; }
  CycScalar &operator-=(const CycScalar &o) { return *this = *this - o; }
  CycScalar &operator*=(const CycScalar &o) { return *this = *this * o; }

  /** Multiplicative inverse; throws std::domain_error on zero. */
  CycScalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse: division by zero");
    detail::Poly g, u;
    detail::Poly a = coeff_;
    detail::poly_trim(a);
    detail::poly_ext_gcd(a, cyclotomic_polynomial(order_), g, u);
    if (g.size() != 1)
      throw std::logic_error("inverse: cyclotomic modulus not irreducible?");
    for (auto &c : u) c /= g[0];
    return with_order(order_, std::move(u));
  }
  friend CycScalar operator/(const CycScalar &a, const CycScalar &b) {
    auto [x, y] = aligned(a, b);  // align first so inverse lives at the joint order
    return x * y.inverse();
  }

  friend bool operator==(const CycScalar &a, const CycScalar &b) {
    if (a.order_ == b.order_) return a.coeff_ == b.coeff_;
    auto [x, y] = aligned(a, b);
    return x.coeff_ == y.coeff_;
  }
  friend bool operator!=(const CycScalar &a, const CycScalar &b) { return !(a == b); }

  /**
   * Render as "a0 + a1*z + ...": ascending powers, zero terms omitted,
   * coefficient 1 suppressed next to z.  Zero renders as "0".  The ambient
   * order is context, not part of the string; parse() takes it explicitly
   * and round-trips losslessly.
   */
  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
      const Rational &c = coeff_[i];
      if (c == 0) continue;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (i == 0) {
        out << mag.get_str();
      } else {
        if (mag != 1) out << mag.get_str() << "*";
        out << "z";
        if (i > 1) out << "^" << i;
      }
    }
    if (first) out << "0";
    return out.str();
  }

  /** Parse the to_string() grammar at a given ambient order. */
  static CycScalar parse(const std::string &text, long order) {
    detail::Poly p;
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw std::invalid_argument("parse: empty scalar");
    bool expect_term = true;
    int sign = 1;
    while (pos < text.size()) {
      skip_ws();
      if (pos == text.size()) break;
      char ch = text[pos];
      if (!expect_term) {
        if (ch == '+') {
          sign = 1;
        } else if (ch == '-') {
          sign = -1;
        } else {
          throw std::invalid_argument("parse: expected '+' or '-' at position " +
                                      std::to_string(pos));
        }
        ++pos;
        expect_term = true;
        continue;
      }
      if (ch == '-') {
        sign = -sign;
        ++pos;
        skip_ws();
      }
      // coefficient (optional when the term is a bare z power)
      Rational coeff(1);
      bool saw_number = false;
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        ++pos;
      if (pos > start) {
        coeff = Rational(text.substr(start, pos - start));
        coeff.canonicalize();
        saw_number = true;
      }
      skip_ws();
      long degree = 0;
      if (pos < text.size() && (text[pos] == '*' || text[pos] == 'z')) {
        if (text[pos] == '*') {
          ++pos;
          skip_ws();
          if (pos == text.size() || text[pos] != 'z')
            throw std::invalid_argument("parse: expected z after '*'");
        }
        ++pos;  // consume z
        degree = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          std::size_t dstart = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (pos == dstart) throw std::invalid_argument("parse: missing exponent after '^'");
          degree = std::stol(text.substr(dstart, pos - dstart));
        }
      } else if (!saw_number) {
        throw std::invalid_argument("parse: expected term at position " + std::to_string(pos));
      }
      if (static_cast<std::size_t>(degree) >= p.size()) p.resize(degree + 1, Rational(0));
      p[degree] += sign * coeff;
      sign = 1;
      expect_term = false;
      skip_ws();
    }
    if (expect_term) throw std::invalid_argument("parse: dangling operator");
    return with_order(order, std::move(p));
  }

 private:
  // Reduce an arbitrary-degree polynomial into canonical form at `order`.
  static CycScalar with_order(long order, detail::Poly raw) {
    if (order <= 0) throw std::invalid_argument("CycScalar: order must be positive");
    const detail::Poly &phi = cyclotomic_polynomial(order);
    detail::poly_trim(raw);
    if (raw.size() >= phi.size()) raw = detail::poly_mod(std::move(raw), phi);
    CycScalar r;
    r.order_ = order;
    raw.resize(phi.size() - 1, Rational(0));  // exactly phi(order) slots
    r.coeff_ = std::move(raw);
    return r;
  }

  // Lift both operands to a common ambient order, or refuse.
  static std::pair<CycScalar, CycScalar> aligned(const CycScalar &a, const CycScalar &b) {
    if (a.order_ == b.order_) return {a, b};
    if (b.order_ % a.order_ == 0) return {a.lifted(b.order_), b};
    if (a.order_ % b.order_ == 0) return {a, b.lifted(a.order_)};
    throw std::domain_error("incompatible ambient orders " + std::to_string(a.order_) +
                            " and " + std::to_string(b.order_) + " (lift explicitly)");
  }

  long order_;
  std::vector<Rational> coeff_;
};

/** Scalar literal helpers used throughout the tests and the CLI. */
inline CycScalar cyc_i(long ambient_order = 4) {
  if (ambient_order % 4 != 0)
    throw std::domain_error("cyc_i: ambient order must be divisible by 4");
  return CycScalar::root_of_unity(ambient_order / 4, ambient_order);
}

}  // namespace supergrade
