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
 * Finite abelian groups in invariant-factor form, their characters,
 * subgroups, and quotients.
 *
 * A group is a product Z_{n_1} x ... x Z_{n_k} with n_1 | n_2 | ... | n_k.
 * Arbitrary cyclic-product input is normalized to this form on construction
 * (the Smith-normal-form reduction of a diagonal relation matrix), so equal
 * groups compare equal structurally.  Elements and characters are exponent
 * vectors against the invariant factors; all APIs are deterministic, with
 * elements enumerated in odometer (lexicographic) order.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "supergrade/cyclotomic.hpp"

namespace supergrade {

/** Exponent vector against the parent group's invariant factors. */
using GroupElement = std::vector<long>;

/**
 * A character chi_c of the dual group, stored as an exponent vector c with
 * chi_c(g) = zeta_m ^ (sum_i c_i g_i m/n_i).  The dual of Z_{n_1} x ... is
 * again Z_{n_1} x ..., so characters reuse the element representation.
 */
using Character = std::vector<long>;

namespace detail {

inline std::vector<std::pair<long, long>> factorize(long n) {
  std::vector<std::pair<long, long>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      long e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace detail

class FiniteAbelianGroup {
 public:
  /** Normalizes arbitrary cyclic moduli to invariant factors; 1s drop out. */
  explicit FiniteAbelianGroup(std::vector<long> moduli) {
    std::map<long, std::vector<long>> prime_exps;  // prime -> exponents, one per modulus
    for (long m : moduli) {
      if (m <= 0) throw std::invalid_argument("group modulus must be positive");
      for (auto [p, e] : detail::factorize(m)) prime_exps[p].push_back(e);
    }
    std::size_t rank = 0;
    for (auto &[p, exps] : prime_exps) {
      std::sort(exps.rbegin(), exps.rend());
      rank = std::max(rank, exps.size());
    }
    // invariant factor j (from the largest down) = product of j-th largest
    // prime powers across all primes.
    std::vector<long> factors(rank, 1);
    for (auto &[p, exps] : prime_exps) {
      for (std::size_t j = 0; j < exps.size(); ++j) {
        long pe = 1;
        for (long t = 0; t < exps[j]; ++t) pe *= p;
        factors[j] *= pe;
      }
    }
    std::reverse(factors.begin(), factors.end());  // ascending divisibility
    factors_ = std::move(factors);
  }

  static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(std::vector<long>{}); }

  const std::vector<long> &invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }

  long order() const {
    long n = 1;
    for (long f : factors_) n *= f;
    return n;
  }

  long exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  /** Ambient cyclotomic order for computations over this group: lcm(exp, 4),
   * so that +/-1 and +/-i are always available alongside character values. */
  long ambient_cyclotomic_order() const { return std::lcm(exponent(), 4L); }

  GroupElement identity() const { return GroupElement(factors_.size(), 0); }

  /** Validate length and reduce components into [0, n_i). */
  GroupElement make(std::vector<long> exps) const {
    if (exps.size() != factors_.size())
      throw std::invalid_argument("element has " + std::to_string(exps.size()) +
                                  " components, group has " + std::to_string(factors_.size()));
    for (std::size_t i = 0; i < exps.size(); ++i)
      exps[i] = ((exps[i] % factors_[i]) + factors_[i]) % factors_[i];
    return exps;
  }

  bool contains(const GroupElement &a) const {
    if (a.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] < 0 || a[i] >= factors_[i]) return false;
    return true;
  }

  GroupElement mul(const GroupElement &a, const GroupElement &b) const {
    check(a);
    check(b);
    GroupElement c(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = (a[i] + b[i]) % factors_[i];
    return c;
  }

  GroupElement inverse(const GroupElement &a) const {
    check(a);
    GroupElement c(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = (factors_[i] - a[i]) % factors_[i];
    return c;
  }

  GroupElement power(const GroupElement &a, long n) const {
    check(a);
    GroupElement c(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      long r = ((a[i] * (n % factors_[i])) % factors_[i] + factors_[i]) % factors_[i];
      c[i] = r;
    }
    return c;
  }

  long element_order(const GroupElement &a) const {
    check(a);
    long o = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      long ord_i = factors_[i] / std::gcd(a[i], factors_[i]);
      o = std::lcm(o, ord_i);
    }
    return o;
  }

  /** All elements in odometer order: last coordinate fastest. */
  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    out.reserve(order());
    GroupElement cur = identity();
    while (true) {
      out.push_back(cur);
      std::size_t i = factors_.size();
      while (i > 0) {
        --i;
        if (++cur[i] < factors_[i]) break;
        cur[i] = 0;
        if (i == 0) return out;
      }
      if (factors_.empty()) return out;
    }
  }

  /** The dual group has the same invariant factors; characters enumerate the
   * same odometer. */
  std::vector<Character> characters() const { return elements(); }

  /**
   * chi(g) as an exact root of unity at the requested ambient order, which
   * must be a multiple of the group exponent.
   */
  CycScalar char_eval(const Character &chi, const GroupElement &g, long ambient_order) const {
    check(chi);
    check(g);
    if (ambient_order % exponent() != 0)
      throw std::invalid_argument("ambient order " + std::to_string(ambient_order) +
                                  " is not a multiple of the group exponent " +
                                  std::to_string(exponent()));
    long e = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      long step = ambient_order / factors_[i];
      e = (e + chi[i] * g[i] % ambient_order * step) % ambient_order;
    }
    return CycScalar::root_of_unity(e, ambient_order);
  }

  CycScalar char_eval(const Character &chi, const GroupElement &g) const {
    return char_eval(chi, g, ambient_cyclotomic_order());
  }

  /** True iff chi(g) = 1, decided in integer arithmetic. */
  bool char_is_trivial_on(const Character &chi, const GroupElement &g) const {
    check(chi);
    check(g);
    long m = exponent();
    long e = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      e = (e + chi[i] * g[i] % m * (m / factors_[i])) % m;
    return e == 0;
  }

  friend bool operator==(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b) {
    return !(a == b);
  }

  /** Normalized display form, e.g. "Z2xZ4"; the trivial group is "Z1". */
  std::string to_string() const {
    if (factors_.empty()) return "Z1";
    std::ostringstream out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out << "x";
      out << "Z" << factors_[i];
    }
    return out.str();
  }

 private:
  void check(const GroupElement &a) const {
    if (!contains(a))
      throw std::invalid_argument("element is not in normalized form for " + to_string());
  }

  std::vector<long> factors_;
};

inline std::string element_to_string(const GroupElement &a) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ",";
    out << a[i];
  }
  out << ")";
  return out.str();
}

/**
 * A subgroup materialized as its sorted element set.  Construction verifies
 * closure; there is no lazy representation.
 */
class Subgroup {
 public:
  Subgroup(FiniteAbelianGroup parent, std::vector<GroupElement> members)
      : parent_(std::move(parent)) {
    std::set<GroupElement> s(members.begin(), members.end());
    if (s.empty()) throw std::invalid_argument("subgroup: empty element set");
    for (const auto &a : s)
      if (!parent_.contains(a)) throw std::invalid_argument("subgroup: element outside parent");
    if (!s.count(parent_.identity()))
      throw std::invalid_argument("subgroup: missing identity");
    for (const auto &a : s)
      for (const auto &b : s)
        if (!s.count(parent_.mul(a, b)))
          throw std::invalid_argument("subgroup: set not closed under product");
    members_.assign(s.begin(), s.end());
  }

  static Subgroup generated_by(const FiniteAbelianGroup &G,
                               const std::vector<GroupElement> &gens) {
    std::set<GroupElement> s;
    s.insert(G.identity());
    std::vector<GroupElement> frontier(s.begin(), s.end());
    for (const auto &g : gens) G.make(g);  // validate
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<GroupElement> cur(s.begin(), s.end());
      for (const auto &a : cur)
        for (const auto &g : gens) {
          GroupElement b = G.mul(a, G.make(g));
          if (s.insert(b).second) grew = true;
        }
    }
    return Subgroup(G, std::vector<GroupElement>(s.begin(), s.end()));
  }

  static Subgroup trivial(const FiniteAbelianGroup &G) {
    return Subgroup(G, {G.identity()});
  }
  static Subgroup full(const FiniteAbelianGroup &G) { return Subgroup(G, G.elements()); }

  const FiniteAbelianGroup &parent() const { return parent_; }
  const std::vector<GroupElement> &members() const { return members_; }
  long order() const { return static_cast<long>(members_.size()); }
  bool contains(const GroupElement &a) const {
    return std::binary_search(members_.begin(), members_.end(), a);
  }
  friend bool operator==(const Subgroup &a, const Subgroup &b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  FiniteAbelianGroup parent_;
  std::vector<GroupElement> members_;
};

/** Lambda-perp: elements killed by every character in Lambda. */
inline Subgroup annihilator_of_characters(const FiniteAbelianGroup &G,
                                          const std::vector<Character> &lambda) {
  std::vector<GroupElement> keep;
  for (const auto &g : G.elements()) {
    bool all_one = true;
    for (const auto &chi : lambda)
      if (!G.char_is_trivial_on(chi, g)) {
        all_one = false;
        break;
      }
    if (all_one) keep.push_back(g);
  }
  return Subgroup(G, keep);  // closure check doubles as a consistency assert
}

/** H-perp in the dual: characters trivial on all of H. */
inline std::vector<Character> annihilator_of_subgroup(const FiniteAbelianGroup &G,
                                                      const Subgroup &H) {
  if (!(H.parent() == G)) throw std::invalid_argument("annihilator: parent mismatch");
  std::vector<Character> keep;
  for (const auto &chi : G.characters()) {
    bool all_one = true;
    for (const auto &h : H.members())
      if (!G.char_is_trivial_on(chi, h)) {
        all_one = false;
        break;
      }
    if (all_one) keep.push_back(chi);
  }
  return keep;
}

/**
 * G/H as an explicit coset table.  Cosets are sorted element lists, ordered
 * by their minimal representative; products go through representatives.
 * invariant_factors() runs the optional normalization pass (element-order
 * statistics per prime), giving the isomorphism type for display/equality.
 */
class QuotientGroup {
 public:
  QuotientGroup(FiniteAbelianGroup G, Subgroup H) : parent_(std::move(G)), sub_(std::move(H)) {
    if (!(sub_.parent() == parent_)) throw std::invalid_argument("quotient: parent mismatch");
    std::set<GroupElement> seen;
    for (const auto &g : parent_.elements()) {
      if (seen.count(g)) continue;
      std::vector<GroupElement> coset;
      for (const auto &h : sub_.members()) coset.push_back(parent_.mul(g, h));
      std::sort(coset.begin(), coset.end());
      for (const auto &x : coset) seen.insert(x);
      cosets_.push_back(std::move(coset));
    }
    std::sort(cosets_.begin(), cosets_.end());
  }

  long order() const { return static_cast<long>(cosets_.size()); }
  const std::vector<std::vector<GroupElement>> &cosets() const { return cosets_; }

  /** Index of the coset containing g: the projection map. */
  std::size_t project(const GroupElement &g) const {
    for (std::size_t i = 0; i < cosets_.size(); ++i)
      if (std::binary_search(cosets_[i].begin(), cosets_[i].end(), g)) return i;
    throw std::invalid_argument("project: element not in parent group");
  }

  std::size_t identity_coset() const { return project(parent_.identity()); }

  std::size_t mul(std::size_t i, std::size_t j) const {
    return project(parent_.mul(cosets_.at(i)[0], cosets_.at(j)[0]));
  }

  long coset_order(std::size_t i) const {
    std::size_t e = identity_coset();
    std::size_t cur = i;
    long n = 1;
    while (cur != e) {
      cur = mul(cur, i);
      ++n;
    }
    return n;
  }

  /**
   * Isomorphism type by order statistics: for each prime p, the count of
   * cosets killed by p^k determines the p-partition, hence the factors.
   */
  std::vector<long> invariant_factors() const {
    long n = order();
    std::map<long, std::vector<long>> partitions;  // prime -> descending exponents
    for (auto [p, e_max] : detail::factorize(n)) {
      // d_k = log_p #{x : p^k x = 0}; parts_ge_k = d_k - d_{k-1}.
      std::vector<long> d{0};
      for (long k = 1; k <= e_max; ++k) {
        long pk = 1;
        for (long t = 0; t < k; ++t) pk *= p;
        long cnt = 0;
        for (long i = 0; i < n; ++i) {
          // order of coset i divides p^k?
          long o = coset_order(i);
          if (pk % o == 0) ++cnt;
        }
        long dk = 0;
        long c = cnt;
        while (c > 1) {
          if (c % p != 0) throw std::logic_error("quotient: inconsistent order statistics");
          c /= p;
          ++dk;
        }
        d.push_back(dk);
      }
      std::vector<long> partition;
      for (long k = 1; k <= e_max; ++k) {
        long parts_ge_k = d[k] - d[k - 1];
        while (static_cast<long>(partition.size()) < parts_ge_k) partition.push_back(0);
        for (long j = 0; j < parts_ge_k; ++j) ++partition[j];
      }
      partitions[p] = partition;
    }
    std::size_t rank = 0;
    for (auto &[p, part] : partitions) rank = std::max(rank, part.size());
    std::vector<long> factors(rank, 1);
    for (auto &[p, part] : partitions)
      for (std::size_t j = 0; j < part.size(); ++j) {
        long pe = 1;
        for (long t = 0; t < part[j]; ++t) pe *= p;
        factors[j] *= pe;  // j = 0 is the largest factor
      }
    std::reverse(factors.begin(), factors.end());
    return factors;
  }

 private:
  FiniteAbelianGroup parent_;
  Subgroup sub_;
  std::vector<std::vector<GroupElement>> cosets_;
};

inline QuotientGroup quotient(const FiniteAbelianGroup &G, const Subgroup &H) {
  return QuotientGroup(G, H);
}

/** All subgroups of a small group, found by closing generator extensions. */
inline std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup &G) {
  if (G.order() > 64) throw std::invalid_argument("all_subgroups: group too large");
  std::set<std::vector<GroupElement>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> frontier{Subgroup::trivial(G)};
  seen.insert(frontier[0].members());
  out.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto &H : frontier) {
      for (const auto &g : G.elements()) {
        if (H.contains(g)) continue;
        std::vector<GroupElement> gens = H.members();
        gens.push_back(g);
        Subgroup bigger = Subgroup::generated_by(G, gens);
        if (seen.insert(bigger.members()).second) {
          out.push_back(bigger);
          next.push_back(bigger);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup &a, const Subgroup &b) {
    return a.members() < b.members();
  });
  return out;
}

/** Invariant-factor forms of every abelian group of order <= max_order. */
inline std::vector<FiniteAbelianGroup> all_abelian_groups(long max_order) {
  std::vector<FiniteAbelianGroup> out;
  // ascending divisibility chains f1 | f2 | ... with product <= max_order
  std::vector<long> chain;
  auto rec = [&](auto &&self, long min_factor, long product) -> void {
    out.emplace_back(chain);
    for (long f = std::max(2L, min_factor); product * f <= max_order; ++f) {
      if (!chain.empty() && f % chain.back() != 0) continue;
      chain.push_back(f);
      self(self, f, product * f);
      chain.pop_back();
    }
  };
  rec(rec, 2, 1);
  std::sort(out.begin(), out.end(),
            [](const FiniteAbelianGroup &a, const FiniteAbelianGroup &b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.invariant_factors() < b.invariant_factors();
            });
  return out;
}

}  // namespace supergrade
