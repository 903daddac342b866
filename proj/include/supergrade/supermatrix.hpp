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
 * Matrix superalgebras M_{n,m} over exact cyclotomic scalars.
 *
 * The standard layout puts the n even row/column indices first and the m odd
 * ones last; a matrix unit E_ij is even when i and j have equal parity, odd
 * otherwise.  A matrix is a sum of its even and odd parts (block-diagonal
 * and block-off-diagonal respectively).
 *
 * Super products follow the usual sign rule on homogeneous elements and
 * extend bilinearly through the parity decomposition:
 *
 *   supercommutator   [a,b] = ab - (-1)^{|a||b|} ba
 *   Jordan product    a o b = (ab + (-1)^{|a||b|} ba) / 2
 *
 * Non-standard parity structures (needed for twisted realizations where the
 * even part is not block-diagonal) are expressed by an involutive invertible
 * matrix S: the parity automorphism is X -> S X S, and even/odd parts are its
 * +1/-1 eigencomponents.  The standard structure is S = diag(I_n, -I_m).
 */

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "supergrade/exact_linalg.hpp"

namespace supergrade {

struct SuperSignature {
  long n = 0;  // even block size
  long m = 0;  // odd block size

  long size() const { return n + m; }
  int parity(long index) const {
    if (index < 0 || index >= size()) throw std::out_of_range("parity: index out of range");
    return index < n ? 0 : 1;
  }
  friend bool operator==(const SuperSignature &a, const SuperSignature &b) {
    return a.n == b.n && a.m == b.m;
  }
  friend bool operator!=(const SuperSignature &a, const SuperSignature &b) { return !(a == b); }
  std::string to_string() const {
    return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
  }
};

class SuperMatrix {
 public:
  explicit SuperMatrix(SuperSignature sig)
      : sig_(sig), e_(static_cast<std::size_t>(sig.size()) * sig.size(), CycScalar(0)) {
    if (sig.n < 0 || sig.m < 0 || sig.size() == 0)
      throw std::invalid_argument("SuperMatrix: bad signature " + sig.to_string());
  }

  static SuperMatrix unit(SuperSignature sig, long i, long j) {
    SuperMatrix r(sig);
    r.set(i, j, CycScalar(1));
    return r;
  }

  static SuperMatrix identity(SuperSignature sig) {
    SuperMatrix r(sig);
    for (long i = 0; i < sig.size(); ++i) r.set(i, i, CycScalar(1));
    return r;
  }

  static SuperMatrix from_rows(SuperSignature sig, const MatRows &rows) {
    SuperMatrix r(sig);
    if (static_cast<long>(rows.size()) != sig.size())
      throw std::invalid_argument("from_rows: wrong row count");
    for (long i = 0; i < sig.size(); ++i) {
      if (static_cast<long>(rows[i].size()) != sig.size())
        throw std::invalid_argument("from_rows: ragged rows");
      for (long j = 0; j < sig.size(); ++j) r.set(i, j, rows[i][j]);
    }
    return r;
  }

  static SuperMatrix from_flat(SuperSignature sig, const Vec &flat) {
    SuperMatrix r(sig);
    if (flat.size() != r.e_.size()) throw std::invalid_argument("from_flat: wrong length");
    r.e_ = flat;
    return r;
  }

  const SuperSignature &signature() const { return sig_; }
  long size() const { return sig_.size(); }

  const CycScalar &at(long i, long j) const { return e_.at(idx(i, j)); }
  void set(long i, long j, CycScalar v) { e_.at(idx(i, j)) = std::move(v); }

  /** Row-major flattening; the shared coordinate system for all subspaces. */
  const Vec &flatten() const { return e_; }

  bool is_zero() const { return vec_is_zero(e_); }

  friend SuperMatrix operator+(const SuperMatrix &a, const SuperMatrix &b) {
    a.check_compatible(b);
    SuperMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] + b.e_[k];
    return r;
  }
  friend SuperMatrix operator-(const SuperMatrix &a, const SuperMatrix &b) {
    a.check_compatible(b);
    SuperMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] - b.e_[k];
    return r;
  }
  SuperMatrix operator-() const {
    SuperMatrix r = *this;
    for (auto &x : r.e_) x = -x;
    return r;
  }
  friend SuperMatrix operator*(const CycScalar &s, const SuperMatrix &a) {
    SuperMatrix r = a;
    for (auto &x : r.e_) x = s * x;
    return r;
  }
  friend SuperMatrix operator*(const SuperMatrix &a, const SuperMatrix &b) {
    a.check_compatible(b);
    const long n = a.size();
    SuperMatrix r(a.sig_);
    for (long i = 0; i < n; ++i)
      for (long k = 0; k < n; ++k) {
        const CycScalar &aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (long j = 0; j < n; ++j) {
          const CycScalar &bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          r.e_[r.idx(i, j)] += aik * bkj;
        }
      }
    return r;
  }
  friend bool operator==(const SuperMatrix &a, const SuperMatrix &b) {
    return a.sig_ == b.sig_ && a.e_ == b.e_;
  }
  friend bool operator!=(const SuperMatrix &a, const SuperMatrix &b) { return !(a == b); }

  SuperMatrix transpose() const {
    SuperMatrix r(sig_);
    for (long i = 0; i < size(); ++i)
      for (long j = 0; j < size(); ++j) r.set(j, i, at(i, j));
    return r;
  }

  /** Keep entries with parity(i) + parity(j) even: the block-diagonal part. */
  SuperMatrix even_part() const { return parity_slice(0); }
  /** Keep entries with parity(i) + parity(j) odd: the off-diagonal blocks. */
  SuperMatrix odd_part() const { return parity_slice(1); }

  bool is_homogeneous() const { return even_part().is_zero() || odd_part().is_zero(); }

  /** 0, 1, or nullopt for mixed; the zero matrix reports even. */
  std::optional<int> parity() const {
    bool has_even = !even_part().is_zero();
    bool has_odd = !odd_part().is_zero();
    if (has_even && has_odd) return std::nullopt;
    return has_odd ? 1 : 0;
  }

  /**
   * Super-transpose: [[A,B],[C,D]] -> [[A,-B],[C,D]]^t.  An order-4
   * super-anti-automorphism; its square negates the odd part.
   */
  SuperMatrix supertranspose() const {
    SuperMatrix r(sig_);
    for (long i = 0; i < size(); ++i)
      for (long j = 0; j < size(); ++j) {
        CycScalar v = at(i, j);
        if (sig_.parity(i) == 0 && sig_.parity(j) == 1) v = -v;
        r.set(j, i, std::move(v));
      }
    return r;
  }

  std::string to_string() const {
    std::ostringstream out;
    for (long i = 0; i < size(); ++i) {
      out << (i == 0 ? "[" : " ");
      out << "[";
      for (long j = 0; j < size(); ++j) {
        if (j) out << ", ";
        out << at(i, j).to_string();
      }
      out << "]";
      if (i + 1 < size()) out << "\n";
    }
    out << "]";
    return out.str();
  }

 private:
  std::size_t idx(long i, long j) const {
    if (i < 0 || j < 0 || i >= size() || j >= size())
      throw std::out_of_range("SuperMatrix: index out of range");
    return static_cast<std::size_t>(i) * size() + j;
  }

  void check_compatible(const SuperMatrix &o) const {
    if (!(sig_ == o.sig_))
      throw std::invalid_argument("signature mismatch: " + sig_.to_string() + " vs " +
                                  o.sig_.to_string());
  }

  SuperMatrix parity_slice(int p) const {
    SuperMatrix r(sig_);
    for (long i = 0; i < size(); ++i)
      for (long j = 0; j < size(); ++j)
        if ((sig_.parity(i) + sig_.parity(j)) % 2 == p) r.set(i, j, at(i, j));
    return r;
  }

  SuperSignature sig_;
  Vec e_;
};

/** The standard parity involution diag(I_n, -I_m). */
inline SuperMatrix parity_matrix(SuperSignature sig) {
  SuperMatrix s(sig);
  for (long i = 0; i < sig.size(); ++i) s.set(i, i, CycScalar(sig.parity(i) == 0 ? 1 : -1));
  return s;
}

/** Even part with respect to an arbitrary parity involution S (S*S = I). */
inline SuperMatrix even_part_wrt(const SuperMatrix &x, const SuperMatrix &S) {
  CycScalar half(make_rational(1, 2));
  return half * (x + S * x * S);
}

inline SuperMatrix odd_part_wrt(const SuperMatrix &x, const SuperMatrix &S) {
  CycScalar half(make_rational(1, 2));
  return half * (x - S * x * S);
}

namespace detail {

// Bilinear extension of a sign-ruled product through the parity split.
template <typename Rule>
SuperMatrix super_bilinear(const SuperMatrix &a, const SuperMatrix &b, Rule rule) {
  const SuperMatrix a0 = a.even_part(), a1 = a.odd_part();
  const SuperMatrix b0 = b.even_part(), b1 = b.odd_part();
  SuperMatrix acc(a.signature());
  const SuperMatrix *as[2] = {&a0, &a1};
  const SuperMatrix *bs[2] = {&b0, &b1};
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      if (as[p]->is_zero() || bs[q]->is_zero()) continue;
      acc = acc + rule(*as[p], *bs[q], p, q);
    }
  return acc;
}

}  // namespace detail

/** [a,b] = ab - (-1)^{|a||b|} ba, extended bilinearly. */
inline SuperMatrix supercommutator(const SuperMatrix &a, const SuperMatrix &b) {
  return detail::super_bilinear(a, b, [](const SuperMatrix &x, const SuperMatrix &y, int p, int q) {
    SuperMatrix xy = x * y, yx = y * x;
    return (p * q) % 2 == 1 ? xy + yx : xy - yx;
  });
}

/** a o b = (ab + (-1)^{|a||b|} ba)/2, extended bilinearly. */
inline SuperMatrix jordan_superproduct(const SuperMatrix &a, const SuperMatrix &b) {
  CycScalar half(make_rational(1, 2));
  return detail::super_bilinear(
      a, b, [&half](const SuperMatrix &x, const SuperMatrix &y, int p, int q) {
        SuperMatrix xy = x * y, yx = y * x;
        return half * ((p * q) % 2 == 1 ? xy - yx : xy + yx);
      });
}

/**
 * A unital-or-not subalgebra of a matrix superalgebra, carried by a
 * parity-homogeneous basis.  Construction verifies that the basis is
 * independent and each member is homogeneous; multiplicative closure is a
 * separate, explicit check.
 */
class SuperAlgebraView {
 public:
  SuperAlgebraView(SuperSignature sig, std::vector<SuperMatrix> basis)
      : sig_(sig), basis_(std::move(basis)), span_(static_cast<std::size_t>(sig.size()) * sig.size()) {
    MatRows rows;
    for (const auto &b : basis_) {
      if (!(b.signature() == sig_)) throw std::invalid_argument("view: signature mismatch");
      if (!b.is_homogeneous())
        throw std::invalid_argument("view: basis element is not parity homogeneous");
      rows.push_back(b.flatten());
    }
    span_ = Subspace::span(span_.ambient_dim(), rows);
    if (span_.dim() != basis_.size())
      throw std::invalid_argument("view: basis is linearly dependent");
  }

  const SuperSignature &signature() const { return sig_; }
  const std::vector<SuperMatrix> &basis() const { return basis_; }
  const Subspace &span() const { return span_; }
  std::size_t dim() const { return basis_.size(); }

  bool contains(const SuperMatrix &x) const { return span_.contains(x.flatten()); }

  bool closed_under_mul() const {
    for (const auto &a : basis_)
      for (const auto &b : basis_)
        if (!contains(a * b)) return false;
    return true;
  }

  long even_dim() const {
    long d = 0;
    for (const auto &b : basis_)
      if (b.parity() == 0) ++d;
    return d;
  }
  long odd_dim() const { return static_cast<long>(basis_.size()) - even_dim(); }

 private:
  SuperSignature sig_;
  std::vector<SuperMatrix> basis_;
  Subspace span_;
};

/** The full matrix superalgebra as a view (basis = matrix units). */
inline SuperAlgebraView full_view(SuperSignature sig) {
  std::vector<SuperMatrix> basis;
  for (long i = 0; i < sig.size(); ++i)
    for (long j = 0; j < sig.size(); ++j) basis.push_back(SuperMatrix::unit(sig, i, j));
  return SuperAlgebraView(sig, std::move(basis));
}

/**
 * Q(n) inside M_{n,n}: matrices [[X,Y],[Y,X]].  Even basis pairs E_ij on both
 * diagonal blocks; odd basis pairs E_ij on both off-diagonal blocks.
 */
inline SuperAlgebraView q_superalgebra(long n) {
  if (n <= 0) throw std::invalid_argument("q_superalgebra: n must be positive");
  SuperSignature sig{n, n};
  std::vector<SuperMatrix> basis;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      basis.push_back(SuperMatrix::unit(sig, i, j) + SuperMatrix::unit(sig, n + i, n + j));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      basis.push_back(SuperMatrix::unit(sig, i, n + j) + SuperMatrix::unit(sig, n + i, j));
  return SuperAlgebraView(sig, std::move(basis));
}

/**
 * Tensor product of two matrix (super)algebras in a parity-sorted standard
 * layout.  At least one factor must be purely even: then the graded tensor
 * sign rule degenerates and the embedding x (x) y -> kron(x, y) is an honest
 * homomorphism of superalgebras.
 */
class TensorSpace {
 public:
  TensorSpace(SuperSignature first, SuperSignature second) : first_(first), second_(second) {
    if (first.m != 0 && second.m != 0)
      throw std::invalid_argument(
          "TensorSpace: one factor must be purely even (graded tensor signs otherwise)");
    const long s1 = first.size(), s2 = second.size();
    std::vector<long> evens, odds;
    for (long u = 0; u < s1; ++u)
      for (long v = 0; v < s2; ++v) {
        long pair = u * s2 + v;
        ((first.parity(u) + second.parity(v)) % 2 == 0 ? evens : odds).push_back(pair);
      }
    sig_ = SuperSignature{static_cast<long>(evens.size()), static_cast<long>(odds.size())};
    position_.resize(s1 * s2);
    long pos = 0;
    for (long p : evens) position_[p] = pos++;
    for (long p : odds) position_[p] = pos++;
  }

  const SuperSignature &signature() const { return sig_; }
  const SuperSignature &first_signature() const { return first_; }
  const SuperSignature &second_signature() const { return second_; }

  /** Combined index of the pair (u, v). */
  long position(long u, long v) const { return position_.at(u * second_.size() + v); }

  /** kron(x, y) carried into the sorted layout. */
  SuperMatrix embed(const SuperMatrix &x, const SuperMatrix &y) const {
    if (!(x.signature() == first_) || !(y.signature() == second_))
      throw std::invalid_argument("TensorSpace::embed: signature mismatch");
    SuperMatrix r(sig_);
    for (long u = 0; u < first_.size(); ++u)
      for (long up = 0; up < first_.size(); ++up) {
        const CycScalar &xv = x.at(u, up);
        if (xv.is_zero()) continue;
        for (long v = 0; v < second_.size(); ++v)
          for (long vp = 0; vp < second_.size(); ++vp) {
            const CycScalar &yv = y.at(v, vp);
            if (yv.is_zero()) continue;
            r.set(position(u, v), position(up, vp), xv * yv);
          }
      }
    return r;
  }

 private:
  SuperSignature first_, second_, sig_;
  std::vector<long> position_;
};

}  // namespace supergrade
