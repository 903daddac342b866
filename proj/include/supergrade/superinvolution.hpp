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
 * Superinvolutions of matrix superalgebras.
 *
 * A superinvolution is a parity-preserving linear map * with *^2 = id and
 *
 *   (ab)* = (-1)^{|a||b|} b* a*        (a, b homogeneous).
 *
 * Supported constructions:
 *   osp  - X -> Phi^{-1} X^tau Phi with Phi = diag(Phi0, Phi1), Phi0
 *          symmetric, Phi1 skew (so the odd block size must be even);
 *          the canonical choice is Phi0 = I, Phi1 the standard symplectic
 *          form.
 *   trp  - on M_{n,n}: [[A,B],[C,D]] -> [[D^t,-B^t],[C^t,A^t]].
 *   exchange - on the block-diagonal pair subalgebra of M_{2n,2m} that
 *          realizes A + A^sop, swapping the two copies.
 *
 * Every instance compiles images of a basis and exposes an axiom checker
 * that re-verifies the definition computationally, plus exact solvers for
 * the fixed space H and the skew space K.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supergrade/exact_linalg.hpp"
#include "supergrade/supermatrix.hpp"

namespace supergrade {

/** Canonical osp form: diag(I_n, Q) with Q = [[0,I],[-I,0]]; odd size even. */
inline SuperMatrix osp_phi(SuperSignature sig) {
  if (sig.m % 2 != 0)
    throw std::invalid_argument("osp_phi: odd block size must be even, got " + sig.to_string());
  SuperMatrix phi(sig);
  for (long i = 0; i < sig.n; ++i) phi.set(i, i, CycScalar(1));
  const long s = sig.m / 2;
  for (long i = 0; i < s; ++i) {
    phi.set(sig.n + i, sig.n + s + i, CycScalar(1));
    phi.set(sig.n + s + i, sig.n + i, CycScalar(-1));
  }
  return phi;
}

class Superinvolution {
 public:
  enum class Kind { Osp, Trp, BlockPhi, Exchange, General };

  /** Canonical orthosymplectic superinvolution. */
  static Superinvolution osp(SuperSignature sig) {
    SuperMatrix phi = osp_phi(sig);
    Superinvolution s = from_phi(sig, phi, Kind::Osp, "osp" + sig.to_string());
    return s;
  }

  /**
   * X -> Phi^{-1} X^tau Phi for Phi = diag(Phi0, Phi1); requires Phi0
   * symmetric invertible and Phi1 skew invertible.
   */
  static Superinvolution osp_with_phi(SuperSignature sig, const MatRows &phi0,
                                      const MatRows &phi1) {
    if (static_cast<long>(phi0.size()) != sig.n || static_cast<long>(phi1.size()) != sig.m)
      throw std::invalid_argument("osp_with_phi: block sizes do not match signature");
    SuperMatrix phi(sig);
    for (long i = 0; i < sig.n; ++i)
      for (long j = 0; j < sig.n; ++j) {
        if (static_cast<long>(phi0[i].size()) != sig.n)
          throw std::invalid_argument("osp_with_phi: ragged Phi0");
        if (!(phi0[i][j] == phi0[j][i]))
          throw std::invalid_argument("osp_with_phi: Phi0 must be symmetric");
        phi.set(i, j, phi0[i][j]);
      }
    for (long i = 0; i < sig.m; ++i)
      for (long j = 0; j < sig.m; ++j) {
        if (static_cast<long>(phi1[i].size()) != sig.m)
          throw std::invalid_argument("osp_with_phi: ragged Phi1");
        if (!(phi1[i][j] == -phi1[j][i]))
          throw std::invalid_argument("osp_with_phi: Phi1 must be skew");
        phi.set(sig.n + i, sig.n + j, phi1[i][j]);
      }
    return from_phi(sig, phi, Kind::BlockPhi, "phi-block" + sig.to_string());
  }

  /** Transpose-type superinvolution on M_{n,n}. */
  static Superinvolution trp(long n) {
    if (n <= 0) throw std::invalid_argument("trp: n must be positive");
    SuperSignature sig{n, n};
    std::vector<SuperMatrix> images;
    images.reserve(static_cast<std::size_t>(sig.size()) * sig.size());
    for (long i = 0; i < sig.size(); ++i)
      for (long j = 0; j < sig.size(); ++j) {
        // [[A,B],[C,D]] -> [[D^t,-B^t],[C^t,A^t]] expressed on units.
        SuperMatrix img(sig);
        const bool ri = i >= n, cj = j >= n;
        if (!ri && !cj)
          img.set(n + j, n + i, CycScalar(1));  // A block lands in D^t spot
        else if (ri && cj)
          img.set(j - n, i - n, CycScalar(1));  // D block lands in A^t spot
        else if (!ri && cj)
          img.set(j - n, n + i, CycScalar(-1));  // B -> -B^t stays upper right
        else
          img.set(n + j, i - n, CycScalar(1));  // C -> C^t stays lower left
        images.push_back(std::move(img));
      }
    return Superinvolution(sig, Kind::Trp, "trp(" + std::to_string(n) + ")", std::move(images));
  }

  /** General full-space map from images of the matrix units (row-major). */
  static Superinvolution from_unit_images(SuperSignature sig, std::vector<SuperMatrix> images,
                                          std::string label) {
    if (images.size() != static_cast<std::size_t>(sig.size()) * sig.size())
      throw std::invalid_argument("from_unit_images: need one image per matrix unit");
    return Superinvolution(sig, Kind::General, std::move(label), std::move(images));
  }

  /**
   * Exchange superinvolution on the pair subalgebra of M_{2n,2m} consisting
   * of matrices block-diagonal across two interleaved copies of M_{n,m}.
   * The first copy carries a, the second tau(b); swapping the arguments of
   * (a, b) is then a superinvolution of the pair.
   */
  static Superinvolution exchange(long n, long m) {
    if (n < 0 || m < 0 || n + m <= 0) throw std::invalid_argument("exchange: bad sizes");
    SuperSignature inner{n, m};
    SuperSignature outer{2 * n, 2 * m};
    auto lift = [&](long inner_index, int copy) {
      // Copy 0 occupies even rows [0,n) and odd rows [2n, 2n+m);
      // copy 1 occupies even rows [n, 2n) and odd rows [2n+m, 2n+2m).
      if (inner_index < n) return inner_index + copy * n;
      return 2 * n + (inner_index - n) + copy * m;
    };
    auto embed = [&](const SuperMatrix &x, int copy) {
      SuperMatrix r(outer);
      for (long i = 0; i < inner.size(); ++i)
        for (long j = 0; j < inner.size(); ++j)
          if (!x.at(i, j).is_zero()) r.set(lift(i, copy), lift(j, copy), x.at(i, j));
      return r;
    };
    // Carrier basis: first-copy units then second-copy units.
    std::vector<SuperMatrix> basis;
    std::vector<SuperMatrix> images;
    for (int copy = 0; copy < 2; ++copy)
      for (long i = 0; i < inner.size(); ++i)
        for (long j = 0; j < inner.size(); ++j) basis.push_back(embed(SuperMatrix::unit(inner, i, j), copy));
    // The swap (a, b) -> (b, a) on E1(a) + E2(tau(b)):
    //   E1(u) -> E2(tau(u));   E2(v) -> E1(tau^{-1}(v)),
    // where tau^{-1}(v) = tau(v0 - v1) since tau^2 negates the odd part.
    for (long i = 0; i < inner.size(); ++i)
      for (long j = 0; j < inner.size(); ++j) {
        SuperMatrix u = SuperMatrix::unit(inner, i, j);
        images.push_back(embed(u.supertranspose(), 1));
      }
    for (long i = 0; i < inner.size(); ++i)
      for (long j = 0; j < inner.size(); ++j) {
        SuperMatrix v = SuperMatrix::unit(inner, i, j);
        SuperMatrix inv = (v.even_part() - v.odd_part()).supertranspose();
        images.push_back(embed(inv, 0));
      }
    Superinvolution s(outer, Kind::Exchange,
                      "exchange(" + std::to_string(n) + "," + std::to_string(m) + ")",
                      std::move(images));
    s.carrier_.emplace(outer, std::move(basis));
    return s;
  }

  const SuperSignature &signature() const { return sig_; }
  Kind kind() const { return kind_; }
  const std::string &label() const { return label_; }
  bool has_carrier() const { return carrier_.has_value(); }
  const SuperAlgebraView &carrier() const {
    if (!carrier_) throw std::logic_error("no carrier: full-space superinvolution");
    return *carrier_;
  }

  /** The domain basis whose images are compiled (units, or carrier basis). */
  std::vector<SuperMatrix> domain_basis() const {
    if (carrier_) return carrier_->basis();
    std::vector<SuperMatrix> units;
    for (long i = 0; i < sig_.size(); ++i)
      for (long j = 0; j < sig_.size(); ++j) units.push_back(SuperMatrix::unit(sig_, i, j));
    return units;
  }

  SuperMatrix apply(const SuperMatrix &x) const {
    if (!(x.signature() == sig_)) throw std::invalid_argument("apply: signature mismatch");
    if (!carrier_) {
      SuperMatrix acc(sig_);
      for (long i = 0; i < sig_.size(); ++i)
        for (long j = 0; j < sig_.size(); ++j) {
          const CycScalar &c = x.at(i, j);
          if (c.is_zero()) continue;
          acc = acc + c * images_[static_cast<std::size_t>(i) * sig_.size() + j];
        }
      return acc;
    }
    MatRows basis_rows;
    for (const auto &b : carrier_->basis()) basis_rows.push_back(b.flatten());
    auto coords = solve_coordinates(basis_rows, x.flatten());
    if (!coords) throw std::invalid_argument("apply: element is outside the carrier subalgebra");
    SuperMatrix acc(sig_);
    for (std::size_t k = 0; k < coords->size(); ++k) {
      if ((*coords)[k].is_zero()) continue;
      acc = acc + (*coords)[k] * images_[k];
    }
    return acc;
  }

  struct AxiomReport {
    bool ok = true;
    std::string witness;  // empty when ok
  };

  /**
   * Re-verify the definition: parity preservation, *^2 = id, and the sign
   * rule (ab)* = (-1)^{|a||b|} b* a* over the compiled basis.  For carrier
   * maps the products are checked inside the carrier.
   */
  AxiomReport check_axioms() const {
    const std::vector<SuperMatrix> basis = domain_basis();
    std::vector<int> par(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      auto p = basis[k].parity();
      if (!p) return {false, "basis element " + std::to_string(k) + " is not homogeneous"};
      par[k] = *p;
      auto q = images_[k].parity();
      if (!q || *q != *p)
        return {false, "image of basis element " + std::to_string(k) + " changes parity"};
      if (!(apply(images_[k]) == basis[k]))
        return {false, "square is not the identity on basis element " + std::to_string(k)};
    }
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b) {
        SuperMatrix lhs = apply(basis[a] * basis[b]);
        SuperMatrix rhs = images_[b] * images_[a];
        if ((par[a] * par[b]) % 2 == 1) rhs = -rhs;
        if (!(lhs == rhs))
          return {false, "sign rule fails on basis pair (" + std::to_string(a) + "," +
                             std::to_string(b) + ")"};
      }
    return {};
  }

  /** Fixed space H = {x : x* = x}, as a subspace of flat coordinates. */
  Subspace H_space() const { return eigen_space(CycScalar(1)); }
  /** Skew space K = {x : x* = -x}. */
  Subspace K_space() const { return eigen_space(CycScalar(-1)); }

 private:
  Superinvolution(SuperSignature sig, Kind kind, std::string label,
                  std::vector<SuperMatrix> images)
      : sig_(sig), kind_(kind), label_(std::move(label)), images_(std::move(images)) {}

  static Superinvolution from_phi(SuperSignature sig, const SuperMatrix &phi, Kind kind,
                                  std::string label) {
    MatRows phi_rows;
    for (long i = 0; i < sig.size(); ++i) {
      Vec row;
      for (long j = 0; j < sig.size(); ++j) row.push_back(phi.at(i, j));
      phi_rows.push_back(std::move(row));
    }
    auto inv_rows = invert(phi_rows);
    if (!inv_rows) throw std::invalid_argument("superinvolution form must be invertible");
    SuperMatrix phi_inv(sig);
    for (long i = 0; i < sig.size(); ++i)
      for (long j = 0; j < sig.size(); ++j) phi_inv.set(i, j, (*inv_rows)[i][j]);
    std::vector<SuperMatrix> images;
    for (long i = 0; i < sig.size(); ++i)
      for (long j = 0; j < sig.size(); ++j)
        images.push_back(phi_inv * SuperMatrix::unit(sig, i, j).supertranspose() * phi);
    return Superinvolution(sig, kind, std::move(label), std::move(images));
  }

  Subspace eigen_space(const CycScalar &lambda) const {
    const std::vector<SuperMatrix> basis = domain_basis();
    // Coordinates of each image against the domain basis.
    MatRows basis_rows;
    for (const auto &b : basis) basis_rows.push_back(b.flatten());
    const std::size_t d = basis.size();
    MatRows system(d, Vec(d, CycScalar(0)));  // rows of (M - lambda I)
    for (std::size_t c = 0; c < d; ++c) {
      std::optional<Vec> col;
      if (carrier_) {
        col = solve_coordinates(basis_rows, images_[c].flatten());
        if (!col) throw std::logic_error("carrier image escapes the carrier");
      } else {
        // Full space: basis is units in row-major order, coordinates are the
        // flat entries themselves.
        col = images_[c].flatten();
      }
      for (std::size_t r = 0; r < d; ++r) system[r][c] = (*col)[r];
      system[c][c] = system[c][c] - lambda;
    }
    MatRows combos = nullspace(system);
    MatRows rows;
    for (const auto &combo : combos) {
      SuperMatrix acc(sig_);
      for (std::size_t k = 0; k < d; ++k)
        if (!combo[k].is_zero()) acc = acc + combo[k] * basis[k];
      rows.push_back(acc.flatten());
    }
    return Subspace::span(static_cast<std::size_t>(sig_.size()) * sig_.size(), rows);
  }

  SuperSignature sig_;
  Kind kind_;
  std::string label_;
  std::vector<SuperMatrix> images_;
  std::optional<SuperAlgebraView> carrier_;
};

}  // namespace supergrade
