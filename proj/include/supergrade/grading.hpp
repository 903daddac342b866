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
 * G-gradings on matrix (super)algebras and the dual-group action.
 *
 * A grading R = (+)_{g in G} R_g is stored as a parity-agnostic homogeneous
 * basis with degrees; construction verifies the basis is an honest basis of
 * the full matrix space, so the components are independent and exhaustive by
 * construction.  Multiplicativity (R_g R_h inside R_{gh}) is an explicit
 * check, not a constructor assumption.
 *
 * Builders:
 *   elementary_grading  - deg E_ij = theta_i^{-1} theta_j for a tuple theta.
 *   pauli_fine_grading  - tensor powers of the quadruple I, diag(1,-1),
 *                         [[0,1],[1,0]], [[0,1],[-1,0]] graded by images of
 *                         (Z2 x Z2)^k in G; every component has dimension 1.
 *   tensor_grading      - C (x) D with deg(x (x) y) = deg(x) deg(y), both
 *                         factors graded by the same group.
 *
 * The dual group acts by chi * a = sum_g chi(g) a_g; a subspace is graded
 * exactly when it is invariant under this action, and the library carries
 * two independent deciders (component splitting vs. dual invariance) so the
 * duality itself stays machine-checked.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supergrade/abelian_group.hpp"
#include "supergrade/exact_linalg.hpp"
#include "supergrade/supermatrix.hpp"

namespace supergrade {

class Grading {
 public:
  using BasisEntry = std::pair<SuperMatrix, GroupElement>;

  Grading(FiniteAbelianGroup group, SuperSignature sig, std::vector<BasisEntry> basis,
          std::string label = "")
      : group_(std::move(group)),
        sig_(sig),
        label_(std::move(label)),
        basis_(std::move(basis)),
        empty_(static_cast<std::size_t>(sig.size()) * sig.size()) {
    const std::size_t d = flat_dim();
    if (basis_.size() != d)
      throw std::invalid_argument("grading: homogeneous basis must have (n+m)^2 members");
    std::map<GroupElement, MatRows> rows_by_degree;
    MatRows all_rows;
    for (auto &[mat, deg] : basis_) {
      if (!(mat.signature() == sig_)) throw std::invalid_argument("grading: signature mismatch");
      if (!group_.contains(deg))
        throw std::invalid_argument("grading: degree is not a normalized group element");
      if (mat.is_zero()) throw std::invalid_argument("grading: zero basis matrix");
      rows_by_degree[deg].push_back(mat.flatten());
      all_rows.push_back(mat.flatten());
    }
    if (rank_of(all_rows) != d)
      throw std::invalid_argument("grading: homogeneous basis is linearly dependent");
    for (auto &[deg, rows] : rows_by_degree) {
      comp_.emplace(deg, Subspace::span(d, rows));
      support_.push_back(deg);
    }
    std::sort(support_.begin(), support_.end());

    // Coordinate strategy: a monomial basis (each matrix a scalar multiple of
    // a single matrix unit) admits direct lookup; otherwise invert the basis
    // matrix once.
    monomial_ = true;
    owner_of_pos_.assign(d, 0);
    scale_of_pos_.assign(d, CycScalar(1));
    std::vector<bool> owned(d, false);
    for (std::size_t r = 0; r < basis_.size() && monomial_; ++r) {
      const Vec &flat = basis_[r].first.flatten();
      std::size_t hits = 0, pos = 0;
      for (std::size_t p = 0; p < d; ++p)
        if (!flat[p].is_zero()) {
          ++hits;
          pos = p;
        }
      if (hits != 1 || owned[pos]) {
        monomial_ = false;
        break;
      }
      owned[pos] = true;
      owner_of_pos_[pos] = r;
      scale_of_pos_[pos] = flat[pos];
    }
    if (!monomial_) {
      MatRows cols(d, Vec(d, CycScalar(0)));  // row r, column c = basis c entry r
      for (std::size_t c = 0; c < d; ++c) {
        const Vec &flat = basis_[c].first.flatten();
        for (std::size_t r = 0; r < d; ++r) cols[r][c] = flat[r];
      }
      auto inv = invert(cols);
      if (!inv) throw std::logic_error("grading: full-rank basis failed to invert");
      binv_ = std::move(*inv);
    }
  }

  const FiniteAbelianGroup &group() const { return group_; }
  const SuperSignature &signature() const { return sig_; }
  const std::string &label() const { return label_; }
  long matrix_size() const { return sig_.size(); }
  std::size_t flat_dim() const { return static_cast<std::size_t>(sig_.size()) * sig_.size(); }
  const std::vector<BasisEntry> &homogeneous_basis() const { return basis_; }
  const std::vector<GroupElement> &support() const { return support_; }

  const Subspace &component(const GroupElement &g) const {
    auto it = comp_.find(group_.make(g));
    return it == comp_.end() ? empty_ : it->second;
  }
  long component_dim(const GroupElement &g) const {
    return static_cast<long>(component(g).dim());
  }
  const Subspace &identity_component() const { return component(group_.identity()); }

  /** Coordinates of x against the homogeneous basis (exact, always solvable). */
  Vec coordinates(const SuperMatrix &x) const {
    if (!(x.signature() == sig_)) throw std::invalid_argument("coordinates: signature mismatch");
    const Vec &flat = x.flatten();
    Vec c(basis_.size(), CycScalar(0));
    if (monomial_) {
      for (std::size_t p = 0; p < flat.size(); ++p)
        if (!flat[p].is_zero()) c[owner_of_pos_[p]] = flat[p] / scale_of_pos_[p];
      return c;
    }
    for (std::size_t r = 0; r < binv_.size(); ++r)
      for (std::size_t k = 0; k < flat.size(); ++k) {
        if (binv_[r][k].is_zero() || flat[k].is_zero()) continue;
        c[r] = c[r] + binv_[r][k] * flat[k];
      }
    return c;
  }

  /** Projection onto R_g by basis-coefficient extraction. */
  SuperMatrix homogeneous_projection(const SuperMatrix &x, const GroupElement &g) const {
    const GroupElement gg = group_.make(g);
    Vec c = coordinates(x);
    SuperMatrix acc(sig_);
    for (std::size_t r = 0; r < basis_.size(); ++r)
      if (basis_[r].second == gg && !c[r].is_zero()) acc = acc + c[r] * basis_[r].first;
    return acc;
  }

  /** chi * a = sum_g chi(g) a_g, the dual-group action by automorphisms. */
  SuperMatrix dual_action(const Character &chi, const SuperMatrix &x) const {
    Vec c = coordinates(x);
    SuperMatrix acc(sig_);
    std::map<GroupElement, CycScalar> cache;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (c[r].is_zero()) continue;
      auto it = cache.find(basis_[r].second);
      if (it == cache.end())
        it = cache.emplace(basis_[r].second, group_.char_eval(chi, basis_[r].second)).first;
      acc = acc + (it->second * c[r]) * basis_[r].first;
    }
    return acc;
  }

  /**
   * Projection onto R_g by character averaging, |G|^{-1} sum_chi
   * chi(g)^{-1} (chi * a): the inverse of the dual action.  Kept separate
   * from the basis route so their agreement re-proves the orthogonality
   * behind the duality on every instance it is asked about.
   */
  SuperMatrix homogeneous_projection_by_characters(const SuperMatrix &x,
                                                   const GroupElement &g) const {
    const GroupElement ginv = group_.inverse(group_.make(g));
    SuperMatrix acc(sig_);
    for (const Character &chi : group_.characters()) {
      SuperMatrix term = dual_action(chi, x);
      CycScalar w = group_.char_eval(chi, ginv);
      acc = acc + w * term;
    }
    return CycScalar(make_rational(1, group_.order())) * acc;
  }

  /** Degrees with nonzero projection, sorted; {} exactly for the zero matrix. */
  std::vector<GroupElement> degrees_of(const SuperMatrix &x) const {
    Vec c = coordinates(x);
    std::vector<GroupElement> out;
    for (std::size_t r = 0; r < basis_.size(); ++r)
      if (!c[r].is_zero()) out.push_back(basis_[r].second);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /** The degree of a nonzero homogeneous matrix; nullopt if mixed or zero. */
  std::optional<GroupElement> degree_of(const SuperMatrix &x) const {
    auto degs = degrees_of(x);
    if (degs.size() != 1) return std::nullopt;
    return degs[0];
  }

  /** V graded iff V = sum_g (V cap R_g): project every basis vector. */
  bool is_graded_subspace_by_split(const Subspace &v) const {
    if (v.ambient_dim() != flat_dim()) throw std::invalid_argument("subspace: wrong ambient");
    for (const Vec &row : v.basis()) {
      SuperMatrix x = SuperMatrix::from_flat(sig_, row);
      for (const GroupElement &g : support_) {
        SuperMatrix part = homogeneous_projection(x, g);
        if (!part.is_zero() && !v.contains(part.flatten())) return false;
      }
    }
    return true;
  }

  /** V graded iff chi * V = V for every character of G. */
  bool is_graded_subspace_by_invariance(const Subspace &v) const {
    if (v.ambient_dim() != flat_dim()) throw std::invalid_argument("subspace: wrong ambient");
    for (const Vec &row : v.basis()) {
      SuperMatrix x = SuperMatrix::from_flat(sig_, row);
      for (const Character &chi : group_.characters())
        if (!v.contains(dual_action(chi, x).flatten())) return false;
    }
    return true;
  }

  bool is_graded_subspace(const Subspace &v) const { return is_graded_subspace_by_split(v); }

  /** Fine iff every nonzero component has dimension exactly 1. */
  bool is_fine() const {
    for (const auto &[g, c] : comp_)
      if (c.dim() != 1) return false;
    return true;
  }

  /** R_g R_h inside R_{gh}, checked on basis pairs. */
  bool is_multiplicative() const {
    for (const auto &[a, ga] : basis_)
      for (const auto &[b, gb] : basis_) {
        SuperMatrix ab = a * b;
        if (ab.is_zero()) continue;
        if (!component(group_.mul(ga, gb)).contains(ab.flatten())) return false;
      }
    return true;
  }

  /** Each component splits against the standard even/odd block structure. */
  bool is_super_compatible() const {
    for (const auto &[mat, deg] : basis_) {
      SuperMatrix even = mat.even_part();
      if (even.is_zero() || (mat - even).is_zero()) continue;
      if (!component(deg).contains(even.flatten())) return false;
    }
    return true;
  }

  /** Split against an arbitrary involutive parity matrix S instead. */
  bool is_super_compatible(const SuperMatrix &parity_involution) const {
    for (const auto &[mat, deg] : basis_) {
      SuperMatrix even = even_part_wrt(mat, parity_involution);
      if (even.is_zero() || (mat - even).is_zero()) continue;
      if (!component(deg).contains(even.flatten())) return false;
    }
    return true;
  }

  bool support_generates() const {
    return Subgroup::generated_by(group_, support_).order() == group_.order();
  }

 private:
  FiniteAbelianGroup group_;
  SuperSignature sig_;
  std::string label_;
  std::vector<BasisEntry> basis_;
  std::map<GroupElement, Subspace> comp_;
  std::vector<GroupElement> support_;
  Subspace empty_;
  bool monomial_ = false;
  std::vector<std::size_t> owner_of_pos_;
  Vec scale_of_pos_;
  MatRows binv_;
};

/** deg E_ij = theta_i^{-1} theta_j over the standard signature layout. */
inline Grading elementary_grading(const FiniteAbelianGroup &G,
                                  const std::vector<GroupElement> &theta, SuperSignature sig,
                                  std::string label = "") {
  if (static_cast<long>(theta.size()) != sig.size())
    throw std::invalid_argument("elementary_grading: theta length must be n+m");
  std::vector<GroupElement> t;
  for (const auto &g : theta) t.push_back(G.make(g));
  std::vector<Grading::BasisEntry> basis;
  for (long i = 0; i < sig.size(); ++i)
    for (long j = 0; j < sig.size(); ++j)
      basis.emplace_back(SuperMatrix::unit(sig, i, j), G.mul(G.inverse(t[i]), t[j]));
  if (label.empty()) {
    label = "elementary" + sig.to_string() + " theta=";
    for (std::size_t i = 0; i < t.size(); ++i)
      label += (i ? "," : "") + element_to_string(t[i]);
  }
  return Grading(G, sig, std::move(basis), std::move(label));
}

inline Grading trivial_grading(const FiniteAbelianGroup &G, SuperSignature sig) {
  return elementary_grading(G, std::vector<GroupElement>(sig.size(), G.identity()), sig,
                            "trivial" + sig.to_string());
}

namespace detail {

/** The degree-(a,b) Pauli generator: diag(1,-1)^a [[0,1],[1,0]]^b. */
inline SuperMatrix pauli_generator(int a, int b) {
  SuperSignature s{2, 0};
  SuperMatrix z(s), x(s);
  z.set(0, 0, CycScalar(1));
  z.set(1, 1, CycScalar(-1));
  x.set(0, 1, CycScalar(1));
  x.set(1, 0, CycScalar(1));
  SuperMatrix r = SuperMatrix::identity(s);
  if (a) r = r * z;
  if (b) r = r * x;
  return r;
}

}  // namespace detail

/**
 * The Pauli fine grading on the 2^k x 2^k matrices: components are spanned
 * by tensor words over the degree quadruple, with degrees pushed into G by
 * the images of the 2k generators of (Z2 x Z2)^k.  The signature may view
 * the ambient as purely even (tensor-factor use) or as the split
 * superalgebra M_{2^{k-1}, 2^{k-1}}.
 */
inline Grading pauli_fine_grading(long k, const std::vector<GroupElement> &generator_images,
                                  const FiniteAbelianGroup &G, SuperSignature sig) {
  if (k < 0) throw std::invalid_argument("pauli_fine_grading: k must be nonnegative");
  const long size = 1L << k;
  if (sig.size() != size || (sig.m != 0 && sig.n != sig.m))
    throw std::invalid_argument("pauli_fine_grading: signature must be (2^k,0) or split evenly");
  if (generator_images.size() != static_cast<std::size_t>(2 * k))
    throw std::invalid_argument("pauli_fine_grading: need images for 2k generators");
  for (const auto &img : generator_images)
    if (!(G.mul(G.make(img), G.make(img)) == G.identity()))
      throw std::invalid_argument("pauli_fine_grading: generator image must have order <= 2");

  // All 4^k degree words; injectivity of the induced homomorphism is what
  // makes the grading a grading by its own support.
  std::vector<Grading::BasisEntry> basis;
  std::set<GroupElement> images_seen;
  std::vector<int> word(2 * k, 0);
  while (true) {
    GroupElement deg = G.identity();
    for (long i = 0; i < 2 * k; ++i)
      if (word[i]) deg = G.mul(deg, G.make(generator_images[i]));
    if (!images_seen.insert(deg).second)
      throw std::invalid_argument("pauli_fine_grading: embedding is not injective");
    // Tensor word with factor 0 major, so the first factor selects the
    // coarse half-blocks and alone decides parity in the split view.
    MatRows acc{{CycScalar(1)}};
    for (long f = 0; f < k; ++f) {
      SuperMatrix w = detail::pauli_generator(word[2 * f], word[2 * f + 1]);
      MatRows next(acc.size() * 2, Vec(acc[0].size() * 2, CycScalar(0)));
      for (std::size_t i = 0; i < acc.size(); ++i)
        for (std::size_t j = 0; j < acc[0].size(); ++j) {
          if (acc[i][j].is_zero()) continue;
          for (long p = 0; p < 2; ++p)
            for (long q = 0; q < 2; ++q) {
              if (w.at(p, q).is_zero()) continue;
              next[i * 2 + p][j * 2 + q] = acc[i][j] * w.at(p, q);
            }
        }
      acc = std::move(next);
    }
    basis.emplace_back(SuperMatrix::from_rows(sig, acc), deg);
    long i = 2 * k;
    while (i > 0) {
      --i;
      if (++word[i] < 2) break;
      word[i] = 0;
      if (i == 0) {
        return Grading(G, sig, std::move(basis), "pauli k=" + std::to_string(k));
      }
    }
    if (k == 0) return Grading(G, sig, std::move(basis), "pauli k=0");
  }
}

/** Convenience form: G = (Z2)^{2k}, standard generators, split signature. */
inline Grading pauli_fine_grading(long k) {
  FiniteAbelianGroup G(std::vector<long>(2 * k, 2));
  std::vector<GroupElement> gens;
  for (long i = 0; i < 2 * k; ++i) {
    GroupElement e(2 * k, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  SuperSignature sig = k == 0 ? SuperSignature{1, 0} : SuperSignature{1L << (k - 1), 1L << (k - 1)};
  return pauli_fine_grading(k, gens, G, sig);
}

/**
 * C (x) D graded by the common group, deg(x (x) y) = deg(x) deg(y).  One
 * factor must be purely even; components multiply out of the factor bases.
 */
inline Grading tensor_grading(const Grading &elem, const Grading &fine) {
  if (!(elem.group() == fine.group()))
    throw std::invalid_argument("tensor_grading: factors must be graded by the same group");
  const FiniteAbelianGroup &G = elem.group();
  TensorSpace t(elem.signature(), fine.signature());
  std::vector<Grading::BasisEntry> basis;
  for (const auto &[c, gc] : elem.homogeneous_basis())
    for (const auto &[d, gd] : fine.homogeneous_basis())
      basis.emplace_back(t.embed(c, d), G.mul(gc, gd));
  return Grading(G, t.signature(), std::move(basis),
                 "tensor{" + elem.label() + "}{" + fine.label() + "}");
}

/**
 * A parity-respecting position permutation carrying theta1 to theta2, if one
 * exists: pi with theta2[pi[i]] = theta1[i] and matching slot parities.  This
 * is exact multiset matching; degree-shift equivalence is the caller's job.
 */
inline std::optional<std::vector<std::size_t>> graded_isomorphic_elementary(
    const FiniteAbelianGroup &G, const std::vector<GroupElement> &theta1,
    const std::vector<GroupElement> &theta2, SuperSignature sig) {
  if (theta1.size() != theta2.size() ||
      static_cast<long>(theta1.size()) != sig.size())
    return std::nullopt;
  std::map<std::pair<int, GroupElement>, std::vector<std::size_t>> slots;
  for (std::size_t i = 0; i < theta2.size(); ++i)
    slots[{sig.parity(static_cast<long>(i)), G.make(theta2[i])}].push_back(i);
  std::vector<std::size_t> pi(theta1.size());
  for (std::size_t i = 0; i < theta1.size(); ++i) {
    auto key = std::make_pair(sig.parity(static_cast<long>(i)), G.make(theta1[i]));
    auto it = slots.find(key);
    if (it == slots.end() || it->second.empty()) return std::nullopt;
    pi[i] = it->second.back();
    it->second.pop_back();
  }
  return pi;
}

}  // namespace supergrade
