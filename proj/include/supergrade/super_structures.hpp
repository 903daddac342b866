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
 * Graded Jordan and Lie superalgebras cut out of a matrix superalgebra by a
 * graded superinvolution: the structure half of the claim catalog.
 *
 * The carriers are the symmetric space H (fixed points) and the skew space K
 * (the -1 eigenspace).  H is a Jordan superalgebra under the supersymmetrized
 * product, K is a Lie superalgebra under the supercommutator; both inherit
 * the grading componentwise exactly when the superinvolution is graded.
 *
 * The product rules themselves (jordan_superproduct, supercommutator) live
 * with SuperMatrix; both extend bilinearly through the parity split, so
 * closure may be checked on any spanning set of the carrier.
 *
 * Contents:
 *   induced_grading           - components carrier /\ R_g plus the totality
 *                               verdict (sum of dims == dim of carrier).
 *   lemma71_check             - H and K are graded subspaces iff the
 *                               superinvolution is graded; both directions
 *                               recorded as separate checks.
 *   build_osp_jordan          - carrier H on M(n,2m), jordan product
 *                               ("osp(n,2m)" names the literal signature).
 *   build_p_jordan            - carrier H on M(n,n) under the flip
 *                               transpose family, jordan product.
 *   build_b_lie               - carrier K on M(2n+1,2m), supercommutator,
 *                               with the K = span[H,H] cross-check.
 *   decomposition_check       - the tensor identities behind Thm7.2 (kind
 *                               osp-jordan), Thm7.3 (p-jordan) and Thm7.4
 *                               (b-lie): with a purely even fine factor R
 *                               and an elementary superfactor T, the product
 *                               involution on T (x) R satisfies
 *                                 H = H(T)(x)H(R) + K(T)(x)K(R)
 *                                 K = K(T)(x)H(R) + H(T)(x)K(R)
 *                               verified as exact subspaces, with per-degree
 *                               dimension bookkeeping.
 *   transpose_involution      - the plain transpose packaged as the
 *                               involution of choice on purely even factors.
 *
 * Simplicity of the resulting superalgebras is imported from the cited
 * literature, never verified here; structures carry that label in `note`.
 */

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supergrade/abelian_group.hpp"
#include "supergrade/checks.hpp"
#include "supergrade/classify.hpp"
#include "supergrade/cyclotomic.hpp"
#include "supergrade/exact_linalg.hpp"
#include "supergrade/grading.hpp"
#include "supergrade/superinvolution.hpp"
#include "supergrade/supermatrix.hpp"

namespace supergrade {

// ---------------------------------------------------------------------------
// Induced gradings and the Lemma7.1 equivalence.
// ---------------------------------------------------------------------------

struct InducedGrading {
  std::vector<std::pair<GroupElement, Subspace>> components;
  long carrier_dim = 0;
  long component_dim_sum = 0;
  /** Sum of component dims exhausts the carrier iff the carrier is graded. */
  bool total() const { return carrier_dim == component_dim_sum; }
};

/** Components carrier /\ R_g over the support of the grading. */
inline InducedGrading induced_grading(const Grading &grading, const Subspace &carrier) {
  if (carrier.ambient_dim() != grading.flat_dim())
    throw std::invalid_argument("induced_grading: carrier lives in the wrong ambient space");
  InducedGrading out;
  out.carrier_dim = static_cast<long>(carrier.dim());
  for (const auto &g : grading.support()) {
    Subspace comp = intersect(carrier, grading.component(g));
    out.component_dim_sum += static_cast<long>(comp.dim());
    out.components.emplace_back(g, std::move(comp));
  }
  return out;
}

struct Lemma71Report {
  CheckList checks;
  bool involution_graded = false;
  bool h_total = false;
  bool k_total = false;
  bool ok() const { return checks.all_ok(); }
};

/**
 * H and K are graded subspaces iff the superinvolution is graded.  Both
 * directions are separate checks so a failure names the broken implication.
 */
inline Lemma71Report lemma71_check(const Grading &grading, const Superinvolution &inv) {
  if (!(grading.signature() == inv.signature()))
    throw std::invalid_argument("lemma71_check: involution and grading signatures differ");
  const auto axioms = inv.check_axioms();
  if (!axioms.ok)
    throw std::invalid_argument("lemma71_check: not a superinvolution: " + axioms.witness);

  Lemma71Report rep;
  rep.involution_graded = is_graded_superinvolution(grading, inv);
  const Subspace H = inv.H_space();
  const Subspace K = inv.K_space();
  rep.h_total = induced_grading(grading, H).total();
  rep.k_total = induced_grading(grading, K).total();
  rep.checks.add("h_plus_k_is_ambient",
                 H.dim() + K.dim() == grading.flat_dim() && intersect(H, K).dim() == 0);
  rep.checks.add("graded_involution_implies_graded_carriers",
                 !rep.involution_graded || (rep.h_total && rep.k_total));
  rep.checks.add("graded_carriers_imply_graded_involution",
                 !(rep.h_total && rep.k_total) || rep.involution_graded);
  return rep;
}

// ---------------------------------------------------------------------------
// Structures.
// ---------------------------------------------------------------------------

enum class StructureKind { OspJordan, PJordan, BLie };

inline const char *structure_kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::OspJordan:
      return "osp-jordan";
    case StructureKind::PJordan:
      return "p-jordan";
    case StructureKind::BLie:
      return "b-lie";
  }
  return "?";
}

struct GradedSuperStructure {
  StructureKind kind;
  Grading grading;
  Superinvolution involution;
  Subspace carrier;
  std::string product_rule;
  std::vector<std::pair<GroupElement, Subspace>> components;
  CheckList report;
  std::string note;
  bool ok() const { return report.all_ok(); }
};

inline InducedGrading induced_grading(const GradedSuperStructure &s) {
  return induced_grading(s.grading, s.carrier);
}

namespace detail {

inline GradedSuperStructure build_structure(StructureKind kind, const Grading &grading,
                                            const Superinvolution &inv, bool carrier_is_h) {
  if (!(grading.signature() == inv.signature()))
    throw std::invalid_argument("structure: involution and grading signatures differ");
  const auto axioms = inv.check_axioms();
  if (!axioms.ok)
    throw std::invalid_argument("structure: not a superinvolution: " + axioms.witness);
  if (!is_graded_superinvolution(grading, inv))
    throw std::invalid_argument("structure: involution is not graded for this grading");

  const Subspace H = inv.H_space();
  const Subspace K = inv.K_space();
  const SuperSignature sig = grading.signature();
  GradedSuperStructure s{kind,
                         grading,
                         inv,
                         carrier_is_h ? H : K,
                         kind == StructureKind::BLie ? "supercommutator" : "jordan-superproduct",
                         {},
                         {},
                         "simple per cited literature; simplicity is imported, not verified"};

  std::vector<SuperMatrix> mats;
  mats.reserve(s.carrier.dim());
  for (const auto &r : s.carrier.basis()) mats.push_back(SuperMatrix::from_flat(sig, r));
  bool closed = true;
  std::string witness;
  for (std::size_t i = 0; i < mats.size() && closed; ++i)
    for (std::size_t j = 0; j < mats.size() && closed; ++j) {
      const SuperMatrix p = kind == StructureKind::BLie ? supercommutator(mats[i], mats[j])
                                                        : jordan_superproduct(mats[i], mats[j]);
      if (!s.carrier.contains(p.flatten())) {
        closed = false;
        std::ostringstream os;
        os << "product of basis elements " << i << " and " << j << " leaves the carrier";
        witness = os.str();
      }
    }
  s.report.add("carrier_closed_under_product", closed, witness);

  const InducedGrading ind = induced_grading(grading, s.carrier);
  s.components = ind.components;
  s.report.add("induced_components_total", ind.total());
  s.report.add("h_plus_k_is_ambient",
               H.dim() + K.dim() == grading.flat_dim() && intersect(H, K).dim() == 0);

  if (kind == StructureKind::BLie) {
    std::vector<SuperMatrix> hmats;
    hmats.reserve(H.dim());
    for (const auto &r : H.basis()) hmats.push_back(SuperMatrix::from_flat(sig, r));
    MatRows brackets;
    for (const auto &a : hmats)
      for (const auto &b : hmats) brackets.push_back(supercommutator(a, b).flatten());
    const Subspace span_hh = Subspace::span(grading.flat_dim(), brackets);
    s.report.add("h_brackets_in_k", K.contains(span_hh));
    s.report.add("k_equals_span_of_h_brackets", span_hh == K);
  } else {
    s.report.add("identity_element_symmetric",
                 s.carrier.contains(SuperMatrix::identity(sig).flatten()));
  }
  return s;
}

}  // namespace detail

/** Jordan superalgebra H on M(n,2m); the arguments are the literal signature. */
inline GradedSuperStructure build_osp_jordan(long n, long m, const Superinvolution &inv,
                                             const Grading &grading) {
  if (n < 1 || m < 0 || m % 2 != 0)
    throw std::invalid_argument("build_osp_jordan: signature must be (n, 2m) with n >= 1");
  if (!(grading.signature() == SuperSignature{n, m}))
    throw std::invalid_argument("build_osp_jordan: grading signature mismatch");
  return detail::build_structure(StructureKind::OspJordan, grading, inv, true);
}

/** Jordan superalgebra H on M(n,n) under the flip-transpose family. */
inline GradedSuperStructure build_p_jordan(long n, const Superinvolution &inv,
                                           const Grading &grading) {
  if (n < 1) throw std::invalid_argument("build_p_jordan: n must be positive");
  if (!(grading.signature() == SuperSignature{n, n}))
    throw std::invalid_argument("build_p_jordan: grading signature mismatch");
  return detail::build_structure(StructureKind::PJordan, grading, inv, true);
}

/** Lie superalgebra K on M(2n+1,2m); b-lie(n,m) names the signature (2n+1,2m). */
inline GradedSuperStructure build_b_lie(long n, long m, const Superinvolution &inv,
                                        const Grading &grading) {
  if (n < 0 || m < 1)
    throw std::invalid_argument("build_b_lie: needs n >= 0 and m >= 1");
  if (!(grading.signature() == SuperSignature{2 * n + 1, 2 * m}))
    throw std::invalid_argument("build_b_lie: grading signature mismatch");
  return detail::build_structure(StructureKind::BLie, grading, inv, false);
}

// ---------------------------------------------------------------------------
// Tensor decomposition identities.
// ---------------------------------------------------------------------------

/** The plain transpose as an involution on a purely even signature. */
inline Superinvolution transpose_involution(SuperSignature sig) {
  if (sig.m != 0)
    throw std::invalid_argument("transpose_involution: defined on purely even signatures");
  const long N = sig.size();
  std::vector<SuperMatrix> images(static_cast<std::size_t>(N) * N, SuperMatrix(sig));
  for (long u = 0; u < N; ++u)
    for (long v = 0; v < N; ++v)
      images[static_cast<std::size_t>(u) * N + v] = SuperMatrix::unit(sig, v, u);
  return Superinvolution::from_unit_images(sig, std::move(images), "transpose");
}

struct TensorFactor {
  Grading grading;
  Superinvolution involution;
};

struct DecompositionDegreeRow {
  GroupElement degree;
  long h_dim = 0;
  long h_formula = 0;
  long k_dim = 0;
  long k_formula = 0;
};

struct DecompositionReport {
  StructureKind kind;
  std::string claim;
  CheckList checks;
  long tensor_matrix_size = 0;
  std::vector<DecompositionDegreeRow> per_degree;
  std::string note;
  bool ok() const { return checks.all_ok(); }
};

/**
 * Verifies, as exact subspaces of the tensor algebra, the H and K identities
 * for the product of two graded (super)involutions:
 *
 *   H(T (x) R) = H(T)(x)H(R) + K(T)(x)K(R)
 *   K(T (x) R) = K(T)(x)H(R) + H(T)(x)K(R)
 *
 * `fine` is the purely even factor R (transpose on a fine grading in the
 * catalog's instances), `elem` the superfactor T.  The tensor is carried with
 * T as the first kron factor; with one factor purely even the two orders are
 * canonically interchangeable.  The kind picks the claim label: the carrier
 * of osp-jordan and p-jordan structures is the H side, of b-lie the K side.
 */
inline DecompositionReport decomposition_check(StructureKind kind, const TensorFactor &fine,
                                               const TensorFactor &elem) {
  if (fine.grading.group().invariant_factors() != elem.grading.group().invariant_factors())
    throw std::invalid_argument("decomposition_check: factors must be graded by the same group");
  if (fine.grading.signature().m != 0)
    throw std::invalid_argument("decomposition_check: the fine factor must be purely even");
  if (!(fine.grading.signature() == fine.involution.signature()) ||
      !(elem.grading.signature() == elem.involution.signature()))
    throw std::invalid_argument("decomposition_check: involution signature mismatch");
  for (const TensorFactor *f : {&fine, &elem}) {
    const auto axioms = f->involution.check_axioms();
    if (!axioms.ok)
      throw std::invalid_argument("decomposition_check: factor is not a superinvolution: " +
                                  axioms.witness);
    if (!is_graded_superinvolution(f->grading, f->involution))
      throw std::invalid_argument("decomposition_check: factor involution is not graded");
  }

  const SuperSignature es = elem.grading.signature();
  const SuperSignature fs = fine.grading.signature();
  const long ne = es.size(), nf = fs.size();
  TensorSpace t(es, fs);
  const SuperSignature rs = t.signature();
  const long nr = rs.size();
  const Grading R = tensor_grading(elem.grading, fine.grading);

  DecompositionReport rep;
  rep.kind = kind;
  rep.claim = kind == StructureKind::OspJordan ? "Thm7.2"
              : kind == StructureKind::PJordan ? "Thm7.3"
                                               : "Thm7.4";
  rep.tensor_matrix_size = nr;
  rep.note = std::string("carrier side for this kind is ") +
             (kind == StructureKind::BLie ? "K" : "H");

  std::vector<SuperMatrix> f_images;
  f_images.reserve(static_cast<std::size_t>(nf) * nf);
  for (long uf = 0; uf < nf; ++uf)
    for (long vf = 0; vf < nf; ++vf)
      f_images.push_back(fine.involution.apply(SuperMatrix::unit(fs, uf, vf)));

  std::vector<SuperMatrix> images(static_cast<std::size_t>(nr) * nr, SuperMatrix(rs));
  for (long ue = 0; ue < ne; ++ue)
    for (long ve = 0; ve < ne; ++ve) {
      const SuperMatrix e_img = elem.involution.apply(SuperMatrix::unit(es, ue, ve));
      for (long uf = 0; uf < nf; ++uf)
        for (long vf = 0; vf < nf; ++vf) {
          const long P = t.position(ue, uf);
          const long Q = t.position(ve, vf);
          images[static_cast<std::size_t>(P) * nr + Q] =
              t.embed(e_img, f_images[static_cast<std::size_t>(uf) * nf + vf]);
        }
    }
  const Superinvolution star =
      Superinvolution::from_unit_images(rs, std::move(images), "product involution");

  const auto axioms = star.check_axioms();
  rep.checks.add("product_is_superinvolution", axioms.ok, axioms.witness);
  rep.checks.add("product_involution_graded", is_graded_superinvolution(R, star));

  const Subspace HT = elem.involution.H_space(), KT = elem.involution.K_space();
  const Subspace HR = fine.involution.H_space(), KR = fine.involution.K_space();
  const std::size_t ambient = static_cast<std::size_t>(nr) * nr;
  auto embedded_span = [&](const Subspace &A, const Subspace &B) {
    MatRows rows;
    for (const auto &ra : A.basis())
      for (const auto &rb : B.basis())
        rows.push_back(
            t.embed(SuperMatrix::from_flat(es, ra), SuperMatrix::from_flat(fs, rb)).flatten());
    return Subspace::span(ambient, rows);
  };

  const Subspace lhs_h = star.H_space();
  const Subspace lhs_k = star.K_space();
  const Subspace rhs_h = embedded_span(HT, HR) + embedded_span(KT, KR);
  const Subspace rhs_k = embedded_span(KT, HR) + embedded_span(HT, KR);
  rep.checks.add("h_identity_subspace", lhs_h == rhs_h);
  rep.checks.add("k_identity_subspace", lhs_k == rhs_k);
  rep.checks.add("h_plus_k_is_ambient",
                 lhs_h.dim() + lhs_k.dim() == ambient && intersect(lhs_h, lhs_k).dim() == 0);

  auto component_dims = [](const Grading &gr, const Subspace &V) {
    std::map<GroupElement, long> d;
    for (const auto &g : gr.support())
      d[g] = static_cast<long>(intersect(V, gr.component(g)).dim());
    return d;
  };
  const auto ht = component_dims(elem.grading, HT), kt = component_dims(elem.grading, KT);
  const auto hr = component_dims(fine.grading, HR), kr = component_dims(fine.grading, KR);
  const FiniteAbelianGroup &G = R.group();
  std::map<GroupElement, DecompositionDegreeRow> table;
  for (const auto &g : R.support()) {
    DecompositionDegreeRow row;
    row.degree = g;
    row.h_dim = static_cast<long>(intersect(lhs_h, R.component(g)).dim());
    row.k_dim = static_cast<long>(intersect(lhs_k, R.component(g)).dim());
    table[g] = row;
  }
  for (const auto &[ge, de] : ht)
    for (const auto &[gf, df] : hr) {
      auto it = table.find(G.mul(ge, gf));
      if (it != table.end()) it->second.h_formula += de * df;
    }
  for (const auto &[ge, de] : kt)
    for (const auto &[gf, df] : kr) {
      auto it = table.find(G.mul(ge, gf));
      if (it != table.end()) it->second.h_formula += de * df;
    }
  for (const auto &[ge, de] : kt)
    for (const auto &[gf, df] : hr) {
      auto it = table.find(G.mul(ge, gf));
      if (it != table.end()) it->second.k_formula += de * df;
    }
  for (const auto &[ge, de] : ht)
    for (const auto &[gf, df] : kr) {
      auto it = table.find(G.mul(ge, gf));
      if (it != table.end()) it->second.k_formula += de * df;
    }
  bool h_rows = true, k_rows = true;
  for (auto &[g, row] : table) {
    if (row.h_dim != row.h_formula) h_rows = false;
    if (row.k_dim != row.k_formula) k_rows = false;
    rep.per_degree.push_back(row);
  }
  rep.checks.add("h_per_degree_dims", h_rows);
  rep.checks.add("k_per_degree_dims", k_rows);
  return rep;
}

}  // namespace supergrade
