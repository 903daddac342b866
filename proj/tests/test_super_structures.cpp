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

#include <gtest/gtest.h>

#include <map>
#include <string>
#include <vector>

#include "supergrade/super_structures.hpp"

namespace supergrade {
namespace {

// ---------------------------------------------------------------------------
// Oracles.  The carriers are rebuilt here by (anti)symmetrizing the matrix
// units, never by the library's eigenspace solve, and the expected dimensions
// come from closed-form counts of the block conditions.
// ---------------------------------------------------------------------------

// span{ E_uv + sign phi(E_uv) }: equals H for sign=+1 and K for sign=-1 in
// characteristic zero, via x = (x + phi(x))/2 + (x - phi(x))/2.
Subspace oracle_eigenspan(const Superinvolution &inv, int sign) {
  const SuperSignature sig = inv.signature();
  MatRows rows;
  for (long u = 0; u < sig.size(); ++u)
    for (long v = 0; v < sig.size(); ++v) {
      const SuperMatrix e = SuperMatrix::unit(sig, u, v);
      const SuperMatrix img = inv.apply(e);
      rows.push_back((sign > 0 ? e + img : e - img).flatten());
    }
  return Subspace::span(static_cast<std::size_t>(sig.size()) * sig.size(), rows);
}

// dim H(M(n,m), osp-type) for even m: symmetric n-block n(n+1)/2, plus the
// symplectic-symmetric m-block (m/2)(m-1), plus one free off-diagonal block.
long oracle_osp_h_dim(long n, long m) { return n * (n + 1) / 2 + (m / 2) * (m - 1) + n * m; }

// dim H(M(n,n), flip-transpose) = n^2 (A free) + n(n-1)/2 (B skew) + n(n+1)/2
// (C symmetric) = 2 n^2; K has the complementary 2 n^2.
long oracle_trp_h_dim(long n) { return 2 * n * n; }

// Coordinate spans of the even / odd entry positions.
Subspace parity_positions(const SuperSignature &sig, int parity) {
  MatRows rows;
  for (long u = 0; u < sig.size(); ++u)
    for (long v = 0; v < sig.size(); ++v)
      if ((sig.parity(u) + sig.parity(v)) % 2 == parity)
        rows.push_back(SuperMatrix::unit(sig, u, v).flatten());
  return Subspace::span(static_cast<std::size_t>(sig.size()) * sig.size(), rows);
}

std::map<GroupElement, long> component_dims(const GradedSuperStructure &s) {
  std::map<GroupElement, long> dims;
  for (const auto &[g, comp] : s.components) dims[g] = static_cast<long>(comp.dim());
  return dims;
}

// ---------------------------------------------------------------------------
// osp-jordan structures.
// ---------------------------------------------------------------------------

TEST(OspJordan, TrivialGradingSig12) {
  FiniteAbelianGroup G({2});
  const SuperSignature sig{1, 2};
  const Superinvolution inv = Superinvolution::osp(sig);
  const Subspace oracle_h = oracle_eigenspan(inv, +1);
  ASSERT_EQ(oracle_h.dim(), 4u);
  ASSERT_EQ(oracle_osp_h_dim(1, 2), 4);

  const GradedSuperStructure s = build_osp_jordan(1, 2, inv, trivial_grading(G, sig));
  EXPECT_TRUE(s.ok()) << s.report.summary();
  EXPECT_EQ(s.kind, StructureKind::OspJordan);
  EXPECT_STREQ(structure_kind_name(s.kind), "osp-jordan");
  EXPECT_EQ(s.product_rule, "jordan-superproduct");
  EXPECT_TRUE(s.carrier == oracle_h);

  // Trivial grading: one component, equal to the whole carrier, holding I.
  ASSERT_EQ(s.components.size(), 1u);
  EXPECT_EQ(s.components[0].first, G.identity());
  EXPECT_TRUE(s.components[0].second == s.carrier);
  EXPECT_TRUE(s.carrier.contains(SuperMatrix::identity(sig).flatten()));
}

TEST(OspJordan, ClosureOnGradedInstanceSig22) {
  FiniteAbelianGroup G({2});
  const GroupElement e = G.identity(), g = G.make({1});
  const Thm52Instance inst(G, {e, g}, {1, 1}, {1, 1});
  ASSERT_TRUE(thm52_admissible(inst));
  const MaterializedInstance mat = materialize(inst);

  // Oracle first: symmetrizer span, then closure of it under the product.
  const Subspace oracle_h = oracle_eigenspan(mat.involution, +1);
  ASSERT_EQ(oracle_h.dim(), static_cast<std::size_t>(oracle_osp_h_dim(2, 2)));
  std::vector<SuperMatrix> basis;
  for (const auto &row : oracle_h.basis())
    basis.push_back(SuperMatrix::from_flat(mat.grading.signature(), row));
  for (const auto &a : basis)
    for (const auto &b : basis)
      EXPECT_TRUE(oracle_h.contains(jordan_superproduct(a, b).flatten()));

  const GradedSuperStructure s = build_osp_jordan(2, 2, mat.involution, mat.grading);
  EXPECT_TRUE(s.ok()) << s.report.summary();
  EXPECT_TRUE(s.carrier == oracle_h);

  // Hand count for theta (e,g|e,g): each of the two degrees carries half.
  const auto dims = component_dims(s);
  ASSERT_EQ(dims.size(), 2u);
  EXPECT_EQ(dims.at(e), 4);
  EXPECT_EQ(dims.at(g), 4);
  EXPECT_TRUE(s.report.find("identity_element_symmetric")->ok);
}

TEST(OspJordan, Validation) {
  FiniteAbelianGroup G({2});
  const GroupElement e = G.identity(), g = G.make({1});
  const SuperSignature sig{2, 2};
  const Superinvolution osp = Superinvolution::osp(sig);
  EXPECT_THROW(build_osp_jordan(2, 1, osp, trivial_grading(G, {2, 1})), std::invalid_argument);
  EXPECT_THROW(build_osp_jordan(1, 2, osp, trivial_grading(G, {1, 2})), std::invalid_argument);
  // Canonical osp pairs the odd slots, so theta (e,g|e,g) is not graded for
  // it (the graded involution for this tuple twists the even block instead).
  const Grading mismatched = elementary_grading(G, {e, g, e, g}, sig);
  EXPECT_THROW(build_osp_jordan(2, 2, osp, mismatched), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// p-jordan structures.
// ---------------------------------------------------------------------------

TEST(PJordan, N1StructureMatchesHandSpan) {
  FiniteAbelianGroup G({2});
  const SuperSignature sig{1, 1};
  // H(M(1,1), flip transpose) = {[[a,0],[c,a]]}: even part a I, odd part c E10.
  MatRows hand;
  hand.push_back(SuperMatrix::identity(sig).flatten());
  hand.push_back(SuperMatrix::unit(sig, 1, 0).flatten());
  const Subspace oracle_h = Subspace::span(4, hand);
  ASSERT_EQ(oracle_h.dim(), 2u);

  const GradedSuperStructure s =
      build_p_jordan(1, Superinvolution::trp(1), trivial_grading(G, sig));
  EXPECT_TRUE(s.ok()) << s.report.summary();
  EXPECT_EQ(s.product_rule, "jordan-superproduct");
  EXPECT_TRUE(s.carrier == oracle_h);
  EXPECT_EQ(intersect(s.carrier, parity_positions(sig, 0)).dim(), 1u);
  EXPECT_EQ(intersect(s.carrier, parity_positions(sig, 1)).dim(), 1u);
}

TEST(PJordan, N2BlockFormAndClosure) {
  FiniteAbelianGroup G({2});
  const SuperSignature sig{2, 2};
  // [[A, B], [C, A^t]] with B skew and C symmetric, written out by hand.
  MatRows hand;
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j)
      hand.push_back((SuperMatrix::unit(sig, i, j) + SuperMatrix::unit(sig, 2 + j, 2 + i)).flatten());
  hand.push_back((SuperMatrix::unit(sig, 0, 3) - SuperMatrix::unit(sig, 1, 2)).flatten());
  hand.push_back(SuperMatrix::unit(sig, 2, 0).flatten());
  hand.push_back(SuperMatrix::unit(sig, 3, 1).flatten());
  hand.push_back((SuperMatrix::unit(sig, 2, 1) + SuperMatrix::unit(sig, 3, 0)).flatten());
  const Subspace oracle_h = Subspace::span(16, hand);
  ASSERT_EQ(oracle_h.dim(), static_cast<std::size_t>(oracle_trp_h_dim(2)));

  std::vector<SuperMatrix> basis;
  for (const auto &row : oracle_h.basis()) basis.push_back(SuperMatrix::from_flat(sig, row));
  for (const auto &a : basis)
    for (const auto &b : basis)
      EXPECT_TRUE(oracle_h.contains(jordan_superproduct(a, b).flatten()));

  const GradedSuperStructure s =
      build_p_jordan(2, Superinvolution::trp(2), trivial_grading(G, sig));
  EXPECT_TRUE(s.ok()) << s.report.summary();
  EXPECT_TRUE(s.carrier == oracle_h);
}

TEST(PJordan, GradedInstancePerDegree) {
  FiniteAbelianGroup G({2});
  const GroupElement e = G.identity(), g = G.make({1});
  const Thm53Instance inst(G, {e, g}, {1, 1}, {1, 1}, {0, 1});
  ASSERT_TRUE(thm53_admissible(inst));
  const MaterializedInstance mat = materialize(inst);

  const GradedSuperStructure s = build_p_jordan(2, mat.involution, mat.grading);
  EXPECT_TRUE(s.ok()) << s.report.summary();
  EXPECT_EQ(s.carrier.dim(), static_cast<std::size_t>(oracle_trp_h_dim(2)));
  // Hand count for theta (e,g|e,g): A contributes (2,2), B skew (0,1),
  // C symmetric (2,1), so the split is 4 + 4.
  const auto dims = component_dims(s);
  ASSERT_EQ(dims.size(), 2u);
  EXPECT_EQ(dims.at(e), 4);
  EXPECT_EQ(dims.at(g), 4);
}

TEST(PJordan, Validation) {
  FiniteAbelianGroup G2({2, 2});
  EXPECT_THROW(build_p_jordan(0, Superinvolution::trp(1), trivial_grading(G2, {1, 1})),
               std::invalid_argument);
  EXPECT_THROW(build_p_jordan(2, Superinvolution::trp(1), trivial_grading(G2, {2, 2})),
               std::invalid_argument);
  // The flip transpose is not graded for the fine grading on M(1,1).
  std::vector<GroupElement> gens = {G2.make({1, 0}), G2.make({0, 1})};
  const Grading pauli = pauli_fine_grading(1, gens, G2, SuperSignature{1, 1});
  EXPECT_THROW(build_p_jordan(1, Superinvolution::trp(1), pauli), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// b-lie structures.
// ---------------------------------------------------------------------------

TEST(BLie, Sig12StructureAndBracketSpan) {
  FiniteAbelianGroup G({2});
  const SuperSignature sig{1, 2};
  const Superinvolution inv = Superinvolution::osp(sig);
  const Subspace oracle_k = oracle_eigenspan(inv, -1);
  ASSERT_EQ(oracle_k.dim(), static_cast<std::size_t>(9 - oracle_osp_h_dim(1, 2)));

  std::vector<SuperMatrix> kbasis;
  for (const auto &row : oracle_k.basis()) kbasis.push_back(SuperMatrix::from_flat(sig, row));
  for (const auto &a : kbasis)
    for (const auto &b : kbasis)
      EXPECT_TRUE(oracle_k.contains(supercommutator(a, b).flatten()));

  const GradedSuperStructure s = build_b_lie(0, 1, inv, trivial_grading(G, sig));
  EXPECT_TRUE(s.ok()) << s.report.summary();
  EXPECT_EQ(s.product_rule, "supercommutator");
  EXPECT_TRUE(s.carrier == oracle_k);
  EXPECT_FALSE(s.carrier.contains(SuperMatrix::identity(sig).flatten()));
  EXPECT_TRUE(s.report.find("h_brackets_in_k")->ok);
  EXPECT_TRUE(s.report.find("k_equals_span_of_h_brackets")->ok);
}

TEST(BLie, Sig32Dims) {
  FiniteAbelianGroup G({2});
  const SuperSignature sig{3, 2};
  const GradedSuperStructure s =
      build_b_lie(1, 1, Superinvolution::osp(sig), trivial_grading(G, sig));
  EXPECT_TRUE(s.ok()) << s.report.summary();
  EXPECT_EQ(s.carrier.dim(), static_cast<std::size_t>(25 - oracle_osp_h_dim(3, 2)));
  EXPECT_EQ(s.carrier.dim(), 12u);
}

TEST(BLie, Validation) {
  FiniteAbelianGroup G({2});
  EXPECT_THROW(build_b_lie(0, 0, Superinvolution::osp({1, 0}), trivial_grading(G, {1, 0})),
               std::invalid_argument);
  EXPECT_THROW(build_b_lie(1, 1, Superinvolution::osp({1, 2}), trivial_grading(G, {1, 2})),
               std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Induced gradings and the Lemma7.1 equivalence.
// ---------------------------------------------------------------------------

TEST(InducedLemma71, GradedCorpus) {
  FiniteAbelianGroup G({2});
  const GroupElement e = G.identity(), g = G.make({1});
  std::vector<MaterializedInstance> corpus;
  corpus.push_back(materialize(Thm52Instance(G, {e, g}, {1, 1}, {1, 1})));
  corpus.push_back(materialize(Thm53Instance(G, {e, g}, {1, 1}, {1, 1}, {0, 1})));
  corpus.push_back({trivial_grading(G, {1, 2}), Superinvolution::osp({1, 2})});
  for (const auto &inst : corpus) {
    const Lemma71Report rep = lemma71_check(inst.grading, inst.involution);
    EXPECT_TRUE(rep.ok()) << rep.checks.summary();
    EXPECT_TRUE(rep.involution_graded);
    EXPECT_TRUE(rep.h_total);
    EXPECT_TRUE(rep.k_total);
  }
}

TEST(InducedLemma71, NonGradedInvolutionLosesTotality) {
  FiniteAbelianGroup G({2, 2});
  std::vector<GroupElement> gens = {G.make({1, 0}), G.make({0, 1})};
  const Grading pauli = pauli_fine_grading(1, gens, G, SuperSignature{1, 1});
  const Superinvolution trp = Superinvolution::trp(1);

  // The equivalence still holds: not graded, and the carriers are not total.
  const Lemma71Report rep = lemma71_check(pauli, trp);
  EXPECT_TRUE(rep.ok()) << rep.checks.summary();
  EXPECT_FALSE(rep.involution_graded);
  EXPECT_FALSE(rep.h_total && rep.k_total);

  // Dimension deficit, witnessed: H meets only the identity line of the four
  // one-dimensional components.
  const InducedGrading ind = induced_grading(pauli, trp.H_space());
  EXPECT_EQ(ind.carrier_dim, 2);
  EXPECT_EQ(ind.component_dim_sum, 1);
  EXPECT_FALSE(ind.total());
}

TEST(InducedLemma71, Validation) {
  FiniteAbelianGroup G({2});
  const SuperSignature sig{1, 1};
  EXPECT_THROW(lemma71_check(trivial_grading(G, {1, 2}), Superinvolution::trp(1)),
               std::invalid_argument);
  EXPECT_THROW(induced_grading(trivial_grading(G, sig), Subspace::full(9)),
               std::invalid_argument);
  // Twice the transpose squares to four times the identity: not an involution.
  std::vector<SuperMatrix> images;
  for (long u = 0; u < 2; ++u)
    for (long v = 0; v < 2; ++v)
      images.push_back(CycScalar(2) * SuperMatrix::unit(sig, v, u));
  const Superinvolution doubled =
      Superinvolution::from_unit_images(sig, std::move(images), "doubled");
  EXPECT_THROW(lemma71_check(trivial_grading(G, sig), doubled), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Tensor decomposition identities.
// ---------------------------------------------------------------------------

TEST(TransposeInvolution, Basics) {
  FiniteAbelianGroup G({2, 2});
  std::vector<GroupElement> gens = {G.make({1, 0}), G.make({0, 1})};
  const Grading pauli = pauli_fine_grading(1, gens, G, SuperSignature{2, 0});
  const Superinvolution tr = transpose_involution(SuperSignature{2, 0});
  EXPECT_TRUE(tr.check_axioms().ok);
  EXPECT_TRUE(is_graded_superinvolution(pauli, tr));
  EXPECT_EQ(tr.H_space().dim(), 3u);
  EXPECT_EQ(tr.K_space().dim(), 1u);
  EXPECT_THROW(transpose_involution(SuperSignature{1, 1}), std::invalid_argument);
}

TEST(Decomposition, TrivialFineFactorReducesToT) {
  FiniteAbelianGroup G({2});
  const TensorFactor fine{trivial_grading(G, {1, 0}), transpose_involution({1, 0})};
  const TensorFactor elem{trivial_grading(G, {1, 2}), Superinvolution::osp({1, 2})};
  const DecompositionReport rep = decomposition_check(StructureKind::OspJordan, fine, elem);
  EXPECT_TRUE(rep.ok()) << rep.checks.summary();
  EXPECT_EQ(rep.claim, "Thm7.2");
  EXPECT_EQ(rep.tensor_matrix_size, 3);
  // K of the scalar factor is zero, so H of the tensor is H(T) itself.
  ASSERT_EQ(rep.per_degree.size(), 1u);
  EXPECT_EQ(rep.per_degree[0].h_dim, oracle_osp_h_dim(1, 2));
  EXPECT_EQ(rep.per_degree[0].k_dim, 9 - oracle_osp_h_dim(1, 2));
}

TEST(Decomposition, PauliTimesTrp11) {
  FiniteAbelianGroup G({2, 2});
  std::vector<GroupElement> gens = {G.make({1, 0}), G.make({0, 1})};
  const TensorFactor fine{pauli_fine_grading(1, gens, G, SuperSignature{2, 0}),
                          transpose_involution(SuperSignature{2, 0})};
  const GroupElement e = G.identity(), a = G.make({1, 0});
  const Thm53Instance inst(G, {e, a}, {1, 0}, {0, 1}, {1, 0});
  ASSERT_TRUE(thm53_admissible(inst));
  const MaterializedInstance mat = materialize(inst);
  const TensorFactor elem{mat.grading, mat.involution};

  const DecompositionReport rep = decomposition_check(StructureKind::PJordan, fine, elem);
  EXPECT_TRUE(rep.ok()) << rep.checks.summary();
  EXPECT_EQ(rep.claim, "Thm7.3");
  EXPECT_EQ(rep.tensor_matrix_size, 4);
  // Hand count: H(T) and K(T) split (1,1) over degrees {e,a}; H(R) covers
  // three Pauli lines, K(R) the fourth; every tensor degree lands on 2 + 2.
  ASSERT_EQ(rep.per_degree.size(), 4u);
  for (const auto &row : rep.per_degree) {
    EXPECT_EQ(row.h_dim, 2);
    EXPECT_EQ(row.k_dim, 2);
    EXPECT_EQ(row.h_dim, row.h_formula);
    EXPECT_EQ(row.k_dim, row.k_formula);
  }
}

TEST(Decomposition, PauliTimesOsp12BothKinds) {
  FiniteAbelianGroup G({2, 2});
  std::vector<GroupElement> gens = {G.make({1, 0}), G.make({0, 1})};
  const TensorFactor fine{pauli_fine_grading(1, gens, G, SuperSignature{2, 0}),
                          transpose_involution(SuperSignature{2, 0})};
  const TensorFactor elem{trivial_grading(G, {1, 2}), Superinvolution::osp({1, 2})};

  // H dim 4*3 + 5*1 = 17 and K dim 5*3 + 4*1 = 19: exactly the H/K dims of
  // the osp structure on the (2,4) signature the tensor assembles.
  long h_total = 0, k_total = 0;
  const DecompositionReport jordan = decomposition_check(StructureKind::OspJordan, fine, elem);
  EXPECT_TRUE(jordan.ok()) << jordan.checks.summary();
  EXPECT_EQ(jordan.claim, "Thm7.2");
  for (const auto &row : jordan.per_degree) {
    h_total += row.h_dim;
    k_total += row.k_dim;
  }
  EXPECT_EQ(h_total, oracle_osp_h_dim(2, 4));
  EXPECT_EQ(k_total, 36 - oracle_osp_h_dim(2, 4));

  const DecompositionReport lie = decomposition_check(StructureKind::BLie, fine, elem);
  EXPECT_TRUE(lie.ok()) << lie.checks.summary();
  EXPECT_EQ(lie.claim, "Thm7.4");
  EXPECT_NE(lie.note.find("K"), std::string::npos);
}

TEST(Decomposition, Validation) {
  FiniteAbelianGroup G({2, 2});
  FiniteAbelianGroup Z2({2});
  std::vector<GroupElement> gens = {G.make({1, 0}), G.make({0, 1})};
  const TensorFactor fine{pauli_fine_grading(1, gens, G, SuperSignature{2, 0}),
                          transpose_involution(SuperSignature{2, 0})};
  const TensorFactor elem_wrong_group{trivial_grading(Z2, {1, 2}), Superinvolution::osp({1, 2})};
  EXPECT_THROW(decomposition_check(StructureKind::OspJordan, fine, elem_wrong_group),
               std::invalid_argument);

  const TensorFactor odd_fine{trivial_grading(G, {1, 1}), Superinvolution::trp(1)};
  const TensorFactor elem{trivial_grading(G, {1, 2}), Superinvolution::osp({1, 2})};
  EXPECT_THROW(decomposition_check(StructureKind::OspJordan, odd_fine, elem),
               std::invalid_argument);

  // Non-graded elementary factor: flip transpose against the fine grading.
  const TensorFactor scalar{trivial_grading(G, {1, 0}), transpose_involution({1, 0})};
  const TensorFactor bad_elem{pauli_fine_grading(1, gens, G, SuperSignature{1, 1}),
                              Superinvolution::trp(1)};
  EXPECT_THROW(decomposition_check(StructureKind::PJordan, scalar, bad_elem),
               std::invalid_argument);
}

}  // namespace
}  // namespace supergrade
