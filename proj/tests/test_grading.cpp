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
#include <random>
#include <vector>

#include "supergrade/grading.hpp"

namespace supergrade {
namespace {

// Oracle: expected elementary component dimension is the number of index
// pairs whose theta-quotient hits the degree.
long count_pairs_oracle(const FiniteAbelianGroup &G, const std::vector<GroupElement> &theta,
                        const GroupElement &g) {
  long cnt = 0;
  for (const auto &ti : theta)
    for (const auto &tj : theta)
      if (G.mul(G.inverse(ti), tj) == g) ++cnt;
  return cnt;
}

CycScalar random_scalar(std::mt19937 &rng) {
  static const CycScalar pool[] = {CycScalar(0), CycScalar(1), CycScalar(-1),
                                   CycScalar(make_rational(1, 2)), cyc_i()};
  return pool[rng() % 5];
}

SuperMatrix random_matrix(SuperSignature sig, std::mt19937 &rng) {
  SuperMatrix r(sig);
  for (long i = 0; i < sig.size(); ++i)
    for (long j = 0; j < sig.size(); ++j) r.set(i, j, random_scalar(rng));
  return r;
}

TEST(ElementaryGrading, DegreeRuleOnM2) {
  FiniteAbelianGroup G({4});
  GroupElement e = G.identity(), g = G.make({1});
  Grading gr = elementary_grading(G, {e, g}, SuperSignature{2, 0});
  SuperSignature sig{2, 0};
  EXPECT_EQ(gr.component_dim(e), 2);
  EXPECT_TRUE(gr.component(e).contains(SuperMatrix::unit(sig, 0, 0).flatten()));
  EXPECT_TRUE(gr.component(e).contains(SuperMatrix::unit(sig, 1, 1).flatten()));
  EXPECT_EQ(gr.component_dim(g), 1);
  EXPECT_TRUE(gr.component(g).contains(SuperMatrix::unit(sig, 0, 1).flatten()));
  EXPECT_EQ(gr.component_dim(G.inverse(g)), 1);
  EXPECT_TRUE(gr.component(G.inverse(g)).contains(SuperMatrix::unit(sig, 1, 0).flatten()));
  EXPECT_TRUE(gr.is_multiplicative());
}

TEST(ElementaryGrading, ConstantThetaIsTrivial) {
  FiniteAbelianGroup G({2, 2});
  Grading gr = trivial_grading(G, SuperSignature{2, 1});
  EXPECT_EQ(gr.support().size(), 1u);
  EXPECT_EQ(gr.component_dim(G.identity()), 9);
  EXPECT_FALSE(gr.support_generates());
}

TEST(ElementaryGrading, DimensionsMatchPairCountOracle) {
  FiniteAbelianGroup G({2});
  GroupElement e = G.identity(), g = G.make({1});
  std::vector<GroupElement> theta{e, e, g};
  Grading gr = elementary_grading(G, theta, SuperSignature{3, 0});
  EXPECT_EQ(count_pairs_oracle(G, theta, e), 5);
  EXPECT_EQ(count_pairs_oracle(G, theta, g), 4);
  EXPECT_EQ(gr.component_dim(e), 5);
  EXPECT_EQ(gr.component_dim(g), 4);
  // The pair-count oracle agrees across a spread of tuples and groups.
  for (const FiniteAbelianGroup &H : {FiniteAbelianGroup({4}), FiniteAbelianGroup({2, 2})})
    for (const auto &t1 : H.elements())
      for (const auto &t2 : H.elements()) {
        Grading gh = elementary_grading(H, {t1, t2}, SuperSignature{1, 1});
        for (const auto &h : H.elements())
          EXPECT_EQ(gh.component_dim(h), count_pairs_oracle(H, {t1, t2}, h));
      }
}

TEST(ElementaryGrading, SupportClosedUnderInversion) {
  FiniteAbelianGroup G({4});
  Grading gr =
      elementary_grading(G, {G.make({0}), G.make({1}), G.make({3})}, SuperSignature{2, 1});
  for (const auto &g : gr.support())
    EXPECT_EQ(gr.component_dim(g), gr.component_dim(G.inverse(g)));
}

TEST(PauliGrading, QuadrupleComponentsAndDualHomogeneity) {
  Grading p = pauli_fine_grading(1);
  const FiniteAbelianGroup &G = p.group();
  SuperSignature sig{1, 1};
  // The four stated generators span the four components.
  SuperMatrix eye = SuperMatrix::identity(sig);
  SuperMatrix z(sig), x(sig), y(sig);
  z.set(0, 0, CycScalar(1));
  z.set(1, 1, CycScalar(-1));
  x.set(0, 1, CycScalar(1));
  x.set(1, 0, CycScalar(1));
  y.set(0, 1, CycScalar(1));
  y.set(1, 0, CycScalar(-1));
  std::map<GroupElement, SuperMatrix> expected{{G.make({0, 0}), eye},
                                               {G.make({1, 0}), z},
                                               {G.make({0, 1}), x},
                                               {G.make({1, 1}), y}};
  EXPECT_EQ(p.support().size(), 4u);
  for (const auto &[deg, mat] : expected) {
    EXPECT_EQ(p.component_dim(deg), 1);
    EXPECT_TRUE(p.component(deg).contains(mat.flatten()));
    // Homogeneity under the dual action: chi * W = chi(deg) W.
    for (const Character &chi : G.characters()) {
      SuperMatrix lhs = p.dual_action(chi, mat);
      SuperMatrix rhs = G.char_eval(chi, deg) * mat;
      EXPECT_EQ(lhs, rhs);
    }
  }
  EXPECT_TRUE(p.is_multiplicative());
  EXPECT_TRUE(p.is_super_compatible());
}

TEST(PauliGrading, TransposeMapsEachComponentToItself) {
  Grading p = pauli_fine_grading(1);
  const FiniteAbelianGroup &G = p.group();
  for (const auto &[mat, deg] : p.homogeneous_basis()) {
    SuperMatrix t = mat.transpose();
    EXPECT_TRUE(p.component(deg).contains(t.flatten()));
    // Concretely: three generators are symmetric, the (1,1) one is negated.
    if (deg == G.make({1, 1}))
      EXPECT_EQ(t, -mat);
    else
      EXPECT_EQ(t, mat);
  }
}

TEST(PauliGrading, SixteenLinesAtKTwo) {
  Grading p = pauli_fine_grading(2);
  EXPECT_EQ(p.support().size(), 16u);
  for (const auto &g : p.support()) EXPECT_EQ(p.component_dim(g), 1);
  EXPECT_TRUE(p.is_fine());
  EXPECT_TRUE(p.is_multiplicative());
  EXPECT_TRUE(p.is_super_compatible());
  EXPECT_TRUE(p.support_generates());
}

TEST(PauliGrading, RejectsNonInjectiveEmbedding) {
  FiniteAbelianGroup G({2});  // too small for (Z2xZ2)^1
  std::vector<GroupElement> images{G.make({1}), G.make({1})};
  EXPECT_THROW(pauli_fine_grading(1, images, G, SuperSignature{1, 1}), std::invalid_argument);
}

TEST(TensorGrading, TrivialFineFactorCopiesElementary) {
  FiniteAbelianGroup G({2});
  Grading elem = elementary_grading(G, {G.make({0}), G.make({1})}, SuperSignature{1, 1});
  Grading fine = pauli_fine_grading(0, {}, G, SuperSignature{1, 0});
  Grading prod = tensor_grading(elem, fine);
  EXPECT_EQ(prod.signature(), elem.signature());
  for (const auto &g : G.elements()) EXPECT_EQ(prod.component_dim(g), elem.component_dim(g));
}

TEST(TensorGrading, TrivialElementaryFactorCopiesPauli) {
  FiniteAbelianGroup G({2, 2});
  Grading elem = trivial_grading(G, SuperSignature{1, 0});
  Grading fine = pauli_fine_grading(1, {G.make({1, 0}), G.make({0, 1})}, G, SuperSignature{1, 1});
  Grading prod = tensor_grading(elem, fine);
  Grading pauli = pauli_fine_grading(1);
  EXPECT_EQ(prod.signature(), (SuperSignature{1, 1}));
  for (const auto &g : G.elements()) {
    EXPECT_EQ(prod.component_dim(g), pauli.component_dim(g));
    if (prod.component_dim(g) > 0)
      EXPECT_TRUE(prod.component(g) == pauli.component(g));
  }
}

TEST(TensorGrading, DisjointFactorsSupportAndDims) {
  // Independent oracle first: degrees of E_ij (x) P enumerated directly.
  FiniteAbelianGroup G({2, 2, 2});
  GroupElement e = G.identity(), g = G.make({1, 0, 0});
  std::map<GroupElement, long> oracle;
  std::vector<GroupElement> theta{e, g};
  std::vector<GroupElement> pauli_degs{G.make({0, 0, 0}), G.make({0, 1, 0}), G.make({0, 0, 1}),
                                       G.make({0, 1, 1})};
  for (const auto &ti : theta)
    for (const auto &tj : theta)
      for (const auto &pd : pauli_degs) ++oracle[G.mul(G.mul(G.inverse(ti), tj), pd)];
  ASSERT_EQ(oracle.size(), 8u);
  for (const auto &[deg, cnt] : oracle) ASSERT_EQ(cnt, 2);

  Grading elem = elementary_grading(G, theta, SuperSignature{1, 1});
  Grading fine = pauli_fine_grading(1, {G.make({0, 1, 0}), G.make({0, 0, 1})}, G,
                                    SuperSignature{2, 0});
  Grading prod = tensor_grading(elem, fine);
  EXPECT_EQ(prod.support().size(), 8u);
  for (const auto &[deg, cnt] : oracle) EXPECT_EQ(prod.component_dim(deg), cnt);
  EXPECT_FALSE(prod.is_fine());
  EXPECT_TRUE(prod.is_multiplicative());
  EXPECT_TRUE(prod.is_super_compatible());
}

TEST(DualAction, CharacterActionBasics) {
  FiniteAbelianGroup G({2});
  GroupElement e = G.identity(), h = G.make({1});
  Grading gr = elementary_grading(G, {e, h}, SuperSignature{1, 1});
  SuperSignature sig{1, 1};
  std::mt19937 rng(20240817);
  SuperMatrix a = random_matrix(sig, rng);
  // Trivial character acts as the identity.
  EXPECT_EQ(gr.dual_action(G.identity(), a), a);
  // The nontrivial character sends a_e + a_h to a_e - a_h.
  SuperMatrix ae = gr.homogeneous_projection(a, e);
  SuperMatrix ah = gr.homogeneous_projection(a, h);
  EXPECT_EQ(ae + ah, a);
  EXPECT_EQ(gr.dual_action(G.make({1}), a), ae - ah);
}

TEST(DualAction, ActsByAutomorphismsAndMultiplicatively) {
  FiniteAbelianGroup G({2});
  GroupElement e = G.identity(), g = G.make({1});
  Grading gr = elementary_grading(G, {e, e, g}, SuperSignature{2, 1});
  std::mt19937 rng(20240818);
  for (int trial = 0; trial < 10; ++trial) {
    SuperMatrix a = random_matrix(gr.signature(), rng);
    SuperMatrix b = random_matrix(gr.signature(), rng);
    for (const Character &chi : G.characters()) {
      // chi * (ab) = (chi * a)(chi * b)
      EXPECT_EQ(gr.dual_action(chi, a * b), gr.dual_action(chi, a) * gr.dual_action(chi, b));
      for (const Character &psi : G.characters()) {
        Character prod = G.mul(chi, psi);
        EXPECT_EQ(gr.dual_action(prod, a), gr.dual_action(chi, gr.dual_action(psi, a)));
      }
    }
  }
}

TEST(Projection, BasisAndCharacterRoutesAgree) {
  std::mt19937 rng(20240819);
  FiniteAbelianGroup G({4});
  GroupElement e = G.identity(), g = G.make({1});
  Grading gr = elementary_grading(G, {e, g}, SuperSignature{1, 1});
  SuperSignature sig{1, 1};

  // Frozen example: a = E11 + E12 projects to E11 at the identity.
  SuperMatrix a = SuperMatrix::unit(sig, 0, 0) + SuperMatrix::unit(sig, 0, 1);
  EXPECT_EQ(gr.homogeneous_projection(a, e), SuperMatrix::unit(sig, 0, 0));
  EXPECT_EQ(gr.homogeneous_projection(a, g), SuperMatrix::unit(sig, 0, 1));

  for (int trial = 0; trial < 10; ++trial) {
    SuperMatrix x = random_matrix(sig, rng);
    SuperMatrix total(sig);
    for (const auto &h : G.elements()) {
      SuperMatrix p1 = gr.homogeneous_projection(x, h);
      SuperMatrix p2 = gr.homogeneous_projection_by_characters(x, h);
      EXPECT_EQ(p1, p2);
      // Idempotence and orthogonality.
      EXPECT_EQ(gr.homogeneous_projection(p1, h), p1);
      for (const auto &h2 : G.elements())
        if (!(h2 == h)) EXPECT_TRUE(gr.homogeneous_projection(p1, h2).is_zero());
      total = total + p1;
    }
    EXPECT_EQ(total, x);
  }

  // Homogeneous matrices report a single degree; mixed ones the full set.
  EXPECT_EQ(gr.degree_of(SuperMatrix::unit(sig, 0, 1)), g);
  EXPECT_FALSE(gr.degree_of(a).has_value());
  EXPECT_EQ(gr.degrees_of(a).size(), 2u);
}

TEST(GradedSubspace, SplitAndInvarianceRoutesAgree) {
  FiniteAbelianGroup G({2});
  GroupElement e = G.identity(), g = G.make({1});
  Grading gr = elementary_grading(G, {e, g}, SuperSignature{1, 1});
  SuperSignature sig{1, 1};

  // Single components are graded.
  EXPECT_TRUE(gr.is_graded_subspace_by_split(gr.component(g)));
  EXPECT_TRUE(gr.is_graded_subspace_by_invariance(gr.component(g)));

  // span{E11 + E12} is not: the projection escapes the span.
  Subspace bad = Subspace::span(
      4, {(SuperMatrix::unit(sig, 0, 0) + SuperMatrix::unit(sig, 0, 1)).flatten()});
  EXPECT_FALSE(gr.is_graded_subspace_by_split(bad));
  EXPECT_FALSE(gr.is_graded_subspace_by_invariance(bad));

  // The even part of a super-compatible grading is graded.
  MatRows even_rows;
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j) {
      SuperMatrix u = SuperMatrix::unit(sig, i, j);
      if (u.parity() == 0) even_rows.push_back(u.flatten());
    }
  Subspace even = Subspace::span(4, even_rows);
  EXPECT_TRUE(gr.is_super_compatible());
  EXPECT_TRUE(gr.is_graded_subspace_by_split(even));
  EXPECT_TRUE(gr.is_graded_subspace_by_invariance(even));

  // Seeded random subspaces: the two deciders never disagree.
  std::mt19937 rng(20240820);
  for (int trial = 0; trial < 40; ++trial) {
    MatRows rows;
    std::size_t want = 1 + rng() % 3;
    for (std::size_t r = 0; r < want; ++r) rows.push_back(random_matrix(sig, rng).flatten());
    Subspace v = Subspace::span(4, rows);
    EXPECT_EQ(gr.is_graded_subspace_by_split(v), gr.is_graded_subspace_by_invariance(v));
  }
}

TEST(SuperCompatibility, MixedParityComponentFails) {
  FiniteAbelianGroup G({2});
  GroupElement e = G.identity(), g = G.make({1});
  SuperSignature sig{1, 1};
  std::vector<Grading::BasisEntry> basis{
      {SuperMatrix::unit(sig, 0, 0) + SuperMatrix::unit(sig, 0, 1), e},
      {SuperMatrix::unit(sig, 0, 1), g},
      {SuperMatrix::unit(sig, 1, 0), g},
      {SuperMatrix::unit(sig, 1, 1), e}};
  Grading gr(G, sig, std::move(basis), "mixed");
  EXPECT_FALSE(gr.is_super_compatible());
  EXPECT_FALSE(gr.is_multiplicative());
  // With the pair-swap involution instead of the standard one, the same
  // component map is checked against a different split.
  SuperMatrix swap(sig);
  swap.set(0, 1, CycScalar(1));
  swap.set(1, 0, CycScalar(1));
  EXPECT_FALSE(gr.is_super_compatible(swap));
}

TEST(Fineness, MatchesIdentityComponentDimensionOnCorpus) {
  // Lemma-level equivalence: fine iff dim R_e = 1, both directions, on a
  // corpus of gradings of the 2x2 and 4x4 matrix algebras.
  std::vector<Grading> corpus;
  FiniteAbelianGroup z4({4}), z22({2, 2});
  for (const auto &a : z4.elements())
    for (const auto &b : z4.elements())
      corpus.push_back(elementary_grading(z4, {a, b}, SuperSignature{1, 1}));
  for (const auto &a : z22.elements())
    corpus.push_back(elementary_grading(z22, {z22.identity(), a}, SuperSignature{2, 0}));
  corpus.push_back(pauli_fine_grading(1));
  corpus.push_back(pauli_fine_grading(2));
  {
    FiniteAbelianGroup G({2, 2, 2});
    Grading elem = elementary_grading(G, {G.identity(), G.make({1, 0, 0})}, SuperSignature{1, 1});
    Grading fine =
        pauli_fine_grading(1, {G.make({0, 1, 0}), G.make({0, 0, 1})}, G, SuperSignature{2, 0});
    corpus.push_back(tensor_grading(elem, fine));
  }
  int fine_count = 0;
  for (const Grading &gr : corpus) {
    bool fine = gr.is_fine();
    if (fine) ++fine_count;
    EXPECT_EQ(fine, gr.component_dim(gr.group().identity()) == 1) << gr.label();
  }
  EXPECT_EQ(fine_count, 2);  // exactly the two Pauli gradings
}

TEST(GradedIso, PermutationWitnesses) {
  FiniteAbelianGroup G({2, 2});
  GroupElement e = G.identity(), g = G.make({1, 0}), h = G.make({0, 1});
  SuperSignature sig{2, 1};
  // Identity witness.
  auto w1 = graded_isomorphic_elementary(G, {e, g, h}, {e, g, h}, sig);
  ASSERT_TRUE(w1.has_value());
  EXPECT_EQ(*w1, (std::vector<std::size_t>{0, 1, 2}));
  // Reordering within the same parity class is matched.
  auto w2 = graded_isomorphic_elementary(G, {e, g, h}, {g, e, h}, sig);
  ASSERT_TRUE(w2.has_value());
  EXPECT_EQ((*w2)[0], 1u);
  EXPECT_EQ((*w2)[1], 0u);
  // The permutation must respect parity: swapping across the split fails.
  EXPECT_FALSE(graded_isomorphic_elementary(G, {e, g, h}, {e, h, g}, sig).has_value());
  // Unrelated tuples have no witness.
  EXPECT_FALSE(graded_isomorphic_elementary(G, {e, g, e}, {e, h, e}, sig).has_value());
}

TEST(Grading, ConstructorRejectsBadBases) {
  FiniteAbelianGroup G({2});
  SuperSignature sig{1, 1};
  // Too few entries.
  std::vector<Grading::BasisEntry> short_basis{{SuperMatrix::unit(sig, 0, 0), G.identity()}};
  EXPECT_THROW(Grading(G, sig, short_basis), std::invalid_argument);
  // Dependent entries.
  std::vector<Grading::BasisEntry> dep;
  for (int k = 0; k < 4; ++k) dep.emplace_back(SuperMatrix::unit(sig, 0, 0), G.identity());
  EXPECT_THROW(Grading(G, sig, dep), std::invalid_argument);
}

}  // namespace
}  // namespace supergrade
