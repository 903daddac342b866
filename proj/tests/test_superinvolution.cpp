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

#include "supergrade/superinvolution.hpp"

namespace supergrade {
namespace {

SuperMatrix from_longs(SuperSignature sig, const std::vector<std::vector<long>> &rows) {
  SuperMatrix r(sig);
  for (long i = 0; i < sig.size(); ++i)
    for (long j = 0; j < sig.size(); ++j) r.set(i, j, CycScalar(rows[i][j]));
  return r;
}

TEST(Superinvolution, TrpFormulaOnM11) {
  Superinvolution inv = Superinvolution::trp(1);
  SuperSignature sig{1, 1};
  SuperMatrix x = from_longs(sig, {{1, 2}, {3, 4}});
  SuperMatrix expect = from_longs(sig, {{4, -2}, {3, 1}});
  EXPECT_EQ(inv.apply(x), expect);
  EXPECT_TRUE(inv.check_axioms().ok);
}

TEST(Superinvolution, PlainTransposeViolatesSignRule) {
  // E_ij -> E_ji is an involution of the underlying algebra but not a
  // superinvolution: on odd units the sign rule forces a minus it lacks.
  SuperSignature sig{1, 1};
  std::vector<SuperMatrix> images;
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j) images.push_back(SuperMatrix::unit(sig, j, i));
  Superinvolution bad = Superinvolution::from_unit_images(sig, images, "plain-transpose");
  auto report = bad.check_axioms();
  EXPECT_FALSE(report.ok);
  EXPECT_FALSE(report.witness.empty());
}

TEST(Superinvolution, OspCanonicalAxiomsAndDims) {
  struct Case {
    long n, m;
  };
  for (Case c : {Case{1, 2}, Case{2, 2}, Case{3, 2}, Case{2, 4}}) {
    SuperSignature sig{c.n, c.m};
    Superinvolution inv = Superinvolution::osp(sig);
    EXPECT_TRUE(inv.check_axioms().ok) << sig.to_string();
    // H: symmetric even A-part, skew-vs-symplectic D-part, half the odd part.
    long h = c.n * (c.n + 1) / 2 + c.m * (c.m - 1) / 2 + c.n * c.m;
    long k = c.n * (c.n - 1) / 2 + c.m * (c.m + 1) / 2 + c.n * c.m;
    EXPECT_EQ(static_cast<long>(inv.H_space().dim()), h) << sig.to_string();
    EXPECT_EQ(static_cast<long>(inv.K_space().dim()), k) << sig.to_string();
    EXPECT_EQ(h + k, sig.size() * sig.size());
  }
}

TEST(Superinvolution, OspRequiresEvenOddPart) {
  EXPECT_THROW(Superinvolution::osp(SuperSignature{1, 1}), std::invalid_argument);
  EXPECT_THROW(osp_phi(SuperSignature{2, 3}), std::invalid_argument);
}

TEST(Superinvolution, TrpFixedAndSkewShapes) {
  Superinvolution inv = Superinvolution::trp(1);
  SuperSignature sig{1, 1};
  Subspace h = inv.H_space();
  Subspace k = inv.K_space();
  // H = {[[a,0],[c,a]]}: the 1x1 skew upper block vanishes.
  EXPECT_EQ(h.dim(), 2u);
  EXPECT_TRUE(h.contains(SuperMatrix::identity(sig).flatten()));
  EXPECT_TRUE(h.contains(SuperMatrix::unit(sig, 1, 0).flatten()));
  EXPECT_FALSE(h.contains(SuperMatrix::unit(sig, 0, 1).flatten()));
  // K = {[[a,b],[0,-a]]}.
  EXPECT_EQ(k.dim(), 2u);
  EXPECT_TRUE(k.contains(SuperMatrix::unit(sig, 0, 1).flatten()));
  EXPECT_TRUE(
      k.contains((SuperMatrix::unit(sig, 0, 0) - SuperMatrix::unit(sig, 1, 1)).flatten()));
  EXPECT_FALSE(k.contains(SuperMatrix::unit(sig, 1, 0).flatten()));

  for (long n = 1; n <= 3; ++n) {
    Superinvolution t = Superinvolution::trp(n);
    EXPECT_EQ(t.H_space().dim(), static_cast<std::size_t>(2 * n * n));
    EXPECT_EQ(t.K_space().dim(), static_cast<std::size_t>(2 * n * n));
  }
}

TEST(Superinvolution, HAndKDecomposeTheFullSpace) {
  for (Superinvolution inv :
       {Superinvolution::osp(SuperSignature{2, 2}), Superinvolution::trp(2)}) {
    Subspace h = inv.H_space();
    Subspace k = inv.K_space();
    EXPECT_EQ((h + k).dim(), 16u);
    EXPECT_EQ(intersect(h, k).dim(), 0u);
  }
}

TEST(Superinvolution, BlockPhiValidation) {
  SuperSignature sig{2, 2};
  MatRows sym = {{CycScalar(0), CycScalar(1)}, {CycScalar(1), CycScalar(0)}};
  MatRows skew = {{CycScalar(0), CycScalar(1)}, {CycScalar(-1), CycScalar(0)}};
  Superinvolution inv = Superinvolution::osp_with_phi(sig, sym, skew);
  EXPECT_TRUE(inv.check_axioms().ok);
  // Eigen-space dimensions are conjugation invariants of the type.
  EXPECT_EQ(inv.H_space().dim(), Superinvolution::osp(sig).H_space().dim());

  MatRows not_sym = {{CycScalar(0), CycScalar(1)}, {CycScalar(2), CycScalar(0)}};
  EXPECT_THROW(Superinvolution::osp_with_phi(sig, not_sym, skew), std::invalid_argument);
  MatRows not_skew = sym;
  EXPECT_THROW(Superinvolution::osp_with_phi(sig, sym, not_skew), std::invalid_argument);
  MatRows singular = {{CycScalar(1), CycScalar(0)}, {CycScalar(0), CycScalar(0)}};
  EXPECT_THROW(Superinvolution::osp_with_phi(sig, singular, skew), std::invalid_argument);
}

TEST(Superinvolution, ExchangePairSwapsCopies) {
  Superinvolution ex = Superinvolution::exchange(1, 1);
  EXPECT_TRUE(ex.has_carrier());
  EXPECT_EQ(ex.carrier().dim(), 8u);
  EXPECT_TRUE(ex.check_axioms().ok);

  // H is the diagonal {(a, a)}, one copy of M_{1,1}; K is the antidiagonal.
  EXPECT_EQ(ex.H_space().dim(), 4u);
  EXPECT_EQ(ex.K_space().dim(), 4u);

  // Applying outside the carrier is rejected: a cross-copy unit.
  SuperSignature outer{2, 2};
  EXPECT_THROW(ex.apply(SuperMatrix::unit(outer, 0, 1)), std::invalid_argument);

  // The swap really exchanges the copies: the first-copy even unit maps into
  // the second copy and back.
  SuperMatrix e1 = SuperMatrix::unit(outer, 0, 0);  // copy 0 even unit
  SuperMatrix e2 = SuperMatrix::unit(outer, 1, 1);  // copy 1 even unit
  EXPECT_EQ(ex.apply(e1), e2);
  EXPECT_EQ(ex.apply(e2), e1);
}

TEST(Superinvolution, ExchangeAxiomsAtLargerSize) {
  Superinvolution ex = Superinvolution::exchange(1, 2);
  EXPECT_TRUE(ex.check_axioms().ok);
  EXPECT_EQ(ex.H_space().dim(), 9u);
  EXPECT_EQ(ex.K_space().dim(), 9u);
}

}  // namespace
}  // namespace supergrade
