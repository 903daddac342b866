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

#include <random>

#include "supergrade/exact_linalg.hpp"

using supergrade::CycScalar;
using supergrade::MatRows;
using supergrade::nullspace;
using supergrade::rank_of;
using supergrade::rref;
using supergrade::solve_coordinates;
using supergrade::Subspace;
using supergrade::Vec;

namespace {

CycScalar sc(long v) { return CycScalar(v); }

Vec random_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::uniform_int_distribution<int> use_i(0, 3);
  Vec v(n, sc(0));
  for (auto& x : v) {
    x = sc(d(rng));
    if (use_i(rng) == 0) x = x * CycScalar::root_of_unity(1, 4);
  }
  return v;
}

Vec matvec(const MatRows& m, const Vec& v) {
  Vec out(m.size(), sc(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace

TEST(ExactLinalg, RrefIdentityAndRank) {
  MatRows m{{sc(2), sc(0)}, {sc(0), sc(3)}};
  auto r = rref(m);
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.rows[0], (Vec{sc(1), sc(0)}));
  EXPECT_EQ(r.rows[1], (Vec{sc(0), sc(1)}));
  EXPECT_EQ(rank_of(m), 2u);
}

TEST(ExactLinalg, RankOneCyclotomicMatrix) {
  // Second row is zeta_4 times the first: built that way, so rank is 1.
  CycScalar i = CycScalar::root_of_unity(1, 4);
  Vec row1{sc(1), i};
  Vec row2{i * row1[0], i * row1[1]};
  EXPECT_EQ(row2[1], sc(-1));
  MatRows m{row1, row2};
  EXPECT_EQ(rank_of(m), 1u);
  auto r = rref(m);
  EXPECT_EQ(r.rows[0], (Vec{sc(1), i}));  // canonical: pivot normalized to 1
  EXPECT_TRUE(supergrade::vec_is_zero(r.rows[1]));
}

TEST(ExactLinalg, NullspaceIsExact) {
  std::mt19937 rng(20240812);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> dims(1, 5);
    std::size_t rows = dims(rng), cols = dims(rng);
    MatRows m;
    for (std::size_t i = 0; i < rows; ++i) m.push_back(random_vec(rng, cols));
    MatRows ker = nullspace(m);
    EXPECT_EQ(ker.size() + rank_of(m), cols);
    for (const auto& v : ker) EXPECT_TRUE(supergrade::vec_is_zero(matvec(m, v)));
  }
}

TEST(ExactLinalg, InvertRoundTrip) {
  std::mt19937 rng(99);
  int invertible_seen = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 3;
    MatRows m;
    for (std::size_t i = 0; i < n; ++i) m.push_back(random_vec(rng, n));
    auto inv = supergrade::invert(m);
    if (!inv) {
      EXPECT_LT(rank_of(m), n);
      continue;
    }
    ++invertible_seen;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = matvec(*inv, matvec(m, supergrade::vec_zero(n)));
      (void)e;
      Vec col(n, sc(0));
      col[i] = sc(1);
      EXPECT_EQ(matvec(*inv, matvec(m, col)), col);
    }
  }
  EXPECT_GT(invertible_seen, 10);
}

TEST(ExactLinalg, SolveCoordinates) {
  Vec v1{sc(1), sc(0), sc(2)};
  Vec v2{sc(0), sc(1), sc(-1)};
  Vec w{sc(3), sc(2), sc(4)};  // 3*v1 + 2*v2
  auto x = solve_coordinates({v1, v2}, w);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], sc(3));
  EXPECT_EQ((*x)[1], sc(2));
  EXPECT_FALSE(solve_coordinates({v1}, Vec{sc(0), sc(1), sc(0)}).has_value());
}

TEST(ExactLinalg, SubspaceCanonicalEquality) {
  Vec v1{sc(1), sc(1), sc(0)};
  Vec v2{sc(0), sc(0), sc(1)};
  auto u = Subspace::span(3, {v1, v2});
  auto w = Subspace::span(3, {vec_add(v1, v2), v2, vec_add(v1, vec_scale(sc(5), v2))});
  EXPECT_EQ(u, w);
  EXPECT_EQ(u.dim(), 2u);
  EXPECT_TRUE(u.contains(vec_add(v1, v2)));
  EXPECT_FALSE(u.contains(Vec{sc(1), sc(0), sc(0)}));
  EXPECT_NE(u, Subspace::span(3, {v1}));
  EXPECT_EQ(Subspace::full(3).dim(), 3u);
}

TEST(ExactLinalg, GrassmannDimensionIdentity) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dk(1, 3);
    std::size_t n = 5;
    MatRows ua, ub;
    for (std::size_t i = dk(rng); i-- > 0;) ua.push_back(random_vec(rng, n));
    for (std::size_t i = dk(rng); i-- > 0;) ub.push_back(random_vec(rng, n));
    auto u = Subspace::span(n, ua), v = Subspace::span(n, ub);
    auto s = u + v;
    auto x = intersect(u, v);
    EXPECT_EQ(u.dim() + v.dim(), s.dim() + x.dim());
    EXPECT_TRUE(u.contains(x));
    EXPECT_TRUE(v.contains(x));
    EXPECT_TRUE(s.contains(u));
    EXPECT_TRUE(s.contains(v));
  }
}

TEST(ExactLinalg, IntersectExamples) {
  Vec e1{sc(1), sc(0), sc(0)};
  Vec e2{sc(0), sc(1), sc(0)};
  Vec e3{sc(0), sc(0), sc(1)};
  auto u = Subspace::span(3, {e1, e2});
  auto v = Subspace::span(3, {e2, e3});
  EXPECT_EQ(intersect(u, v), Subspace::span(3, {e2}));
  EXPECT_EQ(intersect(u, Subspace::span(3, {e3})).dim(), 0u);
  EXPECT_EQ((u + v), Subspace::full(3));
}
