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

// Walkthrough: graded Jordan and Lie superalgebras carried by the symmetric
// and skew parts of a superinvolution, and the tensor-product H/K
// decomposition identities.

#include <cstdio>

#include "supergrade/super_structures.hpp"

namespace sg = supergrade;

namespace {

void show(const sg::GradedSuperStructure &s) {
  std::printf("%s on M(%ld,%ld): carrier dim %zu, product %s, checks %s\n",
              sg::structure_kind_name(s.kind), s.grading.signature().n,
              s.grading.signature().m, s.carrier.dim(), s.product_rule.c_str(),
              s.report.summary().c_str());
  for (const auto &[deg, comp] : s.components)
    std::printf("  component %s: dim %zu\n", sg::element_to_string(deg).c_str(), comp.dim());
}

}  // namespace

int main() {
  const sg::FiniteAbelianGroup Z2({2});

  // Jordan superalgebra H(M(2,2), osp) over a graded instance: H is closed
  // under the Jordan superproduct and inherits the grading componentwise.
  const sg::Thm52Instance inst(Z2, {Z2.make({0}), Z2.make({1})}, {1, 1}, {1, 1});
  const sg::MaterializedInstance mat = sg::materialize(inst);
  show(sg::build_osp_jordan(2, 2, mat.involution, mat.grading));

  // Lie superalgebra K(M(1,2), osp): skew part under the supercommutator,
  // with K recovered as the span of brackets of symmetric elements.
  show(sg::build_b_lie(0, 1, sg::Superinvolution::osp({1, 2}), sg::trivial_grading(Z2, {1, 2})));

  // Jordan superalgebra H(M(1,1), trp) under the flip transpose.
  show(sg::build_p_jordan(1, sg::Superinvolution::trp(1), sg::trivial_grading(Z2, {1, 1})));

  // Tensor decomposition: R = M(2) with the Pauli grading and transpose,
  // T = M(1,2) with the canonical osp.  H and K of the product involution
  // split degreewise as H(x)H + K(x)K and H(x)K + K(x)H.
  const sg::FiniteAbelianGroup G({2, 2});
  const sg::Grading R = sg::pauli_fine_grading(1, {G.make({1, 0}), G.make({0, 1})}, G, {2, 0});
  const sg::TensorFactor fine{R, sg::transpose_involution({2, 0})};
  const sg::TensorFactor elem{sg::trivial_grading(G, {1, 2}), sg::Superinvolution::osp({1, 2})};
  const sg::DecompositionReport rep =
      sg::decomposition_check(sg::StructureKind::OspJordan, fine, elem);
  std::printf("%s decomposition on M(%ld): checks %s\n", rep.claim.c_str(),
              rep.tensor_matrix_size, rep.checks.summary().c_str());
  for (const auto &row : rep.per_degree)
    std::printf("  degree %s: dim H = %ld (= %ld), dim K = %ld (= %ld)\n",
                sg::element_to_string(row.degree).c_str(), row.h_dim, row.h_formula, row.k_dim,
                row.k_formula);
  return 0;
}
