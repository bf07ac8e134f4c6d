// Copyright 2026 The Authors.
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

// Matroids of matrices and the representation-dependent derived matroids:
// the one spanned by circuit vectors (minimal-support vectors of the dual
// code) and, for binary matroids, the one of circuit indicator vectors.

#ifndef DMAT_FIELDREP_HPP
#define DMAT_FIELDREP_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dmat/elem_set.hpp"
#include "dmat/field.hpp"
#include "dmat/matroid.hpp"

namespace dmat {

// kPrimal: rows span the code Q, whose matroid is the column matroid.
// kDual: rows span the dual code; the matroid is that of any matrix whose
// row space is the kernel of the given one.
enum class Convention { kPrimal, kDual };
std::string_view convention_name(Convention c);

struct Representation {
  FieldMatrix matrix;
  Convention convention = Convention::kPrimal;
};

struct RankAndKernel {
  int rank = 0;
  FieldMatrix kernel;  // rows form a basis of {x : M x = 0}
};

// Exact rank and kernel. Rational ranks are computed twice, by fraction-free
// integer elimination and by Gauss-Jordan over Q, and must agree; kernel
// vectors are checked to annihilate the matrix.
RankAndKernel rank_and_kernel(const FieldMatrix& m);

// A matrix over the same field whose row space is the code Q.
FieldMatrix primal_matrix(const Representation& r);

// The matroid of the representation: circuits are the minimal dependent
// column sets of the primal matrix, found level by level.
Matroid matroid_from_matrix(const Representation& r);

// Number of independent column sets of the primal matrix.
std::uint64_t count_independent_sets(const Representation& r);

// The vector of the dual code supported exactly on circuit `c`, normalized:
// first nonzero coordinate 1 over finite fields; coprime integers with a
// positive first nonzero coordinate over Q. Returned as a 1 x n matrix.
// Throws NotACircuit when no such one-dimensional solution exists.
FieldMatrix circuit_vector(const Representation& r, ElemSet c);

// Columns are the circuit vectors of `base`'s circuits in canonical order.
FieldMatrix circuit_vector_matrix(const Representation& r, const Matroid& base);

// The derived matroid spanned by circuit vectors; its ground set is the
// canonical circuit list of matroid_from_matrix(r).
Matroid ow_derived(const Representation& r);

// Derived matroid of a binary matroid from its circuit indicator vectors over
// GF(2). `binary_rep` must be a GF(2) representation of `m`.
Matroid longyear_derived(const Matroid& m, const Representation& binary_rep);

// A k x n matrix with every k x k minor nonzero, so its matroid is U(k, n).
// Entries come from a counter-based stream keyed by `seed`: uniform field
// elements for finite fields, uniform integers in [-1000, 1000] for Q.
// Throws FieldTooSmall if no such matrix turns up in 1000 draws.
Representation random_uniform_rep(int k, int n, const FieldSpec& field,
                                  std::uint64_t seed);

enum class WeakOrder { kEqual, kGreaterOrEqual, kLessOrEqual, kIncomparable };
std::string_view weak_order_name(WeakOrder w);

// N1 >= N2 when every dependent set of N1 is dependent in N2, which holds
// exactly when every circuit of N1 is dependent in N2.
WeakOrder weak_order_compare(const Matroid& n1, const Matroid& n2);

// Number of dependent subsets; ground sets up to 25 elements.
std::uint64_t count_dependent_sets(const Matroid& m);

}  // namespace dmat

#endif  // DMAT_FIELDREP_HPP
