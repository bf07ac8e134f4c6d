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

#include "dmat/fieldrep.hpp"

#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include <absl/container/flat_hash_set.h>

#include "dmat/error.hpp"
#include "dmat/families.hpp"
#include "dmat/linalg.hpp"
#include "dmat/rng.hpp"

namespace dmat {
namespace {

template <typename F>
Matrix<F> leading_rows(const Echelon<F>& e) {
  Matrix<F> out(e.rref.field, e.rank(), e.rref.cols);
  for (int r = 0; r < e.rank(); ++r) {
    for (int c = 0; c < e.rref.cols; ++c) out.at(r, c) = e.rref.at(r, c);
  }
  return out;
}

template <typename F>
Matrix<F> primal_of(const Matrix<F>& m, Convention convention) {
  if (convention == Convention::kDual) return kernel_of(m);
  return leading_rows(row_reduce(m));
}

// Independence of column subsets of a full-row-rank matrix.
template <typename F>
class ColumnOracle {
 public:
  explicit ColumnOracle(Matrix<F> m) : m_(std::move(m)) {}
  int rows() const { return m_.rows; }
  bool independent(const std::vector<int>& cols) const {
    if (static_cast<int>(cols.size()) > m_.rows) return false;
    return rank_of(select_columns(m_, cols)) == static_cast<int>(cols.size());
  }

 private:
  Matrix<F> m_;
};

// Over Q: a full rank modulo a large prime certifies independence, since the
// modular rank never exceeds the rational one; otherwise decide exactly.
template <>
class ColumnOracle<Rationals> {
 public:
  explicit ColumnOracle(const Matrix<Rationals>& m)
      : ints_(clear_column_denominators(m)) {}
  int rows() const { return ints_.rows; }
  bool independent(const std::vector<int>& cols) const {
    const int s = static_cast<int>(cols.size());
    if (s > ints_.rows) return false;
    IntMatrix sub{ints_.rows, s, std::vector<mpz_class>(
                                     static_cast<std::size_t>(ints_.rows) * s)};
    for (int r = 0; r < ints_.rows; ++r) {
      for (int j = 0; j < s; ++j) sub.at(r, j) = ints_.at(r, cols[j]);
    }
    if (rank_mod_mersenne61(sub) == s) return true;
    return bareiss_rank(std::move(sub)) == s;
  }

 private:
  IntMatrix ints_;
};

struct Enumeration {
  std::vector<ElemSet> circuits;
  std::uint64_t independent_sets = 0;
};

// Independent sets level by level; a candidate all of whose facets are
// independent is either independent or a circuit.
template <typename F>
Enumeration enumerate_columns(const Matrix<F>& primal) {
  const int n = primal.cols;
  if (n > ElemSet::kMaxElements) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                std::to_string(n) + " columns exceed 64");
  }
  const ColumnOracle<F> oracle(primal);
  const int r = oracle.rows();
  Enumeration out;
  out.independent_sets = 1;
  std::vector<ElemSet> prev{ElemSet{}};
  absl::flat_hash_set<std::uint64_t> prev_index{0};
  for (int level = 1; level <= r + 1 && !prev.empty(); ++level) {
    std::vector<ElemSet> cur;
    absl::flat_hash_set<std::uint64_t> cur_index;
    for (ElemSet x : prev) {
      for (int j = x.span(); j < n; ++j) {
        const ElemSet y = x.with(j);
        bool facets_independent = true;
        x.for_each([&](int e) {
          if (facets_independent && !prev_index.contains(y.without(e).bits())) {
            facets_independent = false;
          }
        });
        if (!facets_independent) continue;
        if (level <= r && oracle.independent(y.elements())) {
          cur.push_back(y);
          cur_index.insert(y.bits());
        } else {
          out.circuits.push_back(y);
        }
      }
    }
    out.independent_sets += cur.size();
    prev = std::move(cur);
    prev_index = std::move(cur_index);
  }
  return out;
}

template <typename F>
void normalize(Matrix<F>& v) {
  const F& f = v.field;
  for (int c = 0; c < v.cols; ++c) {
    if (f.is_zero(v.at(0, c))) continue;
    const auto scale = f.inv(v.at(0, c));
    for (int d = c; d < v.cols; ++d) v.at(0, d) = f.mul(v.at(0, d), scale);
    return;
  }
}

template <>
void normalize(Matrix<Rationals>& v) {
  mpz_class l = 1;
  for (const mpq_class& x : v.data) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  mpz_class g = 0;
  for (const mpq_class& x : v.data) {
    const mpz_class num = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) return;
  int sign = 0;
  for (const mpq_class& x : v.data) {
    if (sgn(x) != 0) {
      sign = sgn(x);
      break;
    }
  }
  const mpq_class factor(sign * l, g);
  for (mpq_class& x : v.data) {
    x *= factor;
    x.canonicalize();
  }
}

template <typename F>
Matrix<F> circuit_vector_of(const Matrix<F>& m, Convention convention,
                            ElemSet c) {
  const F& f = m.field;
  const int n = m.cols;
  if (c.empty() || c.span() > n) {
    throw Error(ErrorCode::kNotACircuit, to_string(c) + " is not a column set");
  }
  Matrix<F> v(f, 1, n);
  if (convention == Convention::kPrimal) {
    const std::vector<int> cols = c.elements();
    const Matrix<F> k = kernel_of(select_columns(m, cols));
    if (k.rows != 1) {
      throw Error(ErrorCode::kNotACircuit,
                  to_string(c) + " has a " + std::to_string(k.rows) +
                      "-dimensional dependency space");
    }
    for (std::size_t j = 0; j < cols.size(); ++j) v.at(0, cols[j]) = k.at(0, j);
  } else {
    // Combinations y of the dual generator rows vanishing off c.
    const std::vector<int> off = (ElemSet::full(n) - c).elements();
    const Matrix<F> y = kernel_of(transpose(select_columns(m, off)));
    if (y.rows != 1) {
      throw Error(ErrorCode::kNotACircuit,
                  to_string(c) + " supports a " + std::to_string(y.rows) +
                      "-dimensional space of dual vectors");
    }
    v = multiply(y, m);
  }
  ElemSet support;
  for (int j = 0; j < n; ++j) {
    if (!f.is_zero(v.at(0, j))) support.insert(j);
  }
  if (support != c) {
    throw Error(ErrorCode::kNotACircuit,
                "dual vector on " + to_string(c) + " has support " +
                    to_string(support));
  }
  normalize(v);
  return v;
}

template <typename F>
bool annihilates(const Matrix<F>& m, const Matrix<F>& kernel) {
  return is_zero_matrix(multiply(m, transpose(kernel)));
}

template <typename F>
bool all_maximal_minors_nonzero(const Matrix<F>& m) {
  const ColumnOracle<F> oracle(m);
  const int k = m.rows;
  const int n = m.cols;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!oracle.independent(idx)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::string_view convention_name(Convention c) {
  return c == Convention::kPrimal ? "primal" : "dual";
}

RankAndKernel rank_and_kernel(const FieldMatrix& fm) {
  return std::visit(
      [](const auto& m) -> RankAndKernel {
        using F = std::decay_t<decltype(m.field)>;
        const Echelon<F> e = row_reduce(m);
        if constexpr (std::is_same_v<F, Rationals>) {
          const int fraction_free = bareiss_rank(clear_column_denominators(m));
          if (fraction_free != e.rank()) {
            throw std::logic_error("rational rank routes disagree: " +
                                   std::to_string(fraction_free) + " vs " +
                                   std::to_string(e.rank()));
          }
        }
        Matrix<F> k = kernel_of(m);
        if (!annihilates(m, k)) {
          throw std::logic_error("kernel basis does not annihilate the matrix");
        }
        return RankAndKernel{e.rank(), std::move(k)};
      },
      fm);
}

FieldMatrix primal_matrix(const Representation& r) {
  return std::visit(
      [&](const auto& m) -> FieldMatrix { return primal_of(m, r.convention); },
      r.matrix);
}

Matroid matroid_from_matrix(const Representation& r) {
  return std::visit(
      [&](const auto& m) {
        Enumeration e = enumerate_columns(primal_of(m, r.convention));
        return Matroid::from_circuits(m.cols, std::move(e.circuits));
      },
      r.matrix);
}

std::uint64_t count_independent_sets(const Representation& r) {
  return std::visit(
      [&](const auto& m) {
        return enumerate_columns(primal_of(m, r.convention)).independent_sets;
      },
      r.matrix);
}

FieldMatrix circuit_vector(const Representation& r, ElemSet c) {
  return std::visit(
      [&](const auto& m) -> FieldMatrix {
        return circuit_vector_of(leading_rows(row_reduce(m)), r.convention, c);
      },
      r.matrix);
}

FieldMatrix circuit_vector_matrix(const Representation& r, const Matroid& base) {
  return std::visit(
      [&](const auto& m) -> FieldMatrix {
        using F = std::decay_t<decltype(m.field)>;
        // Same row space, full row rank.
        const Matrix<F> source = leading_rows(row_reduce(m));
        Matrix<F> out(m.field, m.cols, base.circuit_count());
        for (int i = 0; i < base.circuit_count(); ++i) {
          const Matrix<F> v =
              circuit_vector_of(source, r.convention, base.circuits()[i]);
          for (int j = 0; j < m.cols; ++j) out.at(j, i) = v.at(0, j);
        }
        return out;
      },
      r.matrix);
}

Matroid ow_derived(const Representation& r) {
  const Matroid base = matroid_from_matrix(r);
  return matroid_from_matrix(
      Representation{circuit_vector_matrix(r, base), Convention::kPrimal});
}

Matroid longyear_derived(const Matroid& m, const Representation& binary_rep) {
  if (!(spec_of(binary_rep.matrix) == FieldSpec::prime(2))) {
    throw Error(ErrorCode::kInvalidField,
                "expected a GF(2) matrix, got " +
                    spec_of(binary_rep.matrix).describe());
  }
  const Matroid represented = matroid_from_matrix(binary_rep);
  if (!(represented == m)) {
    throw Error(ErrorCode::kRepresentationMismatch,
                "matrix has " + std::to_string(represented.circuit_count()) +
                    " circuits on " + std::to_string(represented.size()) +
                    " elements, matroid has " +
                    std::to_string(m.circuit_count()) + " on " +
                    std::to_string(m.size()));
  }
  // A family of circuits is dependent iff some nonempty part of it has empty
  // iterated symmetric difference, i.e. its indicators sum to zero mod 2.
  Matrix<GFp> incidence(GFp(2), m.size(), m.circuit_count());
  for (int i = 0; i < m.circuit_count(); ++i) {
    m.circuits()[i].for_each([&](int e) { incidence.at(e, i) = 1; });
  }
  return matroid_from_matrix(Representation{incidence, Convention::kPrimal});
}

Representation random_uniform_rep(int k, int n, const FieldSpec& field,
                                  std::uint64_t seed) {
  if (k < 0 || n < k || n > ElemSet::kMaxElements) {
    throw Error(ErrorCode::kElementOutOfRange,
                "need 0 <= k <= n <= 64, got k=" + std::to_string(k) +
                    " n=" + std::to_string(n));
  }
  constexpr int kAttempts = 1000;
  FieldMatrix fm = make_matrix(field, k, n);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    CounterRng rng(seed, static_cast<std::uint64_t>(attempt));
    const bool generic = std::visit(
        [&](auto& m) {
          using F = std::decay_t<decltype(m.field)>;
          for (auto& x : m.data) {
            if constexpr (std::is_same_v<F, GFp>) {
              x = static_cast<std::uint32_t>(rng.below(m.field.p()));
            } else if constexpr (std::is_same_v<F, GFp2>) {
              x = {static_cast<std::uint32_t>(rng.below(m.field.p())),
                   static_cast<std::uint32_t>(rng.below(m.field.p()))};
            } else {
              x = m.field.from_int(rng.between(-1000, 1000));
            }
          }
          return all_maximal_minors_nonzero(m);
        },
        fm);
    if (generic) return Representation{fm, Convention::kPrimal};
  }
  throw Error(ErrorCode::kFieldTooSmall,
              "no " + std::to_string(k) + "x" + std::to_string(n) +
                  " matrix with all maximal minors nonzero over " +
                  field.describe() + " in " + std::to_string(kAttempts) +
                  " draws");
}

std::string_view weak_order_name(WeakOrder w) {
  switch (w) {
    case WeakOrder::kEqual: return "equal";
    case WeakOrder::kGreaterOrEqual: return "greater-or-equal";
    case WeakOrder::kLessOrEqual: return "less-or-equal";
    case WeakOrder::kIncomparable: return "incomparable";
  }
  return "incomparable";
}

WeakOrder weak_order_compare(const Matroid& n1, const Matroid& n2) {
  if (n1.size() != n2.size()) {
    throw Error(ErrorCode::kGroundSizeMismatch,
                std::to_string(n1.size()) + " vs " + std::to_string(n2.size()));
  }
  auto dependent_in = [](const Matroid& from, const Matroid& to) {
    for (ElemSet c : from.circuits()) {
      if (to.is_independent(c)) return false;
    }
    return true;
  };
  const bool ge = dependent_in(n1, n2);
  const bool le = dependent_in(n2, n1);
  if (ge && le) return WeakOrder::kEqual;
  if (ge) return WeakOrder::kGreaterOrEqual;
  if (le) return WeakOrder::kLessOrEqual;
  return WeakOrder::kIncomparable;
}

std::uint64_t count_dependent_sets(const Matroid& m) {
  std::vector<CircuitSet> sets;
  for (ElemSet c : m.circuits()) sets.push_back(CircuitSet::from_word(c.bits()));
  return count_upward_closure(Antichain::from_sorted_antichain(std::move(sets)),
                              m.size());
}

}  // namespace dmat
