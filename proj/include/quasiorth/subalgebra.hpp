// Copyright 2026 quasiorth developers
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

#include <optional>
#include <string>
#include <vector>

#include "quasiorth/matrix_core.hpp"

namespace quasiorth {

enum class AlgKind { Abelian, Factor, General };

std::string to_string(AlgKind k);
AlgKind alg_kind_from_string(const std::string& s);

/// A unital *-subalgebra of M_n, stored as a tau-orthonormal basis of
/// its traceless Hermitian part (the identity is always implicit), so
/// the complex dimension of the algebra is traceless_dim() + 1.
struct Subalgebra {
  int ambient_dim = 0;
  std::vector<cmat> basis;
  AlgKind kind = AlgKind::Abelian;
  /// Common trace of the minimal projections, when they all agree.
  std::optional<double> homogeneity;

  int traceless_dim() const { return static_cast<int>(basis.size()); }
};

/// Smallest unital *-subalgebra of M_n containing the generators.
/// The linear span is closed under adjoints and pairwise products
/// until the dimension stabilizes (capped at 2 n^2 rounds).
Subalgebra from_generators(int n, const std::vector<cmat>& gens);

/// u A u^* for a unitary u (same kind and homogeneity).
Subalgebra conjugated(const Subalgebra& a, const cmat& u);

/// Trace-preserving conditional expectation onto the algebra: the
/// orthogonal projection of x onto span{I} + basis in the
/// Hilbert-Schmidt geometry.
cmat conditional_expectation(const Subalgebra& a, const cmat& x);

/// A maximal family of pairwise orthogonal minimal projections,
/// deterministic given the basis ordering (the first basis element's
/// spectral decomposition seeds the refinement).  Works for every
/// kind; the projections sum to the identity.
std::vector<cmat> minimal_projection_family(const Subalgebra& a);

/// Public variant restricted to Abelian and Factor algebras
/// (kind = General is rejected with std::invalid_argument).
std::vector<cmat> minimal_projections(const Subalgebra& a);

struct ConditionResult {
  bool ok = true;
  double residual = 0.0;
  /// False when the condition could not be evaluated (minimal
  /// projections unavailable); ok is then vacuously true.
  bool computed = true;
};

/// The four equivalent characterizations of a complementary
/// (quasi-orthogonal) pair of subalgebras:
///   i   tau(PQ) = tau(P) tau(Q) over minimal projections,
///   ii  the traceless parts are Hilbert-Schmidt orthogonal,
///   iii tau(ab) = tau(a) tau(b) for a in A, b in B,
///   iv  the conditional expectation onto A maps B to scalars.
/// The verdict is condition ii.
struct ComplementarityReport {
  ConditionResult cond_i, cond_ii, cond_iii, cond_iv;
  bool verdict = false;
  std::optional<double> d_a, d_b;
};

ComplementarityReport complementarity_report(const Subalgebra& a, const Subalgebra& b,
                                             double tol = kTol);

struct HadamardResult {
  bool ok = false;
  double residual = 0.0;
};

/// Whether every entry of u^* v has modulus 1/sqrt(n), i.e. the bases
/// transformed by u and v are mutually unbiased.
HadamardResult transition_is_hadamard(const cmat& u, const cmat& v, double tol = kTol);

/// Relative commutant of A inside the ambient matrix algebra.
Subalgebra commutant(const Subalgebra& a);

/// Intersection A with B as *-algebras (computed from the span
/// projectors, then re-closed).
Subalgebra intersect(const Subalgebra& a, const Subalgebra& b);

/// x lies in span{I} + basis within tolerance.
bool span_contains(const Subalgebra& a, const cmat& x, double tol = kTol);
bool spans_equal(const Subalgebra& a, const Subalgebra& b, double tol = kTol);

}  // namespace quasiorth
