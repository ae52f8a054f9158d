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

#ifndef QUASIORTH_FOUR_LEVEL_HPP_
#define QUASIORTH_FOUR_LEVEL_HPP_

#include <array>
#include <vector>

#include "quasiorth/matrix_core.hpp"
#include "quasiorth/subalgebra.hpp"

namespace quasiorth {

enum class TripletKind { F, M };

std::string to_string(TripletKind kind);

// Three P-unitaries (self-adjoint traceless unitaries) of M4 satisfying
// s3 = sign*i*s1*s2 (kind F) or s3 = sign*s1*s2 (kind M). The span of
// {I, s1, s2, s3} is a subalgebra: a factor isomorphic to M2 for kind F,
// a MASA for kind M.
struct Triplet {
  std::array<cmat, 3> s;
  TripletKind kind;
  int sign;  // +1 or -1, recorded from the defining relation
};

// Validates P-unitarity of all three inputs and determines the kind and
// sign. Throws std::invalid_argument when some input is not a P-unitary
// or no sign choice satisfies either defining relation.
Triplet classify_triplet(const cmat& s1, const cmat& s2, const cmat& s3,
                         double tol = 1e-8);

// The unital span of a triplet, closed as a *-algebra.
Subalgebra triplet_algebra(const Triplet& t);

struct BellFactorization {
  Triplet a_triplet;  // lives in the given factor
  Triplet b_triplet;  // lives in its commutant
  double residual;    // max over i of ||t_i - a_i b_i||_max
};

// Splits an M-triplet t across the tensor decomposition induced by a
// factor a isomorphic to M2: returns F-triplets (a_i) in a and (b_i) in
// the commutant of a with t_i = a_i b_i exactly. Requires t to be
// HS-orthogonal to both a and its commutant (modulo scalars); throws
// std::invalid_argument otherwise, and std::runtime_error when a traceless
// Schmidt rank above one signals a violated precondition.
BellFactorization bell_factorize(const Subalgebra& a, const Triplet& t);

struct PauliTripleAlg {
  std::array<PauliWord, 3> words;  // sorted by word index
  Subalgebra algebra;
};

struct PauliCatalog {
  std::vector<PauliTripleAlg> masas;    // commuting triples
  std::vector<PauliTripleAlg> factors;  // anticommuting triples
};

// Enumerates all unordered triples {a, b, ab} of nonidentity Pauli words
// modulo sign: commuting triples span MASAs, anticommuting ones span
// factors isomorphic to M2. The counts (15 and 20) are computed, not
// assumed.
PauliCatalog enumerate_pauli_subalgebras();

struct DecompositionFamily {
  std::vector<std::array<PauliWord, 3>> triples;
  std::vector<AlgKind> kinds;  // per triple: Abelian (M) or Factor (F)
  std::vector<Subalgebra> members;
  int ell = 0;  // number of factor members
  bool pairwise_ok = false;
};

// Finds every partition of the fifteen nonidentity Pauli words into five
// triples of the catalog, i.e. every pairwise-complementary family of five
// Pauli-spanned subalgebras covering M4. Results are ordered
// lexicographically by word indices.
std::vector<DecompositionFamily> complementary_family_search(
    int target_size = 5);

struct Theorem6Report {
  bool precondition_ok = false;  // b complementary to a0
  char branch = '-';             // 'a' when b is a MASA, 'b' for a factor
  bool ok = false;
  double residual = 0.0;
  bool commutant_equals_b = false;
  int intersection_dim = 0;  // traceless dim of commutant(a0) ∩ b
};

// For an F-subalgebra a0 and a subalgebra b complementary to it: a MASA b
// must be complementary to the commutant of a0 (branch a); a factor b must
// either equal that commutant or intersect it in a traceless dimension of
// exactly one (branch b). When b is not complementary to a0 the report
// only records the failed precondition.
Theorem6Report theorem6_check(const Subalgebra& a0, const Subalgebra& b);

}  // namespace quasiorth

#endif  // QUASIORTH_FOUR_LEVEL_HPP_
