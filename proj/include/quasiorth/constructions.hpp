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

#include <array>

#include "quasiorth/matrix_core.hpp"
#include "quasiorth/subalgebra.hpp"

namespace quasiorth {

/// Discrete Fourier unitary with entries omega^{jk} / sqrt(n),
/// omega = exp(2 pi i / n).
cmat quantum_fourier(int n);

/// Cyclic shift X and modulation Z on C^p with Z X = q X Z,
/// q = exp(2 pi i / p).
struct WeylSystem {
  int p = 0;
  cplx q;
  cmat x, z;
  /// The subalgebra constructions require p an odd prime; X and Z
  /// themselves are fine for any p >= 2, so this is only a warning.
  bool odd_prime = false;
  double relation_residual = 0.0;
};
WeylSystem weyl_system(int p);

/// A point of the discrete phase space (Z_p)^4 labelling the two-fold
/// tensor displacement X^{k1} Z^{l1} (x) X^{k2} Z^{l2}.
struct PhasePoint {
  int k1 = 0, l1 = 0, k2 = 0, l2 = 0;
};

/// Symplectic form k1 l1' - k1' l1 + k2 l2' - k2' l2 reduced mod p
/// into [0, p).
int symplectic(const PhasePoint& u, const PhasePoint& v, int p);

cmat pi_op(const PhasePoint& u, int p);

/// Subalgebra of M_p (x) M_p generated by pi(u) and pi(v); requires p
/// an odd prime and a nondegenerate pair (symplectic(u,v) != 0), and
/// comes out isomorphic to M_p.
Subalgebra weyl_subalgebra(const PhasePoint& u, const PhasePoint& v, int p);

struct BlockCriterionResult {
  bool holds = false;
  double residual = 0.0;
  /// The criterion is reported false whenever m < n.
  bool m_lt_n = false;
  /// Independent cross-check: complementarity of W (CI (x) M_m) W^*
  /// with CI (x) M_m.
  bool complementary = false;
};

/// Evaluates whether (m/n) sum_k |W_k><W_k| is the identity map on
/// M_m, where W_k runs over the n x n coarse blocks of W (row-major).
BlockCriterionResult block_criterion(const cmat& w, int n, int m, double tol = kTol);

/// Two fermion annihilators on C^4 with their generated subalgebras,
/// the parity unitary, and two four-tuples of Pauli words spanning the
/// even part (the first tuple is the Abelian Bell family).
struct CarModel {
  cmat a1, a2, parity;
  Subalgebra alg1, alg2;
  std::array<std::array<PauliWord, 4>, 2> even_bases;
  double car_residual = 0.0;
};
CarModel car_model();

}  // namespace quasiorth
