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

#include <vector>

#include "quasiorth/matrix_core.hpp"
#include "quasiorth/subalgebra.hpp"

namespace quasiorth::testing {

inline cmat unit(int n, int r, int c) {
  cmat e = cmat::Zero(n, n);
  e(r, c) = 1;
  return e;
}

/// Diagonal maximal Abelian subalgebra of M_n.
inline Subalgebra diag_masa(int n) {
  std::vector<cmat> gens;
  for (int k = 0; k < n; ++k) gens.push_back(unit(n, k, k));
  return from_generators(n, gens);
}

/// The left tensor factor M_2 (x) CI of M_4, generated from matrix
/// units so the minimal projections come out as E11 (x) I, E22 (x) I.
inline Subalgebra left_factor() {
  const cmat id = cmat::Identity(2, 2);
  return from_generators(4, {tensor(unit(2, 0, 0), id), tensor(unit(2, 0, 1), id),
                             tensor(unit(2, 1, 0), id), tensor(unit(2, 1, 1), id)});
}

inline Subalgebra right_factor() {
  const cmat id = cmat::Identity(2, 2);
  return from_generators(4, {tensor(id, unit(2, 0, 0)), tensor(id, unit(2, 0, 1)),
                             tensor(id, unit(2, 1, 0)), tensor(id, unit(2, 1, 1))});
}

/// MASA spanned by I and the three double Pauli words s11, s22, s33.
inline Subalgebra bell_masa() {
  return from_generators(
      4, {tensor(sigma(1), sigma(1)), tensor(sigma(2), sigma(2)), tensor(sigma(3), sigma(3))});
}

inline std::vector<cvec> bell_vectors() {
  std::vector<cvec> v(4, cvec::Zero(4));
  const double s = 1.0 / std::sqrt(2.0);
  v[0][0] = s; v[0][3] = s;   // (|00> + |11>)/sqrt2
  v[1][1] = s; v[1][2] = s;   // (|01> + |10>)/sqrt2
  v[2][0] = s; v[2][3] = -s;  // (|00> - |11>)/sqrt2
  v[3][1] = s; v[3][2] = -s;  // (|01> - |10>)/sqrt2
  return v;
}

inline bool family_matches(const std::vector<cmat>& fam, const std::vector<cmat>& expect,
                           double tol = 1e-9) {
  if (fam.size() != expect.size()) return false;
  std::vector<bool> used(expect.size(), false);
  for (const cmat& p : fam) {
    bool hit = false;
    for (std::size_t k = 0; k < expect.size() && !hit; ++k) {
      if (!used[k] && (p - expect[k]).cwiseAbs().maxCoeff() < tol) {
        used[k] = true;
        hit = true;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace quasiorth::testing
