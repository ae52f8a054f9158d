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

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace quasiorth {

using cplx = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;
using rvec = Eigen::VectorXd;

/// Default tolerance for structural predicates and residual checks.
inline constexpr double kTol = 1e-9;

/// Normalized trace tau(a) = Tr(a) / dim(a).  All entropic and
/// orthogonality quantities in this library are stated against tau,
/// so that tau(I) = 1 in every dimension.
cplx normalized_trace(const cmat& a);

/// Hilbert-Schmidt inner product <a,b> = Tr(a^* b); conjugate-linear
/// in the first argument.
cplx hs_inner(const cmat& a, const cmat& b);

/// Kronecker (tensor) product; the first factor is the coarse grid,
/// i.e. tensor(a, b) consists of dim(b)-sized blocks a_ij * b.
cmat tensor(const cmat& a, const cmat& b);

/// eta(t) = -t log t (natural log), continuously extended by eta(0) = 0.
double eta(double t);

/// tau(eta(a)) for a Hermitian positive semidefinite matrix a.
/// Eigenvalues in (-tol, 0) are clamped to zero; an eigenvalue below
/// -tol or a non-Hermitian input raises std::domain_error.
double spectral_eta(const cmat& a, double tol = kTol);

bool is_hermitian(const cmat& a, double tol = kTol);
bool is_unitary(const cmat& a, double tol = kTol);
bool is_projection(const cmat& a, double tol = kTol);
bool is_traceless(const cmat& a, double tol = kTol);

/// The Pauli basis of M_2: sigma(0) = I, sigma(1), sigma(2), sigma(3),
/// with sigma(1) sigma(2) = i sigma(3).
const cmat& sigma(int k);

/// A signed two-fold Pauli tensor word sign * sigma_i (x) sigma_j.
struct PauliWord {
  int i = 0;
  int j = 0;
  int sign = 1;

  cmat realize() const;
  /// Unsigned name "sij", e.g. "s12" for sigma_1 (x) sigma_2.
  std::string name() const;

  bool operator==(const PauliWord&) const = default;
};

/// Product of two words: returns the resulting word indices and the
/// accumulated phase as a power of i in {0,1,2,3} (sign fields of the
/// inputs are folded into the phase).
struct WordProduct {
  int i = 0;
  int j = 0;
  int phase_pow = 0;  // product = i^phase_pow * sigma_i (x) sigma_j
};
WordProduct word_product(const PauliWord& a, const PauliWord& b);

/// Column-major vectorization and its inverse.
cvec vec(const cmat& a);
cmat unvec(const cvec& v, int n);

/// Real coordinates of a Hermitian matrix such that the Euclidean dot
/// product of two coordinate vectors equals Tr(ab).
rvec herm_coords(const cmat& a);
cmat herm_uncoords(const rvec& v, int n);

}  // namespace quasiorth
