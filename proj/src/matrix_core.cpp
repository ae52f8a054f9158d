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

#include "quasiorth/matrix_core.hpp"

#include <cmath>
#include <stdexcept>

namespace quasiorth {

cplx normalized_trace(const cmat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("normalized_trace: square matrix required");
  return a.trace() / static_cast<double>(a.rows());
}

cplx hs_inner(const cmat& a, const cmat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hs_inner: shape mismatch");
  return a.conjugate().cwiseProduct(b).sum();
}

cmat tensor(const cmat& a, const cmat& b) {
  cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

double eta(double t) { return t <= 0.0 ? 0.0 : -t * std::log(t); }

double spectral_eta(const cmat& a, double tol) {
  if (!is_hermitian(a, tol)) throw std::domain_error("spectral_eta: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<cmat> es(a, Eigen::EigenvaluesOnly);
  const rvec& ev = es.eigenvalues();
  double acc = 0.0;
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    double t = ev[k];
    if (t < -tol) throw std::domain_error("spectral_eta: eigenvalue below -tol");
    acc += eta(t < 0.0 ? 0.0 : t);
  }
  return acc / static_cast<double>(a.rows());
}

bool is_hermitian(const cmat& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() < tol;
}

bool is_unitary(const cmat& a, double tol) {
  if (a.rows() != a.cols()) return false;
  cmat g = a.adjoint() * a;
  g.diagonal().array() -= 1.0;
  return g.cwiseAbs().maxCoeff() < tol;
}

bool is_projection(const cmat& a, double tol) {
  if (!is_hermitian(a, tol)) return false;
  return (a * a - a).cwiseAbs().maxCoeff() < tol;
}

bool is_traceless(const cmat& a, double tol) { return std::abs(a.trace()) < tol; }

const cmat& sigma(int k) {
  static const cmat s0 = (cmat(2, 2) << 1, 0, 0, 1).finished();
  static const cmat s1 = (cmat(2, 2) << 0, 1, 1, 0).finished();
  static const cmat s2 = (cmat(2, 2) << 0, cplx(0, -1), cplx(0, 1), 0).finished();
  static const cmat s3 = (cmat(2, 2) << 1, 0, 0, -1).finished();
  switch (k) {
    case 0: return s0;
    case 1: return s1;
    case 2: return s2;
    case 3: return s3;
    default: throw std::invalid_argument("sigma: index out of range");
  }
}

cmat PauliWord::realize() const {
  if (i < 0 || i > 3 || j < 0 || j > 3) throw std::invalid_argument("PauliWord: bad index");
  return static_cast<double>(sign) * tensor(sigma(i), sigma(j));
}

std::string PauliWord::name() const {
  return "s" + std::to_string(i) + std::to_string(j);
}

namespace {

// sigma_a sigma_b = i^phase * sigma_c for single-qubit indices.
void single_product(int a, int b, int& c, int& phase) {
  if (a == 0) { c = b; phase = 0; return; }
  if (b == 0) { c = a; phase = 0; return; }
  if (a == b) { c = 0; phase = 0; return; }
  // remaining index and the sign of the epsilon tensor
  c = 6 - a - b;
  bool even = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
  phase = even ? 1 : 3;  // +i or -i
}

}  // namespace

WordProduct word_product(const PauliWord& a, const PauliWord& b) {
  WordProduct out;
  int p1 = 0, p2 = 0;
  single_product(a.i, b.i, out.i, p1);
  single_product(a.j, b.j, out.j, p2);
  int sign_pow = (a.sign * b.sign > 0) ? 0 : 2;
  out.phase_pow = (p1 + p2 + sign_pow) % 4;
  return out;
}

cvec vec(const cmat& a) {
  return Eigen::Map<const cvec>(a.data(), a.size());
}

cmat unvec(const cvec& v, int n) {
  if (v.size() != static_cast<Eigen::Index>(n) * n) throw std::invalid_argument("unvec: bad size");
  return Eigen::Map<const cmat>(v.data(), n, n);
}

rvec herm_coords(const cmat& a) {
  const Eigen::Index n = a.rows();
  rvec v(n * n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) v[k++] = a(i, i).real();
  const double rt2 = std::sqrt(2.0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      v[k++] = rt2 * a(i, j).real();
      v[k++] = rt2 * a(i, j).imag();
    }
  return v;
}

cmat herm_uncoords(const rvec& v, int n) {
  if (v.size() != static_cast<Eigen::Index>(n) * n) throw std::invalid_argument("herm_uncoords: bad size");
  cmat a(n, n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) = v[k++];
  const double rt2 = std::sqrt(2.0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double re = v[k++] / rt2;
      double im = v[k++] / rt2;
      a(i, j) = cplx(re, im);
      a(j, i) = cplx(re, -im);
    }
  return a;
}

}  // namespace quasiorth
