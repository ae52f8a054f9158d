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

#include "quasiorth/constructions.hpp"

#include <cmath>
#include <stdexcept>

namespace quasiorth {

namespace {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

cmat mat_pow(const cmat& a, int e) {
  cmat out = cmat::Identity(a.rows(), a.cols());
  for (int k = 0; k < e; ++k) out = out * a;
  return out;
}

}  // namespace

cmat quantum_fourier(int n) {
  if (n < 1) throw std::invalid_argument("quantum_fourier: dimension must be positive");
  cmat v(n, n);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      v(j, k) = s * std::exp(cplx(0.0, 2.0 * M_PI * j * k / n));
  return v;
}

WeylSystem weyl_system(int p) {
  if (p < 2) throw std::invalid_argument("weyl_system: p must be at least 2");
  WeylSystem w;
  w.p = p;
  w.q = std::exp(cplx(0.0, 2.0 * M_PI / p));
  w.odd_prime = is_odd_prime(p);
  w.x = cmat::Zero(p, p);
  for (int i = 0; i < p; ++i) w.x((i + 1) % p, i) = 1;
  w.z = cmat::Zero(p, p);
  for (int i = 0; i < p; ++i) w.z(i, i) = std::pow(w.q, i);
  w.relation_residual = (w.z * w.x - w.q * w.x * w.z).cwiseAbs().maxCoeff();
  return w;
}

int symplectic(const PhasePoint& u, const PhasePoint& v, int p) {
  if (p < 2) throw std::invalid_argument("symplectic: p must be at least 2");
  long s = static_cast<long>(u.k1) * v.l1 - static_cast<long>(v.k1) * u.l1 +
           static_cast<long>(u.k2) * v.l2 - static_cast<long>(v.k2) * u.l2;
  long r = s % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

cmat pi_op(const PhasePoint& u, int p) {
  WeylSystem w = weyl_system(p);
  auto reduce = [p](int e) { int r = e % p; return r < 0 ? r + p : r; };
  return tensor(mat_pow(w.x, reduce(u.k1)) * mat_pow(w.z, reduce(u.l1)),
                mat_pow(w.x, reduce(u.k2)) * mat_pow(w.z, reduce(u.l2)));
}

Subalgebra weyl_subalgebra(const PhasePoint& u, const PhasePoint& v, int p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("weyl_subalgebra: p must be an odd prime");
  if (symplectic(u, v, p) == 0)
    throw std::invalid_argument("weyl_subalgebra: degenerate pair (symplectic form vanishes)");
  Subalgebra a = from_generators(p * p, {pi_op(u, p), pi_op(v, p)});
  if (a.traceless_dim() != p * p - 1 || a.kind != AlgKind::Factor)
    throw std::runtime_error("weyl_subalgebra: generated algebra has unexpected structure");
  return a;
}

BlockCriterionResult block_criterion(const cmat& w, int n, int m, double tol) {
  if (n < 1 || m < 1 || w.rows() != static_cast<Eigen::Index>(n) * m || w.rows() != w.cols())
    throw std::invalid_argument("block_criterion: W must be square of dimension n*m");
  if (!is_unitary(w, 1e-8)) throw std::invalid_argument("block_criterion: W must be unitary");

  BlockCriterionResult res;
  res.m_lt_n = m < n;
  const int mm = m * m;
  cmat t = cmat::Zero(mm, mm);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      cvec bk = vec(w.block(static_cast<Eigen::Index>(r) * m, static_cast<Eigen::Index>(c) * m, m, m));
      t += bk * bk.adjoint();
    }
  t *= static_cast<double>(m) / n;
  res.residual = (t - cmat::Identity(mm, mm)).cwiseAbs().maxCoeff();
  res.holds = !res.m_lt_n && res.residual < tol;

  // Independent verification through the subalgebra machinery.
  std::vector<cmat> gens;
  const cmat idn = cmat::Identity(n, n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      cmat e = cmat::Zero(m, m);
      e(r, c) = 1;
      gens.push_back(tensor(idn, e));
    }
  Subalgebra fixed = from_generators(n * m, gens);
  res.complementary = complementarity_report(conjugated(fixed, w), fixed).verdict;
  return res;
}

CarModel car_model() {
  CarModel car;
  cmat e12 = cmat::Zero(2, 2);
  e12(0, 1) = 1;
  const cmat id2 = cmat::Identity(2, 2);
  car.a1 = tensor(e12, id2);
  car.a2 = tensor(sigma(3), e12);
  car.parity = tensor(sigma(3), sigma(3));
  car.alg1 = from_generators(4, {car.a1, car.a1.adjoint()});
  car.alg2 = from_generators(4, {car.a2, car.a2.adjoint()});
  car.even_bases = {{{PauliWord{0, 0}, PauliWord{1, 1}, PauliWord{2, 2}, PauliWord{3, 3}},
                     {PauliWord{0, 3}, PauliWord{1, 2}, PauliWord{2, 1}, PauliWord{3, 0}}}};

  const cmat id4 = cmat::Identity(4, 4);
  auto anti = [](const cmat& x, const cmat& y) { return cmat(x * y + y * x); };
  double r = 0.0;
  const cmat ops[2] = {car.a1, car.a2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      r = std::max(r, anti(ops[i], ops[j]).cwiseAbs().maxCoeff());
      cmat mixed = anti(ops[i], ops[j].adjoint());
      if (i == j) mixed -= id4;
      r = std::max(r, mixed.cwiseAbs().maxCoeff());
    }
  car.car_residual = r;
  if (r > kTol) throw std::runtime_error("car_model: anticommutation identities failed");
  return car;
}

}  // namespace quasiorth
