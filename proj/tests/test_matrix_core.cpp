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

#include "doctest.h"
#include "quasiorth/matrix_core.hpp"
#include "quasiorth/random.hpp"

using namespace quasiorth;

TEST_CASE("normalized trace of a rank-two projection in M4 is 1/2") {
  cmat e11 = cmat::Zero(2, 2);
  e11(0, 0) = 1;
  cmat p = tensor(e11, cmat::Identity(2, 2));
  CHECK(std::abs(normalized_trace(p) - cplx(0.5, 0.0)) < kTol);
  CHECK(std::abs(normalized_trace(cmat::Identity(3, 3)) - cplx(1, 0)) < kTol);
}

TEST_CASE("hs_inner is conjugate-linear in the first argument") {
  Rng rng(11);
  cmat a = rng.ginibre(3), b = rng.ginibre(3);
  cplx z(0.7, -1.3);
  CHECK(std::abs(hs_inner(z * a, b) - std::conj(z) * hs_inner(a, b)) < 1e-12);
  CHECK(std::abs(hs_inner(a, z * b) - z * hs_inner(a, b)) < 1e-12);
  CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-12);
  // <a,a> = squared Frobenius norm
  CHECK(hs_inner(a, a).real() == doctest::Approx(a.squaredNorm()).epsilon(1e-12));
  CHECK(std::abs(hs_inner(a, a).imag()) < 1e-12);
}

TEST_CASE("tensor of sigma1 with sigma1 is the anti-diagonal permutation") {
  cmat t = tensor(sigma(1), sigma(1));
  cmat expect = cmat::Zero(4, 4);
  expect(0, 3) = expect(1, 2) = expect(2, 1) = expect(3, 0) = 1;
  CHECK((t - expect).cwiseAbs().maxCoeff() < kTol);
}

TEST_CASE("tensor is associative and multiplicative") {
  Rng rng(12);
  cmat a = rng.ginibre(2), b = rng.ginibre(3), c = rng.ginibre(2);
  CHECK((tensor(tensor(a, b), c) - tensor(a, tensor(b, c))).cwiseAbs().maxCoeff() < 1e-12);
  cmat a2 = rng.ginibre(2), b2 = rng.ginibre(3);
  CHECK((tensor(a * a2, b * b2) - tensor(a, b) * tensor(a2, b2)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("spectral_eta on reference spectra") {
  // diag(1/2, 1/2): tau(eta) = (1/2) log 2
  cmat half = 0.5 * cmat::Identity(2, 2);
  CHECK(spectral_eta(half) == doctest::Approx(0.34657359027997264).epsilon(1e-12));
  // twice a rank-one projection in M2: tau(eta) = -log 2
  cmat p = cmat::Zero(2, 2);
  p(0, 0) = 2.0;
  CHECK(spectral_eta(p) == doctest::Approx(-0.6931471805599453).epsilon(1e-12));
  CHECK(spectral_eta(cmat::Identity(5, 5)) == doctest::Approx(0.0));
}

TEST_CASE("spectral_eta clamps tiny negatives and rejects real ones") {
  cmat a = cmat::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = -1e-10;  // inside (-tol, 0): clamped
  CHECK(spectral_eta(a) == doctest::Approx(0.0).epsilon(1e-9));
  a(1, 1) = -0.1;
  CHECK_THROWS_AS(spectral_eta(a), std::domain_error);
  cmat nh = cmat::Zero(2, 2);
  nh(0, 1) = 1.0;
  CHECK_THROWS_AS(spectral_eta(nh), std::domain_error);
}

TEST_CASE("spectral_eta is invariant under unitary conjugation") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    cmat rho = rng.density(4);
    cmat u = rng.haar_unitary(4);
    CHECK(std::abs(spectral_eta(u * rho * u.adjoint()) - spectral_eta(rho)) < 10 * kTol);
  }
}

TEST_CASE("sixteen Pauli words are pairwise orthogonal with norm-squared 4") {
  for (int a = 0; a < 16; ++a) {
    cmat wa = PauliWord{a / 4, a % 4}.realize();
    for (int b = 0; b < 16; ++b) {
      cmat wb = PauliWord{b / 4, b % 4}.realize();
      cplx ip = hs_inner(wa, wb);
      if (a == b) {
        CHECK(std::abs(ip - cplx(4, 0)) < kTol);
      } else {
        CHECK(std::abs(ip) < kTol);
      }
    }
  }
}

TEST_CASE("pauli product table") {
  // sigma1 sigma2 = i sigma3, checked through word_product
  WordProduct w = word_product(PauliWord{1, 0}, PauliWord{2, 0});
  CHECK(w.i == 3);
  CHECK(w.j == 0);
  CHECK(w.phase_pow == 1);
  // and against the realized matrices for every pair of words
  cplx iu(0, 1);
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      PauliWord wa{a / 4, a % 4}, wb{b / 4, b % 4};
      WordProduct prod = word_product(wa, wb);
      cmat lhs = wa.realize() * wb.realize();
      cmat rhs = std::pow(iu, prod.phase_pow) * PauliWord{prod.i, prod.j}.realize();
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < kTol);
    }
}

TEST_CASE("structural predicates") {
  for (int k = 0; k < 4; ++k) {
    CHECK(is_hermitian(sigma(k)));
    CHECK(is_unitary(sigma(k)));
    CHECK(is_traceless(sigma(k)) == (k != 0));
  }
  cmat e11 = cmat::Zero(2, 2);
  e11(0, 0) = 1;
  CHECK(is_projection(e11));
  CHECK(is_projection(0.5 * (cmat::Identity(2, 2) + sigma(1))));
  CHECK_FALSE(is_projection(sigma(1)));
  CHECK_FALSE(is_unitary(0.5 * sigma(1)));
  Rng rng(14);
  cmat u = rng.haar_unitary(5);
  CHECK(is_unitary(u));
  CHECK_FALSE(is_hermitian(u));
}

TEST_CASE("vec round trip and hermitian coordinates preserve the trace form") {
  Rng rng(15);
  cmat a = rng.ginibre(3);
  CHECK((unvec(vec(a), 3) - a).cwiseAbs().maxCoeff() == 0.0);
  cmat h1 = 2.0 * rng.psd(4);
  cmat h2 = rng.psd(4) - 0.3 * cmat::Identity(4, 4);
  double dot = herm_coords(h1).dot(herm_coords(h2));
  CHECK(dot == doctest::Approx((h1 * h2).trace().real()).epsilon(1e-10));
  CHECK((herm_uncoords(herm_coords(h1), 4) - h1).cwiseAbs().maxCoeff() < 1e-12);
}
