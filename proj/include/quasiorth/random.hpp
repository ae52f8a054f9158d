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

#include <cstdint>
#include <random>

#include "quasiorth/matrix_core.hpp"

namespace quasiorth {

/// Deterministic random source.  Distributions are implemented by hand
/// (std:: distributions are implementation-defined), so identical seeds
/// reproduce identical values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(mix(seed)) {}

  /// Independent stream derived from (seed, index).
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(mix(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
  }

  /// Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

  /// Standard normal via Box-Muller.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

  cplx cgaussian() { return cplx(gaussian(), gaussian()) / std::sqrt(2.0); }

  cmat ginibre(int n) {
    cmat g(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) g(r, c) = cgaussian();
    return g;
  }

  /// Haar-distributed unitary (QR of a Ginibre matrix with the phase
  /// of the R diagonal normalized away).
  cmat haar_unitary(int n) {
    cmat g = ginibre(n);
    Eigen::HouseholderQR<cmat> qr(g);
    cmat q = qr.householderQ();
    cmat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < n; ++k) {
      cplx d = r(k, k);
      q.col(k) *= (std::abs(d) > 0) ? d / std::abs(d) : cplx(1, 0);
    }
    return q;
  }

  /// Random positive semidefinite matrix G G^*.
  cmat psd(int n) {
    cmat g = ginibre(n);
    return g * g.adjoint();
  }

  /// Random density in the tau sense: PSD with tau(rho) = 1.
  cmat density(int n) {
    cmat p = psd(n);
    return p * (static_cast<double>(n) / p.trace().real());
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace quasiorth
