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

#ifndef QUASIORTH_ENTROPY_HPP_
#define QUASIORTH_ENTROPY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "quasiorth/matrix_core.hpp"
#include "quasiorth/subalgebra.hpp"

namespace quasiorth {

// One term of a convex decomposition of the identity: a positive weight
// together with a density matrix normalized against the tracial state,
// i.e. rho is Hermitian PSD with normalized_trace(rho) = 1.
struct DecTerm {
  double weight;
  cmat rho;
};

// A finite family (weight_i, rho_i) with sum_i weight_i rho_i = I.
struct ConvexDecomposition {
  std::vector<DecTerm> terms;

  // The one-term decomposition {(1, I)} in dimension n.
  static ConvexDecomposition trivial(int n);
};

// Throws std::invalid_argument naming the first violated invariant:
// positive weights, Hermitian PSD densities, unit normalized trace,
// and sum_i weight_i rho_i = I.
void validate_decomposition(const ConvexDecomposition& dec, int n);

// Conditional entropy functional of a fixed decomposition, in nats:
//   sum_i weight_i (tau(eta(E_B rho_i)) - tau(eta(E_A rho_i))).
double evaluate(const Subalgebra& a, const Subalgebra& b,
                const ConvexDecomposition& dec);

// Removes real-linear dependences among the densities without decreasing
// evaluate(a, b, .): while some sum_i alpha_i rho_i = 0 exists, the weights
// move along weight_i + t alpha_i to the endpoint of the feasible interval
// favoured by the (affine) objective, and vanished terms are dropped.
// The result has at most n^2 linearly independent densities.
ConvexDecomposition prune(const ConvexDecomposition& dec, const Subalgebra& a,
                          const Subalgebra& b);

// -log d in nats, where d is the common trace of the minimal projections
// of a. Throws std::invalid_argument listing the observed traces when the
// minimal projections are not all of equal trace.
double upper_bound(const Subalgebra& a);

struct EstimateOptions {
  int restarts = 8;
  int max_iters = 500;
  std::uint64_t seed = 0;
  // Number of terms in each randomized starting decomposition; 0 selects
  // the default n^2 (no maximizer needs more, by the pruning argument).
  int m = 0;
};

struct EntropyEstimate {
  // Best value found, in nats; a certified lower bound on the supremum.
  double value = 0.0;
  ConvexDecomposition decomposition;
  // -log d and bound - value, present when `a` is homogeneous.
  std::optional<double> bound;
  std::optional<double> gap;
  int restarts_used = 0;
  // Ascent iterations spent by the winning candidate (0 when a seed wins).
  int iterations = 0;
  std::uint64_t seed = 0;
  // Set when value < 1e-6; a vanishing supremum indicates a <= b.
  bool possible_inclusion = false;
};

// Maximizes evaluate(a, b, .) over convex decompositions of the identity:
// takes the best of the minimal-projection seed, the trivial decomposition
// and `restarts` random starts refined by projected gradient ascent, each
// pruned. Deterministic for a fixed seed; ties resolve to the candidate
// generated first. Restarts may run concurrently (QUASIORTH_THREADS caps
// the worker count) without affecting the result.
EntropyEstimate estimate(const Subalgebra& a, const Subalgebra& b,
                         const EstimateOptions& opts = {});

struct ProbeOptions {
  double fd_step = 1e-4;
  int grid = 2048;
};

// Outcome of the one-parameter probe of the closed-form entropy formula
// for a pair of qubit projections at angle beta.
struct AppendixProbe {
  // Value of the candidate formula: eta((1+cos b)/2) + eta((1-cos b)/2).
  double C = 0.0;
  // f(t) compares the formula along a rotating third projection; f(0) = C.
  std::function<double(double)> f;
  double f_prime_0 = 0.0;
  // True when the derivative at 0 is nonzero and a t* with f(t*) > C was
  // found: the formula is then not the supremum it was conjectured to be.
  bool refuted = false;
  std::optional<double> witness_t;
  std::optional<double> margin;
};

AppendixProbe appendix_probe(double beta, const ProbeOptions& opts = {});

}  // namespace quasiorth

#endif  // QUASIORTH_ENTROPY_HPP_
