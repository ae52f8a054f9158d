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

#include "quasiorth/entropy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "quasiorth/random.hpp"

namespace quasiorth {

namespace {

constexpr double kWeightFloor = 1e-12;
constexpr double kEtaSlack = 1e-7;  // tolerated PSD drift inside eta

// Applies fn to the eigenvalues of a Hermitian matrix.
cmat hermitian_map(const cmat& h, const std::function<double(double)>& fn) {
  Eigen::SelfAdjointEigenSolver<cmat> es(h);
  rvec vals = es.eigenvalues();
  for (int i = 0; i < vals.size(); ++i) vals(i) = fn(vals(i));
  return es.eigenvectors() * vals.asDiagonal() *
         es.eigenvectors().adjoint();
}

cmat clamp_psd(const cmat& h) {
  return hermitian_map(h, [](double x) { return std::max(x, 0.0); });
}

// S^{-1/2} for a positive definite S; empty matrix when S is too singular.
cmat inv_sqrt(const cmat& s) {
  Eigen::SelfAdjointEigenSolver<cmat> es(s);
  if (es.eigenvalues().minCoeff() < 1e-12) return cmat();
  rvec vals = es.eigenvalues();
  for (int i = 0; i < vals.size(); ++i) vals(i) = 1.0 / std::sqrt(vals(i));
  return es.eigenvectors() * vals.asDiagonal() *
         es.eigenvectors().adjoint();
}

// Conjugates every term by S^{-1/2}, S = sum of terms, restoring the
// resolution of the identity exactly. Returns false when S is singular.
bool restore_identity(std::vector<cmat>* ms) {
  const int n = static_cast<int>((*ms)[0].rows());
  cmat s = cmat::Zero(n, n);
  for (const cmat& m : *ms) s += m;
  cmat t = inv_sqrt(s);
  if (t.size() == 0) return false;
  for (cmat& m : *ms) m = t * m * t;
  return true;
}

// Objective in the absorbed parametrization M_i = weight_i rho_i:
//   sum_i tau(eta(E_B M_i)) - tau(eta(E_A M_i)),
// which equals evaluate() because the eta(weight) parts cancel between
// the two conditional expectations.
double objective(const Subalgebra& a, const Subalgebra& b,
                 const std::vector<cmat>& ms) {
  double total = 0.0;
  for (const cmat& m : ms)
    total += spectral_eta(conditional_expectation(b, m), kEtaSlack) -
             spectral_eta(conditional_expectation(a, m), kEtaSlack);
  return total;
}

struct AscentResult {
  double value = 0.0;
  std::vector<cmat> ms;
  int iterations = 0;
};

// Projected gradient ascent over PSD families with sum M_i = I. Steps use
// the mean-centred gradient (tangent to the sum constraint), a PSD clamp,
// and an exact S^{-1/2}-sandwich feasibility restore; a backtracking line
// search rejects non-improving steps.
AscentResult ascend(const Subalgebra& a, const Subalgebra& b,
                    std::vector<cmat> ms, int max_iters) {
  const int n = static_cast<int>(ms[0].rows());
  const auto log_floor = [](double x) {
    return std::log(std::max(x, 1e-10));
  };
  double value = objective(a, b, ms);
  double step = 0.5;
  int iter = 0;
  int stalls = 0;
  for (; iter < max_iters && stalls < 2; ++iter) {
    std::vector<cmat> grads(ms.size());
    cmat mean = cmat::Zero(n, n);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      cmat ea = conditional_expectation(a, ms[i]);
      cmat eb = conditional_expectation(b, ms[i]);
      grads[i] = conditional_expectation(a, hermitian_map(ea, log_floor)) -
                 conditional_expectation(b, hermitian_map(eb, log_floor));
      mean += grads[i];
    }
    mean /= static_cast<double>(ms.size());

    bool improved = false;
    for (int bt = 0; bt < 24 && !improved; ++bt) {
      std::vector<cmat> trial(ms.size());
      for (std::size_t i = 0; i < ms.size(); ++i)
        trial[i] = clamp_psd(ms[i] + step * (grads[i] - mean));
      if (!restore_identity(&trial)) {
        step *= 0.5;
        continue;
      }
      double trial_value = objective(a, b, trial);
      if (trial_value > value) {
        improved = true;
        if (trial_value - value < 1e-10 * std::max(1.0, std::abs(value)))
          ++stalls;
        else
          stalls = 0;
        value = trial_value;
        ms = std::move(trial);
        step = std::min(step * 1.5, 4.0);
      } else {
        step *= 0.5;
      }
    }
    if (!improved) break;
  }
  return {value, std::move(ms), iter};
}

// Converts an ascent iterate back to a decomposition, dropping terms of
// negligible mass and restoring the identity exactly afterwards.
ConvexDecomposition to_decomposition(std::vector<cmat> ms) {
  const int n = static_cast<int>(ms[0].rows());
  std::vector<cmat> kept;
  for (cmat& m : ms)
    if (normalized_trace(m).real() > kWeightFloor) kept.push_back(std::move(m));
  if (kept.empty() || !restore_identity(&kept))
    return ConvexDecomposition::trivial(n);
  ConvexDecomposition dec;
  for (const cmat& m : kept) {
    double w = normalized_trace(m).real();
    dec.terms.push_back({w, m / w});
  }
  return dec;
}

std::vector<cmat> random_start(int n, int m, Rng* rng) {
  std::vector<cmat> ms;
  ms.reserve(m);
  for (int i = 0; i < m; ++i) ms.push_back(rng->psd(n));
  if (!restore_identity(&ms)) {
    ms.assign(m, cmat::Identity(n, n) / static_cast<double>(m));
  }
  return ms;
}

int worker_count(int restarts) {
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap < 1) cap = 1;
  if (const char* env = std::getenv("QUASIORTH_THREADS")) {
    int parsed = std::atoi(env);
    if (parsed >= 1) cap = parsed;
  }
  return std::min(cap, std::max(restarts, 1));
}

}  // namespace

ConvexDecomposition ConvexDecomposition::trivial(int n) {
  ConvexDecomposition dec;
  dec.terms.push_back({1.0, cmat::Identity(n, n)});
  return dec;
}

void validate_decomposition(const ConvexDecomposition& dec, int n) {
  if (dec.terms.empty())
    throw std::invalid_argument("decomposition has no terms");
  cmat sum = cmat::Zero(n, n);
  for (std::size_t i = 0; i < dec.terms.size(); ++i) {
    const DecTerm& term = dec.terms[i];
    const std::string tag = "term " + std::to_string(i) + ": ";
    if (!(term.weight > 0))
      throw std::invalid_argument(tag + "weight is not positive");
    if (term.rho.rows() != n || term.rho.cols() != n)
      throw std::invalid_argument(tag + "density has wrong dimension");
    if (!is_hermitian(term.rho, 1e-9))
      throw std::invalid_argument(tag + "density is not Hermitian");
    Eigen::SelfAdjointEigenSolver<cmat> es(term.rho);
    if (es.eigenvalues().minCoeff() < -1e-9)
      throw std::invalid_argument(tag + "density is not positive");
    if (std::abs(normalized_trace(term.rho).real() - 1.0) > 1e-9)
      throw std::invalid_argument(tag + "density has normalized trace != 1");
    sum += term.weight * term.rho;
  }
  if ((sum - cmat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument(
        "weighted densities do not sum to the identity");
}

double evaluate(const Subalgebra& a, const Subalgebra& b,
                const ConvexDecomposition& dec) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("subalgebras live in different dimensions");
  validate_decomposition(dec, a.ambient_dim);
  double total = 0.0;
  for (const DecTerm& term : dec.terms)
    total += term.weight *
             (spectral_eta(conditional_expectation(b, term.rho), kEtaSlack) -
              spectral_eta(conditional_expectation(a, term.rho), kEtaSlack));
  return total;
}

ConvexDecomposition prune(const ConvexDecomposition& dec, const Subalgebra& a,
                          const Subalgebra& b) {
  const int n = a.ambient_dim;
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("subalgebras live in different dimensions");
  validate_decomposition(dec, n);

  std::vector<double> weights;
  std::vector<cmat> rhos;
  std::vector<double> terms;  // per-density objective contribution
  for (const DecTerm& t : dec.terms) {
    weights.push_back(t.weight);
    rhos.push_back(t.rho);
    terms.push_back(
        spectral_eta(conditional_expectation(b, t.rho), kEtaSlack) -
        spectral_eta(conditional_expectation(a, t.rho), kEtaSlack));
  }

  bool changed = true;
  while (changed) {
    changed = false;
    const int m = static_cast<int>(rhos.size());
    if (m < 2) break;
    Eigen::MatrixXd coords(n * n, m);
    for (int i = 0; i < m; ++i) coords.col(i) = herm_coords(rhos[i]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(coords, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    // more terms than the ambient real dimension always leaves null
    // directions in V beyond the reported singular values
    const bool dependent =
        m > n * n || sv(sv.size() - 1) < 1e-10 * std::max(1.0, sv(0));
    if (!dependent) break;

    // alpha gives sum_i alpha_i rho_i = 0; unit traces force sum alpha = 0,
    // so both endpoints of the feasible weight interval are finite.
    Eigen::VectorXd alpha = svd.matrixV().col(m - 1);
    double t_lo = -std::numeric_limits<double>::infinity();
    double t_hi = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (alpha(i) > 1e-14) t_lo = std::max(t_lo, -weights[i] / alpha(i));
      if (alpha(i) < -1e-14) t_hi = std::min(t_hi, -weights[i] / alpha(i));
    }
    if (!std::isfinite(t_lo) || !std::isfinite(t_hi)) break;
    double slope = 0.0;
    for (int i = 0; i < m; ++i) slope += alpha(i) * terms[i];
    const double t_star = slope >= 0 ? t_hi : t_lo;

    for (int i = m - 1; i >= 0; --i) {
      double w = weights[i] + alpha(i) * t_star;
      if (w <= kWeightFloor) {
        weights.erase(weights.begin() + i);
        rhos.erase(rhos.begin() + i);
        terms.erase(terms.begin() + i);
        changed = true;
      } else {
        weights[i] = w;
      }
    }
  }

  ConvexDecomposition out;
  for (std::size_t i = 0; i < rhos.size(); ++i)
    out.terms.push_back({weights[i], rhos[i]});
  validate_decomposition(out, n);
  return out;
}

double upper_bound(const Subalgebra& a) {
  if (a.homogeneity) return -std::log(*a.homogeneity);
  std::ostringstream msg;
  msg << "subalgebra is not homogeneous; minimal projection traces:";
  for (const cmat& p : minimal_projection_family(a))
    msg << " " << normalized_trace(p).real();
  throw std::invalid_argument(msg.str());
}

EntropyEstimate estimate(const Subalgebra& a, const Subalgebra& b,
                         const EstimateOptions& opts) {
  const int n = a.ambient_dim;
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("subalgebras live in different dimensions");
  if (opts.m < 0 || opts.restarts < 0 || opts.max_iters < 0)
    throw std::invalid_argument("estimate options must be non-negative");
  const int m = opts.m == 0 ? n * n : opts.m;
  if (m < 1) throw std::invalid_argument("decomposition size must be >= 1");

  // Candidates in deterministic order; ties resolve to the earliest.
  std::vector<ConvexDecomposition> candidates;
  std::vector<int> iteration_counts;

  ConvexDecomposition projection_seed;
  for (const cmat& p : minimal_projection_family(a)) {
    double w = normalized_trace(p).real();
    projection_seed.terms.push_back({w, p / w});
  }
  candidates.push_back(std::move(projection_seed));
  iteration_counts.push_back(0);
  candidates.push_back(ConvexDecomposition::trivial(n));
  iteration_counts.push_back(0);

  std::vector<AscentResult> refined(opts.restarts);
  const int workers = worker_count(opts.restarts);
  std::atomic<int> next{0};
  auto run = [&]() {
    for (int r = next.fetch_add(1); r < opts.restarts;
         r = next.fetch_add(1)) {
      Rng rng = Rng::stream(opts.seed, static_cast<std::uint64_t>(r));
      refined[r] = ascend(a, b, random_start(n, m, &rng), opts.max_iters);
    }
  };
  if (workers <= 1 || opts.restarts <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (std::thread& t : pool) t.join();
  }
  for (AscentResult& res : refined) {
    candidates.push_back(prune(to_decomposition(std::move(res.ms)), a, b));
    iteration_counts.push_back(res.iterations);
  }

  std::vector<double> values;
  values.reserve(candidates.size());
  for (const ConvexDecomposition& dec : candidates)
    values.push_back(evaluate(a, b, dec));
  const double best = *std::max_element(values.begin(), values.end());
  std::size_t winner = 0;
  while (values[winner] < best - kTol) ++winner;

  EntropyEstimate est;
  est.value = values[winner];
  est.decomposition = candidates[winner];
  est.restarts_used = opts.restarts;
  est.iterations = iteration_counts[winner];
  est.seed = opts.seed;
  if (a.homogeneity) {
    est.bound = -std::log(*a.homogeneity);
    est.gap = *est.bound - est.value;
  }
  est.possible_inclusion = est.value < 1e-6;
  return est;
}

AppendixProbe appendix_probe(double beta, const ProbeOptions& opts) {
  const cmat p = 0.5 * (sigma(0) + sigma(3));
  const cmat q =
      0.5 * (sigma(0) + std::sin(beta) * sigma(1) + std::cos(beta) * sigma(3));

  AppendixProbe probe;
  probe.C = eta((1.0 + std::cos(beta)) / 2.0) +
            eta((1.0 - std::cos(beta)) / 2.0);
  probe.f = [p, q](double t) {
    cmat r = 0.5 * (sigma(0) + std::sin(t) * sigma(1) + std::cos(t) * sigma(3));
    double av = (r * p).trace().real();
    double bv = (r * q).trace().real();
    return eta(bv) + eta(1.0 - bv) - eta(av) - eta(1.0 - av);
  };
  const double h = opts.fd_step;
  probe.f_prime_0 = (probe.f(h) - probe.f(-h)) / (2.0 * h);

  // Coarse grid scan over one period, then golden-section refinement.
  const int grid = std::max(opts.grid, 8);
  double best_t = 0.0, best_f = probe.f(0.0);
  const double width = 2.0 * M_PI / grid;
  for (int i = 0; i <= grid; ++i) {
    double t = -M_PI + i * width;
    double v = probe.f(t);
    if (v > best_f) {
      best_f = v;
      best_t = t;
    }
  }
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_t - width, hi = best_t + width;
  double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
  double f1 = probe.f(x1), f2 = probe.f(x2);
  for (int i = 0; i < 80; ++i) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = probe.f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = probe.f(x2);
    }
  }
  const double t_star = f1 >= f2 ? x1 : x2;
  const double f_star = std::max(f1, f2);
  if (f_star - probe.C > 1e-9) {
    probe.witness_t = t_star;
    probe.margin = f_star - probe.C;
  }
  probe.refuted = std::abs(probe.f_prime_0) > 1e-6 && probe.margin.has_value();
  return probe;
}

}  // namespace quasiorth
