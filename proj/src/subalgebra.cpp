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

#include "quasiorth/subalgebra.hpp"

#include <cmath>
#include <stdexcept>

#include "quasiorth/random.hpp"

namespace quasiorth {

namespace {

constexpr double kAcceptTol = 1e-10;  // Gram-Schmidt acceptance threshold
constexpr double kClusterTol = 1e-7;  // eigenvalue cluster separation
constexpr double kNullTol = 1e-8;     // singular-value cutoff for null spaces

// Appends v to an orthonormal list (Frobenius geometry) unless it is
// dependent.  Projects twice for numerical stability.
bool gs_append(std::vector<cmat>& onb, cmat v) {
  for (int pass = 0; pass < 2; ++pass)
    for (const cmat& b : onb) v -= hs_inner(b, v) * b;
  double norm = v.norm();
  if (norm <= kAcceptTol) return false;
  onb.push_back(v / norm);
  return true;
}

// Same over the reals with the tau-normalized trace form, used for the
// traceless Hermitian basis.
bool gs_append_herm(std::vector<cmat>& onb, cmat v, int n) {
  for (int pass = 0; pass < 2; ++pass)
    for (const cmat& b : onb) v -= (hs_inner(b, v).real() / n) * b;
  double norm = v.norm() / std::sqrt(static_cast<double>(n));
  if (norm <= kAcceptTol) return false;
  onb.push_back(v / norm);
  return true;
}

cmat expi(const cmat& h) {
  Eigen::SelfAdjointEigenSolver<cmat> es(h);
  cvec phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k)
    phases[k] = std::exp(cplx(0.0, es.eigenvalues()[k]));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Splits the columns of an eigenvector matrix by eigenvalue clusters
// (ascending order, gap threshold kClusterTol).
std::vector<std::pair<int, int>> eigen_clusters(const rvec& ev) {
  std::vector<std::pair<int, int>> out;
  int start = 0;
  for (int k = 1; k <= ev.size(); ++k) {
    if (k == ev.size() || ev[k] - ev[k - 1] > kClusterTol) {
      out.emplace_back(start, k - start);
      start = k;
    }
  }
  return out;
}

void refine_frame(const std::vector<cmat>& basis, const cmat& frame, std::vector<cmat>& out) {
  const int r = static_cast<int>(frame.cols());
  if (r > 1) {
    for (const cmat& b : basis) {
      cmat m = frame.adjoint() * b * frame;
      m = 0.5 * (m + m.adjoint()).eval();
      Eigen::SelfAdjointEigenSolver<cmat> es(m);
      auto clusters = eigen_clusters(es.eigenvalues());
      if (clusters.size() > 1) {
        for (auto [first, count] : clusters)
          refine_frame(basis, frame * es.eigenvectors().middleCols(first, count), out);
        return;
      }
    }
  }
  out.push_back(frame);
}

}  // namespace

std::string to_string(AlgKind k) {
  switch (k) {
    case AlgKind::Abelian: return "abelian";
    case AlgKind::Factor: return "factor";
    default: return "general";
  }
}

AlgKind alg_kind_from_string(const std::string& s) {
  if (s == "abelian") return AlgKind::Abelian;
  if (s == "factor") return AlgKind::Factor;
  if (s == "general") return AlgKind::General;
  throw std::invalid_argument("unknown algebra kind: " + s);
}

namespace {

// Builds the Subalgebra record from a complex-orthonormal spanning set
// that is already closed under adjoints and products.
Subalgebra finalize_from_span(int n, const std::vector<cmat>& span_onb) {
  Subalgebra alg;
  alg.ambient_dim = n;
  const cmat id = cmat::Identity(n, n);

  for (const cmat& v : span_onb) {
    cmat h = 0.5 * (v + v.adjoint());
    cmat k = cplx(0, -0.5) * (v - v.adjoint());
    for (cmat* part : {&h, &k}) {
      cmat m = *part - (normalized_trace(*part) * id).eval();
      m = 0.5 * (m + m.adjoint()).eval();
      gs_append_herm(alg.basis, m, n);
    }
  }
  if (alg.basis.size() + 1 != span_onb.size())
    throw std::runtime_error("subalgebra: span is not *-closed");

  // Kind: Abelian if the basis commutes; otherwise Factor when the
  // center is trivial, General when it is not.
  const int k = alg.traceless_dim();
  bool abelian = true;
  for (int i = 0; i < k && abelian; ++i)
    for (int j = i + 1; j < k && abelian; ++j)
      if ((alg.basis[i] * alg.basis[j] - alg.basis[j] * alg.basis[i]).cwiseAbs().maxCoeff() >
          kNullTol)
        abelian = false;
  if (abelian) {
    alg.kind = AlgKind::Abelian;
  } else {
    // Null space of c |-> ([sum_j c_j b_j, b_i])_i via its Gram matrix.
    cmat gram = cmat::Zero(k, k);
    for (int i = 0; i < k; ++i) {
      std::vector<cmat> comms(k);
      for (int j = 0; j < k; ++j)
        comms[j] = alg.basis[j] * alg.basis[i] - alg.basis[i] * alg.basis[j];
      for (int K = 0; K < k; ++K)
        for (int l = 0; l < k; ++l) gram(K, l) += hs_inner(comms[K], comms[l]);
    }
    Eigen::SelfAdjointEigenSolver<cmat> es(gram, Eigen::EigenvaluesOnly);
    double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    int nullity = 0;
    for (Eigen::Index t = 0; t < k; ++t)
      if (std::abs(es.eigenvalues()[t]) < kNullTol * scale) ++nullity;
    alg.kind = (nullity == 0) ? AlgKind::Factor : AlgKind::General;
  }

  auto family = minimal_projection_family(alg);
  double d0 = normalized_trace(family.front()).real();
  bool uniform = true;
  for (const cmat& p : family)
    if (std::abs(normalized_trace(p).real() - d0) > kNullTol) uniform = false;
  if (uniform) alg.homogeneity = d0;
  return alg;
}

}  // namespace

Subalgebra from_generators(int n, const std::vector<cmat>& gens) {
  if (n < 1) throw std::invalid_argument("from_generators: dimension must be positive");
  for (const cmat& g : gens)
    if (g.rows() != n || g.cols() != n)
      throw std::invalid_argument("from_generators: generator dimension mismatch");

  std::vector<cmat> span;
  gs_append(span, cmat::Identity(n, n));
  for (const cmat& g : gens) gs_append(span, g);
  for (const cmat& g : gens) gs_append(span, g.adjoint());

  const int max_rounds = 2 * n * n;
  std::size_t stable_from = 0;  // elements below this index have had all mutual products taken
  int round = 0;
  for (; round < max_rounds; ++round) {
    const std::size_t count = span.size();
    if (stable_from == count) break;
    bool grew = false;
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = (i < stable_from ? stable_from : 0); j < count; ++j)
        grew |= gs_append(span, span[i] * span[j]);
    stable_from = count;
    if (!grew && span.size() == count) {
      stable_from = span.size();
      break;
    }
  }
  if (stable_from != span.size())
    throw std::runtime_error("from_generators: closure did not stabilize");

  return finalize_from_span(n, span);
}

Subalgebra conjugated(const Subalgebra& a, const cmat& u) {
  if (!is_unitary(u, 1e-8) || u.rows() != a.ambient_dim)
    throw std::invalid_argument("conjugated: unitary of the ambient dimension required");
  Subalgebra out = a;
  for (cmat& b : out.basis) b = u * b * u.adjoint();
  return out;
}

cmat conditional_expectation(const Subalgebra& a, const cmat& x) {
  if (x.rows() != a.ambient_dim || x.cols() != a.ambient_dim)
    throw std::invalid_argument("conditional_expectation: dimension mismatch");
  cmat out = normalized_trace(x) * cmat::Identity(a.ambient_dim, a.ambient_dim);
  for (const cmat& b : a.basis) out += (hs_inner(b, x) / static_cast<double>(a.ambient_dim)) * b;
  return out;
}

std::vector<cmat> minimal_projection_family(const Subalgebra& a) {
  const int n = a.ambient_dim;
  std::vector<cmat> frames;
  refine_frame(a.basis, cmat::Identity(n, n), frames);
  std::vector<cmat> family;
  cmat total = cmat::Zero(n, n);
  for (const cmat& q : frames) {
    family.push_back(q * q.adjoint());
    total += family.back();
  }
  if ((total - cmat::Identity(n, n)).cwiseAbs().maxCoeff() > kClusterTol)
    throw std::runtime_error("minimal_projection_family: projections do not resolve the identity");
  return family;
}

std::vector<cmat> minimal_projections(const Subalgebra& a) {
  if (a.kind == AlgKind::General)
    throw std::invalid_argument("minimal_projections: unsupported for kind = general");
  return minimal_projection_family(a);
}

ComplementarityReport complementarity_report(const Subalgebra& a, const Subalgebra& b,
                                             double tol) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("complementarity_report: ambient dimensions differ");
  const int n = a.ambient_dim;
  ComplementarityReport rep;
  rep.d_a = a.homogeneity;
  rep.d_b = b.homogeneity;

  // (ii) orthogonality of the traceless parts.
  double res2 = 0.0;
  for (const cmat& x : a.basis)
    for (const cmat& y : b.basis)
      res2 = std::max(res2, std::abs(hs_inner(x, y)) / n);
  rep.cond_ii = {res2 < tol, res2, true};
  rep.verdict = rep.cond_ii.ok;

  // (iii) multiplicativity of tau across the pair, identity included.
  double res3 = 0.0;
  auto with_id = [n](const Subalgebra& s) {
    std::vector<cmat> v{cmat::Identity(n, n)};
    v.insert(v.end(), s.basis.begin(), s.basis.end());
    return v;
  };
  for (const cmat& x : with_id(a))
    for (const cmat& y : with_id(b))
      res3 = std::max(res3,
                      std::abs(normalized_trace(x * y) - normalized_trace(x) * normalized_trace(y)));
  rep.cond_iii = {res3 < tol, res3, true};

  // (iv) E_A maps B into the scalars.
  double res4 = 0.0;
  for (const cmat& y : b.basis) {
    cmat r = conditional_expectation(a, y) - normalized_trace(y) * cmat::Identity(n, n);
    res4 = std::max(res4, r.norm() / std::sqrt(static_cast<double>(n)));
  }
  rep.cond_iv = {res4 < tol, res4, true};

  // (i) product rule over minimal projections: the canonical families
  // plus eight inner-unitary rotations of each.
  auto fam_a = minimal_projection_family(a);
  auto fam_b = minimal_projection_family(b);
  auto rotate = [](const std::vector<cmat>& fam, const Subalgebra& s, Rng& rng) {
    cmat h = cmat::Zero(s.ambient_dim, s.ambient_dim);
    for (const cmat& bb : s.basis) h += rng.gaussian() * bb;
    cmat u = expi(h);
    std::vector<cmat> out;
    out.reserve(fam.size());
    for (const cmat& p : fam) out.push_back(u * p * u.adjoint());
    return out;
  };
  double res1 = 0.0;
  auto score = [&](const std::vector<cmat>& fa, const std::vector<cmat>& fb) {
    for (const cmat& p : fa)
      for (const cmat& q : fb)
        res1 = std::max(res1, std::abs(normalized_trace(p * q) -
                                       normalized_trace(p) * normalized_trace(q)));
  };
  score(fam_a, fam_b);
  for (int r = 0; r < 8; ++r) {
    Rng ra = Rng::stream(0x51A5u, 2 * r), rb = Rng::stream(0x51A5u, 2 * r + 1);
    score(rotate(fam_a, a, ra), rotate(fam_b, b, rb));
  }
  rep.cond_i = {res1 < tol, res1, true};
  return rep;
}

HadamardResult transition_is_hadamard(const cmat& u, const cmat& v, double tol) {
  if (!is_unitary(u, 1e-8) || !is_unitary(v, 1e-8))
    throw std::invalid_argument("transition_is_hadamard: unitary inputs required");
  if (u.rows() != v.rows()) throw std::invalid_argument("transition_is_hadamard: size mismatch");
  const double target = 1.0 / std::sqrt(static_cast<double>(u.rows()));
  cmat t = u.adjoint() * v;
  double res = (t.cwiseAbs().array() - target).abs().maxCoeff();
  return {res < tol, res};
}

Subalgebra commutant(const Subalgebra& a) {
  const int n = a.ambient_dim;
  const int nn = n * n;
  cmat big = cmat::Zero(nn, nn);
  const cmat id = cmat::Identity(n, n);
  for (const cmat& b : a.basis) {
    cmat c = tensor(id, b) - tensor(b.transpose(), id);
    big += c.adjoint() * c;
  }
  Eigen::SelfAdjointEigenSolver<cmat> es(big);
  double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<cmat> gens;
  for (Eigen::Index k = 0; k < nn; ++k)
    if (std::abs(es.eigenvalues()[k]) < kNullTol * scale)
      gens.push_back(unvec(es.eigenvectors().col(k), n));
  return from_generators(n, gens);
}

Subalgebra intersect(const Subalgebra& a, const Subalgebra& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("intersect: ambient dimensions differ");
  const int n = a.ambient_dim;
  const int nn = n * n;
  auto projector = [n, nn](const Subalgebra& s) {
    cmat u(nn, s.traceless_dim() + 1);
    u.col(0) = vec(cmat::Identity(n, n)) / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < s.traceless_dim(); ++k)
      u.col(k + 1) = vec(s.basis[k]) / std::sqrt(static_cast<double>(n));
    return cmat(u * u.adjoint());
  };
  cmat pa = projector(a), pb = projector(b);
  cmat m = pa * pb * pa;
  m = 0.5 * (m + m.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<cmat> es(m);
  std::vector<cmat> gens;
  for (Eigen::Index k = 0; k < nn; ++k)
    if (es.eigenvalues()[k] > 1.0 - kClusterTol)
      gens.push_back(unvec(es.eigenvectors().col(k), n));
  return from_generators(n, gens);
}

bool span_contains(const Subalgebra& a, const cmat& x, double tol) {
  cmat r = conditional_expectation(a, x) - x;
  return r.cwiseAbs().maxCoeff() < tol * std::max(1.0, x.cwiseAbs().maxCoeff());
}

bool spans_equal(const Subalgebra& a, const Subalgebra& b, double tol) {
  if (a.ambient_dim != b.ambient_dim || a.traceless_dim() != b.traceless_dim()) return false;
  for (const cmat& y : b.basis)
    if (!span_contains(a, y, tol)) return false;
  return true;
}

}  // namespace quasiorth
