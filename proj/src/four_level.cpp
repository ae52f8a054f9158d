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

#include "quasiorth/four_level.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace quasiorth {

namespace {

bool is_p_unitary(const cmat& s, double tol) {
  const int n = static_cast<int>(s.rows());
  return is_hermitian(s, tol) && std::abs(s.trace()) < tol * n &&
         (s * s - cmat::Identity(n, n)).cwiseAbs().maxCoeff() < tol;
}

double max_abs_diff(const cmat& a, const cmat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Matrix units of a factor isomorphic to M2, built from the standard
// F-triplet hidden in its orthonormal traceless basis: any two distinct
// basis elements square to I and anticommute, so together with -i times
// their product they play the roles of sigma_1, sigma_2, sigma_3.
struct FactorUnits {
  cmat e11, e12, e21, e22;
};

FactorUnits factor_units(const Subalgebra& a) {
  const cmat& s1 = a.basis[0];
  const cmat& s2 = a.basis[1];
  cmat s3 = cplx(0, -1) * s1 * s2;
  const int n = a.ambient_dim;
  FactorUnits u;
  u.e11 = 0.5 * (cmat::Identity(n, n) + s3);
  u.e22 = 0.5 * (cmat::Identity(n, n) - s3);
  u.e12 = 0.5 * (s1 + cplx(0, 1) * s2);
  u.e21 = u.e12.adjoint();
  return u;
}

// Unitary whose conjugation aligns the factor with M2 (x) CI and its
// commutant with CI (x) M2: columns are the joint matrix-unit orbit of a
// unit vector supporting e11 f11.
cmat aligning_unitary(const Subalgebra& a, const Subalgebra& ac) {
  FactorUnits e = factor_units(a);
  FactorUnits f = factor_units(ac);
  cmat seed = e.e11 * f.e11;  // commuting projections; rank-1 product
  Eigen::SelfAdjointEigenSolver<cmat> es(seed);
  int top;
  es.eigenvalues().maxCoeff(&top);
  if (es.eigenvalues()(top) < 0.5)
    throw std::runtime_error("bell_factorize: degenerate matrix-unit seed");
  cvec xi = es.eigenvectors().col(top);
  cmat v(4, 4);
  v.col(0) = xi;
  v.col(1) = f.e21 * xi;
  v.col(2) = e.e21 * xi;
  v.col(3) = e.e21 * f.e21 * xi;
  if (!is_unitary(v, 1e-8))
    throw std::runtime_error("bell_factorize: alignment is not unitary");
  return v;
}

}  // namespace

std::string to_string(TripletKind kind) {
  return kind == TripletKind::F ? "F" : "M";
}

Triplet classify_triplet(const cmat& s1, const cmat& s2, const cmat& s3,
                         double tol) {
  for (const cmat* s : {&s1, &s2, &s3}) {
    if (s->rows() != 4 || s->cols() != 4)
      throw std::invalid_argument("classify_triplet: inputs must be 4x4");
    if (!is_p_unitary(*s, tol))
      throw std::invalid_argument(
          "classify_triplet: input is not a self-adjoint traceless unitary");
  }
  const cmat prod = s1 * s2;
  Triplet t{{s1, s2, s3}, TripletKind::M, 1};
  if (max_abs_diff(s3, prod) < tol) return t;
  t.sign = -1;
  if (max_abs_diff(s3, -prod) < tol) return t;
  t.kind = TripletKind::F;
  t.sign = 1;
  if (max_abs_diff(s3, cplx(0, 1) * prod) < tol) return t;
  t.sign = -1;
  if (max_abs_diff(s3, cplx(0, -1) * prod) < tol) return t;
  throw std::invalid_argument(
      "classify_triplet: s3 matches neither +-s1*s2 nor +-i*s1*s2");
}

Subalgebra triplet_algebra(const Triplet& t) {
  return from_generators(4, {t.s[0], t.s[1], t.s[2]});
}

BellFactorization bell_factorize(const Subalgebra& a, const Triplet& t) {
  if (a.ambient_dim != 4 || a.kind != AlgKind::Factor ||
      a.traceless_dim() != 3)
    throw std::invalid_argument(
        "bell_factorize: first argument must be a factor of M4 isomorphic "
        "to M2");
  if (t.kind != TripletKind::M)
    throw std::invalid_argument("bell_factorize: triplet must be of kind M");
  const Subalgebra ac = commutant(a);
  if (ac.kind != AlgKind::Factor || ac.traceless_dim() != 3)
    throw std::runtime_error(
        "bell_factorize: commutant did not come out as a qubit factor");
  for (const cmat& ti : t.s)
    for (const Subalgebra* alg : {&a, &ac})
      for (const cmat& b : alg->basis)
        if (std::abs(hs_inner(b, ti)) / 4.0 > 1e-8)
          throw std::invalid_argument(
              "bell_factorize: triplet is not orthogonal to the factor and "
              "its commutant");

  const cmat v = aligning_unitary(a, ac);
  BellFactorization out;
  out.residual = 0.0;
  std::array<cmat, 3> as, bs;
  for (int i = 0; i < 3; ++i) {
    cmat aligned = v.adjoint() * t.s[i] * v;
    Eigen::Matrix3d coeff;
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l)
        coeff(k - 1, l - 1) =
            (hs_inner(tensor(sigma(k), sigma(l)), aligned) / 4.0).real();
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(
        coeff, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues()(1) > 1e-7)
      throw std::runtime_error(
          "bell_factorize: traceless part has Schmidt rank above one");
    Eigen::Vector3d x = svd.matrixU().col(0);
    Eigen::Vector3d y = svd.matrixV().col(0);
    cmat ai = cmat::Zero(2, 2), bi = cmat::Zero(2, 2);
    for (int k = 1; k <= 3; ++k) {
      ai += x(k - 1) * sigma(k);
      bi += y(k - 1) * sigma(k);
    }
    as[i] = v * tensor(ai, sigma(0)) * v.adjoint();
    bs[i] = v * tensor(sigma(0), bi) * v.adjoint();
    out.residual =
        std::max(out.residual, max_abs_diff(t.s[i], as[i] * bs[i]));
  }
  out.a_triplet = classify_triplet(as[0], as[1], as[2]);
  out.b_triplet = classify_triplet(bs[0], bs[1], bs[2]);
  if (out.a_triplet.kind != TripletKind::F ||
      out.b_triplet.kind != TripletKind::F)
    throw std::runtime_error(
        "bell_factorize: recovered triplets are not of kind F");
  return out;
}

PauliCatalog enumerate_pauli_subalgebras() {
  std::vector<PauliWord> words;
  for (int id = 1; id < 16; ++id) words.push_back({id / 4, id % 4, 1});

  std::set<std::array<int, 3>> seen;
  PauliCatalog catalog;
  for (std::size_t x = 0; x < words.size(); ++x)
    for (std::size_t y = x + 1; y < words.size(); ++y) {
      WordProduct prod = word_product(words[x], words[y]);
      std::array<int, 3> ids = {4 * words[x].i + words[x].j,
                                4 * words[y].i + words[y].j,
                                4 * prod.i + prod.j};
      std::sort(ids.begin(), ids.end());
      if (!seen.insert(ids).second) continue;

      PauliTripleAlg entry;
      for (int k = 0; k < 3; ++k) entry.words[k] = {ids[k] / 4, ids[k] % 4, 1};
      cmat ma = entry.words[0].realize();
      cmat mb = entry.words[1].realize();
      entry.algebra = from_generators(4, {ma, mb});
      const bool commute = max_abs_diff(ma * mb, mb * ma) < kTol;
      (commute ? catalog.masas : catalog.factors).push_back(std::move(entry));
    }
  return catalog;
}

std::vector<DecompositionFamily> complementary_family_search(
    int target_size) {
  if (target_size != 5)
    throw std::invalid_argument(
        "complementary_family_search: fifteen words split into triples in "
        "families of exactly five");

  PauliCatalog catalog = enumerate_pauli_subalgebras();
  struct Entry {
    const PauliTripleAlg* alg;
    AlgKind kind;
    unsigned mask;
  };
  std::vector<Entry> entries;
  for (const PauliTripleAlg& m : catalog.masas)
    entries.push_back({&m, AlgKind::Abelian, 0});
  for (const PauliTripleAlg& f : catalog.factors)
    entries.push_back({&f, AlgKind::Factor, 0});
  for (Entry& e : entries)
    for (const PauliWord& w : e.alg->words)
      e.mask |= 1u << (4 * w.i + w.j - 1);
  auto ids = [](const Entry& e) {
    return std::array<int, 3>{4 * e.alg->words[0].i + e.alg->words[0].j,
                              4 * e.alg->words[1].i + e.alg->words[1].j,
                              4 * e.alg->words[2].i + e.alg->words[2].j};
  };
  std::sort(entries.begin(), entries.end(),
            [&ids](const Entry& a, const Entry& b) { return ids(a) < ids(b); });

  const unsigned full = (1u << 15) - 1;
  std::vector<DecompositionFamily> found;
  std::vector<const Entry*> chosen;
  std::function<void(unsigned)> recurse = [&](unsigned covered) {
    if (covered == full) {
      DecompositionFamily fam;
      for (const Entry* e : chosen) {
        fam.triples.push_back(e->alg->words);
        fam.kinds.push_back(e->kind);
        fam.members.push_back(e->alg->algebra);
        if (e->kind == AlgKind::Factor) ++fam.ell;
      }
      fam.pairwise_ok = true;
      for (std::size_t i = 0; i < fam.members.size() && fam.pairwise_ok; ++i)
        for (std::size_t j = i + 1; j < fam.members.size(); ++j)
          if (!complementarity_report(fam.members[i], fam.members[j])
                   .verdict) {
            fam.pairwise_ok = false;
            break;
          }
      found.push_back(std::move(fam));
      return;
    }
    int lowest = 0;
    while (covered & (1u << lowest)) ++lowest;
    for (const Entry& e : entries) {
      if (!(e.mask & (1u << lowest)) || (e.mask & covered)) continue;
      chosen.push_back(&e);
      recurse(covered | e.mask);
      chosen.pop_back();
    }
  };
  recurse(0);
  return found;
}

Theorem6Report theorem6_check(const Subalgebra& a0, const Subalgebra& b) {
  if (a0.ambient_dim != 4 || a0.kind != AlgKind::Factor ||
      a0.traceless_dim() != 3)
    throw std::invalid_argument(
        "theorem6_check: first argument must be a factor of M4 isomorphic "
        "to M2");
  const bool b_masa = b.kind == AlgKind::Abelian && b.traceless_dim() == 3;
  const bool b_factor = b.kind == AlgKind::Factor && b.traceless_dim() == 3;
  if (!b_masa && !b_factor)
    throw std::invalid_argument(
        "theorem6_check: second argument must be a MASA or an F-subalgebra");

  Theorem6Report rep;
  ComplementarityReport pre = complementarity_report(a0, b);
  rep.precondition_ok = pre.verdict;
  rep.residual = pre.cond_ii.residual;
  if (!rep.precondition_ok) return rep;

  Subalgebra a0c = commutant(a0);
  if (b_masa) {
    rep.branch = 'a';
    ComplementarityReport r = complementarity_report(b, a0c);
    rep.ok = r.verdict;
    rep.residual = r.cond_ii.residual;
  } else {
    rep.branch = 'b';
    rep.commutant_equals_b = spans_equal(a0c, b);
    rep.intersection_dim = intersect(a0c, b).traceless_dim();
    rep.ok = rep.commutant_equals_b || rep.intersection_dim == 1;
  }
  return rep;
}

}  // namespace quasiorth
