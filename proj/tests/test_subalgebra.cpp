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
#include "helpers.hpp"
#include "quasiorth/random.hpp"
#include "quasiorth/subalgebra.hpp"

using namespace quasiorth;
using namespace quasiorth::testing;

TEST_CASE("diagonal masa of M2") {
  Subalgebra a = from_generators(2, {sigma(3)});
  CHECK(a.traceless_dim() == 1);
  CHECK(a.kind == AlgKind::Abelian);
  REQUIRE(a.homogeneity.has_value());
  CHECK(*a.homogeneity == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(family_matches(minimal_projections(a), {unit(2, 0, 0), unit(2, 1, 1)}));
}

TEST_CASE("matrix-unit generators give the matrix-unit projections") {
  Subalgebra a = left_factor();
  CHECK(a.kind == AlgKind::Factor);
  CHECK(a.traceless_dim() == 3);
  REQUIRE(a.homogeneity.has_value());
  CHECK(*a.homogeneity == doctest::Approx(0.5).epsilon(1e-12));
  const cmat id2 = cmat::Identity(2, 2);
  CHECK(family_matches(minimal_projections(a),
                       {tensor(unit(2, 0, 0), id2), tensor(unit(2, 1, 1), id2)}));
}

TEST_CASE("two shift-and-phase generators close to all of M3") {
  cmat x = cmat::Zero(3, 3), z = cmat::Zero(3, 3);
  x(1, 0) = x(2, 1) = x(0, 2) = 1;
  cplx w = std::exp(cplx(0, 2.0 * M_PI / 3.0));
  z(0, 0) = 1; z(1, 1) = w; z(2, 2) = w * w;
  Subalgebra a = from_generators(3, {x, z});
  CHECK(a.traceless_dim() == 8);
  CHECK(a.kind == AlgKind::Factor);
  REQUIRE(a.homogeneity.has_value());
  CHECK(*a.homogeneity == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("trivial algebra and full algebra") {
  Subalgebra triv = from_generators(3, {});
  CHECK(triv.traceless_dim() == 0);
  CHECK(triv.kind == AlgKind::Abelian);
  CHECK(*triv.homogeneity == doctest::Approx(1.0));
  CHECK(family_matches(minimal_projection_family(triv), {cmat::Identity(3, 3)}));
}

TEST_CASE("kind detection for a block-diagonal non-factor") {
  // span{E11, M2 block} inside M3
  Subalgebra a = from_generators(3, {unit(3, 0, 0), unit(3, 1, 2), unit(3, 2, 1)});
  CHECK(a.traceless_dim() == 4);
  CHECK(a.kind == AlgKind::General);
  CHECK_THROWS_AS(minimal_projections(a), std::invalid_argument);
  auto fam = minimal_projection_family(a);
  CHECK(fam.size() == 3);
  for (const cmat& p : fam)
    CHECK(normalized_trace(p).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(a.homogeneity.has_value());
}

TEST_CASE("non-homogeneous abelian algebra diag(a,b,b)") {
  Subalgebra a = from_generators(3, {unit(3, 0, 0)});
  CHECK(a.kind == AlgKind::Abelian);
  CHECK(a.traceless_dim() == 1);
  CHECK_FALSE(a.homogeneity.has_value());
  auto fam = minimal_projection_family(a);
  REQUIRE(fam.size() == 2);
  double t0 = normalized_trace(fam[0]).real(), t1 = normalized_trace(fam[1]).real();
  CHECK(std::min(t0, t1) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(std::max(t0, t1) == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("conditional expectation onto the diagonal masa extracts the diagonal") {
  Subalgebra a = diag_masa(2);
  cmat x(2, 2);
  x << 1, 2, 3, 4;
  cmat e = conditional_expectation(a, x);
  cmat expect = cmat::Zero(2, 2);
  expect(0, 0) = 1;
  expect(1, 1) = 4;
  CHECK((e - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("conditional expectation kills the opposite tensor words") {
  Subalgebra a = left_factor();
  cmat x = tensor(sigma(1), sigma(1));
  CHECK(conditional_expectation(a, x).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("conditional expectation is an idempotent trace-preserving projection") {
  Rng rng(21);
  for (const Subalgebra& a : {left_factor(), bell_masa(), diag_masa(4)}) {
    for (int trial = 0; trial < 5; ++trial) {
      cmat x = rng.ginibre(4);
      cmat e = conditional_expectation(a, x);
      CHECK((conditional_expectation(a, e) - e).cwiseAbs().maxCoeff() < 1e-11);
      CHECK(std::abs(e.trace() - x.trace()) < 1e-11);
      // self-adjointness of the map: E(x^*) = E(x)^*
      cmat ead = conditional_expectation(a, x.adjoint());
      CHECK((ead - e.adjoint()).cwiseAbs().maxCoeff() < 1e-11);
      // adjointness against the algebra: tau(E(x) b) = tau(x b)
      for (const cmat& b : a.basis)
        CHECK(std::abs(normalized_trace(e * b) - normalized_trace(x * b)) < 1e-11);
    }
    cmat id = cmat::Identity(4, 4);
    CHECK((conditional_expectation(a, id) - id).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("complementarity of the two M2 masas related by the Hadamard rotation") {
  Subalgebra a = diag_masa(2);
  cmat h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  Subalgebra b = conjugated(a, h);
  ComplementarityReport rep = complementarity_report(a, b);
  CHECK(rep.verdict);
  CHECK(rep.cond_i.ok);
  CHECK(rep.cond_ii.ok);
  CHECK(rep.cond_iii.ok);
  CHECK(rep.cond_iv.ok);
  CHECK(rep.cond_i.residual < kTol);
  CHECK(rep.cond_ii.residual < kTol);
  CHECK(rep.cond_iii.residual < kTol);
  CHECK(rep.cond_iv.residual < kTol);
  CHECK(*rep.d_a == doctest::Approx(0.5));

  ComplementarityReport self = complementarity_report(a, a);
  CHECK_FALSE(self.verdict);
  CHECK_FALSE(self.cond_i.ok);
  CHECK_FALSE(self.cond_iii.ok);
  CHECK_FALSE(self.cond_iv.ok);
  CHECK(self.cond_ii.residual == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("the bell masa is complementary to both tensor factors") {
  Subalgebra bell = bell_masa();
  CHECK(complementarity_report(bell, left_factor()).verdict);
  CHECK(complementarity_report(bell, right_factor()).verdict);
  CHECK(complementarity_report(left_factor(), right_factor()).verdict);
  // the diagonal masa of M4 shares s33 with the bell masa
  CHECK_FALSE(complementarity_report(bell, diag_masa(4)).verdict);
}

TEST_CASE("verdict is invariant under simultaneous unitary conjugation") {
  Rng rng(22);
  Subalgebra a = bell_masa(), b = left_factor();
  for (int trial = 0; trial < 4; ++trial) {
    cmat u = rng.haar_unitary(4);
    CHECK(complementarity_report(conjugated(a, u), conjugated(b, u)).verdict ==
          complementarity_report(a, b).verdict);
  }
}

TEST_CASE("four condition booleans agree on randomized pairs") {
  Rng rng(23);
  int complementary_seen = 0, non_seen = 0;
  for (int trial = 0; trial < 24; ++trial) {
    int n = (trial % 3 == 0) ? 2 : 4;
    Subalgebra a = (n == 2) ? diag_masa(2) : bell_masa();
    Subalgebra b = (n == 2) ? diag_masa(2) : left_factor();
    cmat u = rng.haar_unitary(n), v = rng.haar_unitary(n);
    bool aligned = trial % 2 == 0;
    Subalgebra a2 = conjugated(a, u);
    Subalgebra b2 = conjugated(b, aligned ? u : v);
    if (n == 2 && aligned) {
      cmat h(2, 2);
      h << 1, 1, 1, -1;
      b2 = conjugated(b2, u * (h / std::sqrt(2.0)) * u.adjoint());
    }
    ComplementarityReport rep = complementarity_report(a2, b2, 1e-8);
    CHECK(rep.cond_i.ok == rep.cond_ii.ok);
    CHECK(rep.cond_ii.ok == rep.cond_iii.ok);
    CHECK(rep.cond_iii.ok == rep.cond_iv.ok);
    (rep.verdict ? complementary_seen : non_seen)++;
  }
  CHECK(complementary_seen > 0);
  CHECK(non_seen > 0);
}

TEST_CASE("mutually unbiased transition check") {
  cmat h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  cmat id = cmat::Identity(2, 2);
  CHECK(transition_is_hadamard(id, h).ok);
  HadamardResult same = transition_is_hadamard(id, id);
  CHECK_FALSE(same.ok);
  CHECK(same.residual == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  // basis change from the standard basis to the bell basis is not unbiased:
  // the transition entries have moduli 0 and 1/sqrt2
  cmat bell(4, 4);
  auto bv = bell_vectors();
  for (int k = 0; k < 4; ++k) bell.col(k) = bv[k];
  HadamardResult res = transition_is_hadamard(cmat::Identity(4, 4), bell);
  CHECK_FALSE(res.ok);
  CHECK(res.residual == doctest::Approx(0.5).epsilon(1e-9));

  CHECK_THROWS_AS(transition_is_hadamard(id, 2.0 * id), std::invalid_argument);
}

TEST_CASE("commutant of a tensor factor is the other factor") {
  Subalgebra a = left_factor();
  Subalgebra c = commutant(a);
  CHECK(c.traceless_dim() == 3);
  CHECK(spans_equal(c, right_factor()));
  // double commutant returns the original span
  CHECK(spans_equal(commutant(c), a));
}

TEST_CASE("the bell masa is its own commutant") {
  Subalgebra bell = bell_masa();
  CHECK(spans_equal(commutant(bell), bell));
}

TEST_CASE("commutant of the scalars is everything") {
  Subalgebra triv = from_generators(3, {});
  Subalgebra c = commutant(triv);
  CHECK(c.traceless_dim() == 8);
  CHECK(c.kind == AlgKind::Factor);
}

TEST_CASE("intersections of spans") {
  Subalgebra both = intersect(left_factor(), right_factor());
  CHECK(both.traceless_dim() == 0);
  // bell masa and diagonal masa share exactly span{I, s33}
  Subalgebra shared = intersect(bell_masa(), diag_masa(4));
  CHECK(shared.traceless_dim() == 1);
  CHECK(span_contains(shared, tensor(sigma(3), sigma(3))));
  // intersecting with itself returns the same span
  CHECK(spans_equal(intersect(bell_masa(), bell_masa()), bell_masa()));
}

TEST_CASE("minimal projections of the bell masa are the bell projectors") {
  auto fam = minimal_projections(bell_masa());
  std::vector<cmat> expect;
  for (const cvec& v : bell_vectors()) expect.push_back(v * v.adjoint());
  CHECK(family_matches(fam, expect));
  cmat sum = cmat::Zero(4, 4);
  for (const cmat& p : fam) sum += p;
  CHECK((sum - cmat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("minimal projection family members belong to the algebra") {
  Rng rng(24);
  for (Subalgebra base : {bell_masa(), left_factor()}) {
    Subalgebra a = conjugated(base, rng.haar_unitary(4));
    for (const cmat& p : minimal_projection_family(a)) {
      CHECK(is_projection(p, 1e-9));
      CHECK(span_contains(a, p, 1e-8));
    }
  }
}

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(from_generators(2, {cmat::Identity(3, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(from_generators(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(conditional_expectation(diag_masa(2), cmat::Identity(3, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(complementarity_report(diag_masa(2), diag_masa(3)), std::invalid_argument);
}
