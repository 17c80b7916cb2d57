// Copyright 2026 The sicprob Authors
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

#include "sicprob/qplex.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "sicprob/error.hpp"
#include "sicprob/random.hpp"
#include "support/systems.hpp"

namespace sicprob {
namespace {

using testing::sic_for;

ProbState vertex(int n, int k) {
  RealVector v = RealVector::Zero(n);
  v(k) = 1.0;
  return ProbState(v);
}

ProbState pure_image(const ComplexVector& psi, const SicSystem& sic) {
  return state_to_prob(psi * psi.adjoint(), sic);
}

std::vector<ProbState> basis_images(int d) {
  std::vector<ProbState> out;
  for (int k = 0; k < d; ++k) {
    ComplexVector v = ComplexVector::Zero(d);
    v(k) = 1.0;
    out.push_back(pure_image(v, sic_for(d)));
  }
  return out;
}

TEST(QuantumBounds, SmallDimensions) {
  const QplexGeometry g2 = quantum_bounds(2);
  EXPECT_EQ(g2.N, 4);
  EXPECT_DOUBLE_EQ(g2.L, 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(g2.U, 1.0 / 3.0);
  EXPECT_NEAR(g2.Lprime, 1.0 / 12.0, 1e-16);

  const QplexGeometry g3 = quantum_bounds(3);
  EXPECT_EQ(g3.N, 9);
  EXPECT_DOUBLE_EQ(g3.L, 1.0 / 12.0);
  EXPECT_DOUBLE_EQ(g3.U, 1.0 / 6.0);
  EXPECT_THROW(quantum_bounds(1), InvalidArgument);
}

TEST(QuantumBounds, ShiftedBoundsPositiveAndRadiiIdentity) {
  for (int d = 2; d <= 8; ++d) {
    const QplexGeometry g = quantum_bounds(d);
    EXPECT_GT(g.Lprime, 0.0);
    EXPECT_GT(g.Uprime, 0.0);
    EXPECT_NEAR(g.r_in * g.r_out, g.Lprime, 1e-12);
  }
}

TEST(UFromNl, Examples) {
  EXPECT_NEAR(u_from_nl(4, 1.0 / 6.0), 1.0 / 3.0, 1e-15);
  for (int n : {2, 4, 9, 16}) {
    EXPECT_DOUBLE_EQ(u_from_nl(n, 0.0), 1.0);
    EXPECT_NEAR(u_from_nl(n, 1.0 / n), 1.0 / n, 1e-15);
  }
  for (int d = 2; d <= 8; ++d) {
    const QplexGeometry g = quantum_bounds(d);
    EXPECT_NEAR(u_from_nl(g.N, g.L), g.U, 1e-15);
  }
  EXPECT_THROW(u_from_nl(4, -0.1), InvalidArgument);
  EXPECT_THROW(u_from_nl(4, 0.3), InvalidArgument);
}

TEST(MmdBound, QuantumAndClassical) {
  for (int d = 2; d <= 8; ++d) {
    const QplexGeometry g = quantum_bounds(d);
    EXPECT_EQ(mmd_bound(g.N, g.L, g.U), d);
    EXPECT_EQ(mmd_bound(d, 0.0, 1.0), d);
  }
  EXPECT_THROW(mmd_bound(4, 0.25, 0.5), InvalidArgument);
}

TEST(FindMmd, OrthogonalQubitStates) {
  const auto states = basis_images(2);
  const MmdResult r = find_mmd(states, quantum_bounds(2), 1e-9);
  EXPECT_EQ(r.size, 2u);
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.indices, (std::vector<std::size_t>{0, 1}));
}

TEST(FindMmd, ReferenceStatesAreSingletons) {
  for (int d = 2; d <= 5; ++d) {
    const auto e = reference_states(d);
    // Pairwise overlap (d+2)/(d(d+1)^2) differs from L.
    EXPECT_NEAR(overlap(e[0], e[1]), (d + 2.0) / (d * (d + 1.0) * (d + 1.0)), 1e-15);
    const MmdResult r = find_mmd(e, quantum_bounds(d), 1e-9);
    EXPECT_EQ(r.size, 1u);
    EXPECT_EQ(r.indices.front(), 0u);
  }
}

TEST(FindMmd, SimplexVerticesUnderClassicalGeometry) {
  const int n = 6;
  std::vector<ProbState> vertices;
  for (int k = 0; k < n; ++k) vertices.push_back(vertex(n, k));
  const MmdResult r = find_mmd(vertices, QplexGeometry::from_bounds(n, n, 0.0, 1.0), 1e-12);
  EXPECT_EQ(r.size, static_cast<std::size_t>(n));
  EXPECT_TRUE(r.certified);
}

TEST(FindMmd, GreedyPathBeyondCutoff) {
  const int n = 25;
  std::vector<ProbState> vertices;
  for (int k = 0; k < n; ++k) vertices.push_back(vertex(n, k));
  const MmdResult r = find_mmd(vertices, QplexGeometry::from_bounds(5, n, 0.0, 1.0), 1e-12);
  EXPECT_EQ(r.size, static_cast<std::size_t>(n));
  EXPECT_FALSE(r.certified);
}

class BasisPlusRandom : public ::testing::TestWithParam<int> {};

TEST_P(BasisPlusRandom, MaximumIsDimension) {
  const int d = GetParam();
  const SicSystem& sic = sic_for(d);
  const QplexGeometry geom = quantum_bounds(d);
  Engine rng(900 + d);

  for (bool pure : {false, true}) {
    auto states = basis_images(d);
    for (int t = 0; t < 50; ++t) {
      states.push_back(pure ? pure_image(random_pure_state(d, rng), sic)
                            : state_to_prob(random_density(d, rng), sic));
    }
    const MmdResult r = find_mmd(states, geom, 1e-9);
    EXPECT_EQ(r.size, static_cast<std::size_t>(d));
    for (std::size_t k = 0; k < r.indices.size(); ++k) EXPECT_EQ(r.indices[k], k);

    // Brute force: the only admissible pairs are among the basis images, so
    // no (d+1)-member MMD set exists.
    for (std::size_t a = 0; a < states.size(); ++a) {
      for (std::size_t b = a + 1; b < states.size(); ++b) {
        const bool admissible = std::abs(overlap(states[a], states[a]) - geom.U) <= 1e-9 &&
                                std::abs(overlap(states[b], states[b]) - geom.U) <= 1e-9 &&
                                std::abs(overlap(states[a], states[b]) - geom.L) <= 1e-9;
        if (admissible) EXPECT_LT(b, static_cast<std::size_t>(d));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, BasisPlusRandom, ::testing::Values(2, 3, 4));

TEST(InPolar, Examples) {
  const QplexGeometry g = quantum_bounds(2);
  const auto e = reference_states(2);
  const RealVector uniform = RealVector::Constant(4, 0.25);
  EXPECT_TRUE(in_polar(uniform, e, g.L));
  EXPECT_TRUE(in_polar(e[0].values(), e, g.L));
  const std::vector<ProbState> other = {vertex(4, 1)};
  EXPECT_FALSE(in_polar(vertex(4, 0).values(), other, 1.0 / 6.0));
  EXPECT_THROW(in_polar(RealVector::Constant(4, 0.3), e, g.L), InvalidArgument);
}

TEST(ValidState, Examples) {
  const SicSystem& sic = sic_for(2);
  EXPECT_TRUE(valid_state(ProbState(RealVector::Constant(4, 0.25)), sic).ok);
  EXPECT_TRUE(valid_state(reference_states(2)[0], sic).ok);
  // Vertex delta_1 reconstructs to 3 Pi_1 - I, eigenvalues {2, -1}.
  const ValidationReport r = valid_state(vertex(4, 0), sic);
  EXPECT_FALSE(r.ok);
  EXPECT_NEAR(r.max_violation, 1.0, 1e-12);
}

TEST(ValidState, ReferenceStatesPassVerticesFail) {
  for (int d = 2; d <= 5; ++d) {
    const SicSystem& sic = sic_for(d);
    const auto e = reference_states(d);
    for (int k = 0; k < d * d; ++k) {
      EXPECT_TRUE(valid_state(e[k], sic).ok) << "d=" << d << " k=" << k;
      EXPECT_FALSE(valid_state(vertex(d * d, k), sic).ok) << "d=" << d << " k=" << k;
    }
  }
}

TEST(ValidState, SizeMismatchThrows) {
  EXPECT_THROW(valid_state(ProbState(RealVector::Constant(9, 1.0 / 9)), sic_for(2)),
               InvalidArgument);
}

TEST(ValidEffect, Examples) {
  const SicSystem& sic = sic_for(2);
  EXPECT_TRUE(valid_effect(RealVector::Ones(4), sic).ok);
  // First row of the double-pass matrix reconstructs E_1.
  EXPECT_TRUE(valid_effect(reference_matrix(2).row(0).transpose(), sic).ok);
  // delta_1 reconstructs to (3/2) Pi_1 - I/2, eigenvalues {1, -1/2}.
  const ValidationReport r = valid_effect(vertex(4, 0).values(), sic);
  EXPECT_FALSE(r.ok);
  EXPECT_NEAR(r.max_violation, 0.5, 1e-12);
  EXPECT_THROW(valid_effect(RealVector::Constant(4, 1.5), sic), InvalidArgument);
  EXPECT_THROW(valid_effect(RealVector::Constant(4, -0.1), sic), InvalidArgument);
}

TEST(SelfDuality, StateAndScaledEffectAgree) {
  // D built from r = d p equals the operator rebuilt from p.
  Engine rng(55);
  for (int d = 2; d <= 4; ++d) {
    const SicSystem& sic = sic_for(d);
    int checked_invalid = 0;
    for (int t = 0; t < 200; ++t) {
      const RealVector p = t % 2 == 0 ? state_to_prob(random_density(d, rng), sic).values()
                                      : random_simplex_point(d * d, rng);
      const RealVector r = d * p;
      if (r.maxCoeff() > 1.0) continue;
      const ProbState state(p);
      const bool as_state = valid_state(state, sic).ok;
      EXPECT_EQ(as_state, valid_effect(r, sic).ok) << "d=" << d << " t=" << t;
      checked_invalid += as_state ? 0 : 1;
    }
    EXPECT_GT(checked_invalid, 0) << "d=" << d;
  }
}

TEST(BallRadii, QubitValues) {
  const BallRadii b = ball_radii(2);
  EXPECT_NEAR(b.r_out, std::sqrt(1.0 / 12.0), 1e-15);
  EXPECT_NEAR(b.r_in, 1.0 / std::sqrt(12.0), 1e-15);
}

TEST(BallRadii, InRadiusMatchesBruteForceFacetDistance) {
  // Facet x_0 = 0 of the 4-simplex, scanned on a grid that includes its
  // barycenter; minimum distance to the uniform point.
  const int steps = 300;
  double best = 1e9;
  for (int a = 0; a <= steps; ++a) {
    for (int b = 0; a + b <= steps; ++b) {
      const int c = steps - a - b;
      const double x[4] = {0.0, double(a) / steps, double(b) / steps, double(c) / steps};
      double dist2 = 0.0;
      for (double xi : x) dist2 += (xi - 0.25) * (xi - 0.25);
      best = std::min(best, std::sqrt(dist2));
    }
  }
  EXPECT_NEAR(ball_radii(2).r_in, best, 1e-12);
}

TEST(BallRadii, ProductIdentity) {
  for (int d = 2; d <= 8; ++d) {
    const BallRadii b = ball_radii(d);
    EXPECT_NEAR(b.r_in * b.r_out, 1.0 / (d * d * (d + 1.0)), 1e-12);
  }
}

TEST(Bounds, HoldOnPhysicalStates) {
  Engine rng(2718);
  for (int d = 2; d <= 3; ++d) {
    const SicSystem& sic = sic_for(d);
    const QplexGeometry g = quantum_bounds(d);
    for (int t = 0; t < 5000; ++t) {
      const ProbState a = state_to_prob(random_density(d, rng), sic);
      const ProbState b = pure_image(random_pure_state(d, rng), sic);
      const double v = overlap(a, b);
      EXPECT_GE(v, g.L - 1e-9);
      EXPECT_LE(v, g.U + 1e-9);
    }
  }
}

TEST(Bounds, SaturatedByOrthogonalAndIdenticalPureStates) {
  Engine rng(31);
  for (int d = 2; d <= 4; ++d) {
    const SicSystem& sic = sic_for(d);
    const QplexGeometry g = quantum_bounds(d);
    for (int t = 0; t < 20; ++t) {
      const ComplexMatrix u = random_unitary(d, rng);
      const ProbState a = pure_image(u.col(0), sic);
      const ProbState b = pure_image(u.col(1), sic);
      EXPECT_NEAR(overlap(a, b), g.L, 1e-10);
      EXPECT_NEAR(overlap(a, a), g.U, 1e-10);
    }
  }
}

TEST(LinearExtension, RecoversDualOfReferenceStates) {
  Engine rng(60);
  const auto e = reference_states(2);
  const ProbState p = state_to_prob(random_density(2, rng), sic_for(2));
  std::vector<LinearSample> samples;
  for (int k = 0; k < 4; ++k) samples.push_back({e[k].values(), p[k]});
  const LinearExtension ext = linear_extension(samples, 1e-12);
  // Direct solve of the 4x4 system M^T w = p.
  const RealVector direct = reference_matrix(2).transpose().fullPivLu().solve(p.values());
  EXPECT_LE((ext.weights - direct).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((ext.weights - phi_matrix(2) * p.values()).cwiseAbs().maxCoeff(), 1e-12);

  // Linearity on a random mixture of the reference states.
  const RealVector mix = random_simplex_point(4, rng);
  RealVector point = RealVector::Zero(4);
  double value = 0.0;
  for (int k = 0; k < 4; ++k) {
    point += mix(k) * e[k].values();
    value += mix(k) * p[k];
  }
  EXPECT_NEAR(ext.weights.dot(point), value, 1e-12);
}

TEST(LinearExtension, SumFunctionalIsAllOnes) {
  Engine rng(61);
  std::vector<LinearSample> samples;
  for (int k = 0; k < 12; ++k) {
    RealVector v(5);
    for (int i = 0; i < 5; ++i) v(i) = standard_normal(rng);
    samples.push_back({v, v.sum()});
  }
  const LinearExtension ext = linear_extension(samples, 1e-12);
  EXPECT_LE((ext.weights.array() - 1.0).abs().maxCoeff(), 1e-12);
  EXPECT_LE(ext.max_residual, 1e-12);
}

TEST(LinearExtension, PerturbedSampleIsInconsistent) {
  const auto e = reference_states(2);
  std::vector<LinearSample> samples;
  for (int k = 0; k < 4; ++k) samples.push_back({e[k].values(), 0.25});
  RealVector extra = 0.5 * (e[0].values() + e[1].values());
  samples.push_back({extra, 0.25 + 1e-3});
  try {
    linear_extension(samples, 1e-9);
    FAIL() << "expected InconsistentSamples";
  } catch (const InconsistentSamples& ex) {
    EXPECT_GT(ex.residual(), 1e-4);
  }
}

TEST(LinearExtension, RankDeficientSamplesRejected) {
  const auto e = reference_states(2);
  std::vector<LinearSample> samples;
  for (int k = 0; k < 3; ++k) samples.push_back({e[k].values(), 0.1});
  EXPECT_THROW(linear_extension(samples, 1e-9), InvalidArgument);
}

}  // namespace
}  // namespace sicprob
