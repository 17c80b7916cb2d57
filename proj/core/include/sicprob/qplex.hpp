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

#ifndef SICPROB_QPLEX_HPP_
#define SICPROB_QPLEX_HPP_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sicprob/linalg.hpp"
#include "sicprob/repr.hpp"
#include "sicprob/sic.hpp"

namespace sicprob {

/// Inner-product bounds L <= (p, q) <= U of a state space over N outcomes,
/// with the derived shifted bounds and the in-ball/out-ball radii about the
/// uniform distribution.
struct QplexGeometry {
  int d = 0;
  int N = 0;
  double L = 0.0;
  double U = 0.0;
  double Lprime = 0.0;  // 1/N - L
  double Uprime = 0.0;  // U - 1/N
  double r_in = 0.0;
  double r_out = 0.0;

  /// General bounds, e.g. the classical simplex (N = d, L = 0, U = 1).
  static QplexGeometry from_bounds(int d, int N, double L, double U);
};

/// N = d^2, L = 1/(d^2 + d), U = 2L.
QplexGeometry quantum_bounds(int d);

/// Self-overlap U = 1 + L(N-1)(NL-2) of the basis distributions e_k(i) = (1-NL) delta_ik + L.
double u_from_nl(int N, double L);

/// Largest size of a mutually maximally distant set allowed by the bounds:
/// floor(1 + (U - 1/N)/(1/N - L)).
int mmd_bound(int N, double L, double U);

struct BallRadii {
  double r_in = 0.0;
  double r_out = 0.0;
};

/// r_in = 1/sqrt(N(N-1)) (inscribed ball of the simplex), r_out = sqrt(U - 1/N).
BallRadii ball_radii(int d);

/// Standard Euclidean inner product of two distributions.
double overlap(const ProbState& a, const ProbState& b);

struct MmdResult {
  std::vector<std::size_t> indices;
  std::size_t size = 0;
  /// True when the subset is proven to be of maximum cardinality.
  bool certified = false;
};

inline constexpr std::size_t kExactMmdCutoff = 20;

/// Largest subset whose members have self-overlap U and pairwise overlap L,
/// both within tol.
///
/// Candidates with the wrong self-overlap are discarded, then candidates with
/// no admissible partner (they can only form singletons). When at most
/// kExactMmdCutoff candidates remain the maximum clique is found by branch and
/// bound and the result is certified. Otherwise a greedy pass is seeded with
/// the pair closest to L and grows by lowest index; certified is false.
MmdResult find_mmd(std::span<const ProbState> states, const QplexGeometry& geom, double tol);

/// True iff (s, p) >= L - 1e-12 for every p in `set`. `s` must sum to 1.
bool in_polar(const RealVector& s, std::span<const ProbState> set, double L);

/// ok iff prob_to_state(p) is a density matrix within tol.
ValidationReport valid_state(const ProbState& p, const SicSystem& sic, double tol = kDefaultTol);

/// ok iff D = sum_i r(i) ((d+1) E_i - I/d) satisfies 0 <= D <= I within tol.
/// Throws InvalidArgument for entries outside [0, 1].
ValidationReport valid_effect(const RealVector& r, const SicSystem& sic, double tol = kDefaultTol);

struct LinearSample {
  RealVector vector;
  double value = 0.0;
};

/// Residual report for `linear_extension`.
struct LinearExtension {
  RealVector weights;
  double max_residual = 0.0;
  std::size_t worst_sample = 0;
};

/// Finds the dual vector w with (w, v) = value on every sample by least
/// squares and certifies it by the largest residual.
///
/// Throws InvalidArgument when the sample vectors do not span R^N, and
/// InconsistentSamples when the residual exceeds tol.
LinearExtension linear_extension(std::span<const LinearSample> samples, double tol);

class InconsistentSamples : public std::runtime_error {
 public:
  InconsistentSamples(const std::string& what, std::size_t worst, double residual)
      : std::runtime_error(what), worst_(worst), residual_(residual) {}
  std::size_t worst_sample() const noexcept { return worst_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t worst_;
  double residual_;
};

}  // namespace sicprob

#endif  // SICPROB_QPLEX_HPP_
