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

#ifndef SICPROB_REPR_HPP_
#define SICPROB_REPR_HPP_

#include <span>
#include <vector>

#include "sicprob/linalg.hpp"
#include "sicprob/sic.hpp"

namespace sicprob {

inline constexpr double kSimplexTol = 1e-12;

/// A point of the probability simplex: entries >= -tol and summing to 1
/// within tol (tol = kSimplexTol). Checked on construction.
class Distribution {
 public:
  explicit Distribution(RealVector values);

  Eigen::Index size() const noexcept { return values_.size(); }
  double operator[](Eigen::Index i) const { return values_(i); }
  const RealVector& values() const noexcept { return values_; }

 private:
  RealVector values_;
};

/// The agent's probabilities for the reference measurement outcomes.
using ProbState = Distribution;
/// Probabilities for the outcomes of some other measurement.
using OutcomeDist = Distribution;

/// Conditional probabilities R(j|i): J rows, N columns, entries in [0,1],
/// every column summing to 1. Checked on construction.
class CondMatrix {
 public:
  explicit CondMatrix(RealMatrix r);

  Eigen::Index outcomes() const noexcept { return r_.rows(); }
  Eigen::Index inputs() const noexcept { return r_.cols(); }
  const RealMatrix& matrix() const noexcept { return r_; }
  double operator()(Eigen::Index j, Eigen::Index i) const { return r_(j, i); }

 private:
  RealMatrix r_;
};

/// Born-rule prediction. Not clamped; `physical` reports whether q is a
/// probability vector (entries in [-tol, 1+tol]).
struct BornPrediction {
  RealVector q;
  bool physical = true;
};

/// Post-measurement reference states e_k(i) = delta_ik/(d+1) + 1/(d(d+1)).
std::vector<ProbState> reference_states(int d);

/// N x N matrix with columns e_k; also the conditional matrix of measuring
/// the reference apparatus twice in a row.
RealMatrix reference_matrix(int d);

/// Double-pass conditional matrix R(j|i) = tr(Pi_i E_j) in closed form.
CondMatrix double_pass_matrix(int d);

/// Inverse of reference_matrix: Phi_ij = (d+1) delta_ij - 1/d.
RealMatrix phi_matrix(int d);

/// p(i) = tr(rho E_i). Throws InvalidArgument when rho is not a density
/// matrix within `tol`.
ProbState state_to_prob(const ComplexMatrix& rho, const SicSystem& sic, double tol = kDefaultTol);

/// rho = sum_i ((d+1) p(i) - 1/d) Pi_i. Hermitian with unit trace, but only
/// positive when p lies in the quantum state space.
ComplexMatrix prob_to_state(const ProbState& p, const SicSystem& sic);

/// R(j|i) = tr(Pi_i D_j). Throws InvalidArgument for an invalid POVM.
CondMatrix povm_to_cond(std::span<const ComplexMatrix> effects, const SicSystem& sic,
                        double tol = kDefaultTol);

/// D_j = sum_i R(j|i) ((d+1) E_i - I/d).
std::vector<ComplexMatrix> cond_to_povm(const CondMatrix& r, const SicSystem& sic);

/// q = R * phi * p for an arbitrary kernel `phi`. With phi = identity this is
/// the law of total probability.
RealVector apply_kernel(const ProbState& p, const CondMatrix& r, const RealMatrix& phi);

/// q(j) = sum_i ((d+1) p(i) - 1/d) R(j|i).
BornPrediction born(const ProbState& p, const CondMatrix& r, int d);

/// s(j) = sum_i R(j|i) p(i).
OutcomeDist ltp(const ProbState& p, const CondMatrix& r);

/// max_j |born(p,R,d)(j) - ltp(p,R)(j)|.
double ltp_deviation(const ProbState& p, const CondMatrix& r, int d);

}  // namespace sicprob

#endif  // SICPROB_REPR_HPP_
