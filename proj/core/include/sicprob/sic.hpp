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

#ifndef SICPROB_SIC_HPP_
#define SICPROB_SIC_HPP_

#include <cstdint>
#include <vector>

#include "sicprob/linalg.hpp"

namespace sicprob {

inline constexpr int kMinSicDimension = 2;
inline constexpr int kMaxSicDimension = 16;

/// Unit vector whose Weyl-Heisenberg orbit is (meant to be) a SIC.
///
/// Always unit norm, with the first non-negligible amplitude real and
/// positive. Construct via `from_amplitudes`, which normalizes and fixes the
/// global phase.
class Fiducial {
 public:
  static Fiducial from_amplitudes(const ComplexVector& amplitudes);

  int dimension() const noexcept { return static_cast<int>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

 private:
  explicit Fiducial(ComplexVector a) : amplitudes_(std::move(a)) {}
  ComplexVector amplitudes_;
};

/// Known qubit fiducial: Bloch vector (1,1,1)/sqrt(3).
Fiducial qubit_fiducial();

/// D_(a,b) = tau^(ab) X^a Z^b for a, b in [0, d), in row-major order
/// index = a*d + b. X|k> = |k+1 mod d>, Z = diag(omega^k),
/// omega = exp(2 pi i/d), tau = -exp(pi i/d).
std::vector<ComplexMatrix> wh_displacements(int d);

/// Sum over p != 0 of (|<psi|D_p psi>|^2 - 1/(d+1))^2. Zero iff the orbit is a SIC.
double frame_potential_error(const Fiducial& fiducial);

/// Seeded multi-start Levenberg-Marquardt search for a SIC fiducial.
///
/// Restart r starts from a Gaussian vector drawn from the stream
/// derive_seed(seed, r). Restarts run concurrently; the winner is the lowest
/// error with ties broken by restart index, so the result depends only on
/// (d, seed, restarts). Throws ConvergenceError (carrying the best error)
/// when no restart reaches `tol`.
Fiducial find_fiducial(int d, std::uint64_t seed, int restarts, double tol);

/// A reference measurement generated from a fiducial. Immutable.
class SicSystem {
 public:
  int dimension() const noexcept { return d_; }
  int outcomes() const noexcept { return d_ * d_; }
  const Fiducial& fiducial() const noexcept { return fiducial_; }
  const std::vector<ComplexMatrix>& displacements() const noexcept { return displacements_; }
  /// Rank-one projectors Pi_i = D_i |psi><psi| D_i^dagger.
  const std::vector<ComplexMatrix>& projectors() const noexcept { return projectors_; }
  /// Effects E_i = Pi_i / d.
  const std::vector<ComplexMatrix>& effects() const noexcept { return effects_; }
  /// max_ij |tr(E_i E_j) - (d delta_ij + 1)/(d^2 (d+1))|.
  double sic_error() const noexcept { return sic_error_; }

 private:
  friend SicSystem build_sic(const Fiducial& fiducial);
  SicSystem(Fiducial f) : fiducial_(std::move(f)) {}

  int d_ = 0;
  Fiducial fiducial_;
  std::vector<ComplexMatrix> displacements_;
  std::vector<ComplexMatrix> projectors_;
  std::vector<ComplexMatrix> effects_;
  double sic_error_ = 0.0;
};

SicSystem build_sic(const Fiducial& fiducial);

/// Overlap condition at `tol` plus POVM validity of the effects.
ValidationReport verify_sic(const SicSystem& sic, double tol);

/// The SIC overlap value tr(E_i E_j) for i == j and i != j.
double sic_overlap(int d, bool same);

}  // namespace sicprob

#endif  // SICPROB_SIC_HPP_
