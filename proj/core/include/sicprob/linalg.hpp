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

#ifndef SICPROB_LINALG_HPP_
#define SICPROB_LINALG_HPP_

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sicprob {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-10;

/// Outcome of a validation. `ok` holds exactly when `max_violation` is at or
/// below the tolerance that was passed to the producing check.
struct ValidationReport {
  bool ok = true;
  double max_violation = 0.0;
  std::vector<std::string> messages;

  /// Folds a single violation amount into the report.
  void record(double violation, double tol, std::string message);
};

/// Re tr(a b). Hermiticity of the inputs is the caller's responsibility.
double trace_inner_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise |a - a^dagger|.
double hermitian_deviation(const ComplexMatrix& a);

/// Ascending eigenvalues of the Hermitian part of `a`.
RealVector hermitian_eigenvalues(const ComplexMatrix& a);

/// ok iff the smallest eigenvalue is >= -tol. Throws InvalidArgument when `a`
/// is not Hermitian within tol.
ValidationReport check_psd(const ComplexMatrix& a, double tol = kDefaultTol);

/// Hermitian, positive semidefinite and unit trace, each within tol.
ValidationReport validate_density(const ComplexMatrix& rho, double tol = kDefaultTol);

/// Every element PSD and the elements sum to the identity, within tol.
ValidationReport validate_povm(std::span<const ComplexMatrix> effects,
                               double tol = kDefaultTol);

/// Largest entrywise |a - b|; sizes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

void require_square(const ComplexMatrix& a, const char* what);

}  // namespace sicprob

#endif  // SICPROB_LINALG_HPP_
