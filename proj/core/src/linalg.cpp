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

#include "sicprob/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sicprob/error.hpp"

namespace sicprob {

void ValidationReport::record(double violation, double tol, std::string message) {
  if (std::isnan(violation)) violation = std::numeric_limits<double>::infinity();
  max_violation = std::max(max_violation, violation);
  if (violation > tol) {
    ok = false;
    messages.push_back(std::move(message));
  }
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << a.rows() << "x" << a.cols();
    throw InvalidArgument(os.str());
  }
  if (!a.allFinite()) throw InvalidArgument(std::string(what) + ": non-finite entry");
}

double trace_inner_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "trace_inner_product");
  require_square(b, "trace_inner_product");
  if (a.rows() != b.rows()) throw InvalidArgument("trace_inner_product: size mismatch");
  // Re tr(ab) = sum_ij Re(a_ij b_ji); avoids forming the product.
  return (a.array() * b.transpose().array()).real().sum();
}

double hermitian_deviation(const ComplexMatrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("max_abs_diff: size mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

RealVector hermitian_eigenvalues(const ComplexMatrix& a) {
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

ValidationReport check_psd(const ComplexMatrix& a, double tol) {
  require_square(a, "check_psd");
  const double herm = hermitian_deviation(a);
  if (herm > tol) {
    std::ostringstream os;
    os << "check_psd: matrix is not Hermitian (deviation " << herm << ")";
    throw InvalidArgument(os.str());
  }
  ValidationReport report;
  const double lambda_min = hermitian_eigenvalues(a)(0);
  std::ostringstream os;
  os << "negative eigenvalue " << lambda_min;
  report.record(std::max(0.0, -lambda_min), tol, os.str());
  return report;
}

ValidationReport validate_density(const ComplexMatrix& rho, double tol) {
  require_square(rho, "validate_density");
  ValidationReport report;
  const double herm = hermitian_deviation(rho);
  report.record(herm, tol, "not Hermitian (deviation " + std::to_string(herm) + ")");
  if (herm > tol) return report;

  const double lambda_min = hermitian_eigenvalues(rho)(0);
  report.record(std::max(0.0, -lambda_min), tol,
                "not positive semidefinite (min eigenvalue " + std::to_string(lambda_min) + ")");
  const double trace_err = std::abs(rho.trace().real() - 1.0);
  report.record(trace_err, tol, "trace differs from 1 by " + std::to_string(trace_err));
  return report;
}

ValidationReport validate_povm(std::span<const ComplexMatrix> effects, double tol) {
  if (effects.empty()) throw InvalidArgument("validate_povm: empty effect sequence");
  const auto d = effects.front().rows();
  ValidationReport report;
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (std::size_t j = 0; j < effects.size(); ++j) {
    const ComplexMatrix& e = effects[j];
    require_square(e, "validate_povm");
    if (e.rows() != d) throw InvalidArgument("validate_povm: effects differ in size");
    const double herm = hermitian_deviation(e);
    report.record(herm, tol, "effect " + std::to_string(j) + " is not Hermitian");
    if (herm <= tol) {
      const double lambda_min = hermitian_eigenvalues(e)(0);
      report.record(std::max(0.0, -lambda_min), tol,
                    "effect " + std::to_string(j) + " has negative eigenvalue " +
                        std::to_string(lambda_min));
    }
    total += e;
  }
  const double completeness = max_abs_diff(total, ComplexMatrix::Identity(d, d));
  report.record(completeness, tol,
                "effects do not sum to the identity (deviation " + std::to_string(completeness) + ")");
  return report;
}

}  // namespace sicprob
