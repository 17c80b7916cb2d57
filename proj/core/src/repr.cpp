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

#include "sicprob/repr.hpp"

#include <cmath>
#include <sstream>

#include "sicprob/error.hpp"

namespace sicprob {

namespace {

void require_outcome_count(Eigen::Index n, int d, const char* what) {
  if (d < 1 || n != static_cast<Eigen::Index>(d) * d) {
    std::ostringstream os;
    os << what << ": expected N = d^2 = " << d * d << " reference outcomes, got " << n;
    throw InvalidArgument(os.str());
  }
}

void require_dimension(int d, const char* what) {
  if (d < 2) throw InvalidArgument(std::string(what) + ": dimension must be >= 2");
}

}  // namespace

Distribution::Distribution(RealVector values) : values_(std::move(values)) {
  if (values_.size() == 0) throw InvalidArgument("probability vector is empty");
  if (!values_.allFinite()) throw InvalidArgument("probability vector has non-finite entries");
  const double lo = values_.minCoeff();
  if (lo < -kSimplexTol) {
    std::ostringstream os;
    os << "probability vector has negative entry " << lo;
    throw InvalidArgument(os.str());
  }
  const double sum = values_.sum();
  if (std::abs(sum - 1.0) > kSimplexTol) {
    std::ostringstream os;
    os.precision(17);
    os << "probability vector sums to " << sum << ", not 1";
    throw InvalidArgument(os.str());
  }
}

CondMatrix::CondMatrix(RealMatrix r) : r_(std::move(r)) {
  if (r_.size() == 0) throw InvalidArgument("conditional matrix is empty");
  if (!r_.allFinite()) throw InvalidArgument("conditional matrix has non-finite entries");
  if (r_.minCoeff() < -kSimplexTol || r_.maxCoeff() > 1.0 + kSimplexTol) {
    throw InvalidArgument("conditional matrix has entries outside [0, 1]");
  }
  const RealVector sums = r_.colwise().sum().transpose();
  for (Eigen::Index i = 0; i < sums.size(); ++i) {
    if (std::abs(sums(i) - 1.0) > kSimplexTol) {
      std::ostringstream os;
      os.precision(17);
      os << "column " << i << " of conditional matrix sums to " << sums(i) << ", not 1";
      throw InvalidArgument(os.str());
    }
  }
}

std::vector<ProbState> reference_states(int d) {
  require_dimension(d, "reference_states");
  const RealMatrix m = reference_matrix(d);
  std::vector<ProbState> out;
  out.reserve(m.cols());
  for (Eigen::Index k = 0; k < m.cols(); ++k) out.emplace_back(m.col(k));
  return out;
}

RealMatrix reference_matrix(int d) {
  require_dimension(d, "reference_matrix");
  const int n = d * d;
  const double off = 1.0 / (double(d) * (d + 1));
  RealMatrix m = RealMatrix::Constant(n, n, off);
  m.diagonal().array() += 1.0 / (d + 1);
  return m;
}

CondMatrix double_pass_matrix(int d) { return CondMatrix(reference_matrix(d)); }

RealMatrix phi_matrix(int d) {
  require_dimension(d, "phi_matrix");
  const int n = d * d;
  RealMatrix phi = RealMatrix::Constant(n, n, -1.0 / d);
  phi.diagonal().array() += d + 1.0;
  return phi;
}

ProbState state_to_prob(const ComplexMatrix& rho, const SicSystem& sic, double tol) {
  require_square(rho, "state_to_prob");
  if (rho.rows() != sic.dimension()) throw InvalidArgument("state_to_prob: dimension mismatch");
  const ValidationReport report = validate_density(rho, tol);
  if (!report.ok) {
    throw InvalidArgument("state_to_prob: invalid density matrix: " + report.messages.front());
  }
  const auto& effects = sic.effects();
  RealVector p(effects.size());
  for (std::size_t i = 0; i < effects.size(); ++i) {
    p(static_cast<Eigen::Index>(i)) = trace_inner_product(rho, effects[i]);
  }
  return ProbState(std::move(p));
}

ComplexMatrix prob_to_state(const ProbState& p, const SicSystem& sic) {
  const int d = sic.dimension();
  require_outcome_count(p.size(), d, "prob_to_state");
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  const auto& proj = sic.projectors();
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    rho += ((d + 1.0) * p[i] - 1.0 / d) * proj[static_cast<std::size_t>(i)];
  }
  return rho;
}

CondMatrix povm_to_cond(std::span<const ComplexMatrix> effects, const SicSystem& sic,
                        double tol) {
  const ValidationReport report = validate_povm(effects, tol);
  if (!report.ok) throw InvalidArgument("povm_to_cond: invalid POVM: " + report.messages.front());
  if (effects.front().rows() != sic.dimension()) {
    throw InvalidArgument("povm_to_cond: dimension mismatch");
  }
  const auto& proj = sic.projectors();
  RealMatrix r(static_cast<Eigen::Index>(effects.size()), sic.outcomes());
  for (std::size_t j = 0; j < effects.size(); ++j) {
    for (std::size_t i = 0; i < proj.size(); ++i) {
      r(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
          trace_inner_product(proj[i], effects[j]);
    }
  }
  return CondMatrix(std::move(r));
}

std::vector<ComplexMatrix> cond_to_povm(const CondMatrix& r, const SicSystem& sic) {
  const int d = sic.dimension();
  require_outcome_count(r.inputs(), d, "cond_to_povm");
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  std::vector<ComplexMatrix> dual;
  dual.reserve(sic.effects().size());
  for (const auto& e : sic.effects()) dual.push_back((d + 1.0) * e - id / double(d));

  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(r.outcomes()));
  for (Eigen::Index j = 0; j < r.outcomes(); ++j) {
    ComplexMatrix dj = ComplexMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < r.inputs(); ++i) dj += r(j, i) * dual[static_cast<std::size_t>(i)];
    out.push_back(std::move(dj));
  }
  return out;
}

RealVector apply_kernel(const ProbState& p, const CondMatrix& r, const RealMatrix& phi) {
  if (r.inputs() != p.size() || phi.rows() != p.size() || phi.cols() != p.size()) {
    throw InvalidArgument("apply_kernel: dimension mismatch");
  }
  return r.matrix() * (phi * p.values());
}

BornPrediction born(const ProbState& p, const CondMatrix& r, int d) {
  require_dimension(d, "born");
  require_outcome_count(p.size(), d, "born");
  require_outcome_count(r.inputs(), d, "born");
  BornPrediction out;
  out.q = apply_kernel(p, r, phi_matrix(d));
  out.physical = out.q.minCoeff() >= -kSimplexTol && out.q.maxCoeff() <= 1.0 + kSimplexTol;
  return out;
}

OutcomeDist ltp(const ProbState& p, const CondMatrix& r) {
  if (r.inputs() != p.size()) throw InvalidArgument("ltp: dimension mismatch");
  return OutcomeDist(r.matrix() * p.values());
}

double ltp_deviation(const ProbState& p, const CondMatrix& r, int d) {
  const BornPrediction q = born(p, r, d);
  return (q.q - ltp(p, r).values()).cwiseAbs().maxCoeff();
}

}  // namespace sicprob
