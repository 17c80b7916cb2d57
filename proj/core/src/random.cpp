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

#include "sicprob/random.hpp"

#include <cmath>
#include <numbers>

#include "sicprob/error.hpp"

namespace sicprob {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(seed) ^ index);
}

double uniform01(Engine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double standard_normal(Engine& rng) {
  // 1 - u lies in (0, 1], so the log is finite.
  const double u1 = 1.0 - uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

ComplexMatrix ginibre(int rows, int cols, Engine& rng) {
  ComplexMatrix g(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double re = standard_normal(rng);
      const double im = standard_normal(rng);
      g(r, c) = {re, im};
    }
  }
  return g;
}

void require_dim(int d) {
  if (d < 1) throw InvalidArgument("random: dimension must be positive");
}

}  // namespace

ComplexVector random_pure_state(int d, Engine& rng) {
  require_dim(d);
  ComplexVector v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

ComplexMatrix random_density(int d, Engine& rng) {
  require_dim(d);
  const ComplexMatrix a = ginibre(d, d, rng);
  ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

ComplexMatrix random_unitary(int d, Engine& rng) {
  require_dim(d);
  const ComplexMatrix z = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    const std::complex<double> diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

std::vector<ComplexMatrix> random_povm(int d, int outcomes, Engine& rng) {
  require_dim(d);
  if (outcomes < 1) throw InvalidArgument("random_povm: need at least one outcome");
  std::vector<ComplexMatrix> parts;
  parts.reserve(outcomes);
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < outcomes; ++j) {
    const ComplexMatrix a = ginibre(d, d, rng);
    parts.push_back(a * a.adjoint());
    total += parts.back();
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(total);
  const RealVector inv_sqrt = eig.eigenvalues().cwiseSqrt().cwiseInverse();
  const ComplexMatrix s = eig.eigenvectors() * inv_sqrt.asDiagonal() * eig.eigenvectors().adjoint();
  for (auto& p : parts) {
    p = s * p * s;
    p = 0.5 * (p + p.adjoint());
  }
  return parts;
}

RealVector random_simplex_point(int n, Engine& rng) {
  if (n < 1) throw InvalidArgument("random_simplex_point: n must be positive");
  RealVector x(n);
  for (int i = 0; i < n; ++i) x(i) = -std::log(1.0 - uniform01(rng));
  return x / x.sum();
}

}  // namespace sicprob
