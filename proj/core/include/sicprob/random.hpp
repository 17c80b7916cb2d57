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

#ifndef SICPROB_RANDOM_HPP_
#define SICPROB_RANDOM_HPP_

// Seeded random objects. Every draw goes through std::mt19937_64, whose output
// sequence is fixed by the C++ standard, and through the conversions below
// (not the implementation-defined std:: distributions), so that streams are
// reproducible across standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "sicprob/linalg.hpp"

namespace sicprob {

using Engine = std::mt19937_64;
inline constexpr const char* kGeneratorName = "mt19937_64";

/// SplitMix64 finalizer; used to derive independent sub-stream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for sub-stream `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Uniform on [0, 1) with 53 random bits.
double uniform01(Engine& rng);

/// Standard normal via Box-Muller (one output per call).
double standard_normal(Engine& rng);

/// Haar-random unit vector in C^d.
ComplexVector random_pure_state(int d, Engine& rng);

/// Hilbert-Schmidt random density matrix A A^dagger / tr(A A^dagger), A Ginibre.
ComplexMatrix random_density(int d, Engine& rng);

/// Haar-random unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(int d, Engine& rng);

/// Random J-outcome POVM: Ginibre PSD elements A_j conjugated by S^{-1/2},
/// S = sum_j A_j.
std::vector<ComplexMatrix> random_povm(int d, int outcomes, Engine& rng);

/// Uniform (flat Dirichlet) random point of the n-simplex.
RealVector random_simplex_point(int n, Engine& rng);

}  // namespace sicprob

#endif  // SICPROB_RANDOM_HPP_
