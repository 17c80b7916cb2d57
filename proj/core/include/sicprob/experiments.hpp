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

#ifndef SICPROB_EXPERIMENTS_HPP_
#define SICPROB_EXPERIMENTS_HPP_

// Monte-Carlo runs of the two measurement protocols:
//   one: the system goes straight to the measurement D, outcome j ~ q;
//   two: the system first goes through the reference apparatus, i ~ p, then
//        through D, j ~ R(.|i).
//
// Streams: a run seeded with s uses std::mt19937_64 seeded with
// derive_seed(s, stream), stream 1 for experiment one and 2 for experiment
// two. Each draw consumes one 64-bit output mapped to [0,1) by its top 53
// bits; experiment two draws i then j per shot. Categories are picked by
// inverse CDF over cumulative sums in label order.

#include <cstdint>
#include <string>
#include <vector>

#include "sicprob/random.hpp"
#include "sicprob/repr.hpp"

namespace sicprob {

struct RunConfig {
  std::uint64_t shots = 1;
  std::uint64_t seed = 0;
  std::string generator = kGeneratorName;
};

struct CountTable {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  std::uint64_t seed = 0;
};

/// Labels "0".."J-1".
CountTable sample_experiment_one(const OutcomeDist& q, const RunConfig& cfg);

/// Labels "i,j" for i in [0,N), j in [0,J), i-major.
CountTable sample_experiment_two(const ProbState& p, const CondMatrix& r, const RunConfig& cfg);

/// Collapses an experiment-two table onto its j labels "0".."J-1".
CountTable j_marginal(const CountTable& two);

/// max_j |counts(j)/total - predicted(j)|. Labels must be "0".."J-1" for the
/// J entries of `predicted`.
double empirical_compare(const CountTable& table, const RealVector& predicted);

}  // namespace sicprob

#endif  // SICPROB_EXPERIMENTS_HPP_
