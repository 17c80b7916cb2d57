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

#include "sicprob/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sicprob/error.hpp"

namespace sicprob {

namespace {

constexpr std::uint64_t kStreamOne = 1;
constexpr std::uint64_t kStreamTwo = 2;

void require_config(const RunConfig& cfg) {
  if (cfg.shots < 1) throw InvalidArgument("RunConfig: shots must be >= 1");
  if (cfg.generator != kGeneratorName) {
    throw InvalidArgument("RunConfig: unsupported generator '" + cfg.generator + "'");
  }
}

// Cumulative sums in input order.
std::vector<double> cdf(const Eigen::Ref<const RealVector>& w) {
  std::vector<double> c(static_cast<std::size_t>(w.size()));
  double acc = 0.0;
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    acc += std::max(0.0, w(k));
    c[static_cast<std::size_t>(k)] = acc;
  }
  return c;
}

// First k with u * total < c[k]; rounding past the end falls back to the last
// category carrying weight.
std::size_t pick(const std::vector<double>& c, double u) {
  const double target = u * c.back();
  const auto it = std::upper_bound(c.begin(), c.end(), target);
  if (it != c.end()) return static_cast<std::size_t>(it - c.begin());
  std::size_t k = c.size() - 1;
  while (k > 0 && c[k] == c[k - 1]) --k;
  return k;
}

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t k = 0; k < n; ++k) labels[k] = std::to_string(k);
  return labels;
}

}  // namespace

CountTable sample_experiment_one(const OutcomeDist& q, const RunConfig& cfg) {
  require_config(cfg);
  const auto c = cdf(q.values());
  CountTable t;
  t.labels = index_labels(c.size());
  t.counts.assign(c.size(), 0);
  t.total = cfg.shots;
  t.seed = cfg.seed;
  Engine rng(derive_seed(cfg.seed, kStreamOne));
  for (std::uint64_t s = 0; s < cfg.shots; ++s) ++t.counts[pick(c, uniform01(rng))];
  return t;
}

CountTable sample_experiment_two(const ProbState& p, const CondMatrix& r, const RunConfig& cfg) {
  require_config(cfg);
  if (r.inputs() != p.size()) throw InvalidArgument("sample_experiment_two: dimension mismatch");
  const auto n = static_cast<std::size_t>(p.size());
  const auto j_count = static_cast<std::size_t>(r.outcomes());
  const auto first = cdf(p.values());
  std::vector<std::vector<double>> second;
  second.reserve(n);
  for (Eigen::Index i = 0; i < r.inputs(); ++i) second.push_back(cdf(r.matrix().col(i)));

  CountTable t;
  t.labels.reserve(n * j_count);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < j_count; ++j) {
      t.labels.push_back(std::to_string(i) + "," + std::to_string(j));
    }
  }
  t.counts.assign(n * j_count, 0);
  t.total = cfg.shots;
  t.seed = cfg.seed;
  Engine rng(derive_seed(cfg.seed, kStreamTwo));
  for (std::uint64_t s = 0; s < cfg.shots; ++s) {
    const std::size_t i = pick(first, uniform01(rng));
    const std::size_t j = pick(second[i], uniform01(rng));
    ++t.counts[i * j_count + j];
  }
  return t;
}

CountTable j_marginal(const CountTable& two) {
  CountTable out;
  out.total = two.total;
  out.seed = two.seed;
  std::size_t j_count = 0;
  std::vector<std::size_t> js;
  js.reserve(two.labels.size());
  for (const auto& label : two.labels) {
    const auto comma = label.find(',');
    if (comma == std::string::npos) {
      throw InvalidArgument("j_marginal: label '" + label + "' is not of the form i,j");
    }
    std::size_t j = 0;
    try {
      j = std::stoul(label.substr(comma + 1));
    } catch (const std::exception&) {
      throw InvalidArgument("j_marginal: label '" + label + "' is not of the form i,j");
    }
    js.push_back(j);
    j_count = std::max(j_count, j + 1);
  }
  if (two.counts.size() != js.size()) throw InvalidArgument("j_marginal: labels/counts mismatch");
  out.labels = index_labels(j_count);
  out.counts.assign(j_count, 0);
  for (std::size_t k = 0; k < js.size(); ++k) out.counts[js[k]] += two.counts[k];
  return out;
}

double empirical_compare(const CountTable& table, const RealVector& predicted) {
  const auto n = static_cast<std::size_t>(predicted.size());
  if (table.labels != index_labels(n) || table.counts.size() != n) {
    throw InvalidArgument("empirical_compare: table labels do not match the " + std::to_string(n) +
                          " predicted outcomes");
  }
  if (table.total == 0) throw InvalidArgument("empirical_compare: empty table");
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double freq = static_cast<double>(table.counts[k]) / static_cast<double>(table.total);
    worst = std::max(worst, std::abs(freq - predicted(static_cast<Eigen::Index>(k))));
  }
  return worst;
}

}  // namespace sicprob
