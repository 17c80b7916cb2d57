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

#include "sicprob/qplex.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "sicprob/error.hpp"

namespace sicprob {

QplexGeometry QplexGeometry::from_bounds(int d, int N, double L, double U) {
  if (N < 2) throw InvalidArgument("QplexGeometry: need at least two outcomes");
  QplexGeometry g;
  g.d = d;
  g.N = N;
  g.L = L;
  g.U = U;
  const double center = 1.0 / N;
  g.Lprime = center - L;
  g.Uprime = U - center;
  g.r_in = 1.0 / std::sqrt(double(N) * (N - 1));
  g.r_out = std::sqrt(std::max(0.0, g.Uprime));
  return g;
}

QplexGeometry quantum_bounds(int d) {
  if (d < 2) throw InvalidArgument("quantum_bounds: dimension must be >= 2");
  const double L = 1.0 / (double(d) * d + d);
  return QplexGeometry::from_bounds(d, d * d, L, 2.0 * L);
}

double u_from_nl(int N, double L) {
  if (N < 1) throw InvalidArgument("u_from_nl: N must be positive");
  if (!(L >= 0.0) || L > 1.0 / N) {
    std::ostringstream os;
    os << "u_from_nl: L = " << L << " outside [0, 1/N]";
    throw InvalidArgument(os.str());
  }
  return 1.0 + L * (N - 1) * (N * L - 2.0);
}

int mmd_bound(int N, double L, double U) {
  if (N < 1) throw InvalidArgument("mmd_bound: N must be positive");
  const double center = 1.0 / N;
  const double lp = center - L;
  const double up = U - center;
  if (std::abs(lp) <= 1e-15) throw InvalidArgument("mmd_bound: degenerate bounds, L = 1/N");
  if (!(lp > 0.0) || !(up > 0.0)) throw InvalidArgument("mmd_bound: requires L < 1/N < U");
  // The ratio is an integer for the quantum and classical cases; absorb
  // rounding below it before flooring.
  return static_cast<int>(std::floor(1.0 + up / lp + 1e-9));
}

BallRadii ball_radii(int d) {
  const QplexGeometry g = quantum_bounds(d);
  return {g.r_in, g.r_out};
}

double overlap(const ProbState& a, const ProbState& b) {
  if (a.size() != b.size()) throw InvalidArgument("overlap: length mismatch");
  return a.values().dot(b.values());
}

namespace {

using Mask = std::uint32_t;

void max_clique(Mask current, Mask candidates, const std::vector<Mask>& adj, Mask& best) {
  if (candidates == 0) {
    if (std::popcount(current) > std::popcount(best)) best = current;
    return;
  }
  while (candidates != 0) {
    if (std::popcount(current) + std::popcount(candidates) <= std::popcount(best)) return;
    const int v = std::countr_zero(candidates);
    const Mask bit = Mask{1} << v;
    candidates &= ~bit;
    max_clique(current | bit, candidates & adj[static_cast<std::size_t>(v)], adj, best);
  }
}

}  // namespace

MmdResult find_mmd(std::span<const ProbState> states, const QplexGeometry& geom, double tol) {
  for (const auto& s : states) {
    if (s.size() != geom.N) throw InvalidArgument("find_mmd: state length differs from N");
  }
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (std::abs(overlap(states[i], states[i]) - geom.U) <= tol) cand.push_back(i);
  }
  MmdResult result;
  if (cand.empty()) {
    result.certified = true;
    return result;
  }

  auto pair_gap = [&](std::size_t a, std::size_t b) {
    return std::abs(overlap(states[cand[a]], states[cand[b]]) - geom.L);
  };

  // Keep only candidates with at least one admissible partner.
  std::vector<std::size_t> linked;
  for (std::size_t a = 0; a < cand.size(); ++a) {
    for (std::size_t b = 0; b < cand.size(); ++b) {
      if (a != b && pair_gap(a, b) <= tol) {
        linked.push_back(a);
        break;
      }
    }
  }
  if (linked.empty()) {
    result.indices = {cand.front()};
    result.size = 1;
    result.certified = true;
    return result;
  }

  if (linked.size() <= kExactMmdCutoff) {
    std::vector<Mask> adj(linked.size(), 0);
    for (std::size_t a = 0; a < linked.size(); ++a) {
      for (std::size_t b = 0; b < linked.size(); ++b) {
        if (a != b && pair_gap(linked[a], linked[b]) <= tol) adj[a] |= Mask{1} << b;
      }
    }
    const Mask all = linked.size() == 32 ? ~Mask{0} : ((Mask{1} << linked.size()) - 1);
    Mask best = 0;
    max_clique(0, all, adj, best);
    for (std::size_t a = 0; a < linked.size(); ++a) {
      if (best & (Mask{1} << a)) result.indices.push_back(cand[linked[a]]);
    }
    result.size = result.indices.size();
    result.certified = true;
    return result;
  }

  // Greedy: seed with the best pair, lowest index first on ties.
  std::size_t sa = 0, sb = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < linked.size(); ++a) {
    for (std::size_t b = a + 1; b < linked.size(); ++b) {
      const double gap = pair_gap(linked[a], linked[b]);
      if (gap <= tol && gap < best_gap) {
        best_gap = gap;
        sa = a;
        sb = b;
      }
    }
  }
  std::vector<std::size_t> chosen = {linked[sa], linked[sb]};
  for (std::size_t c = 0; c < linked.size(); ++c) {
    if (c == sa || c == sb) continue;
    bool fits = true;
    for (std::size_t m : chosen) fits = fits && pair_gap(linked[c], m) <= tol;
    if (fits) chosen.push_back(linked[c]);
  }
  std::sort(chosen.begin(), chosen.end());
  for (std::size_t c : chosen) result.indices.push_back(cand[c]);
  result.size = result.indices.size();
  result.certified = false;
  return result;
}

bool in_polar(const RealVector& s, std::span<const ProbState> set, double L) {
  if (std::abs(s.sum() - 1.0) > 1e-12) throw InvalidArgument("in_polar: s does not sum to 1");
  for (const auto& p : set) {
    if (p.size() != s.size()) throw InvalidArgument("in_polar: length mismatch");
    if (s.dot(p.values()) < L - 1e-12) return false;
  }
  return true;
}

ValidationReport valid_state(const ProbState& p, const SicSystem& sic, double tol) {
  return validate_density(prob_to_state(p, sic), tol);
}

ValidationReport valid_effect(const RealVector& r, const SicSystem& sic, double tol) {
  const int d = sic.dimension();
  if (r.size() != sic.outcomes()) throw InvalidArgument("valid_effect: expected N = d^2 entries");
  if (!r.allFinite() || r.minCoeff() < 0.0 || r.maxCoeff() > 1.0) {
    throw InvalidArgument("valid_effect: entries must lie in the unit interval");
  }
  ComplexMatrix effect = ComplexMatrix::Zero(d, d);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const auto& effects = sic.effects();
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    effect += r(i) * ((d + 1.0) * effects[static_cast<std::size_t>(i)] - id / double(d));
  }
  const RealVector eig = hermitian_eigenvalues(effect);
  ValidationReport report;
  report.record(std::max(0.0, -eig(0)), tol,
                "reconstructed effect has negative eigenvalue " + std::to_string(eig(0)));
  report.record(std::max(0.0, eig(eig.size() - 1) - 1.0), tol,
                "reconstructed effect has eigenvalue above 1: " +
                    std::to_string(eig(eig.size() - 1)));
  return report;
}

LinearExtension linear_extension(std::span<const LinearSample> samples, double tol) {
  if (samples.empty()) throw InvalidArgument("linear_extension: no samples");
  const Eigen::Index n = samples.front().vector.size();
  if (n == 0) throw InvalidArgument("linear_extension: empty sample vector");
  const auto m = static_cast<Eigen::Index>(samples.size());
  RealMatrix a(m, n);
  RealVector b(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const auto& s = samples[static_cast<std::size_t>(k)];
    if (s.vector.size() != n) throw InvalidArgument("linear_extension: sample lengths differ");
    a.row(k) = s.vector.transpose();
    b(k) = s.value;
  }
  Eigen::ColPivHouseholderQR<RealMatrix> qr(a);
  qr.setThreshold(1e-10);
  if (qr.rank() < n) {
    std::ostringstream os;
    os << "linear_extension: samples span " << qr.rank() << " of " << n << " dimensions";
    throw InvalidArgument(os.str());
  }
  LinearExtension ext;
  ext.weights = qr.solve(b);
  const RealVector residual = (a * ext.weights - b).cwiseAbs();
  Eigen::Index worst = 0;
  ext.max_residual = residual.maxCoeff(&worst);
  ext.worst_sample = static_cast<std::size_t>(worst);
  if (ext.max_residual > tol) {
    std::ostringstream os;
    os << "linear_extension: samples are not additive; sample " << worst << " misses by "
       << ext.max_residual;
    throw InconsistentSamples(os.str(), ext.worst_sample, ext.max_residual);
  }
  return ext;
}

}  // namespace sicprob
