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

#include "sicprob/sic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "sicprob/error.hpp"
#include "sicprob/random.hpp"

namespace sicprob {

namespace {

using cd = std::complex<double>;

void require_sic_dimension(int d, const char* what) {
  if (d < kMinSicDimension || d > kMaxSicDimension) {
    std::ostringstream os;
    os << what << ": dimension " << d << " outside supported range [" << kMinSicDimension << ", "
       << kMaxSicDimension << "]";
    throw InvalidArgument(os.str());
  }
}

// exp(i pi k / d) with k reduced mod 2d first, so phases stay exact-ish for large k.
cd root_of_unity(long long k, int d) {
  const long long m = ((k % (2LL * d)) + 2LL * d) % (2LL * d);
  return std::polar(1.0, std::numbers::pi * static_cast<double>(m) / d);
}

// Residuals r_p = |<u|D_p u>|^2 - 1/(d+1) for p = (a,b) != (0,0) and, when
// `jac` is non-null, their derivatives with respect to (Re u_k, Im u_k) at a
// unit vector u under the map u -> u/|u|.
RealVector overlap_residuals(const ComplexVector& u, RealMatrix* jac) {
  const int d = static_cast<int>(u.size());
  const int n = d * d;
  const double target = 1.0 / (d + 1);
  RealVector r(n - 1);
  if (jac) jac->resize(n - 1, 2 * d);

  std::vector<cd> omega(d);
  for (int k = 0; k < d; ++k) omega[k] = root_of_unity(2LL * k, d);

  ComplexVector du(d), ddag_u(d);
  int row = 0;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      if (a == 0 && b == 0) continue;
      cd g = 0.0;
      for (int k = 0; k < d; ++k) {
        const int m = (k - a + d) % d;
        du(k) = omega[(b * m) % d] * u(m);
        ddag_u(k) = std::conj(omega[(b * k) % d]) * u((k + a) % d);
        g += std::conj(u(k)) * du(k);
      }
      r(row) = std::norm(g) - target;
      if (jac) {
        const cd gc = std::conj(g);
        for (int k = 0; k < d; ++k) {
          const cd dg_re = du(k) + std::conj(ddag_u(k)) - 2.0 * g * u(k).real();
          const cd dg_im = cd(0, -1) * du(k) + cd(0, 1) * std::conj(ddag_u(k)) -
                           2.0 * g * u(k).imag();
          (*jac)(row, 2 * k) = 2.0 * (gc * dg_re).real();
          (*jac)(row, 2 * k + 1) = 2.0 * (gc * dg_im).real();
        }
      }
      ++row;
    }
  }
  return r;
}

ComplexVector to_complex(const RealVector& x) {
  const auto d = x.size() / 2;
  ComplexVector u(d);
  for (Eigen::Index k = 0; k < d; ++k) u(k) = {x(2 * k), x(2 * k + 1)};
  return u;
}

struct SearchResult {
  ComplexVector amplitudes;
  double error = std::numeric_limits<double>::infinity();
};

SearchResult levenberg_marquardt(ComplexVector u) {
  const int d = static_cast<int>(u.size());
  u.normalize();
  RealMatrix jac;
  RealVector r = overlap_residuals(u, &jac);
  double err = r.squaredNorm();

  RealMatrix jtj = jac.transpose() * jac;
  double lambda = 1e-3 * std::max(jtj.diagonal().maxCoeff(), 1e-12);
  constexpr int kMaxIterations = 2000;
  constexpr double kErrorFloor = 1e-28;
  constexpr double kMaxLambda = 1e12;

  for (int it = 0; it < kMaxIterations && err > kErrorFloor; ++it) {
    const RealVector grad = jac.transpose() * r;
    RealMatrix system = jtj;
    system.diagonal().array() += lambda;
    const RealVector step = system.ldlt().solve(-grad);

    RealVector x(2 * d);
    for (int k = 0; k < d; ++k) {
      x(2 * k) = u(k).real();
      x(2 * k + 1) = u(k).imag();
    }
    ComplexVector trial = to_complex(x + step);
    const double trial_norm = trial.norm();
    if (!(trial_norm > 0.0) || !std::isfinite(trial_norm)) {
      lambda *= 4.0;
      if (lambda > kMaxLambda) break;
      continue;
    }
    trial /= trial_norm;
    RealMatrix trial_jac;
    RealVector trial_r = overlap_residuals(trial, &trial_jac);
    const double trial_err = trial_r.squaredNorm();
    if (trial_err < err) {
      const double moved = (trial - u).norm();
      u = std::move(trial);
      r = std::move(trial_r);
      jac = std::move(trial_jac);
      jtj = jac.transpose() * jac;
      err = trial_err;
      lambda = std::max(lambda / 3.0, 1e-15);
      if (moved < 1e-16) break;
    } else {
      lambda *= 4.0;
      if (lambda > kMaxLambda) break;
    }
  }
  return {u, err};
}

}  // namespace

Fiducial Fiducial::from_amplitudes(const ComplexVector& amplitudes) {
  if (amplitudes.size() < 1) throw InvalidArgument("Fiducial: empty amplitude vector");
  if (!amplitudes.allFinite()) throw InvalidArgument("Fiducial: non-finite amplitude");
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw InvalidArgument("Fiducial: zero vector");
  ComplexVector a = amplitudes / norm;
  // Canonical gauge: first amplitude above the noise floor is real positive.
  const double cutoff = 1e-12 * a.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    const double mag = std::abs(a(k));
    if (mag > cutoff) {
      a *= std::conj(a(k)) / mag;
      a(k) = mag;
      break;
    }
  }
  return Fiducial(std::move(a));
}

Fiducial qubit_fiducial() {
  const double s3 = std::sqrt(3.0);
  ComplexVector a(2);
  a(0) = std::sqrt((3.0 + s3) / 6.0);
  a(1) = std::polar(std::sqrt((3.0 - s3) / 6.0), std::numbers::pi / 4.0);
  return Fiducial::from_amplitudes(a);
}

std::vector<ComplexMatrix> wh_displacements(int d) {
  require_sic_dimension(d, "wh_displacements");
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(d) * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      // tau^(ab) = exp(i pi (d+1) ab / d).
      const cd phase = root_of_unity(static_cast<long long>(a) * b * (d + 1), d);
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      for (int col = 0; col < d; ++col) {
        m((col + a) % d, col) = phase * root_of_unity(2LL * b * col, d);
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

double frame_potential_error(const Fiducial& fiducial) {
  return overlap_residuals(fiducial.amplitudes(), nullptr).squaredNorm();
}

Fiducial find_fiducial(int d, std::uint64_t seed, int restarts, double tol) {
  require_sic_dimension(d, "find_fiducial");
  if (restarts < 1) throw InvalidArgument("find_fiducial: restarts must be >= 1");
  if (!(tol >= 0.0)) throw InvalidArgument("find_fiducial: tol must be non-negative");

  std::vector<SearchResult> results(static_cast<std::size_t>(restarts));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < restarts; r = next++) {
      Engine rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
      ComplexVector start(d);
      for (int k = 0; k < d; ++k) {
        const double re = standard_normal(rng);
        const double im = standard_normal(rng);
        start(k) = {re, im};
      }
      SearchResult found = levenberg_marquardt(std::move(start));
      // Score the canonical output so the reported error is the shipped one.
      const Fiducial canonical = Fiducial::from_amplitudes(found.amplitudes);
      results[static_cast<std::size_t>(r)] = {canonical.amplitudes(),
                                              frame_potential_error(canonical)};
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int nthreads = std::min<int>(restarts, static_cast<int>(hw));
  std::vector<std::jthread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r) {
    if (results[r].error < results[best].error) best = r;
  }
  if (!(results[best].error <= tol)) {
    std::ostringstream os;
    os << "find_fiducial: no restart reached tol " << tol << " in d=" << d
       << "; best error " << results[best].error << " (restart " << best << ")";
    throw ConvergenceError(os.str(), results[best].error);
  }
  return Fiducial::from_amplitudes(results[best].amplitudes);
}

double sic_overlap(int d, bool same) {
  const double dd = d;
  return ((same ? dd : 0.0) + 1.0) / (dd * dd * (dd + 1.0));
}

SicSystem build_sic(const Fiducial& fiducial) {
  const int d = fiducial.dimension();
  SicSystem sic(fiducial);
  sic.d_ = d;
  sic.displacements_ = wh_displacements(d);
  const int n = d * d;
  std::vector<ComplexVector> orbit;
  orbit.reserve(n);
  for (const auto& disp : sic.displacements_) {
    orbit.push_back(disp * fiducial.amplitudes());
    ComplexMatrix proj = orbit.back() * orbit.back().adjoint();
    sic.effects_.push_back(proj / static_cast<double>(d));
    sic.projectors_.push_back(std::move(proj));
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double overlap = std::norm(orbit[i].dot(orbit[j])) / (double(d) * d);
      worst = std::max(worst, std::abs(overlap - sic_overlap(d, i == j)));
    }
  }
  sic.sic_error_ = worst;
  return sic;
}

ValidationReport verify_sic(const SicSystem& sic, double tol) {
  const int d = sic.dimension();
  const int n = sic.outcomes();
  const auto& effects = sic.effects();
  ValidationReport report;
  if (static_cast<int>(effects.size()) != n) {
    report.record(std::numeric_limits<double>::infinity(), tol, "wrong number of effects");
    return report;
  }
  double worst = 0.0;
  int wi = 0, wj = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double dev =
          std::abs(trace_inner_product(effects[i], effects[j]) - sic_overlap(d, i == j));
      if (dev > worst) {
        worst = dev;
        wi = i;
        wj = j;
      }
    }
  }
  std::ostringstream os;
  os << "overlap tr(E_" << wi << " E_" << wj << ") deviates by " << worst;
  report.record(worst, tol, os.str());
  const ValidationReport povm = validate_povm(effects, tol);
  report.record(povm.max_violation, tol, "effects do not form a POVM");
  for (const auto& m : povm.messages) report.messages.push_back(m);
  return report;
}

}  // namespace sicprob
