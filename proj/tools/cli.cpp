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

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sicprob/coherence.hpp"
#include "sicprob/error.hpp"
#include "sicprob/experiments.hpp"
#include "sicprob/io.hpp"
#include "sicprob/qplex.hpp"
#include "sicprob/repr.hpp"
#include "sicprob/sic.hpp"

namespace sicprob::cli {

namespace {

using io::json;

std::string fmt17(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

// Where results go: standard output unless -o was given.
class Sink {
 public:
  Sink(std::ostream& out, const std::string& path) : out_(out), path_(path) {}

  void emit(const json& j) const {
    if (path_.empty()) {
      out_ << j.dump(2) << '\n';
    } else {
      io::write_json_file(path_, j);
    }
  }

  void text(const std::string& line) const {
    if (path_.empty()) {
      out_ << line << '\n';
    } else {
      std::ofstream f(path_);
      if (!f) throw ParseError(path_, "cannot write '" + path_ + "'");
      f << line << '\n';
    }
  }

 private:
  std::ostream& out_;
  const std::string& path_;
};

SicSystem load_sic(const std::string& path) {
  return build_sic(io::fiducial_from_json(io::read_json_file(path)));
}

int report_exit(const ValidationReport& r) { return r.ok ? kOk : kInvalid; }

struct State {
  std::string output;
  std::string fiducial_path;
  std::string rho_path, p_path, r_path, q_path, povm_path, states_path, samples_path;
  std::string prices_path, table_path, predicted_path, effect_path;
  int d = 0;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  int restarts = 8;
  double tol = kDefaultTol;
  double stake = 1.0;
  double p_e = 0, p_f = 0, p_e_or_f = 0, p_f_given_e = 0, p_e_and_f = 0;
  bool j_marginal = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SIC-based probabilistic representation of quantum states and measurements"};
  app.name("sicprob");
  app.require_subcommand(1);
  app.fallthrough(false);

  auto st = std::make_unique<State>();
  State& s = *st;
  const Sink sink(out, s.output);
  std::vector<std::pair<CLI::App*, std::function<int()>>> actions;

  auto out_opt = [&](CLI::App* c) {
    c->add_option("-o,--output", s.output, "Output file (default: standard output)");
  };
  auto tol_opt = [&](CLI::App* c) {
    c->add_option("--tol", s.tol, "Tolerance")->capture_default_str();
  };
  auto fid_opt = [&](CLI::App* c) {
    c->add_option("-f,--fiducial", s.fiducial_path, "Fiducial file defining the reference SIC")
        ->required();
  };
  auto dim_opt = [&](CLI::App* c) {
    c->add_option("-d,--dim", s.d, "Hilbert-space dimension")->required();
  };

  // sic
  auto* sic = app.add_subcommand("sic", "Construct and verify SIC reference measurements");
  sic->require_subcommand(1);
  {
    auto* c = sic->add_subcommand("find", "Search for a Weyl-Heisenberg SIC fiducial");
    dim_opt(c);
    c->add_option("--seed", s.seed, "Random seed")->required();
    c->add_option("--restarts", s.restarts, "Number of random restarts")->capture_default_str();
    tol_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const Fiducial f = find_fiducial(s.d, s.seed, s.restarts, s.tol);
      sink.emit(io::to_json(build_sic(f)));
      return kOk;
    });
  }
  {
    auto* c = sic->add_subcommand("verify", "Check the SIC overlap condition of a fiducial");
    fid_opt(c);
    tol_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const SicSystem system = load_sic(s.fiducial_path);
      const ValidationReport r = verify_sic(system, s.tol);
      json j = io::to_json(r);
      j["d"] = system.dimension();
      j["frame_potential_error"] = frame_potential_error(system.fiducial());
      sink.emit(j);
      return report_exit(r);
    });
  }

  // repr
  auto* repr = app.add_subcommand("repr", "Convert between operators and probabilities");
  repr->require_subcommand(1);
  {
    auto* c = repr->add_subcommand("to-prob", "Density matrix -> reference probabilities");
    c->add_option("--rho", s.rho_path, "Density matrix file")->required();
    fid_opt(c);
    tol_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const SicSystem system = load_sic(s.fiducial_path);
      const ComplexMatrix rho = io::matrix_from_json(io::read_json_file(s.rho_path));
      sink.emit(io::to_json(state_to_prob(rho, system, s.tol)));
      return kOk;
    });
  }
  {
    auto* c = repr->add_subcommand("from-prob", "Reference probabilities -> operator");
    c->add_option("-p,--prob", s.p_path, "Probability file")->required();
    fid_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const SicSystem system = load_sic(s.fiducial_path);
      const ProbState p = io::distribution_from_json(io::read_json_file(s.p_path));
      sink.emit(io::to_json(prob_to_state(p, system)));
      return kOk;
    });
  }
  {
    auto* c = repr->add_subcommand("povm-to-cond", "POVM -> conditional matrix R(j|i)");
    c->add_option("--povm", s.povm_path, "POVM file")->required();
    fid_opt(c);
    tol_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const SicSystem system = load_sic(s.fiducial_path);
      const auto effects = io::povm_from_json(io::read_json_file(s.povm_path));
      sink.emit(io::to_json(povm_to_cond(effects, system, s.tol)));
      return kOk;
    });
  }
  {
    auto* c = repr->add_subcommand("cond-to-povm", "Conditional matrix -> POVM operators");
    c->add_option("-R,--cond", s.r_path, "Conditional matrix file")->required();
    fid_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const SicSystem system = load_sic(s.fiducial_path);
      const CondMatrix r = io::cond_from_json(io::read_json_file(s.r_path));
      sink.emit(io::povm_to_json(cond_to_povm(r, system)));
      return kOk;
    });
  }

  // Born rule and law of total probability
  {
    auto* c = app.add_subcommand("born", "Born-rule prediction q = R Phi p");
    c->add_option("-p,--prob", s.p_path, "Probability file")->required();
    c->add_option("-R,--cond", s.r_path, "Conditional matrix file")->required();
    dim_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const ProbState p = io::distribution_from_json(io::read_json_file(s.p_path));
      const CondMatrix r = io::cond_from_json(io::read_json_file(s.r_path));
      const BornPrediction q = born(p, r, s.d);
      json j = io::distribution_json(q.q);
      j["physical"] = q.physical;
      sink.emit(j);
      return q.physical ? kOk : kInvalid;
    });
  }
  {
    auto* c = app.add_subcommand("ltp", "Law of total probability s = R p");
    c->add_option("-p,--prob", s.p_path, "Probability file")->required();
    c->add_option("-R,--cond", s.r_path, "Conditional matrix file")->required();
    out_opt(c);
    actions.emplace_back(c, [&] {
      const ProbState p = io::distribution_from_json(io::read_json_file(s.p_path));
      const CondMatrix r = io::cond_from_json(io::read_json_file(s.r_path));
      sink.emit(io::to_json(ltp(p, r)));
      return kOk;
    });
  }
  {
    auto* c = app.add_subcommand("ltp-deviation", "max_j |born - ltp|");
    c->add_option("-p,--prob", s.p_path, "Probability file")->required();
    c->add_option("-R,--cond", s.r_path, "Conditional matrix file")->required();
    dim_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const ProbState p = io::distribution_from_json(io::read_json_file(s.p_path));
      const CondMatrix r = io::cond_from_json(io::read_json_file(s.r_path));
      sink.emit(json{{"ltp_deviation", ltp_deviation(p, r, s.d)}});
      return kOk;
    });
  }

  // geometry
  {
    auto* c = app.add_subcommand("geometry", "Inner-product bounds and ball radii");
    dim_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      sink.emit(io::to_json(quantum_bounds(s.d)));
      return kOk;
    });
  }
  {
    auto* c = app.add_subcommand("mmd", "Largest mutually maximally distant subset");
    dim_opt(c);
    c->add_option("--states", s.states_path, "States file {\"states\": [[...], ...]}")->required();
    tol_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const auto states = io::states_from_json(io::read_json_file(s.states_path));
      sink.emit(io::to_json(find_mmd(states, quantum_bounds(s.d), s.tol)));
      return kOk;
    });
  }
  {
    auto* c = app.add_subcommand("valid-state", "Is p in the quantum state space?");
    c->add_option("-p,--prob", s.p_path, "Probability file")->required();
    fid_opt(c);
    tol_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const SicSystem system = load_sic(s.fiducial_path);
      const ProbState p = io::distribution_from_json(io::read_json_file(s.p_path));
      const ValidationReport r = valid_state(p, system, s.tol);
      sink.emit(io::to_json(r));
      return report_exit(r);
    });
  }
  {
    auto* c = app.add_subcommand("valid-effect", "Is r a valid measurement row?");
    c->add_option("-r,--row", s.effect_path, "Row file {\"r\": [...]}")->required();
    fid_opt(c);
    tol_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const SicSystem system = load_sic(s.fiducial_path);
      const RealVector r = io::vector_from_json(io::read_json_file(s.effect_path), "r");
      const ValidationReport rep = valid_effect(r, system, s.tol);
      sink.emit(io::to_json(rep));
      return report_exit(rep);
    });
  }
  {
    auto* c = app.add_subcommand("linear-extend", "Fit and certify a linear functional");
    c->add_option("--samples", s.samples_path, "Samples file")->required();
    tol_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const auto samples = io::samples_from_json(io::read_json_file(s.samples_path));
      const LinearExtension ext = linear_extension(samples, s.tol);
      sink.emit(json{{"w", io::distribution_json(ext.weights)["p"]},
                     {"max_residual", ext.max_residual}});
      return kOk;
    });
  }

  // coherence
  auto* coh = app.add_subcommand("coherence", "Dutch-book coherence checks");
  coh->require_subcommand(1);
  auto stake_opt = [&](CLI::App* c) {
    c->add_option("--stake", s.stake, "Ticket payout in currency units")->capture_default_str();
  };
  auto emit_witness = [&](const std::optional<DutchBookWitness>& w) {
    if (!w) {
      sink.text("coherent");
      return int{kOk};
    }
    sink.emit(io::to_json(*w));
    return int{kIncoherent};
  };
  {
    auto* c = coh->add_subcommand("prices", "Range and complement checks on ticket prices");
    c->add_option("--prices", s.prices_path, "Prices file {\"E\": 0.3, \"¬E\": 0.7}")->required();
    out_opt(c);
    actions.emplace_back(c, [&] {
      const ValidationReport r = validate_prices(io::prices_from_json(io::read_json_file(s.prices_path)));
      sink.emit(io::to_json(r));
      return r.ok ? kOk : kIncoherent;
    });
  }
  {
    auto* c = coh->add_subcommand("additivity", "p(E or F) = p(E) + p(F)");
    c->add_option("--pE", s.p_e)->required();
    c->add_option("--pF", s.p_f)->required();
    c->add_option("--pEorF", s.p_e_or_f)->required();
    stake_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      return emit_witness(check_additivity(s.p_e, s.p_f, s.p_e_or_f, s.stake));
    });
  }
  {
    auto* c = coh->add_subcommand("conditional", "p(E and F) = p(E) p(F|E)");
    c->add_option("--pE", s.p_e)->required();
    c->add_option("--pFgivenE", s.p_f_given_e)->required();
    c->add_option("--pEandF", s.p_e_and_f)->required();
    stake_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      return emit_witness(check_joint_conditional(s.p_e, s.p_f_given_e, s.p_e_and_f, s.stake));
    });
  }
  {
    auto* c = coh->add_subcommand("born", "Declared q against the Born rule for (p, R)");
    c->add_option("-p,--prob", s.p_path, "Probability file")->required();
    c->add_option("-R,--cond", s.r_path, "Conditional matrix file")->required();
    c->add_option("-q,--declared", s.q_path, "Declared outcome distribution file")->required();
    dim_opt(c);
    tol_opt(c);
    stake_opt(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const ProbState p = io::distribution_from_json(io::read_json_file(s.p_path));
      const CondMatrix r = io::cond_from_json(io::read_json_file(s.r_path));
      const OutcomeDist q = io::distribution_from_json(io::read_json_file(s.q_path));
      const BornCoherence res = check_born_coherence(p, r, q, s.d, s.tol, s.stake);
      if (res.coherent) {
        sink.text("coherent");
        return int{kOk};
      }
      sink.emit(json{{"coherent", false},
                     {"born_q", io::distribution_json(res.born_q)["p"]},
                     {"discrepancy", io::distribution_json(res.discrepancy)["p"]},
                     {"implied_price", res.implied_price},
                     {"witness", io::to_json(*res.witness)}});
      return int{kIncoherent};
    });
  }

  // simulation
  auto* sim = app.add_subcommand("sim", "Seeded Monte-Carlo runs of the two experiments");
  sim->require_subcommand(1);
  auto run_opts = [&](CLI::App* c) {
    c->add_option("--shots", s.shots, "Number of shots")->required()->check(CLI::PositiveNumber);
    c->add_option("--seed", s.seed, "Random seed")->required();
  };
  {
    auto* c = sim->add_subcommand("one", "Direct measurement: j ~ q");
    c->add_option("-q,--dist", s.q_path, "Outcome distribution file")->required();
    run_opts(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const OutcomeDist q = io::distribution_from_json(io::read_json_file(s.q_path));
      sink.emit(io::to_json(sample_experiment_one(q, RunConfig{s.shots, s.seed})));
      return kOk;
    });
  }
  {
    auto* c = sim->add_subcommand("two", "Reference measurement first: i ~ p, j ~ R(.|i)");
    c->add_option("-p,--prob", s.p_path, "Probability file")->required();
    c->add_option("-R,--cond", s.r_path, "Conditional matrix file")->required();
    run_opts(c);
    out_opt(c);
    actions.emplace_back(c, [&] {
      const ProbState p = io::distribution_from_json(io::read_json_file(s.p_path));
      const CondMatrix r = io::cond_from_json(io::read_json_file(s.r_path));
      sink.emit(io::to_json(sample_experiment_two(p, r, RunConfig{s.shots, s.seed})));
      return kOk;
    });
  }
  {
    auto* c = sim->add_subcommand("compare", "Largest gap between frequencies and a prediction");
    c->add_option("--table", s.table_path, "Count table file")->required();
    c->add_option("--predicted", s.predicted_path, "Predicted distribution file {\"p\": [...]}")
        ->required();
    c->add_flag("--j-marginal", s.j_marginal, "Marginalize an experiment-two table onto j first");
    out_opt(c);
    actions.emplace_back(c, [&] {
      CountTable t = io::count_table_from_json(io::read_json_file(s.table_path));
      if (s.j_marginal) t = j_marginal(t);
      const RealVector predicted = io::vector_from_json(io::read_json_file(s.predicted_path), "p");
      const double gap = empirical_compare(t, predicted);
      sink.emit(json{{"max_deviation", gap}, {"shots", t.total}});
      return kOk;
    });
  }

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("sicprob");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kParseError;
  }

  for (auto& [cmd, action] : actions) {
    if (!cmd->parsed()) continue;
    try {
      return action();
    } catch (const ParseError& e) {
      err << "error: " << e.what() << " [field: " << e.field() << "]\n";
      return kParseError;
    } catch (const json::exception& e) {
      err << "error: malformed input: " << e.what() << '\n';
      return kParseError;
    } catch (const ConvergenceError& e) {
      err << "error: " << e.what() << " (best error " << fmt17(e.best_error()) << ")\n";
      return kInvalid;
    } catch (const InconsistentSamples& e) {
      err << "error: " << e.what() << '\n';
      return kInvalid;
    } catch (const InvalidArgument& e) {
      err << "error: " << e.what() << '\n';
      return kInvalid;
    }
  }
  err << "error: no command given\n";
  return kParseError;
}

}  // namespace sicprob::cli
