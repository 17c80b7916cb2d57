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

#ifndef SICPROB_COHERENCE_HPP_
#define SICPROB_COHERENCE_HPP_

// Dutch-book checks. Every transaction is written from the point of view of
// the agent who declared the prices: "buy" means the agent pays the ticket
// price and collects the ticket's payout.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sicprob/linalg.hpp"
#include "sicprob/repr.hpp"

namespace sicprob {

inline constexpr double kCoherenceTol = 1e-12;

/// A lottery ticket over a finite outcome space. Pays `payout` on every
/// outcome listed in `pays_on`; the price is handed back on outcomes listed in
/// `refund_on` (conditional tickets).
struct Ticket {
  std::string description;
  std::string event;
  std::vector<std::string> pays_on;
  double payout = 1.0;
  std::optional<std::string> refund_event;
  std::vector<std::string> refund_on;
  double price = 0.0;

  /// Holder's net result on `outcome`, purchase price included.
  double holder_payoff(const std::string& outcome) const;
};

enum class Direction { kBuy, kSell };

const char* to_string(Direction dir) noexcept;

struct Transaction {
  Direction direction = Direction::kBuy;
  Ticket ticket;
};

/// A book of transactions that loses money for the agent on every outcome.
struct DutchBookWitness {
  std::vector<Transaction> transactions;
  double guaranteed_loss = 0.0;
  /// Net payoff per outcome, in enumeration order.
  std::vector<std::pair<std::string, double>> outcome_table;
  std::vector<std::string> notes;
};

/// Builds the outcome table and guaranteed loss by evaluating `transactions`
/// on every outcome.
DutchBookWitness make_witness(std::vector<Transaction> transactions,
                              const std::vector<std::string>& outcomes);

/// Net payoff of the witness on `outcome`, recomputed from its transactions.
/// Throws InvalidArgument for an outcome outside the table.
double evaluate_payoff(const DutchBookWitness& witness, const std::string& outcome);

/// Prices in [0,1]; priced complementary pairs ("E" with "¬E" or "!E") sum to 1.
ValidationReport validate_prices(const std::map<std::string, double>& prices);

/// Additivity for mutually exclusive E, F. Outcomes: E, F, neither.
std::optional<DutchBookWitness> check_additivity(double p_e, double p_f, double p_e_or_f,
                                                 double stake = 1.0);

/// p(E and F) = p(E) p(F|E), via the conditional ticket T_{F|E} and its
/// replicating pair T_{E and F}, T_X. Outcomes: E∧F, E∧¬F, ¬E.
std::optional<DutchBookWitness> check_joint_conditional(double p_e, double p_f_given_e,
                                                        double p_e_and_f, double stake = 1.0);

struct BornCoherence {
  bool coherent = true;
  /// The unique Born-rule-consistent declaration for (p, R).
  RealVector born_q;
  /// q - born_q.
  RealVector discrepancy;
  /// Implied price the agent sets on the declaration ticket.
  double implied_price = 1.0;
  std::optional<DutchBookWitness> witness;
};

/// Declared q against the Born rule for (p, R). When incoherent the witness
/// is the declaration-ticket book: the agent sells T_{q*} ("worth stake if
/// the agent declares q*") at implied_price * stake, with implied price
/// max(0, 1 - total-variation distance(q, q*)), then declares q* and pays out.
BornCoherence check_born_coherence(const ProbState& p, const CondMatrix& r, const OutcomeDist& q,
                                   int d, double tol = kDefaultTol, double stake = 1.0);

}  // namespace sicprob

#endif  // SICPROB_COHERENCE_HPP_
