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

#include "sicprob/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sicprob/error.hpp"

namespace sicprob {

namespace {

constexpr const char* kNot = "\xC2\xAC";  // U+00AC

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

void require_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << name << " = " << x << " outside [0, 1]";
    throw InvalidArgument(os.str());
  }
}

void require_stake(double stake) {
  if (!(stake > 0.0) || !std::isfinite(stake)) throw InvalidArgument("stake must be positive");
}

Ticket simple_ticket(std::string event, std::vector<std::string> pays_on, double stake,
                     double price) {
  Ticket t;
  t.description = "Worth " + std::to_string(stake) + " if " + event;
  t.event = std::move(event);
  t.pays_on = std::move(pays_on);
  t.payout = stake;
  t.price = price * stake;
  return t;
}

Direction flip(Direction d) { return d == Direction::kBuy ? Direction::kSell : Direction::kBuy; }

}  // namespace

double Ticket::holder_payoff(const std::string& outcome) const {
  double v = -price;
  if (contains(pays_on, outcome)) v += payout;
  if (contains(refund_on, outcome)) v += price;
  return v;
}

const char* to_string(Direction dir) noexcept { return dir == Direction::kBuy ? "buy" : "sell"; }

DutchBookWitness make_witness(std::vector<Transaction> transactions,
                              const std::vector<std::string>& outcomes) {
  DutchBookWitness w;
  w.transactions = std::move(transactions);
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& o : outcomes) {
    double net = 0.0;
    for (const auto& tx : w.transactions) {
      const double v = tx.ticket.holder_payoff(o);
      net += tx.direction == Direction::kBuy ? v : -v;
    }
    w.outcome_table.emplace_back(o, net);
    worst = std::max(worst, net);
  }
  w.guaranteed_loss = -worst;
  return w;
}

double evaluate_payoff(const DutchBookWitness& witness, const std::string& outcome) {
  const auto it = std::find_if(witness.outcome_table.begin(), witness.outcome_table.end(),
                               [&](const auto& row) { return row.first == outcome; });
  if (it == witness.outcome_table.end()) {
    throw InvalidArgument("evaluate_payoff: unknown outcome '" + outcome + "'");
  }
  double net = 0.0;
  for (const auto& tx : witness.transactions) {
    const double v = tx.ticket.holder_payoff(outcome);
    net += tx.direction == Direction::kBuy ? v : -v;
  }
  return net;
}

ValidationReport validate_prices(const std::map<std::string, double>& prices) {
  ValidationReport report;
  for (const auto& [event, price] : prices) {
    double violation = std::isfinite(price) ? std::max({0.0, -price, price - 1.0})
                                            : std::numeric_limits<double>::infinity();
    std::ostringstream os;
    os << "price of '" << event << "' is " << price << ", outside [0, 1]";
    report.record(violation, kCoherenceTol, os.str());
  }
  for (const auto& [event, price] : prices) {
    std::string base;
    if (event.rfind(kNot, 0) == 0) {
      base = event.substr(std::char_traits<char>::length(kNot));
    } else if (event.rfind('!', 0) == 0) {
      base = event.substr(1);
    } else {
      continue;
    }
    const auto it = prices.find(base);
    if (it == prices.end()) continue;
    const double gap = std::abs(it->second + price - 1.0);
    std::ostringstream os;
    os << "prices of '" << base << "' and '" << event << "' sum to " << it->second + price;
    report.record(std::isfinite(gap) ? gap : std::numeric_limits<double>::infinity(),
                  kCoherenceTol, os.str());
  }
  return report;
}

std::optional<DutchBookWitness> check_additivity(double p_e, double p_f, double p_e_or_f,
                                                 double stake) {
  require_unit(p_e, "p(E)");
  require_unit(p_f, "p(F)");
  require_unit(p_e_or_f, "p(E or F)");
  require_stake(stake);
  const double gap = p_e_or_f - p_e - p_f;
  if (std::abs(gap) <= kCoherenceTol) return std::nullopt;

  // The union ticket is overpriced when gap > 0: the agent buys it and sells
  // the two parts; otherwise the other way round.
  const Direction whole = gap > 0 ? Direction::kBuy : Direction::kSell;
  std::vector<Transaction> book = {
      {whole, simple_ticket("E\xE2\x88\xA8" "F", {"E", "F"}, stake, p_e_or_f)},
      {flip(whole), simple_ticket("E", {"E"}, stake, p_e)},
      {flip(whole), simple_ticket("F", {"F"}, stake, p_f)},
  };
  return make_witness(std::move(book), {"E", "F", "neither"});
}

std::optional<DutchBookWitness> check_joint_conditional(double p_e, double p_f_given_e,
                                                        double p_e_and_f, double stake) {
  require_unit(p_e, "p(E)");
  require_unit(p_f_given_e, "p(F|E)");
  require_unit(p_e_and_f, "p(E and F)");
  require_stake(stake);
  const double gap = p_e * p_f_given_e - p_e_and_f;
  if (std::abs(gap) <= kCoherenceTol) return std::nullopt;

  const std::string ef = "E\xE2\x88\xA7" "F";
  const std::string e_not_f = std::string("E\xE2\x88\xA7") + kNot + "F";
  const std::string not_e = std::string(kNot) + "E";

  Ticket conditional = simple_ticket(ef, {ef}, stake, p_f_given_e);
  conditional.description += ", but refund if " + not_e;
  conditional.event = "F|E";
  conditional.refund_event = not_e;
  conditional.refund_on = {not_e};

  Ticket joint = simple_ticket(ef, {ef}, stake, p_e_and_f);

  // T_X pays p(F|E) on not-E; its price follows from additivity, p(F|E) p(not E).
  Ticket side;
  side.event = not_e;
  side.pays_on = {not_e};
  side.payout = stake * p_f_given_e;
  side.price = stake * p_f_given_e * (1.0 - p_e);
  side.description = "Worth " + std::to_string(side.payout) + " if " + not_e;

  // gap > 0 means T_{F|E} costs more than the replicating pair.
  const Direction cond_dir = gap > 0 ? Direction::kBuy : Direction::kSell;
  std::vector<Transaction> book = {
      {cond_dir, std::move(conditional)},
      {flip(cond_dir), std::move(joint)},
      {flip(cond_dir), std::move(side)},
  };
  return make_witness(std::move(book), {ef, e_not_f, not_e});
}

BornCoherence check_born_coherence(const ProbState& p, const CondMatrix& r, const OutcomeDist& q,
                                   int d, double tol, double stake) {
  require_stake(stake);
  if (!(tol >= 0.0)) throw InvalidArgument("check_born_coherence: tol must be non-negative");
  if (q.size() != r.outcomes()) {
    throw InvalidArgument("check_born_coherence: q has " + std::to_string(q.size()) +
                          " entries but R has " + std::to_string(r.outcomes()) + " rows");
  }
  BornCoherence out;
  out.born_q = born(p, r, d).q;
  out.discrepancy = q.values() - out.born_q;
  if (out.discrepancy.cwiseAbs().maxCoeff() <= tol) return out;

  out.coherent = false;
  const double tv = 0.5 * out.discrepancy.cwiseAbs().sum();
  out.implied_price = std::max(0.0, 1.0 - tv);

  Ticket declaration;
  declaration.event = "agent declares the Born-rule q";
  declaration.description = "Worth " + std::to_string(stake) + " if the agent declares q*";
  declaration.pays_on = {"declares q*"};
  declaration.payout = stake;
  declaration.price = out.implied_price * stake;

  // The agent has accepted the Born rule, so q* is the only declaration left
  // open once the calculation is done; the outcome space is that single event.
  out.witness = make_witness({{Direction::kSell, std::move(declaration)}}, {"declares q*"});
  out.witness->notes = {
      "implied price is a convention: max(0, 1 - total variation distance between q and q*)",
      "q* is reported for repair; p and R are left unchanged",
  };
  return out;
}

}  // namespace sicprob
