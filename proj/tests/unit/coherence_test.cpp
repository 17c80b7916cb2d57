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

#include <gtest/gtest.h>

#include "sicprob/error.hpp"
#include "sicprob/random.hpp"
#include "support/systems.hpp"

namespace sicprob {
namespace {

using testing::sic_for;

const std::string kNotE = "\xC2\xAC" "E";

double max_payoff(const DutchBookWitness& w) {
  double worst = -1e300;
  for (const auto& [outcome, payoff] : w.outcome_table) {
    worst = std::max(worst, evaluate_payoff(w, outcome));
    EXPECT_NEAR(evaluate_payoff(w, outcome), payoff, 1e-15);
  }
  return worst;
}

TEST(ValidatePrices, Examples) {
  EXPECT_TRUE(validate_prices({{"E", 0.3}, {kNotE, 0.7}}).ok);
  EXPECT_FALSE(validate_prices({{"E", -0.1}}).ok);
  EXPECT_FALSE(validate_prices({{"E", 0.6}, {kNotE, 0.6}}).ok);
  EXPECT_FALSE(validate_prices({{"E", 0.6}, {"!E", 0.6}}).ok);
  EXPECT_FALSE(validate_prices({{"E", 1.2}}).ok);
  EXPECT_TRUE(validate_prices({{"E", 0.6}, {"F", 0.6}}).ok);
}

TEST(CheckAdditivity, Coherent) { EXPECT_FALSE(check_additivity(0.2, 0.3, 0.5).has_value()); }

TEST(CheckAdditivity, OverpricedUnion) {
  const auto w = check_additivity(0.2, 0.3, 0.6, 1.0);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->transactions.size(), 3u);
  EXPECT_EQ(w->transactions[0].direction, Direction::kBuy);
  EXPECT_NEAR(w->transactions[0].ticket.price, 0.6, 1e-15);
  EXPECT_EQ(w->transactions[1].direction, Direction::kSell);
  EXPECT_NEAR(w->transactions[1].ticket.price, 0.2, 1e-15);
  EXPECT_EQ(w->transactions[2].direction, Direction::kSell);
  EXPECT_NEAR(w->transactions[2].ticket.price, 0.3, 1e-15);
  EXPECT_NEAR(w->guaranteed_loss, 0.1, 1e-15);
  for (const char* o : {"E", "F", "neither"}) EXPECT_NEAR(evaluate_payoff(*w, o), -0.1, 1e-15);
}

TEST(CheckAdditivity, UnderpricedUnionReversesDirections) {
  const auto w = check_additivity(0.2, 0.3, 0.4, 2.0);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->transactions[0].direction, Direction::kSell);
  EXPECT_EQ(w->transactions[1].direction, Direction::kBuy);
  EXPECT_EQ(w->transactions[2].direction, Direction::kBuy);
  EXPECT_NEAR(w->guaranteed_loss, 0.2, 1e-15);
  EXPECT_LT(max_payoff(*w), 0.0);
}

TEST(CheckAdditivity, RejectsOutOfRangeInputs) {
  EXPECT_THROW(check_additivity(-0.1, 0.3, 0.2), InvalidArgument);
  EXPECT_THROW(check_additivity(0.1, 0.3, 0.4, 0.0), InvalidArgument);
}

TEST(CheckJointConditional, Coherent) {
  EXPECT_FALSE(check_joint_conditional(0.5, 0.4, 0.2).has_value());
  for (double x : {0.0, 0.3, 1.0}) EXPECT_FALSE(check_joint_conditional(0.0, x, 0.0).has_value());
}

TEST(CheckJointConditional, Incoherent) {
  const auto w = check_joint_conditional(0.5, 0.4, 0.3, 1.0);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->outcome_table.size(), 3u);
  // Enumerate the book by hand: the agent sells T_{F|E} at 0.4 and buys
  // T_{E and F} at 0.3 and T_X (0.4 on not-E) at 0.4 * 0.5.
  //   E and F:     +0.4 - 1 - 0.3 + 1 - 0.2        = -0.1
  //   E and not F: +0.4     - 0.3     - 0.2        = -0.1
  //   not E:       +0.4 - 0.4 - 0.3 - 0.2 + 0.4    = -0.1
  for (const auto& [outcome, payoff] : w->outcome_table) {
    EXPECT_NEAR(payoff, -0.1, 1e-15) << outcome;
  }
  EXPECT_NEAR(w->guaranteed_loss, 0.1, 1e-15);
  EXPECT_LT(evaluate_payoff(*w, kNotE), 0.0);
  EXPECT_EQ(w->transactions[0].direction, Direction::kSell);
  ASSERT_TRUE(w->transactions[0].ticket.refund_event.has_value());
}

TEST(EvaluatePayoff, UnknownOutcomeThrows) {
  const auto w = check_additivity(0.2, 0.3, 0.6);
  EXPECT_THROW(evaluate_payoff(*w, "both"), InvalidArgument);
}

TEST(CheckBornCoherence, ReferenceMeasurementDeclarationIsCoherent) {
  Engine rng(10);
  for (int d = 2; d <= 3; ++d) {
    const ProbState p = state_to_prob(random_density(d, rng), sic_for(d));
    const auto res = check_born_coherence(p, double_pass_matrix(d), p, d);
    EXPECT_TRUE(res.coherent);
    EXPECT_FALSE(res.witness.has_value());
  }
}

TEST(CheckBornCoherence, GarbageDisposalUniformIsCoherent) {
  const ProbState p(RealVector::Constant(9, 1.0 / 9));
  const CondMatrix r(RealMatrix::Constant(4, 9, 0.25));
  EXPECT_TRUE(check_born_coherence(p, r, OutcomeDist(RealVector::Constant(4, 0.25)), 3).coherent);
}

TEST(CheckBornCoherence, LtpDeclarationIsIncoherent) {
  const ProbState e1 = reference_states(2)[0];
  const CondMatrix r = double_pass_matrix(2);
  const OutcomeDist q = ltp(e1, r);
  const auto res = check_born_coherence(e1, r, q, 2);
  ASSERT_FALSE(res.coherent);
  EXPECT_NEAR(res.discrepancy.cwiseAbs().maxCoeff(), ltp_deviation(e1, r, 2), 1e-15);
  ASSERT_TRUE(res.witness.has_value());
  // q - q* = (-1/6, 1/18, 1/18, 1/18): total variation 1/6.
  EXPECT_NEAR(res.implied_price, 5.0 / 6.0, 1e-14);
  EXPECT_NEAR(res.witness->guaranteed_loss, 1.0 / 6.0, 1e-14);
  EXPECT_LT(max_payoff(*res.witness), 0.0);
  EXPECT_FALSE(res.witness->notes.empty());
}

TEST(CheckBornCoherence, RepairFixpoint) {
  Engine rng(44);
  for (int t = 0; t < 50; ++t) {
    const int d = 2 + t % 2;
    const SicSystem& sic = sic_for(d);
    const ProbState p = state_to_prob(random_density(d, rng), sic);
    const CondMatrix r = povm_to_cond(random_povm(d, 3, rng), sic);
    const auto res = check_born_coherence(p, r, OutcomeDist(random_simplex_point(3, rng)), d);
    ASSERT_FALSE(res.coherent);
    const auto again = check_born_coherence(p, r, OutcomeDist(res.born_q), d);
    EXPECT_TRUE(again.coherent);
  }
}

TEST(CheckBornCoherence, LossIsHomogeneousInStake) {
  const ProbState e1 = reference_states(2)[0];
  const CondMatrix r = double_pass_matrix(2);
  const OutcomeDist q = ltp(e1, r);
  const double base = check_born_coherence(e1, r, q, 2, 1e-10, 1.0).witness->guaranteed_loss;
  for (double stake : {0.5, 3.0, 100.0}) {
    EXPECT_NEAR(check_born_coherence(e1, r, q, 2, 1e-10, stake).witness->guaranteed_loss,
                stake * base, 1e-12 * stake);
    EXPECT_NEAR(check_additivity(0.2, 0.3, 0.6, stake)->guaranteed_loss, 0.1 * stake, 1e-12 * stake);
    EXPECT_NEAR(check_joint_conditional(0.5, 0.4, 0.3, stake)->guaranteed_loss, 0.1 * stake,
                1e-12 * stake);
  }
}

TEST(CheckBornCoherence, RejectsMismatchedDeclaration) {
  const ProbState p(RealVector::Constant(4, 0.25));
  EXPECT_THROW(check_born_coherence(p, double_pass_matrix(2), OutcomeDist(RealVector::Constant(3, 1.0 / 3)), 2),
               InvalidArgument);
}

TEST(Soundness, FuzzedIncoherentDeclarationsAlwaysLose) {
  Engine rng(123);
  for (int t = 0; t < 2000; ++t) {
    const double pe = 0.5 * uniform01(rng);
    const double pf = 0.5 * uniform01(rng);
    double u = uniform01(rng);
    if (std::abs(u - pe - pf) < 1e-9) u = std::min(1.0, u + 0.01);
    const auto w = check_additivity(pe, pf, u, 1.0 + uniform01(rng));
    ASSERT_TRUE(w.has_value());
    EXPECT_LT(max_payoff(*w), 0.0);

    const double a = uniform01(rng), b = uniform01(rng);
    double c = uniform01(rng);
    if (std::abs(c - a * b) < 1e-9) c = std::min(1.0, c + 0.01);
    const auto wc = check_joint_conditional(a, b, c);
    ASSERT_TRUE(wc.has_value());
    EXPECT_LT(max_payoff(*wc), 0.0);
  }
}

TEST(Completeness, CoherentQuantumDeclarationsNeverWitnessed) {
  Engine rng(321);
  for (int t = 0; t < 500; ++t) {
    const int d = 2 + t % 2;
    const SicSystem& sic = sic_for(d);
    const ComplexMatrix rho = random_density(d, rng);
    const auto povm = random_povm(d, 2 + t % 4, rng);
    RealVector q(static_cast<Eigen::Index>(povm.size()));
    for (std::size_t j = 0; j < povm.size(); ++j) q(static_cast<Eigen::Index>(j)) = trace_inner_product(rho, povm[j]);
    const auto res = check_born_coherence(state_to_prob(rho, sic), povm_to_cond(povm, sic),
                                          OutcomeDist(q), d);
    EXPECT_TRUE(res.coherent);
  }
}

}  // namespace
}  // namespace sicprob
