#pragma once

#include <span>

#include "prebandit/rng.hpp"
#include "prebandit/types.hpp"

namespace prebandit {

// Plackett-Luce choice environment: ranking and choice distributions induced
// by a score vector, plus the reward/regret calculus built on them.

// Probability of observing `r` under the stagewise PL construction: at each
// position the next arm is drawn with probability proportional to its score
// among the arms not yet placed.
double ranking_probability(const Ranking& r, const ScoreVector& v);

// Draws a full ranking by the stagewise construction. Deterministic given
// the rng state.
Ranking sample_ranking(const ScoreVector& v, Rng& rng);

// Probability that arm i is chosen out of subset s: v_i / sum_{j in s} v_j.
double choice_probability(int arm, const Preselection& s, const ScoreVector& v);

// Categorical draw over s with the probabilities above.
int sample_choice(const Preselection& s, const ScoreVector& v, Rng& rng);

// Relative score O_{i,j} = v_i / v_j.
double relative_score(int i, int j, const ScoreVector& v);

// Expected utility of offering s: sum of v_i^2 over s divided by sum of v_i.
double expected_reward(const Preselection& s, const ScoreVector& v);

// Same quantity computed from relative scores anchored at a reference arm:
// sum of O_{i,J}^2 over s divided by sum of O_{i,J}. `rel_scores` is indexed
// by arm and must hold a positive entry for every arm in s. Equals
// expected_reward(s, v) / v_J when the entries are exact.
double reference_reward(const Preselection& s, std::span<const double> rel_scores);

// Instantaneous regret of offering s when the optimal attainable reward is
// opt_reward. Differences that are negative beyond floating-point noise mean
// opt_reward was not actually optimal and raise ContractViolation.
double instant_regret(const Preselection& s, const ScoreVector& v, double opt_reward);

}  // namespace prebandit
