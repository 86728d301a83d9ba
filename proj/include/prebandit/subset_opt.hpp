#pragma once

#include <cstdint>

#include "prebandit/types.hpp"

namespace prebandit {

// Optimal-preselection computation. Ties in reward are always resolved to
// the lexicographically smallest subset so results are reproducible.

struct OptResult {
  Preselection subset;
  double reward;
};

// Reward of the set s extended by a virtual arm of score x:
// (x^2 + sum v_i^2) / (x + sum v_i) over i in s.
double f_eval(double x, const Preselection& s, const ScoreVector& v);

// The unique global minimizer of f_eval(., s, v):
// sqrt((sum v_i)^2 + sum v_i^2) - sum v_i. Lies in [0, f_eval(0, s, v)].
double f_minimizer(const Preselection& s, const ScoreVector& v);

// Largest number of subsets the exhaustive optimizer will enumerate.
inline constexpr std::int64_t kBruteForceBudget = 1'000'000;

// Exhaustive maximum of expected_reward over all l-subsets. Throws
// std::invalid_argument when l is out of range or C(n,l) exceeds the budget.
OptResult optimal_subset_bruteforce(const ScoreVector& v, int l);

// Exact maximizer in O(n log n + l^2): sorts scores descending and scans the
// l candidate subsets made of a prefix of the best arms plus a suffix of the
// worst arms (every optimal subset has that shape, and always contains the
// best arm). Agrees with the brute-force optimum; the brute force stays
// around as the test oracle.
OptResult optimal_subset_fast(const ScoreVector& v, int l);

// Flexible variant: all arms attaining the maximal score.
OptResult optimal_subset_flexible(const ScoreVector& v);

// Restricted-variant dispatcher used by the simulation harness: brute force
// while C(n,l) fits the budget, the fast scan beyond.
OptResult optimal_subset_restricted(const ScoreVector& v, int l);

// C(n,l) capped at 2 * kBruteForceBudget to avoid overflow.
std::int64_t binomial_capped(int n, int l);

}  // namespace prebandit
