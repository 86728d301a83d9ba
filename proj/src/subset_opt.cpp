#include "prebandit/subset_opt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "prebandit/pl.hpp"

namespace prebandit {

namespace {

void check_l(const ScoreVector& v, int l) {
  if (l < 2 || l > v.size()) {
    throw std::invalid_argument("subset size l must satisfy 2 <= l <= n");
  }
}

}  // namespace

double f_eval(double x, const Preselection& s, const ScoreVector& v) {
  double sum = 0.0, sum_sq = 0.0;
  for (int i : s) {
    sum += v[i];
    sum_sq += v[i] * v[i];
  }
  return (x * x + sum_sq) / (x + sum);
}

double f_minimizer(const Preselection& s, const ScoreVector& v) {
  double sum = 0.0, sum_sq = 0.0;
  for (int i : s) {
    sum += v[i];
    sum_sq += v[i] * v[i];
  }
  return std::sqrt(sum * sum + sum_sq) - sum;
}

std::int64_t binomial_capped(int n, int l) {
  if (l < 0 || l > n) return 0;
  l = std::min(l, n - l);
  const std::int64_t cap = 2 * kBruteForceBudget;
  std::int64_t c = 1;
  for (int k = 1; k <= l; ++k) {
    c = c * (n - l + k) / k;  // exact: product of k consecutive integers is divisible by k!
    if (c > cap) return cap;
  }
  return c;
}

OptResult optimal_subset_bruteforce(const ScoreVector& v, int l) {
  check_l(v, l);
  const int n = v.size();
  if (binomial_capped(n, l) > kBruteForceBudget) {
    throw std::invalid_argument("optimal_subset_bruteforce: combinatorial budget exceeded");
  }

  // Walk l-combinations in lexicographic order; strict improvement keeps the
  // first (lexicographically smallest) subset among exact reward ties.
  std::vector<int> comb(static_cast<std::size_t>(l));
  std::iota(comb.begin(), comb.end(), 0);
  std::vector<int> best;
  double best_reward = -1.0;
  while (true) {
    double sum = 0.0, sum_sq = 0.0;
    for (int i : comb) {
      sum += v[i];
      sum_sq += v[i] * v[i];
    }
    const double reward = sum_sq / sum;
    if (reward > best_reward) {
      best_reward = reward;
      best = comb;
    }
    // Advance to the next combination.
    int k = l - 1;
    while (k >= 0 && comb[static_cast<std::size_t>(k)] == n - l + k) --k;
    if (k < 0) break;
    ++comb[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < l; ++j) {
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return OptResult{Preselection(best), best_reward};
}

OptResult optimal_subset_fast(const ScoreVector& v, int l) {
  check_l(v, l);
  const int n = v.size();

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return v[a] != v[b] ? v[a] > v[b] : a < b;
  });

  std::vector<int> best;
  double best_reward = -1.0;
  std::vector<int> cand;
  cand.reserve(static_cast<std::size_t>(l));
  for (int a = 1; a <= l; ++a) {
    cand.clear();
    for (int p = 0; p < a; ++p) cand.push_back(order[static_cast<std::size_t>(p)]);
    for (int p = n - (l - a); p < n; ++p) cand.push_back(order[static_cast<std::size_t>(p)]);
    double sum = 0.0, sum_sq = 0.0;
    for (int i : cand) {
      sum += v[i];
      sum_sq += v[i] * v[i];
    }
    const double reward = sum_sq / sum;
    std::sort(cand.begin(), cand.end());
    if (reward > best_reward || (reward == best_reward && cand < best)) {
      best_reward = reward;
      best = cand;
    }
  }
  return OptResult{Preselection(best), best_reward};
}

OptResult optimal_subset_flexible(const ScoreVector& v) {
  std::vector<int> best;
  for (int i = 0; i < v.size(); ++i) {
    if (v[i] == v.max_score()) best.push_back(i);
  }
  Preselection s(best);
  return OptResult{s, expected_reward(s, v)};
}

OptResult optimal_subset_restricted(const ScoreVector& v, int l) {
  check_l(v, l);
  if (binomial_capped(v.size(), l) <= kBruteForceBudget) {
    return optimal_subset_bruteforce(v, l);
  }
  return optimal_subset_fast(v, l);
}

}  // namespace prebandit
