#include "prebandit/pl.hpp"

#include <cmath>
#include <numeric>

namespace prebandit {

double ranking_probability(const Ranking& r, const ScoreVector& v) {
  if (r.size() != v.size()) {
    throw std::invalid_argument("ranking_probability: dimension mismatch");
  }
  const int n = v.size();
  // Tail sums of scores from each position to the end.
  double tail = 0.0;
  std::vector<double> tails(static_cast<std::size_t>(n));
  for (int p = n - 1; p >= 0; --p) {
    tail += v[r.arm_at(p)];
    tails[static_cast<std::size_t>(p)] = tail;
  }
  double prob = 1.0;
  for (int p = 0; p < n; ++p) {
    prob *= v[r.arm_at(p)] / tails[static_cast<std::size_t>(p)];
  }
  return prob;
}

Ranking sample_ranking(const ScoreVector& v, Rng& rng) {
  const int n = v.size();
  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 0);
  double total = std::accumulate(v.values().begin(), v.values().end(), 0.0);

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!remaining.empty()) {
    const double u = rng.uniform01() * total;
    double acc = 0.0;
    std::size_t pick = remaining.size() - 1;  // guards against fp round-off at the top end
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      acc += v[remaining[k]];
      if (u < acc) {
        pick = k;
        break;
      }
    }
    const int arm = remaining[pick];
    order.push_back(arm);
    total -= v[arm];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Ranking::from_order(order);
}

double choice_probability(int arm, const Preselection& s, const ScoreVector& v) {
  if (!s.contains(arm)) {
    throw std::invalid_argument("choice_probability: arm not in subset");
  }
  double total = 0.0;
  for (int j : s) total += v[j];
  return v[arm] / total;
}

int sample_choice(const Preselection& s, const ScoreVector& v, Rng& rng) {
  double total = 0.0;
  for (int j : s) total += v[j];
  const double u = rng.uniform01() * total;
  double acc = 0.0;
  for (int j : s) {
    acc += v[j];
    if (u < acc) return j;
  }
  return s.arms().back();
}

double relative_score(int i, int j, const ScoreVector& v) { return v[i] / v[j]; }

double expected_reward(const Preselection& s, const ScoreVector& v) {
  double sum = 0.0, sum_sq = 0.0;
  for (int i : s) {
    sum += v[i];
    sum_sq += v[i] * v[i];
  }
  return sum_sq / sum;
}

double reference_reward(const Preselection& s, std::span<const double> rel_scores) {
  double sum = 0.0, sum_sq = 0.0;
  for (int i : s) {
    if (static_cast<std::size_t>(i) >= rel_scores.size()) {
      throw std::invalid_argument("reference_reward: missing relative score entry");
    }
    const double o = rel_scores[static_cast<std::size_t>(i)];
    if (!(o > 0.0)) {
      throw std::invalid_argument("reference_reward: nonpositive relative score");
    }
    sum += o;
    sum_sq += o * o;
  }
  return sum_sq / sum;
}

double instant_regret(const Preselection& s, const ScoreVector& v, double opt_reward) {
  const double diff = opt_reward - expected_reward(s, v);
  const double tol = 1e-12 * std::max(1.0, std::fabs(opt_reward));
  if (diff < -tol) {
    throw ContractViolation("instant_regret: negative regret, opt_reward was not optimal");
  }
  return diff > 0.0 ? diff : 0.0;
}

}  // namespace prebandit
