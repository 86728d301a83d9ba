#include "prebandit/types.hpp"

#include <algorithm>
#include <cmath>

namespace prebandit {

ScoreVector::ScoreVector(std::vector<double> scores) : scores_(std::move(scores)) {
  if (scores_.size() < 2) {
    throw std::invalid_argument("ScoreVector: need at least 2 arms");
  }
  for (double s : scores_) {
    if (!std::isfinite(s) || s <= 0.0) {
      throw std::invalid_argument("ScoreVector: scores must be strictly positive and finite");
    }
  }
  auto [lo, hi] = std::minmax_element(scores_.begin(), scores_.end());
  min_ = *lo;
  max_ = *hi;
}

Ranking::Ranking(std::vector<int> positions) : positions_(std::move(positions)) {
  const int n = static_cast<int>(positions_.size());
  if (n == 0) throw std::invalid_argument("Ranking: empty");
  order_.assign(positions_.size(), -1);
  for (int arm = 0; arm < n; ++arm) {
    const int pos = positions_[static_cast<std::size_t>(arm)];
    if (pos < 0 || pos >= n || order_[static_cast<std::size_t>(pos)] != -1) {
      throw std::invalid_argument("Ranking: positions must form a permutation");
    }
    order_[static_cast<std::size_t>(pos)] = arm;
  }
}

Ranking Ranking::identity(int n) {
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i;
  return Ranking(std::move(pos));
}

Ranking Ranking::from_order(const std::vector<int>& arms_in_order) {
  const int n = static_cast<int>(arms_in_order.size());
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    const int arm = arms_in_order[static_cast<std::size_t>(p)];
    if (arm < 0 || arm >= n) throw std::invalid_argument("Ranking: arm out of range");
    pos[static_cast<std::size_t>(arm)] = p;
  }
  return Ranking(std::move(pos));
}

Preselection::Preselection(std::vector<int> arms) : arms_(std::move(arms)) {
  if (arms_.empty()) throw std::invalid_argument("Preselection: empty");
  std::sort(arms_.begin(), arms_.end());
  if (arms_.front() < 0) throw std::invalid_argument("Preselection: negative arm index");
  if (std::adjacent_find(arms_.begin(), arms_.end()) != arms_.end()) {
    throw std::invalid_argument("Preselection: duplicate arms");
  }
}

bool Preselection::contains(int arm) const {
  return std::binary_search(arms_.begin(), arms_.end(), arm);
}

ChoiceObservation::ChoiceObservation(Preselection offered_, int chosen_, std::int64_t round_)
    : offered(std::move(offered_)), chosen(chosen_), round(round_) {
  if (!offered.contains(chosen)) {
    throw ContractViolation("ChoiceObservation: chosen arm not in offered subset");
  }
}

}  // namespace prebandit
