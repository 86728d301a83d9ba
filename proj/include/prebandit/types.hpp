#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace prebandit {

// Thrown when a runtime contract of the bandit protocol is broken (a policy
// suggesting an ill-formed preselection, a negative instantaneous regret,
// an observation whose choice is not part of the offered subset, ...).
struct ContractViolation : std::logic_error {
  explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

// Utility vector v of one environment instance. Entries are strictly
// positive and finite; arms are indexed 0..n-1 internally (1-based only in
// user-facing output).
class ScoreVector {
 public:
  explicit ScoreVector(std::vector<double> scores);

  int size() const { return static_cast<int>(scores_.size()); }
  double operator[](int arm) const { return scores_[static_cast<std::size_t>(arm)]; }
  const std::vector<double>& values() const { return scores_; }

  double min_score() const { return min_; }
  double max_score() const { return max_; }

  // True iff the largest entry equals 1 exactly, i.e. the vector lies in the
  // normalized parameter space. General instances (e.g. simplex draws) need
  // not satisfy this.
  bool normalized() const { return max_ == 1.0; }

 private:
  std::vector<double> scores_;
  double min_ = 0.0;
  double max_ = 0.0;
};

// A total order on the arms. position(i) is the 0-based rank of arm i;
// arm_at(p) is the arm occupying position p.
class Ranking {
 public:
  explicit Ranking(std::vector<int> positions);

  static Ranking identity(int n);
  // Builds a ranking from the arms listed first-to-last.
  static Ranking from_order(const std::vector<int>& arms_in_order);

  int size() const { return static_cast<int>(positions_.size()); }
  int position(int arm) const { return positions_[static_cast<std::size_t>(arm)]; }
  int arm_at(int pos) const { return order_[static_cast<std::size_t>(pos)]; }
  const std::vector<int>& order() const { return order_; }

  bool operator==(const Ranking& other) const { return positions_ == other.positions_; }

 private:
  std::vector<int> positions_;  // positions_[arm] = rank
  std::vector<int> order_;      // order_[rank] = arm
};

// Nonempty set of distinct arms offered to the selector. Stored sorted
// ascending so subsets compare canonically.
class Preselection {
 public:
  explicit Preselection(std::vector<int> arms);

  int size() const { return static_cast<int>(arms_.size()); }
  const std::vector<int>& arms() const { return arms_; }
  bool contains(int arm) const;
  int max_arm() const { return arms_.back(); }

  std::vector<int>::const_iterator begin() const { return arms_.begin(); }
  std::vector<int>::const_iterator end() const { return arms_.end(); }

  bool operator==(const Preselection& other) const { return arms_ == other.arms_; }
  bool operator!=(const Preselection& other) const { return arms_ != other.arms_; }

 private:
  std::vector<int> arms_;
};

// One round of feedback: the selector picked `chosen` out of `offered`.
struct ChoiceObservation {
  ChoiceObservation(Preselection offered_, int chosen_, std::int64_t round_);

  Preselection offered;
  int chosen;
  std::int64_t round;
};

}  // namespace prebandit
