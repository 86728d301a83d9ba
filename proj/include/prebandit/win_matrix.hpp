#pragma once

#include <cstdint>
#include <vector>

#include "prebandit/types.hpp"

namespace prebandit {

// Pairwise win counts accumulated from observed choices. w(i,j) counts the
// rounds in which i was chosen while both i and j were offered. Entries are
// increment-only and the diagonal stays zero.
class WinMatrix {
 public:
  explicit WinMatrix(int n);

  int size() const { return n_; }
  std::int64_t wins(int i, int j) const { return counts_[index(i, j)]; }
  // Total duels between i and j: w(i,j) + w(j,i).
  std::int64_t duels(int i, int j) const { return wins(i, j) + wins(j, i); }
  std::int64_t total() const;

  void record_win(int winner, int loser);

  // Credits `winner` with one win against every other offered arm.
  void record_choice(const ChoiceObservation& obs);

  const std::vector<std::int64_t>& raw() const { return counts_; }
  static WinMatrix from_raw(int n, std::vector<std::int64_t> counts);

  bool operator==(const WinMatrix& other) const {
    return n_ == other.n_ && counts_ == other.counts_;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<std::int64_t> counts_;
};

// The arm with the most pairwise-win majorities: argmax over i of the number
// of j != i with w(i,j) >= w(j,i). Ties resolve to the lowest index.
int reference_arm(const WinMatrix& w);

}  // namespace prebandit
