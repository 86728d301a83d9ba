#include "prebandit/win_matrix.hpp"

#include <numeric>

namespace prebandit {

WinMatrix::WinMatrix(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("WinMatrix: need at least 2 arms");
  counts_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

std::int64_t WinMatrix::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

void WinMatrix::record_win(int winner, int loser) {
  if (winner == loser) throw std::invalid_argument("WinMatrix: self-duel");
  ++counts_[index(winner, loser)];
}

void WinMatrix::record_choice(const ChoiceObservation& obs) {
  for (int j : obs.offered) {
    if (j != obs.chosen) record_win(obs.chosen, j);
  }
}

WinMatrix WinMatrix::from_raw(int n, std::vector<std::int64_t> counts) {
  WinMatrix w(n);
  if (counts.size() != w.counts_.size()) {
    throw std::invalid_argument("WinMatrix: raw size mismatch");
  }
  for (int i = 0; i < n; ++i) {
    if (counts[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(i)] != 0) {
      throw std::invalid_argument("WinMatrix: nonzero diagonal");
    }
  }
  for (std::int64_t c : counts) {
    if (c < 0) throw std::invalid_argument("WinMatrix: negative count");
  }
  w.counts_ = std::move(counts);
  return w;
}

int reference_arm(const WinMatrix& w) {
  const int n = w.size();
  int best = 0, best_count = -1;
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i && w.wins(i, j) >= w.wins(j, i)) ++count;
    }
    if (count > best_count) {
      best_count = count;
      best = i;
    }
  }
  return best;
}

}  // namespace prebandit
