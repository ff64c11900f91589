#include "slider/heuristic.hpp"

namespace slider {

int misplaced_tiles(const Board& b) {
  const int n = b.size();
  int score = 0;
  for (int i = 0; i < n; ++i) {
    const int v = b.at(i);
    if (v != 0 && v != i + 1) ++score;
  }
  return score;
}

int misplaced_cells(const Board& b) {
  const int n = b.size();
  int score = 0;
  for (int i = 0; i < n; ++i) {
    if (b.at(i) != (i + 1) % n) ++score;
  }
  return score;
}

}  // namespace slider
