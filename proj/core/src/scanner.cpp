#include "slider/scanner.hpp"

namespace slider {

int count_inversions(const Board& b) {
  const int n = b.size();
  int inversions = 0;
  for (int i = 0; i < n - 1; ++i) {
    const int vi = b.at(i);
    // 1 is never the larger element of a pair.
    if (vi == 0 || vi == 1) continue;
    for (int j = i + 1; j < n; ++j) {
      const int vj = b.at(j);
      if (vj != 0 && vi > vj) ++inversions;
    }
  }
  return inversions;
}

Legality is_legal(const Board& b) {
  const int inversions = count_inversions(b);
  bool solvable;
  if (b.width() % 2 == 1) {
    solvable = inversions % 2 == 0;
  } else {
    const int row_from_bottom = b.width() - b.blank_row();
    solvable = (inversions + row_from_bottom) % 2 == 1;
  }
  if (!solvable) return {false, -1};
  return {true, b.blank_index()};
}

}  // namespace slider
