#ifndef SLIDER_SCANNER_HPP
#define SLIDER_SCANNER_HPP

#include "slider/board.hpp"

namespace slider {

/// Pairs (i, j), i < j, with cells[i] > cells[j], ignoring the blank.
int count_inversions(const Board& b);

struct Legality {
  bool solvable = false;
  /// Index of the blank when solvable, -1 otherwise.
  int blank_index = -1;

  friend bool operator==(const Legality&, const Legality&) = default;
};

// Whether `b` can reach Board::goal(b.width()).
//
// Odd widths: solvable iff the inversion count is even. Even widths: solvable
// iff inversions + (blank row counted 1-based from the bottom) is odd.
Legality is_legal(const Board& b);

}  // namespace slider

#endif  // SLIDER_SCANNER_HPP
