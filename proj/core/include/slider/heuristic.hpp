#ifndef SLIDER_HEURISTIC_HPP
#define SLIDER_HEURISTIC_HPP

#include "slider/board.hpp"

namespace slider {

// Misplaced tiles: number of non-blank tiles not on their goal cell.
//
// Never overestimates the remaining distance, since every misplaced tile has
// to move at least once, and changes by at most one per move. The solver
// relies on both properties.
int misplaced_tiles(const Board& b);

// Cell-by-cell comparison against the goal that also compares the blank's
// home cell (expecting 0). Equals misplaced_tiles plus one whenever the blank
// is off its home cell, so it can overestimate: [1,2,3,4,5,6,7,0,8] scores 2
// at distance 1. Kept for reference; the solver does not use it.
int misplaced_cells(const Board& b);

}  // namespace slider

#endif  // SLIDER_HEURISTIC_HPP
