#ifndef SLIDER_SOLVER_HPP
#define SLIDER_SOLVER_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "slider/board.hpp"
#include "slider/heuristic.hpp"

namespace slider {

class UnsolvableBoard : public std::invalid_argument {
 public:
  explicit UnsolvableBoard(const Board& b);
};

struct SolveResult {
  /// Boards after each move; the start is excluded and the goal is last.
  std::vector<Board> path;
  std::vector<Move> moves;
  std::size_t nodes_expanded = 0;
  std::size_t peak_open_size = 0;
};

// Optimal A* solve with the misplaced-tiles heuristic.
//
// The search stops when the goal is popped from the open list. Throws
// UnsolvableBoard if the start cannot reach the goal and InvalidDimension
// for widths above 3, where the state space is too large to search.
SolveResult solve(const Board& start);

}  // namespace slider

#endif  // SLIDER_SOLVER_HPP
