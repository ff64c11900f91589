#ifndef SLIDER_BFS_ORACLE_HPP
#define SLIDER_BFS_ORACLE_HPP

#include <unordered_map>

#include "slider/board.hpp"

namespace slider {

using DistanceMap = std::unordered_map<Board, int, BoardHash>;

/// Exact optimal distance to the goal for every board that can reach it,
/// found by breadth-first search outward from the goal. Widths 2 and 3 only.
DistanceMap bfs_distance_oracle(int width = 3);

}  // namespace slider

#endif  // SLIDER_BFS_ORACLE_HPP
