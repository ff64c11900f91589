#include "slider/bfs_oracle.hpp"

#include <vector>

namespace slider {

DistanceMap bfs_distance_oracle(int width) {
  if (width < kMinWidth || width > 3) throw InvalidDimension(width);
  const Board goal = Board::goal(width);
  DistanceMap distance;
  distance.reserve(width == 3 ? 181440 : 64);
  distance.emplace(goal, 0);

  std::vector<Board> frontier{goal};
  std::vector<Board> next;
  for (int depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (const Board& b : frontier) {
      for (Move m : b.legal_moves()) {
        const Board child = b.apply(m);
        if (distance.emplace(child, depth).second) next.push_back(child);
      }
    }
    frontier.swap(next);
  }
  return distance;
}

}  // namespace slider
