#include "slider/solver.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include "absl/container/flat_hash_map.h"

#include "slider/open_list.hpp"
#include "slider/scanner.hpp"

namespace slider {

UnsolvableBoard::UnsolvableBoard(const Board& b)
    : std::invalid_argument("board " + render_board_text(b) +
                            " cannot reach the goal") {}

namespace {

// Typical 3x3 solves touch a few thousand to a few tens of thousands of boards.
constexpr std::size_t kInitialCapacity = 8192;

// Child -> parent, keyed and valued by Board::packed().
using Relation = absl::flat_hash_map<std::uint64_t, std::uint64_t>;

std::vector<Board> build_path(const Board& start, const Board& goal,
                              const Relation& relation) {
  if (start == goal) return {};
  std::deque<Board> path;
  std::uint64_t state = goal.packed();
  while (relation.at(state) != start.packed()) {
    state = relation.at(state);
    path.push_front(Board::from_packed(start.width(), state));
  }
  path.push_back(goal);
  return {path.begin(), path.end()};
}

}  // namespace

SolveResult solve(const Board& start) {
  if (start.width() > 3) throw InvalidDimension(start.width());
  if (!is_legal(start).solvable) throw UnsolvableBoard(start);

  const Board goal = Board::goal(start.width());
  OpenList open;
  CloseList closed;
  // recorded on every insertion or improvement
  Relation relation;

  open.reserve(kInitialCapacity);
  closed.reserve(kInitialCapacity);
  relation.reserve(2 * kInitialCapacity);

  SolveResult result;
  open.offer(SearchNode::make(start, 0));
  result.peak_open_size = 1;

  bool found = false;
  while (auto current = open.pop()) {
    if (current->board == goal) {
      found = true;
      break;
    }
    closed.insert(current->board);
    ++result.nodes_expanded;
    for (Move m : current->board.legal_moves()) {
      const SearchNode child = current->child(m);
      if (closed.contains(child.board)) continue;
      if (open.offer(child) != OpenList::Offer::Ignored) {
        relation.insert_or_assign(child.board.packed(), current->board.packed());
      }
    }
    result.peak_open_size = std::max(result.peak_open_size, open.size());
  }
  assert(found);
  (void)found;

  result.path = build_path(start, goal, relation);
  result.moves.reserve(result.path.size());
  Board prev = start;
  for (const Board& b : result.path) {
    result.moves.push_back(*move_between(prev, b));
    prev = b;
  }
  return result;
}

}  // namespace slider
