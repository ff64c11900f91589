#ifndef SLIDER_OPEN_LIST_HPP
#define SLIDER_OPEN_LIST_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include "absl/container/flat_hash_map.h"
#include <vector>

#include "slider/board.hpp"

namespace slider {

struct SearchNode {
  Board board;
  int g_cost = 0;
  int h_cost = 0;
  int priority = 0;  // g_cost + h_cost

  /// Node at path cost `g` with h = misplaced_tiles(board).
  static SearchNode make(const Board& board, int g);

  /// Successor of this node under `m`, with h updated from the one tile
  /// that moves.
  SearchNode child(Move m) const;
};

// A* frontier.
//
// node_table holds the best known node for every live board, the membership
// table says whether a board is live (absent reads as false), and the queue
// orders entries by priority, then larger g_cost, then insertion order.
// Improving a live board pushes a fresh queue entry; the superseded one is
// left in place and skipped when popped.
//
// Priorities and costs are small non-negative integers, so the queue is a
// two-level bucket array indexed by [priority][g_cost] with a FIFO in each
// bucket. The tables are keyed by Board::packed(); an open list only ever
// holds boards of a single width, for which that key is unique.
class OpenList {
 public:
  enum class Offer { Inserted, Improved, Ignored };

  /// Inserts an absent board, or lowers the cost of a live one.
  Offer offer(const SearchNode& node);

  /// Removes and returns the live node with the best queue order.
  std::optional<SearchNode> pop();

  bool contains(const Board& b) const;
  const SearchNode* find(const Board& b) const;

  /// Number of live boards.
  std::size_t size() const { return node_table_.size(); }
  bool empty() const { return node_table_.empty(); }

  /// Queue entries including superseded ones.
  std::size_t queue_size() const { return queued_; }

  /// Checks that the membership table, node table and queue agree.
  bool coherent() const;

  void reserve(std::size_t n);

 private:
  struct Bucket {
    std::vector<Board> entries;
    std::size_t head = 0;
    bool empty() const { return head == entries.size(); }
  };
  struct Row {
    std::vector<Bucket> buckets;  // indexed by g_cost
    std::size_t queued = 0;
  };

  Bucket& bucket(int priority, int g_cost);
  bool queued_with(const Board& b, int priority, int g_cost) const;

  absl::flat_hash_map<std::uint64_t, SearchNode> node_table_;
  absl::flat_hash_map<std::uint64_t, bool> table_;
  std::vector<Row> queue_;  // indexed by priority
  int min_priority_ = 0;
  std::size_t queued_ = 0;
};

// Expanded boards, keyed like OpenList. Entries only ever go from absent to
// true.
class CloseList {
 public:
  void insert(const Board& b) { table_[b.packed()] = true; }
  bool contains(const Board& b) const {
    auto it = table_.find(b.packed());
    return it != table_.end() && it->second;
  }
  std::size_t size() const { return table_.size(); }
  void reserve(std::size_t n) { table_.reserve(n); }

 private:
  absl::flat_hash_map<std::uint64_t, bool> table_;
};

}  // namespace slider

#endif  // SLIDER_OPEN_LIST_HPP
