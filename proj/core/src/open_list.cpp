#include "slider/open_list.hpp"

#include <algorithm>

#include "slider/heuristic.hpp"

namespace slider {

SearchNode SearchNode::make(const Board& board, int g) {
  const int h = misplaced_tiles(board);
  return SearchNode{board, g, h, g + h};
}

SearchNode SearchNode::child(Move m) const {
  const int from = board.neighbor_index(m);
  const int to = board.blank_index();
  const int tile = board.at(from);
  const int h = h_cost - (tile != from + 1) + (tile != to + 1);
  return SearchNode{board.apply(m), g_cost + 1, h, g_cost + 1 + h};
}

OpenList::Bucket& OpenList::bucket(int priority, int g_cost) {
  if (static_cast<std::size_t>(priority) >= queue_.size()) queue_.resize(priority + 1);
  auto& buckets = queue_[priority].buckets;
  if (static_cast<std::size_t>(g_cost) >= buckets.size()) buckets.resize(g_cost + 1);
  return buckets[g_cost];
}

OpenList::Offer OpenList::offer(const SearchNode& node) {
  Offer result = Offer::Inserted;
  auto [it, inserted] = node_table_.try_emplace(node.board.packed(), node);
  if (!inserted) {
    if (node.g_cost >= it->second.g_cost) return Offer::Ignored;
    it->second = node;
    result = Offer::Improved;
  }
  table_[node.board.packed()] = true;
  bucket(node.priority, node.g_cost).entries.push_back(node.board);
  ++queue_[node.priority].queued;
  if (++queued_ == 1 || node.priority < min_priority_) min_priority_ = node.priority;
  return result;
}

std::optional<SearchNode> OpenList::pop() {
  while (queued_ > 0) {
    while (queue_[min_priority_].queued == 0) ++min_priority_;
    Row& row = queue_[min_priority_];
    int g = static_cast<int>(row.buckets.size()) - 1;
    while (row.buckets[g].empty()) --g;
    Bucket& b = row.buckets[g];
    const Board top = b.entries[b.head++];
    if (b.empty()) {
      b.entries.clear();
      b.head = 0;
    }
    --row.queued;
    --queued_;

    auto it = node_table_.find(top.packed());
    // Superseded by a cheaper entry, or already popped.
    if (it == node_table_.end() || it->second.g_cost != g) continue;
    SearchNode node = it->second;
    node_table_.erase(it);
    table_[top.packed()] = false;
    return node;
  }
  return std::nullopt;
}

void OpenList::reserve(std::size_t n) {
  node_table_.reserve(n);
  table_.reserve(n);
}

bool OpenList::contains(const Board& b) const {
  auto it = table_.find(b.packed());
  return it != table_.end() && it->second;
}

const SearchNode* OpenList::find(const Board& b) const {
  auto it = node_table_.find(b.packed());
  return it == node_table_.end() ? nullptr : &it->second;
}

bool OpenList::queued_with(const Board& b, int priority, int g_cost) const {
  if (static_cast<std::size_t>(priority) >= queue_.size()) return false;
  const auto& buckets = queue_[priority].buckets;
  if (static_cast<std::size_t>(g_cost) >= buckets.size()) return false;
  const Bucket& bucket = buckets[g_cost];
  return std::find(bucket.entries.begin() + bucket.head, bucket.entries.end(), b) !=
         bucket.entries.end();
}

bool OpenList::coherent() const {
  for (const auto& [key, live] : table_) {
    if (live != node_table_.contains(key)) return false;
  }
  std::size_t total = 0;
  for (std::size_t p = 0; p < queue_.size(); ++p) {
    std::size_t in_row = 0;
    for (const Bucket& b : queue_[p].buckets) in_row += b.entries.size() - b.head;
    if (in_row != queue_[p].queued) return false;
    if (in_row > 0 && static_cast<int>(p) < min_priority_) return false;
    total += in_row;
  }
  if (total != queued_) return false;
  for (const auto& [key, node] : node_table_) {
    if (node.board.packed() != key || node.priority != node.g_cost + node.h_cost) {
      return false;
    }
    if (!contains(node.board) || !queued_with(node.board, node.priority, node.g_cost)) {
      return false;
    }
  }
  return true;
}

}  // namespace slider
