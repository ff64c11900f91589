#ifndef SLIDER_BOARD_HPP
#define SLIDER_BOARD_HPP

// Square sliding-puzzle boards.
//
// A board is an n x n grid holding the values 0..n*n-1 in row-major order,
// where 0 is the blank. Every move is named by the direction the BLANK
// travels: Move::Up swaps the blank with the tile above it. This is the
// opposite of the tile-centric naming some puzzle UIs use.
//
// Boards are immutable values. They are used as hash-map keys all over the
// solver, so the cells are packed four bits apiece into one 64-bit word,
// which limits the width to 2..4.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slider {

inline constexpr int kMinWidth = 2;
inline constexpr int kMaxWidth = 4;

enum class Move : std::uint8_t { Up, Down, Left, Right };

inline constexpr std::array<Move, 4> kAllMoves = {Move::Up, Move::Down,
                                                  Move::Left, Move::Right};

Move opposite(Move m);

/// Serialized letter for a move: U, D, L or R.
char to_letter(Move m);
std::optional<Move> move_from_letter(char c);
std::string_view to_string(Move m);

class InvalidDimension : public std::invalid_argument {
 public:
  explicit InvalidDimension(int width);
  int width() const { return width_; }

 private:
  int width_;
};

class IllegalMove : public std::logic_error {
 public:
  explicit IllegalMove(Move m);
  Move move() const { return move_; }

 private:
  Move move_;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// At most four moves; iterable like a container.
class MoveList {
 public:
  void push_back(Move m) { moves_[size_++] = m; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(Move m) const;
  const Move* begin() const { return moves_.data(); }
  const Move* end() const { return moves_.data() + size_; }
  Move operator[](std::size_t i) const { return moves_[i]; }

 private:
  std::array<Move, 4> moves_{};
  std::size_t size_ = 0;
};

class Board {
 public:
  /// Solved configuration: 1, 2, ..., n*n-1 followed by the blank.
  static Board goal(int width);

  /// Builds a board from row-major cells. Throws ParseError when the cell
  /// count is not a square in range or the values are not a permutation.
  static Board from_cells(std::span<const int> cells);
  static Board from_cells(std::initializer_list<int> cells) {
    return from_cells(std::span<const int>(cells.begin(), cells.size()));
  }

  /// Inverse of packed(). Throws ParseError if `cells` is not a valid
  /// configuration for `width`.
  static Board from_packed(int width, std::uint64_t cells);

  int width() const { return width_; }
  int size() const { return width_ * width_; }
  int blank_index() const { return blank_; }
  int blank_row() const { return blank_ / width_; }
  int blank_col() const { return blank_ % width_; }

  int at(int index) const {
    return static_cast<int>((cells_ >> (4 * index)) & 0xFu);
  }
  std::vector<int> cells() const;

  bool can_move(Move m) const {
    switch (m) {
      case Move::Up: return blank_row() > 0;
      case Move::Down: return blank_row() < width_ - 1;
      case Move::Left: return blank_col() > 0;
      case Move::Right: return blank_col() < width_ - 1;
    }
    return false;
  }

  MoveList legal_moves() const {
    MoveList out;
    for (Move m : kAllMoves) {
      if (can_move(m)) out.push_back(m);
    }
    return out;
  }

  /// Index of the tile that trades places with the blank under `m`.
  /// Precondition: can_move(m).
  int neighbor_index(Move m) const {
    switch (m) {
      case Move::Up: return blank_ - width_;
      case Move::Down: return blank_ + width_;
      case Move::Left: return blank_ - 1;
      case Move::Right: return blank_ + 1;
    }
    return blank_;
  }

  /// Returns a new board with the blank moved one step. Throws IllegalMove
  /// if the blank would leave the grid.
  Board apply(Move m) const {
    if (!can_move(m)) throw IllegalMove(m);
    const int target = neighbor_index(m);
    // The blank's nibble is zero, so moving the tile is a clear plus a set.
    const std::uint64_t tile = (cells_ >> (4 * target)) & 0xFu;
    std::uint64_t next = cells_ & ~(std::uint64_t{0xF} << (4 * target));
    next |= tile << (4 * blank_);
    return Board(next, width_, static_cast<std::uint8_t>(target));
  }

  bool is_goal() const { return *this == goal(width_); }

  /// The packed cell word; unique per configuration for a given width.
  std::uint64_t packed() const { return cells_; }

  friend bool operator==(const Board&, const Board&) = default;

 private:
  Board(std::uint64_t cells, std::uint8_t width, std::uint8_t blank)
      : cells_(cells), width_(width), blank_(blank) {}

  std::uint64_t cells_ = 0;
  std::uint8_t width_ = 0;
  std::uint8_t blank_ = 0;
};

/// Direction the blank travelled from `from` to reach `to`, if the two
/// boards are exactly one move apart.
std::optional<Move> move_between(const Board& from, const Board& to);

/// Comma-separated row-major cells with no whitespace, e.g. "1,2,3,4,5,6,7,8,0".
std::string render_board_text(const Board& b);
Board parse_board(std::string_view text);

/// Move letters concatenated without separators, e.g. "RRU".
std::string render_moves(std::span<const Move> moves);

struct BoardHash {
  std::size_t operator()(const Board& b) const noexcept {
    std::uint64_t x = b.packed() ^ (static_cast<std::uint64_t>(b.width()) << 60);
    // splitmix64 finalizer
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};

}  // namespace slider

template <>
struct std::hash<slider::Board> : slider::BoardHash {};

#endif  // SLIDER_BOARD_HPP
