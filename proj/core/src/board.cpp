#include "slider/board.hpp"

#include <charconv>
#include <cmath>

namespace slider {

Move opposite(Move m) {
  switch (m) {
    case Move::Up: return Move::Down;
    case Move::Down: return Move::Up;
    case Move::Left: return Move::Right;
    case Move::Right: return Move::Left;
  }
  throw std::logic_error("unexpected Move value");
}

char to_letter(Move m) {
  switch (m) {
    case Move::Up: return 'U';
    case Move::Down: return 'D';
    case Move::Left: return 'L';
    case Move::Right: return 'R';
  }
  throw std::logic_error("unexpected Move value");
}

std::optional<Move> move_from_letter(char c) {
  switch (c) {
    case 'U': case 'u': return Move::Up;
    case 'D': case 'd': return Move::Down;
    case 'L': case 'l': return Move::Left;
    case 'R': case 'r': return Move::Right;
    default: return std::nullopt;
  }
}

std::string_view to_string(Move m) {
  switch (m) {
    case Move::Up: return "Up";
    case Move::Down: return "Down";
    case Move::Left: return "Left";
    case Move::Right: return "Right";
  }
  throw std::logic_error("unexpected Move value");
}

InvalidDimension::InvalidDimension(int width)
    : std::invalid_argument("invalid board width " + std::to_string(width) +
                            " (supported: " + std::to_string(kMinWidth) +
                            ".." + std::to_string(kMaxWidth) + ")"),
      width_(width) {}

IllegalMove::IllegalMove(Move m)
    : std::logic_error("illegal move: blank cannot travel " +
                       std::string(to_string(m))),
      move_(m) {}

bool MoveList::contains(Move m) const {
  for (Move x : *this) {
    if (x == m) return true;
  }
  return false;
}

Board Board::goal(int width) {
  if (width < kMinWidth || width > kMaxWidth) throw InvalidDimension(width);
  const int n = width * width;
  std::uint64_t cells = 0;
  for (int i = 0; i < n - 1; ++i) {
    cells |= static_cast<std::uint64_t>(i + 1) << (4 * i);
  }
  return Board(cells, static_cast<std::uint8_t>(width),
               static_cast<std::uint8_t>(n - 1));
}

Board Board::from_cells(std::span<const int> cells) {
  const auto n = static_cast<int>(cells.size());
  const int width = static_cast<int>(std::lround(std::sqrt(n)));
  if (width * width != n || width < kMinWidth) {
    throw ParseError("board has " + std::to_string(n) +
                     " cells; expected a perfect square of at least 4");
  }
  if (width > kMaxWidth) {
    throw ParseError("board width " + std::to_string(width) +
                     " exceeds the supported maximum of " +
                     std::to_string(kMaxWidth));
  }
  std::array<bool, 16> seen{};
  std::uint64_t packed = 0;
  int blank = -1;
  for (int i = 0; i < n; ++i) {
    const int v = cells[i];
    if (v < 0 || v >= n) {
      throw ParseError("tile value " + std::to_string(v) +
                       " out of range 0.." + std::to_string(n - 1));
    }
    if (seen[v]) {
      throw ParseError("duplicate tile value " + std::to_string(v));
    }
    seen[v] = true;
    if (v == 0) blank = i;
    packed |= static_cast<std::uint64_t>(v) << (4 * i);
  }
  return Board(packed, static_cast<std::uint8_t>(width),
               static_cast<std::uint8_t>(blank));
}

Board Board::from_packed(int width, std::uint64_t cells) {
  if (width < kMinWidth || width > kMaxWidth) throw InvalidDimension(width);
  std::vector<int> values(width * width);
  for (int i = 0; i < width * width; ++i) {
    values[i] = static_cast<int>((cells >> (4 * i)) & 0xFu);
  }
  if (width < kMaxWidth && (cells >> (4 * width * width)) != 0) {
    throw ParseError("packed board has bits beyond its last cell");
  }
  return from_cells(values);
}

std::vector<int> Board::cells() const {
  std::vector<int> out(size());
  for (int i = 0; i < size(); ++i) out[i] = at(i);
  return out;
}

std::optional<Move> move_between(const Board& from, const Board& to) {
  if (from.width() != to.width()) return std::nullopt;
  for (Move m : from.legal_moves()) {
    if (from.apply(m) == to) return m;
  }
  return std::nullopt;
}

std::string render_board_text(const Board& b) {
  std::string out;
  for (int i = 0; i < b.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(b.at(i));
  }
  return out;
}

Board parse_board(std::string_view text) {
  std::vector<int> cells;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? text.npos
                                                         : comma - pos);
    int value = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        end != token.data() + token.size()) {
      throw ParseError("invalid token '" + std::string(token) + "'");
    }
    cells.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Board::from_cells(cells);
}

std::string render_moves(std::span<const Move> moves) {
  std::string out;
  out.reserve(moves.size());
  for (Move m : moves) out.push_back(to_letter(m));
  return out;
}

}  // namespace slider
