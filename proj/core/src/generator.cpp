#include "slider/generator.hpp"

#include <utility>
#include <vector>

#include "slider/scanner.hpp"

namespace slider {

Generator::Generator(int width, std::uint64_t seed) : width_(width), rng_(seed) {
  if (width < kMinWidth || width > kMaxWidth) throw InvalidDimension(width);
}

std::uint64_t Generator::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased; std::uniform_int_distribution is not
  // reproducible across standard library implementations.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng_();
  } while (x >= limit);
  return x % bound;
}

Board Generator::next() {
  const Board goal = Board::goal(width_);
  std::vector<int> cells = goal.cells();
  while (true) {
    for (std::size_t i = cells.size() - 1; i > 0; --i) {
      std::swap(cells[i], cells[below(i + 1)]);
    }
    const Board candidate = Board::from_cells(cells);
    if (candidate != goal && is_legal(candidate).solvable) return candidate;
  }
}

Board generate_solvable(int width, std::uint64_t seed) {
  return Generator(width, seed).next();
}

}  // namespace slider
