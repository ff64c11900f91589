#ifndef SLIDER_GENERATOR_HPP
#define SLIDER_GENERATOR_HPP

#include <cstdint>
#include <random>

#include "slider/board.hpp"

namespace slider {

// Draws uniformly random solvable boards from a seeded mt19937_64 stream.
//
// Each draw shuffles the goal configuration, rejects the result while it is
// unsolvable or equal to the goal, and retries. Output depends only on
// (width, seed, draw number), independent of the standard library in use.
class Generator {
 public:
  Generator(int width, std::uint64_t seed);

  Board next();

  int width() const { return width_; }

 private:
  std::uint64_t below(std::uint64_t bound);

  int width_;
  std::mt19937_64 rng_;
};

/// First board of Generator(width, seed).
Board generate_solvable(int width, std::uint64_t seed);

}  // namespace slider

#endif  // SLIDER_GENERATOR_HPP
