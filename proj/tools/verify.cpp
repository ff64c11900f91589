#include "verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <thread>
#include <vector>

#include "slider/bfs_oracle.hpp"
#include "slider/generator.hpp"
#include "slider/heuristic.hpp"
#include "slider/scanner.hpp"
#include "slider/solver.hpp"

namespace slider::cli {

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  const DistanceMap oracle = bfs_distance_oracle(3);
  report.states = oracle.size();

  std::vector<Board> targets;
  for (const auto& [board, depth] : oracle) {
    report.max_depth = std::max(report.max_depth, depth);
    if (misplaced_tiles(board) > depth) ++report.inadmissible;
    if (options.exhaustive) targets.push_back(board);
  }

  if (options.exhaustive) {
    std::array<int, 9> cells;
    std::iota(cells.begin(), cells.end(), 0);
    do {
      const Board b = Board::from_cells(cells);
      if (is_legal(b).solvable != oracle.contains(b)) ++report.scanner_mismatches;
    } while (std::next_permutation(cells.begin(), cells.end()));
  } else {
    Generator gen(3, options.seed);
    targets.reserve(options.sample);
    for (std::size_t i = 0; i < options.sample; ++i) targets.push_back(gen.next());
  }

  unsigned threads = options.threads ? options.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> mismatches{0};
  std::atomic<std::size_t> path_errors{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < targets.size(); i = next++) {
      const Board& start = targets[i];
      const SolveResult result = solve(start);
      if (static_cast<int>(result.moves.size()) != oracle.at(start)) ++mismatches;
      Board b = start;
      for (Move m : result.moves) b = b.apply(m);
      if (!b.is_goal()) ++path_errors;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  report.checked = targets.size();
  report.mismatches = mismatches;
  report.path_errors = path_errors;
  return report;
}

}  // namespace slider::cli
