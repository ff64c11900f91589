#ifndef SLIDER_TOOLS_VERIFY_HPP
#define SLIDER_TOOLS_VERIFY_HPP

#include <cstddef>
#include <cstdint>

namespace slider::cli {

struct VerifyOptions {
  bool exhaustive = false;
  std::size_t sample = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct VerifyReport {
  std::size_t states = 0;          // boards in the BFS oracle
  int max_depth = 0;
  std::size_t checked = 0;         // boards solved with A*
  std::size_t mismatches = 0;      // solve length != oracle distance
  std::size_t path_errors = 0;     // replayed moves miss the goal
  std::size_t inadmissible = 0;    // misplaced tiles > oracle distance
  std::size_t scanner_mismatches = 0;  // is_legal != oracle reachability

  bool ok() const {
    return mismatches == 0 && path_errors == 0 && inadmissible == 0 &&
           scanner_mismatches == 0;
  }
};

/// Checks the solver, heuristic and scanner against the 3x3 BFS oracle.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace slider::cli

#endif  // SLIDER_TOOLS_VERIFY_HPP
