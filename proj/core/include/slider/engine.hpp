#ifndef SLIDER_ENGINE_HPP
#define SLIDER_ENGINE_HPP

// Live game sessions.
//
// A GameSession owns one session thread that holds all mutable game state.
// Player intents (moves, quit) and finished background solves are queued to
// that thread as commands and handled strictly in arrival order. Everything
// the session has to say goes out on its NotificationStream; renderers read
// the stream plus immutable snapshots and never touch the session directly.
//
// Phase transitions:
//
//   Solving --solve done--> Ready --correct move--> Ready | Complete
//                             \---wrong move---> Solving (re-solve new board)
//   any non-terminal --quit--> Quit
//
// While Solving, moves are rejected with WaitForSolver. Solve results carry
// the board they were computed for and are dropped if the session has moved
// on or quit by the time they arrive.

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "slider/board.hpp"
#include "slider/notification.hpp"
#include "slider/score.hpp"
#include "slider/solver.hpp"

namespace slider {

enum class Phase { Solving, Ready, Complete, Quit };

std::string_view to_string(Phase phase);

struct Snapshot {
  Board board;
  Phase phase;
  ScoreState score;
  /// Length of the installed solver path; meaningful once a solve finished.
  int optimal_remaining;
  std::uint64_t seed;
};

using SolveFn = std::function<SolveResult(const Board&)>;

enum class SolveLaunch {
  Background,  // one thread per solve
  Inline,      // solve synchronously on the calling thread
};

struct EngineOptions {
  SolveFn solver = solve;
  SolveLaunch launch = SolveLaunch::Background;
  /// Count any move that lowers the optimal distance by one as correct,
  /// not just the move onto the solver's own next board.
  bool permissive_correctness = false;
};

class GameSession {
 public:
  /// Starts on generate_solvable(3, seed).
  explicit GameSession(std::uint64_t seed, EngineOptions options = {});
  GameSession(const Board& start, std::uint64_t seed, EngineOptions options = {});
  ~GameSession();

  GameSession(const GameSession&) = delete;
  GameSession& operator=(const GameSession&) = delete;

  void move(Move m);
  void quit();

  NotificationStream& notifications() { return stream_; }

  Snapshot snapshot() const;

  /// Blocks until every submitted intent has been handled and no solve for
  /// the current board is outstanding.
  Snapshot wait_idle() const;

 private:
  struct MoveCmd { Move move; };
  struct QuitCmd {};
  struct SolvedCmd {
    Board board;
    std::optional<SolveResult> result;
  };
  struct StopCmd {};
  using Command = std::variant<MoveCmd, QuitCmd, SolvedCmd, StopCmd>;

  void enqueue(Command cmd);
  void run();
  void handle(const MoveCmd& cmd);
  void handle(const QuitCmd& cmd);
  void handle(const SolvedCmd& cmd);

  void start_solve(const Board& board);
  void install(const SolveResult& result);
  void notify(NotificationKind kind);
  void finish(Phase terminal);
  void publish();

  EngineOptions options_;
  NotificationStream stream_;
  const std::uint64_t seed_;

  // Session-thread state.
  Board board_;
  Phase phase_ = Phase::Solving;
  std::deque<Board> path_;
  ScoreState score_;

  std::mutex cmd_mu_;
  std::condition_variable cmd_cv_;
  std::deque<Command> commands_;

  mutable std::mutex snap_mu_;
  mutable std::condition_variable snap_cv_;
  Snapshot snapshot_;
  std::size_t unhandled_ = 0;

  std::vector<std::thread> solver_threads_;
  std::thread session_thread_;
};

}  // namespace slider

#endif  // SLIDER_ENGINE_HPP
