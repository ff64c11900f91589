#include <gtest/gtest.h>

#include <condition_variable>
#include <mutex>

#include "slider/engine.hpp"
#include "slider/generator.hpp"
#include "string_bfs.hpp"

namespace slider {
namespace {

using K = NotificationKind;

// Solver that blocks until released.
class GatedSolver {
 public:
  SolveFn fn() {
    return [this](const Board& b) {
      std::unique_lock lock(mu_);
      ++calls_;
      cv_.notify_all();
      cv_.wait(lock, [this] { return open_; });
      lock.unlock();
      return solve(b);
    };
  }
  void release() {
    std::lock_guard lock(mu_);
    open_ = true;
    cv_.notify_all();
  }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  bool open_ = false;
  int calls_ = 0;
};

std::vector<K> drain(GameSession& session) {
  std::vector<K> kinds;
  while (auto n = session.notifications().try_receive()) kinds.push_back(n->kind);
  return kinds;
}

K next_kind(GameSession& session) {
  auto n = session.notifications().receive();
  EXPECT_TRUE(n.has_value());
  return n ? n->kind : K::Quit;
}

EngineOptions inline_options() {
  EngineOptions o;
  o.launch = SolveLaunch::Inline;
  return o;
}

class EngineTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    distances_ = new std::unordered_map<std::string, int>(testing::string_bfs(3));
  }
  static void TearDownTestSuite() {
    delete distances_;
    distances_ = nullptr;
  }
  static int distance(const Board& b) {
    return distances_->at(testing::to_string_state(b.cells()));
  }

  static std::unordered_map<std::string, int>* distances_;
};

std::unordered_map<std::string, int>* EngineTest::distances_ = nullptr;

TEST_F(EngineTest, BackgroundSolveBecomesReady) {
  GameSession session(17);
  const Snapshot s = session.wait_idle();
  EXPECT_EQ(s.phase, Phase::Ready);
  EXPECT_EQ(s.board, generate_solvable(3, 17));
  EXPECT_EQ(s.optimal_remaining, distance(s.board));
  EXPECT_EQ(s.score, ScoreState{});
  EXPECT_EQ(s.seed, 17u);
  EXPECT_EQ(drain(session), (std::vector<K>{K::Solving, K::ReadyToPlay}));
}

TEST_F(EngineTest, SameSeedSameStart) {
  GameSession a(99, inline_options());
  GameSession b(99, inline_options());
  EXPECT_EQ(a.snapshot().board, b.snapshot().board);
}

TEST_F(EngineTest, InlineSolverIsReadyBeforeFirstInput) {
  const Board start = generate_solvable(3, 4);
  const Move head = solve(start).moves.front();
  GameSession session(4, inline_options());
  session.move(head);
  const Snapshot s = session.wait_idle();
  EXPECT_EQ(drain(session), (std::vector<K>{K::Solving, K::ReadyToPlay, K::CorrectMove}));
  EXPECT_EQ(s.score, (ScoreState{1, 1}));
  EXPECT_EQ(s.optimal_remaining, distance(start) - 1);
}

TEST_F(EngineTest, MovesWhileSolvingAreRejected) {
  GatedSolver gate;
  EngineOptions options;
  options.solver = gate.fn();
  GameSession session(21, options);
  const Board start = session.snapshot().board;

  EXPECT_EQ(next_kind(session), K::Solving);
  for (Move m : {Move::Up, Move::Left, Move::Down}) session.move(m);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(next_kind(session), K::WaitForSolver);
  EXPECT_EQ(session.snapshot().board, start);
  EXPECT_EQ(session.snapshot().phase, Phase::Solving);
  EXPECT_EQ(session.snapshot().score, ScoreState{});

  gate.release();
  EXPECT_EQ(next_kind(session), K::ReadyToPlay);
  const Snapshot s = session.wait_idle();
  EXPECT_EQ(s.board, start);
  EXPECT_EQ(s.optimal_remaining, distance(start));
}

TEST_F(EngineTest, CorrectFinalMoveCompletesAndCloses) {
  GameSession session(Board::from_cells({1, 2, 3, 4, 5, 6, 7, 0, 8}), 0, inline_options());
  session.move(Move::Right);
  const Snapshot s = session.wait_idle();
  EXPECT_EQ(s.phase, Phase::Complete);
  EXPECT_TRUE(s.board.is_goal());
  EXPECT_EQ(s.score, (ScoreState{1, 1}));
  EXPECT_EQ(s.optimal_remaining, 0);
  EXPECT_TRUE(session.notifications().closed());
  EXPECT_EQ(drain(session),
            (std::vector<K>{K::Solving, K::ReadyToPlay, K::CorrectMove, K::GameComplete}));

  // terminal: input and quit ignored
  session.move(Move::Left);
  session.quit();
  const Snapshot after = session.wait_idle();
  EXPECT_EQ(after.phase, Phase::Complete);
  EXPECT_EQ(after.board, s.board);
}

TEST_F(EngineTest, OffGridMoveIsReportedAndIgnored) {
  const Board start = Board::from_cells({1, 2, 3, 4, 5, 6, 7, 0, 8});
  GameSession session(start, 0, inline_options());
  session.move(Move::Down);
  const Snapshot s = session.wait_idle();
  EXPECT_EQ(s.board, start);
  EXPECT_EQ(s.phase, Phase::Ready);
  EXPECT_EQ(s.score, ScoreState{});
  const auto kinds = drain(session);
  ASSERT_EQ(kinds.size(), 3u);
  EXPECT_EQ(kinds.back(), K::IllegalMove);
  EXPECT_EQ(severity_of(kinds.back()), Severity::Info);
}

TEST_F(EngineTest, WrongMoveTriggersResolve) {
  GameSession session(33);
  const Snapshot ready = session.wait_idle();
  const SolveResult plan = solve(ready.board);
  Move wrong = Move::Up;
  for (Move m : ready.board.legal_moves()) {
    if (!(ready.board.apply(m) == plan.path.front())) {
      wrong = m;
      break;
    }
  }
  session.move(wrong);
  const Snapshot s = session.wait_idle();
  EXPECT_EQ(s.board, ready.board.apply(wrong));
  EXPECT_EQ(s.phase, Phase::Ready);
  EXPECT_EQ(s.score, (ScoreState{-1, 1}));
  EXPECT_EQ(s.optimal_remaining, distance(s.board));
  EXPECT_EQ(drain(session),
            (std::vector<K>{K::Solving, K::ReadyToPlay, K::WrongMove, K::ReadyToPlay}));
}

TEST_F(EngineTest, FollowingThePathScoresOne) {
  const Board start = generate_solvable(3, 8);
  const SolveResult plan = solve(start);
  GameSession session(8, inline_options());
  int remaining = static_cast<int>(plan.moves.size());
  for (Move m : plan.moves) {
    session.move(m);
    const Snapshot s = session.wait_idle();
    EXPECT_EQ(s.optimal_remaining, --remaining);
  }
  const Snapshot s = session.wait_idle();
  EXPECT_EQ(s.phase, Phase::Complete);
  EXPECT_EQ(current_score(s.score), 1.0);
  EXPECT_EQ(s.score.total_moves, static_cast<int>(plan.moves.size()));
}

TEST_F(EngineTest, QuitWhileSolvingDiscardsLateResult) {
  GatedSolver gate;
  EngineOptions options;
  options.solver = gate.fn();
  GameSession session(5, options);
  const Board start = session.snapshot().board;
  session.quit();
  EXPECT_EQ(next_kind(session), K::Solving);
  EXPECT_EQ(next_kind(session), K::Quit);
  EXPECT_FALSE(session.notifications().receive().has_value());

  gate.release();
  session.move(Move::Up);
  const Snapshot s = session.wait_idle();
  EXPECT_EQ(s.phase, Phase::Quit);
  EXPECT_EQ(s.board, start);
  EXPECT_EQ(s.optimal_remaining, 0);
}

TEST_F(EngineTest, QuitIsIdempotent) {
  GameSession session(6, inline_options());
  session.quit();
  session.quit();
  session.move(Move::Up);
  const Snapshot s = session.wait_idle();
  EXPECT_EQ(s.phase, Phase::Quit);
  EXPECT_EQ(drain(session), (std::vector<K>{K::Solving, K::ReadyToPlay, K::Quit}));
  EXPECT_EQ(session.notifications().send(make_notification(K::Solving)), SendResult::Closed);
}

TEST_F(EngineTest, StartingOnGoalIsAlreadySolved) {
  GameSession session(Board::goal(3), 0, inline_options());
  EXPECT_EQ(session.snapshot().phase, Phase::Complete);
  EXPECT_EQ(drain(session), (std::vector<K>{K::AlreadySolved}));
  EXPECT_TRUE(session.notifications().closed());
}

// Finds a board with two optimal next moves where the solver picks one of
// them; returns (board, the other optimal move).
std::pair<Board, Move> board_with_alternative(const std::function<int(const Board&)>& dist) {
  Generator gen(3, 500);
  while (true) {
    const Board b = gen.next();
    const Board head = solve(b).path.front();
    for (Move m : b.legal_moves()) {
      const Board next = b.apply(m);
      if (!(next == head) && dist(next) == dist(b) - 1) return {b, m};
    }
  }
}

TEST_F(EngineTest, PermissiveScoringAcceptsAnyOptimalMove) {
  const auto [board, alt] = board_with_alternative(distance);

  {
    GameSession strict(board, 0, inline_options());
    strict.move(alt);
    const Snapshot s = strict.wait_idle();
    EXPECT_EQ(s.score, (ScoreState{-1, 1}));
    EXPECT_EQ(drain(strict).back(), K::ReadyToPlay);
  }
  {
    EngineOptions options = inline_options();
    options.permissive_correctness = true;
    GameSession permissive(board, 0, options);
    permissive.move(alt);
    const Snapshot s = permissive.wait_idle();
    EXPECT_EQ(s.score, (ScoreState{1, 1}));
    EXPECT_EQ(s.optimal_remaining, distance(board) - 1);
    EXPECT_EQ(drain(permissive).back(), K::CorrectMove);
  }
}

}  // namespace
}  // namespace slider
