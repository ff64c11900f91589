#include "slider/engine.hpp"

#include <exception>

#include "slider/generator.hpp"

namespace slider {

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::Solving: return "Solving";
    case Phase::Ready: return "Ready";
    case Phase::Complete: return "Complete";
    case Phase::Quit: return "Quit";
  }
  return "?";
}

GameSession::GameSession(std::uint64_t seed, EngineOptions options)
    : GameSession(generate_solvable(3, seed), seed, std::move(options)) {}

GameSession::GameSession(const Board& start, std::uint64_t seed,
                         EngineOptions options)
    : options_(std::move(options)),
      seed_(seed),
      board_(start),
      snapshot_{start, Phase::Solving, {}, 0, seed} {
  if (board_.is_goal()) {
    notify(NotificationKind::AlreadySolved);
    finish(Phase::Complete);
  } else {
    notify(NotificationKind::Solving);
    start_solve(board_);
  }
  publish();
  session_thread_ = std::thread([this] { run(); });
}

GameSession::~GameSession() {
  enqueue(StopCmd{});
  session_thread_.join();
  for (auto& t : solver_threads_) t.join();
}

void GameSession::move(Move m) { enqueue(MoveCmd{m}); }

void GameSession::quit() { enqueue(QuitCmd{}); }

Snapshot GameSession::snapshot() const {
  std::lock_guard lock(snap_mu_);
  return snapshot_;
}

Snapshot GameSession::wait_idle() const {
  std::unique_lock lock(snap_mu_);
  snap_cv_.wait(lock, [this] {
    return unhandled_ == 0 && snapshot_.phase != Phase::Solving;
  });
  return snapshot_;
}

void GameSession::enqueue(Command cmd) {
  if (!std::holds_alternative<StopCmd>(cmd)) {
    std::lock_guard lock(snap_mu_);
    ++unhandled_;
  }
  {
    std::lock_guard lock(cmd_mu_);
    commands_.push_back(std::move(cmd));
  }
  cmd_cv_.notify_one();
}

void GameSession::run() {
  while (true) {
    Command cmd = [this] {
      std::unique_lock lock(cmd_mu_);
      cmd_cv_.wait(lock, [this] { return !commands_.empty(); });
      Command c = std::move(commands_.front());
      commands_.pop_front();
      return c;
    }();
    if (std::holds_alternative<StopCmd>(cmd)) return;
    std::visit([this](const auto& c) {
      if constexpr (!std::is_same_v<std::decay_t<decltype(c)>, StopCmd>) handle(c);
    }, cmd);
    {
      std::lock_guard lock(snap_mu_);
      --unhandled_;
    }
    publish();
  }
}

void GameSession::handle(const MoveCmd& cmd) {
  switch (phase_) {
    case Phase::Complete:
    case Phase::Quit:
      return;
    case Phase::Solving:
      notify(NotificationKind::WaitForSolver);
      return;
    case Phase::Ready:
      break;
  }

  if (!board_.can_move(cmd.move)) {
    notify(NotificationKind::IllegalMove);
    return;
  }
  const Board next = board_.apply(cmd.move);
  bool correct = !path_.empty() && next == path_.front();
  if (correct) {
    path_.pop_front();
  } else if (options_.permissive_correctness) {
    SolveResult alt = options_.solver(next);
    if (alt.path.size() + 1 == path_.size()) {
      correct = true;
      path_.assign(alt.path.begin(), alt.path.end());
    }
  }

  board_ = next;
  score_ = record_move(score_, correct);
  if (!correct) {
    notify(NotificationKind::WrongMove);
    phase_ = Phase::Solving;
    start_solve(board_);
    return;
  }
  notify(NotificationKind::CorrectMove);
  if (board_.is_goal()) {
    notify(NotificationKind::GameComplete);
    finish(Phase::Complete);
  }
}

void GameSession::handle(const QuitCmd&) {
  if (phase_ == Phase::Complete || phase_ == Phase::Quit) return;
  notify(NotificationKind::Quit);
  finish(Phase::Quit);
}

void GameSession::handle(const SolvedCmd& cmd) {
  if (phase_ != Phase::Solving || !(cmd.board == board_)) return;
  if (!cmd.result) {
    finish(Phase::Quit);
    return;
  }
  install(*cmd.result);
}

void GameSession::start_solve(const Board& board) {
  if (options_.launch == SolveLaunch::Inline) {
    install(options_.solver(board));
    return;
  }
  solver_threads_.emplace_back([this, board, solver = options_.solver] {
    std::optional<SolveResult> result;
    try {
      result = solver(board);
    } catch (const std::exception&) {
      // reported to the session as a missing result
    }
    enqueue(SolvedCmd{board, std::move(result)});
  });
}

void GameSession::install(const SolveResult& result) {
  path_.assign(result.path.begin(), result.path.end());
  phase_ = Phase::Ready;
  notify(NotificationKind::ReadyToPlay);
}

void GameSession::notify(NotificationKind kind) {
  // A closed stream means the game is over; nothing left to tell.
  (void)stream_.send(make_notification(kind));
}

void GameSession::finish(Phase terminal) {
  phase_ = terminal;
  stream_.close();
}

void GameSession::publish() {
  {
    std::lock_guard lock(snap_mu_);
    snapshot_ = Snapshot{board_, phase_, score_,
                         static_cast<int>(path_.size()), seed_};
  }
  snap_cv_.notify_all();
}

}  // namespace slider
