#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <thread>

#include "slider/board.hpp"
#include "slider/engine.hpp"
#include "slider/generator.hpp"
#include "slider/scanner.hpp"
#include "slider/solver.hpp"
#include "verify.hpp"

namespace slider::cli {
namespace {

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::optional<Board> parse_or_report(const std::string& text, std::ostream& err) {
  try {
    return parse_board(text);
  } catch (const ParseError& e) {
    err << "error: malformed board '" << text << "': " << e.what() << "\n";
    return std::nullopt;
  }
}

int cmd_check(const std::string& text, std::ostream& out, std::ostream& err) {
  const auto board = parse_or_report(text, err);
  if (!board) return kUsage;
  const Legality legality = is_legal(*board);
  if (!legality.solvable) {
    out << "unsolvable\n";
    return kUnsolvableCheck;
  }
  out << "solvable blank=" << legality.blank_index << "\n";
  return kOk;
}

int cmd_solve(const std::string& text, std::ostream& out, std::ostream& err) {
  const auto board = parse_or_report(text, err);
  if (!board) return kUsage;
  if (board->width() != 3) {
    err << "error: the solver handles 3x3 boards only\n";
    return kUsage;
  }
  if (!is_legal(*board).solvable) {
    err << "error: board " << render_board_text(*board) << " is unsolvable\n";
    return kUnsolvableSolve;
  }
  const SolveResult result = solve(*board);
  out << render_moves(result.moves) << "\n";
  out << "moves=" << result.moves.size() << "\n";
  return kOk;
}

int cmd_generate(std::uint64_t seed, std::size_t count, int width, std::ostream& out,
                 std::ostream& err) {
  if (width < kMinWidth || width > kMaxWidth) {
    err << "error: width must be in " << kMinWidth << ".." << kMaxWidth << "\n";
    return kUsage;
  }
  Generator gen(width, seed);
  for (std::size_t i = 0; i < count; ++i) out << render_board_text(gen.next()) << "\n";
  return kOk;
}

int cmd_bench(std::uint64_t seed, std::size_t count, bool csv, std::ostream& out) {
  Generator gen(3, seed);
  double sum_optimal = 0, sum_expanded = 0, sum_peak = 0;
  if (csv) out << "board,optimal,expanded,peak_open\n";
  for (std::size_t i = 0; i < count; ++i) {
    const Board board = gen.next();
    const SolveResult r = solve(board);
    sum_optimal += static_cast<double>(r.moves.size());
    sum_expanded += static_cast<double>(r.nodes_expanded);
    sum_peak += static_cast<double>(r.peak_open_size);
    if (csv) {
      out << '"' << render_board_text(board) << "\"," << r.moves.size() << ','
          << r.nodes_expanded << ',' << r.peak_open_size << "\n";
    } else {
      out << "board=" << render_board_text(board) << " optimal=" << r.moves.size()
          << " expanded=" << r.nodes_expanded << " peak_open=" << r.peak_open_size
          << "\n";
    }
  }
  const double n = count ? static_cast<double>(count) : 1.0;
  if (csv) {
    out << "mean," << fixed2(sum_optimal / n) << ',' << fixed2(sum_expanded / n) << ','
        << fixed2(sum_peak / n) << "\n";
  } else {
    out << "instances=" << count << " mean_optimal=" << fixed2(sum_optimal / n)
        << " mean_expanded=" << fixed2(sum_expanded / n)
        << " mean_peak_open=" << fixed2(sum_peak / n) << "\n";
  }
  return kOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  const VerifyReport r = run_verify(options);
  out << "states=" << r.states << " maxDepth=" << r.max_depth << " checked=" << r.checked
      << " mismatches=" << r.mismatches << " path_errors=" << r.path_errors
      << " inadmissible=" << r.inadmissible;
  if (options.exhaustive) out << " scanner_mismatches=" << r.scanner_mismatches;
  out << "\n";
  return r.ok() ? kOk : kVerifyFailed;
}

std::optional<std::vector<Move>> parse_script(const std::string& script) {
  std::vector<Move> moves;
  for (char c : script) {
    if (c == ',' || c == ' ') continue;
    const auto m = move_from_letter(c);
    if (!m) return std::nullopt;
    moves.push_back(*m);
  }
  return moves;
}

int cmd_play(const std::string& script, std::uint64_t seed, bool permissive,
             std::ostream& out, std::ostream& err) {
  const auto moves = parse_script(script);
  if (!moves) {
    err << "error: script must contain only U, D, L, R separated by commas\n";
    return kUsage;
  }
  EngineOptions options;
  options.permissive_correctness = permissive;
  GameSession session(seed, options);

  std::vector<NotificationKind> kinds;
  std::thread consumer([&] {
    session.notifications().receive_loop(
        [&](const Notification& n) { kinds.push_back(n.kind); });
  });

  const Snapshot initial = session.wait_idle();
  for (Move m : *moves) {
    session.wait_idle();
    session.move(m);
  }
  Snapshot last = session.wait_idle();
  if (last.phase != Phase::Complete) {
    session.quit();
    last = session.wait_idle();
  }
  consumer.join();

  out << "start=" << render_board_text(initial.board) << " seed=" << seed << "\n";
  for (NotificationKind k : kinds) out << to_string(k) << "\n";
  out << "board=" << render_board_text(last.board) << " phase=" << to_string(last.phase)
      << " score=" << format_score(last.score) << " moves=" << last.score.total_moves
      << " remaining=" << last.optimal_remaining << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sliding-puzzle solver, checker and headless game driver", "slider"};
  app.require_subcommand(1);

  std::string board_text;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  int width = 3;
  bool csv = false;
  VerifyOptions verify;
  std::string script;
  bool permissive = false;

  auto* check = app.add_subcommand("check", "Report whether a board is solvable");
  check->add_option("--board", board_text, "Comma-separated cells, 0 = blank")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Print an optimal move sequence");
  solve_cmd->add_option("--board", board_text, "Comma-separated cells, 0 = blank")
      ->required();

  auto* generate = app.add_subcommand("generate", "Print random solvable boards");
  generate->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  generate->add_option("--count", count, "Number of boards")->capture_default_str();
  generate->add_option("--width", width, "Board width")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Solve random boards and report statistics");
  std::size_t bench_count = 20;
  bench->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  bench->add_option("--count", bench_count, "Number of instances")->capture_default_str();
  bench->add_flag("--csv", csv, "CSV output: board,optimal,expanded,peak_open");

  auto* verify_cmd = app.add_subcommand("verify", "Check solver and heuristic against BFS");
  auto* sample_opt = verify_cmd->add_option("--sample", verify.sample,
                                            "Random boards to solve")
                         ->capture_default_str();
  verify_cmd->add_flag("--exhaustive", verify.exhaustive, "Solve every solvable board")
      ->excludes(sample_opt);
  verify_cmd->add_option("--seed", verify.seed, "PRNG seed for --sample")
      ->capture_default_str();
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");

  auto* play = app.add_subcommand("play", "Run a scripted game without a UI");
  play->add_option("--script", script, "Blank moves, e.g. U,L,D")->required();
  play->add_option("--seed", seed, "Game seed")->capture_default_str();
  play->add_flag("--permissive", permissive,
                 "Score any distance-reducing move as correct");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  if (*check) return cmd_check(board_text, out, err);
  if (*solve_cmd) return cmd_solve(board_text, out, err);
  if (*generate) return cmd_generate(seed, count, width, out, err);
  if (*bench) return cmd_bench(seed, bench_count, csv, out);
  if (*verify_cmd) return cmd_verify(verify, out);
  if (*play) return cmd_play(script, seed, permissive, out, err);
  return kUsage;
}

}  // namespace slider::cli
