#ifndef SLIDER_SCORE_HPP
#define SLIDER_SCORE_HPP

#include <string>

namespace slider {

// Accumulated correct score (acs): +1 per correct move, -1 per incorrect one.
// The game score is acs / total_moves, or 0 before the first move.
struct ScoreState {
  int acs = 0;
  int total_moves = 0;

  friend bool operator==(const ScoreState&, const ScoreState&) = default;
};

ScoreState record_move(ScoreState s, bool correct);

double current_score(const ScoreState& s);

/// Score rounded to two decimals, e.g. "0.33".
std::string format_score(const ScoreState& s);

}  // namespace slider

#endif  // SLIDER_SCORE_HPP
