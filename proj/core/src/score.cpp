#include "slider/score.hpp"

#include <cstdio>

namespace slider {

ScoreState record_move(ScoreState s, bool correct) {
  s.acs += correct ? 1 : -1;
  ++s.total_moves;
  return s;
}

double current_score(const ScoreState& s) {
  if (s.total_moves == 0) return 0.0;
  return static_cast<double>(s.acs) / static_cast<double>(s.total_moves);
}

std::string format_score(const ScoreState& s) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", current_score(s));
  std::string out(buf);
  return out == "-0.00" ? "0.00" : out;
}

}  // namespace slider
