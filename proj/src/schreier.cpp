#include "ends/schreier.hpp"

#include "ends/errors.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace ends {

namespace {

struct Attempt {
  BallGraph ball;
  bool closed = false;
  std::size_t defined = 0;
};

Attempt attempt(const Presentation& p, const SubgroupSpec& h, int radius, int slack, std::size_t node_budget) {
  const EnumerationOutcome out = enumerate_bounded(p, h.generators, {radius + slack, node_budget});
  return {BallGraph::from_table(out.letter_count, out.table, 0, radius), out.closed, out.cosets_defined};
}

SchreierBall make_ball(Attempt a, int slack, bool stable) {
  SchreierBall ball;
  ball.graph = std::move(a.ball);
  ball.slack = slack;
  ball.finite_index = a.closed;
  ball.stable = stable || a.closed;
  ball.cosets_defined = a.defined;
  return ball;
}

void check_args(int radius, int slack) {
  if (radius < 0) throw PreconditionError("radius must be nonnegative");
  if (slack < 0) throw PreconditionError("slack must be nonnegative");
}

}  // namespace

SchreierBall enumerate_cosets(const Presentation& p, const SubgroupSpec& h, int radius, int slack, std::size_t node_budget) {
  check_args(radius, slack);
  Attempt first = attempt(p, h, radius, slack, node_budget);
  if (first.closed) return make_ball(std::move(first), slack, true);
  bool stable = false;
  try {
    stable = attempt(p, h, radius, slack + 1, node_budget).ball == first.ball;
  } catch (const BudgetExceeded&) {
    stable = false;
  }
  return make_ball(std::move(first), slack, stable);
}

SchreierBall enumerate_stable(const Presentation& p, const SubgroupSpec& h, int radius, const StabilityOptions& options) {
  check_args(radius, options.min_slack);
  if (options.max_slack < options.min_slack) throw PreconditionError("max_slack must be at least min_slack");
  Attempt current = attempt(p, h, radius, options.min_slack, options.node_budget);
  for (int s = options.min_slack;; ++s) {
    if (current.closed) return make_ball(std::move(current), s, true);
    if (s == options.max_slack) return make_ball(std::move(current), s, false);
    std::optional<Attempt> next;
    try {
      next = attempt(p, h, radius, s + 1, options.node_budget);
    } catch (const BudgetExceeded&) {
      return make_ball(std::move(current), s, false);
    }
    if (next->ball == current.ball) return make_ball(std::move(current), s, true);
    current = std::move(*next);
  }
}

int quotient_distance(const SchreierBall& ball, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= ball.size()) throw OutsideBallError("coset " + std::to_string(v) + " not in ball");
  return ball.graph.dist(v);
}

int estimate_diam_core(const BallGraph& ball, const SubgroupSpec& h) {
  int best = 0;
  for (const auto& w : h.generators) {
    Vertex v = 0;
    for (Letter x : w) {
      v = ball.target(v, x);
      if (v == kOutside) break;
      best = std::max(best, ball.dist(v));
    }
  }
  return best;
}

CoveringReport covering_degree_check(const SchreierBall& ball, int exclusion_radius) {
  CoveringReport report;
  report.exclusion_radius = exclusion_radius;
  const BallGraph& g = ball.graph;
  const int letters = g.letter_count();
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
    const int d = g.dist(v);
    if (d < exclusion_radius || d >= g.radius()) continue;
    ++report.checked;
    const auto row = g.row(v);
    for (int x = 0; x < letters; ++x) {
      const Vertex t = row[static_cast<std::size_t>(x)];
      if (t == kOutside) {
        report.violations.push_back({v, d, CoveringViolation::Kind::missing_edge, x});
      } else if (t == v) {
        report.violations.push_back({v, d, CoveringViolation::Kind::loop, x});
      } else {
        for (int y = 0; y < x; ++y) {
          if (row[static_cast<std::size_t>(y)] == t) {
            report.violations.push_back({v, d, CoveringViolation::Kind::multi_edge, x});
            break;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace ends
