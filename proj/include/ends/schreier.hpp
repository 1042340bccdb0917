#ifndef ENDS_SCHREIER_HPP
#define ENDS_SCHREIER_HPP

#include "ends/ball.hpp"
#include "ends/coset_enumeration.hpp"
#include "ends/presentation.hpp"

#include <vector>

namespace ends {

/// Ball of the Schreier graph of H in G around the base coset H.
struct SchreierBall {
  BallGraph graph;
  int slack = 0;              ///< extra enumeration depth beyond the radius
  bool stable = false;        ///< slack + 1 gave the same truncated ball
  bool finite_index = false;  ///< the enumeration closed: this is the whole graph
  std::size_t cosets_defined = 0;

  int radius() const { return graph.radius(); }
  std::size_t size() const { return graph.size(); }
};

/// One enumeration out to radius + slack, truncated to `radius`; stability is
/// decided by a second run at slack + 1. If only that second run overflows
/// the budget the ball comes back unstable.
SchreierBall enumerate_cosets(const Presentation& p, const SubgroupSpec& h, int radius, int slack,
                              std::size_t node_budget = default_node_budget());

struct StabilityOptions {
  int min_slack = 0;
  int max_slack = 4;
  std::size_t node_budget = default_node_budget();
};

/// Escalates the slack from min_slack until two consecutive slacks agree.
/// Returns the last ball tried (unstable) when max_slack or the budget is hit
/// before that.
SchreierBall enumerate_stable(const Presentation& p, const SubgroupSpec& h, int radius,
                              const StabilityOptions& options = {});

int quotient_distance(const SchreierBall& ball, Vertex v);

/// Largest distance from the base reached while tracing the subgroup
/// generators from the base (the part of each loop that lies in the ball).
int estimate_diam_core(const BallGraph& ball, const SubgroupSpec& h);

struct CoveringViolation {
  Vertex coset = 0;
  int dist = 0;
  enum class Kind { missing_edge, loop, multi_edge } kind = Kind::loop;
  int letter = 0;
};

struct CoveringReport {
  int exclusion_radius = 0;
  std::size_t checked = 0;
  std::vector<CoveringViolation> violations;
  bool passes() const { return violations.empty(); }
};

/// Checks that every coset with exclusion_radius <= dist < radius looks like
/// a point of the Cayley graph: all 2|S| edges present, no loops, and no two
/// letters leading to the same neighbour.
CoveringReport covering_degree_check(const SchreierBall& ball, int exclusion_radius);

}  // namespace ends

#endif  // ENDS_SCHREIER_HPP
