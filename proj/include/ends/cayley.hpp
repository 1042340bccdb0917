#ifndef ENDS_CAYLEY_HPP
#define ENDS_CAYLEY_HPP

#include "ends/ball.hpp"
#include "ends/coset_enumeration.hpp"
#include "ends/presentation.hpp"
#include "ends/rational.hpp"
#include "ends/word_engine.hpp"

#include <cstdint>
#include <optional>

namespace ends {

struct CayleyBall {
  BallGraph graph;
  WordProblemStrategy strategy;
  int slack = 0;
  bool stable = false;

  int radius() const { return graph.radius(); }
  std::size_t size() const { return graph.size(); }
};

struct CayleyOptions {
  int max_slack = 4;
  std::size_t node_budget = default_node_budget();
};

/// Ball of radius `radius` around the identity. Built by bounded coset
/// enumeration of the trivial subgroup with slack escalation. Under the Dehn
/// strategy every nonbase vertex is additionally checked to be nontrivial;
/// under bounded BFS a radius above the cap raises UndecidedError.
CayleyBall build_ball(const Presentation& p, int radius, const WordProblemStrategy& strategy,
                      const CayleyOptions& options = {});

struct GromovProduct {
  Rational value;
  bool certified = false;  ///< every distance used is realized by a geodesic inside the ball
};

/// <x, y>_base = (d(base,x) + d(base,y) - d(x,y)) / 2 with in-ball distances.
/// Throws UncertifiedError when x and y are not connected inside the ball.
GromovProduct gromov_product(const BallGraph& ball, Vertex x, Vertex y, Vertex base = 0);

struct DeltaOptions {
  std::optional<int> points_radius;     ///< restrict the four points to this radius
  std::uint64_t sample = 0;             ///< random quadruples instead of all, if nonzero
  std::uint64_t seed = 1;
};

/// Four-point hyperbolicity defect: the maximum over quadruples of half the
/// gap between the largest and second largest of the three pair sums, which
/// equals the maximum over bases and orderings of
/// min(<x,z>_w, <y,z>_w) - <x,y>_w. Distances are measured inside the ball.
Rational estimate_delta(const BallGraph& ball, const DeltaOptions& options = {});

/// Vertices of the ball reached from the base by tracing subgroup generators
/// and their inverses without leaving the ball.
std::vector<Vertex> subgroup_orbit(const BallGraph& ball, const SubgroupSpec& h);

/// Largest distance from the orbit of a vertex lying on an in-ball geodesic
/// between two orbit points. Throws PreconditionError with fewer than two
/// orbit points.
int estimate_epsilon(const BallGraph& ball, const SubgroupSpec& h);

}  // namespace ends

#endif  // ENDS_CAYLEY_HPP
