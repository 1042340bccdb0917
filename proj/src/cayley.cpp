#include "ends/cayley.hpp"

#include "ends/errors.hpp"
#include "ends/schreier.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>

namespace ends {

CayleyBall build_ball(const Presentation& p, int radius, const WordProblemStrategy& strategy, const CayleyOptions& options) {
  if (radius < 0) throw PreconditionError("radius must be nonnegative");
  if (strategy.kind == WordProblemStrategy::Kind::bounded_bfs && radius > strategy.radius_cap) {
    throw UndecidedError("radius " + std::to_string(radius) + " exceeds the bounded BFS cap " + std::to_string(strategy.radius_cap));
  }
  std::optional<DehnReducer> dehn;
  if (strategy.kind == WordProblemStrategy::Kind::dehn) dehn.emplace(p);

  SchreierBall s = enumerate_stable(p, SubgroupSpec{}, radius, {0, options.max_slack, options.node_budget});
  CayleyBall ball{std::move(s.graph), strategy, s.slack, s.stable};
  if (dehn) {
    for (Vertex v = 1; static_cast<std::size_t>(v) < ball.size(); ++v) {
      if (dehn->is_identity(ball.graph.normal_form(v))) {
        throw Error("vertex " + std::to_string(v) + " of the enumerated ball is the identity");
      }
    }
  }
  return ball;
}

GromovProduct gromov_product(const BallGraph& ball, Vertex x, Vertex y, Vertex base) {
  for (Vertex v : {x, y, base}) {
    if (v < 0 || static_cast<std::size_t>(v) >= ball.size()) throw OutsideBallError("vertex " + std::to_string(v) + " not in ball");
  }
  const std::vector<int> from_base = bfs_from(ball, base);
  const std::vector<int> from_x = bfs_from(ball, x);
  const int bx = from_base[static_cast<std::size_t>(x)];
  const int by = from_base[static_cast<std::size_t>(y)];
  const int xy = from_x[static_cast<std::size_t>(y)];
  if (bx < 0 || by < 0 || xy < 0) throw UncertifiedError("points are not connected inside the ball");
  GromovProduct out;
  out.value = Rational(bx + by - xy, 2);
  // A geodesic of length d between points at distances a and b from the
  // identity stays within (a + b + d) / 2 of it.
  const auto fits = [&](Vertex u, Vertex v, int d) { return ball.dist(u) + ball.dist(v) + d <= 2 * ball.radius(); };
  out.certified = fits(base, x, bx) && fits(base, y, by) && fits(x, y, xy);
  return out;
}

Rational estimate_delta(const BallGraph& ball, const DeltaOptions& options) {
  const int limit = options.points_radius.value_or(ball.radius());
  std::vector<Vertex> points;
  for (Vertex v = 0; static_cast<std::size_t>(v) < ball.size(); ++v) {
    if (ball.dist(v) <= limit) points.push_back(v);
  }
  const std::size_t n = points.size();
  if (n < 4) return Rational(0);

  constexpr std::uint16_t kFar = 0xffff;
  std::vector<std::uint16_t> d(n * n, kFar);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<int> from = bfs_from(ball, points[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const int e = from[static_cast<std::size_t>(points[j])];
      if (e >= 0) d[i * n + j] = static_cast<std::uint16_t>(e);
    }
  }
  const auto at = [&](std::size_t i, std::size_t j) { return static_cast<int>(d[i * n + j]); };
  // Twice the defect of one quadruple: largest pair sum minus the middle one.
  const auto defect2 = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    std::array<int, 3> s{at(i, j) + at(k, l), at(i, k) + at(j, l), at(i, l) + at(j, k)};
    std::sort(s.begin(), s.end());
    return s[2] - s[1];
  };

  int best = 0;
  if (options.sample > 0) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t t = 0; t < options.sample; ++t) {
      best = std::max(best, defect2(pick(rng), pick(rng), pick(rng), pick(rng)));
    }
  } else {
    // The defect of a quadruple never exceeds its smallest pairwise distance.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (2 * at(i, j) <= best) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
          if (2 * at(i, k) <= best || 2 * at(j, k) <= best) continue;
          for (std::size_t l = k + 1; l < n; ++l) {
            if (2 * std::min({at(i, l), at(j, l), at(k, l)}) <= best) continue;
            best = std::max(best, defect2(i, j, k, l));
          }
        }
      }
    }
  }
  return Rational(best, 2);
}

std::vector<Vertex> subgroup_orbit(const BallGraph& ball, const SubgroupSpec& h) {
  std::vector<Word> moves;
  for (const auto& w : h.generators) {
    moves.push_back(w);
    moves.push_back(inverse(w));
  }
  std::vector<char> seen(ball.size(), 0);
  std::vector<Vertex> orbit{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& w : moves) {
      const auto t = ball.trace(orbit[head], w);
      if (!t || seen[static_cast<std::size_t>(*t)]) continue;
      seen[static_cast<std::size_t>(*t)] = 1;
      orbit.push_back(*t);
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

int estimate_epsilon(const BallGraph& ball, const SubgroupSpec& h) {
  const std::vector<Vertex> orbit = subgroup_orbit(ball, h);
  if (orbit.size() < 2) throw PreconditionError("fewer than two orbit points inside the ball");

  std::vector<int> to_orbit(ball.size(), -1);
  std::vector<Vertex> queue = orbit;
  for (Vertex v : orbit) to_orbit[static_cast<std::size_t>(v)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex t : ball.row(v)) {
      if (t == kOutside || to_orbit[static_cast<std::size_t>(t)] >= 0) continue;
      to_orbit[static_cast<std::size_t>(t)] = to_orbit[static_cast<std::size_t>(v)] + 1;
      queue.push_back(t);
    }
  }
  if (*std::max_element(to_orbit.begin(), to_orbit.end()) <= 0) return 0;

  std::vector<std::vector<int>> from(orbit.size());
  for (std::size_t i = 0; i < orbit.size(); ++i) from[i] = bfs_from(ball, orbit[i]);
  int best = 0;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t j = i + 1; j < orbit.size(); ++j) {
      const int dij = from[i][static_cast<std::size_t>(orbit[j])];
      if (dij < 0) continue;
      for (std::size_t v = 0; v < ball.size(); ++v) {
        if (from[i][v] >= 0 && from[j][v] >= 0 && from[i][v] + from[j][v] == dij) best = std::max(best, to_orbit[v]);
      }
    }
  }
  return best;
}

}  // namespace ends
